// framed-links: classification of framed links in closed oriented 3-manifolds
// (equivalently, homotopy classes of maps M -> S^2) and replay of the Euler
// class arithmetic behind it.

#include <algorithm>
#include <array>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "framed/errors.hpp"
#include "framed/report.hpp"

namespace {

// sysexits.h values
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitInvalid = 2;

constexpr std::array<const char*, 8> kVerbs = {"homology", "classify", "fiber",     "torus",
                                               "theorem2", "euler",    "cobordant", "replay"};

framed::Integer parse_integer(const std::string& s, const char* flag) {
  const framed::IntegerVector v = framed::parse_integer_list(s);
  if (v.size() != 1) throw framed::FormatError(std::string(flag) + " takes one integer");
  return v.front();
}

// "a,b;c,d" -> 2x2 matrix
framed::IntegerMatrix parse_form(const std::string& text) {
  std::vector<framed::IntegerVector> rows;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(';', start);
    rows.push_back(framed::parse_integer_list(text.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  std::vector<framed::Integer> entries;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size())
      throw framed::FormatError("--form rows must have equal length");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return {rows.size(), rows.front().size(), std::move(entries)};
}

struct Options {
  std::string format = "text";
  std::string manifold;
  std::string alpha;
  std::string pqr;
  std::string w2;
  std::vector<std::string> links;
  std::vector<std::string> alphas;
  std::vector<std::string> twists;
  long bound = 2;
  std::size_t degree = 1;
  bool edges = false;
  bool trace = false;
  std::string sigma = "0";
  std::string form;
  std::string coords;
  std::string mode;
  std::string d = "0", e_L = "0", e_Lprime = "0", pk = "0", e_diff = "0";
};

void emit(const framed::Report& r, const Options& o) {
  std::cout << (o.format == "record" ? r.as_record() : r.as_text());
}

framed::FramedLinkClass link_at(const framed::HomologyGroup& h1, const Options& o,
                                std::size_t i) {
  if (!o.links.empty()) return framed::ingest_geometric(h1, framed::load_link(o.links[i]));
  const std::string twist = i < o.twists.size() ? o.twists[i] : "0";
  return {framed::parse_alpha(o.alphas[i], h1), parse_integer(twist, "--twist")};
}

int run(const std::string& verb, const Options& o) {
  using namespace framed;
  if (verb == "homology") {
    emit(homology_report(resolve_manifold(o.manifold), o.degree, o.edges), o);
  } else if (verb == "classify") {
    emit(classify_report(classify(resolve_manifold(o.manifold)), o.bound), o);
  } else if (verb == "fiber") {
    const ClassificationTable table = classify(resolve_manifold(o.manifold));
    emit(fiber_report(parse_alpha(o.alpha, table.h1())), o);
  } else if (verb == "torus") {
    const IntegerVector v = parse_integer_list(o.pqr);
    if (v.size() != 3) throw FormatError("--pqr takes three integers p,q,r");
    emit(torus_report(torus_example(v[0], v[1], v[2])), o);
  } else if (verb == "theorem2") {
    Theorem2Input input;
    for (const Integer& v : parse_integer_list(o.w2)) {
      if (v != 0 && v != 1) throw FormatError("--w2 entries must be 0 or 1");
      input.w2_evaluations.push_back(static_cast<std::uint8_t>(v.get_ui()));
    }
    input.h2_mod2_rank = input.w2_evaluations.size();
    emit(theorem2_report(input), o);
  } else if (verb == "euler") {
    ImmersedSurfaceData s;
    s.sigma = parse_integer(o.sigma, "--sigma");
    if (!o.form.empty()) {
      s.ambient = AmbientKind::Closed4Manifold;
      s.intersection_form = parse_form(o.form);
      s.class_coords = parse_integer_list(o.coords);
    }
    emit(euler_report(s), o);
  } else if (verb == "cobordant") {
    const std::size_t given = o.links.empty() ? o.alphas.size() : o.links.size();
    if (given != 2 || (!o.links.empty() && !o.alphas.empty()))
      throw FormatError("cobordant needs two --link files or two --alpha values");
    const HomologyGroup h1 = classify(resolve_manifold(o.manifold)).h1();
    emit(cobordant_report(link_at(h1, o, 0), link_at(h1, o, 1)), o);
  } else if (verb == "replay") {
    ReplayReport r;
    if (o.mode == "well-definedness") {
      r = replay_well_definedness(parse_integer(o.d, "--d"), parse_integer(o.e_L, "--eL"),
                                  parse_integer(o.e_Lprime, "--eLp"),
                                  parse_integer(o.pk, "--pk"));
    } else if (o.mode == "injectivity") {
      r = replay_injectivity(parse_integer(o.d, "--d"), parse_integer(o.e_diff, "--ediff"));
    } else {
      throw FormatError("--mode must be well-definedness or injectivity");
    }
    emit(replay_report(r, o.trace), o);
    if (!r.accepted) return kExitInvalid;
  }
  return 0;
}

void usage(std::ostream& out) {
  out << "usage: framed-links <verb> [options]\n  verbs:";
  for (const char* v : kVerbs) out << ' ' << v;
  out << "\n  run 'framed-links <verb> --help' for the options of a verb\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    usage(std::cerr);
    return kExitUsage;
  }
  const std::string verb = argv[1];
  if (verb == "-h" || verb == "--help") {
    usage(std::cout);
    return 0;
  }
  if (std::find_if(kVerbs.begin(), kVerbs.end(),
                   [&](const char* v) { return verb == v; }) == kVerbs.end()) {
    std::cerr << "framed-links: unknown verb '" << verb << "'\n";
    usage(std::cerr);
    return kExitUsage;
  }

  Options o;
  CLI::App app{"framed-links " + verb};
  app.name("framed-links " + verb);
  app.add_option("--format", o.format, "Output mode")
      ->check(CLI::IsMember({"text", "record"}));

  const bool needs_manifold = verb == "homology" || verb == "classify" || verb == "fiber" ||
                              verb == "cobordant";
  if (needs_manifold)
    app.add_option("--manifold", o.manifold, "builtin:s3|t3|s1xs2|lens:p:q or a file path")
        ->required();

  if (verb == "homology") {
    app.add_option("--degree", o.degree, "Homology degree")->capture_default_str();
    app.add_flag("--edges", o.edges, "List edge indices of a triangulation");
  } else if (verb == "classify") {
    app.add_option("--bound", o.bound, "Enumeration radius for free coordinates")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  } else if (verb == "fiber") {
    app.add_option("--alpha", o.alpha, "Class as free coordinates[/t:torsion]")->required();
  } else if (verb == "torus") {
    app.add_option("--pqr", o.pqr, "Degrees p,q,r on the coordinate 2-tori")->required();
  } else if (verb == "theorem2") {
    app.add_option("--w2", o.w2, "w2 evaluations on a mod-2 basis of H_2, e.g. 0,1,0")
        ->required();
  } else if (verb == "euler") {
    app.add_option("--sigma", o.sigma, "Signed count of double points");
    app.add_option("--form", o.form, "Intersection form, rows separated by ';'");
    app.add_option("--coords", o.coords, "Coordinates of [L] in the form's basis");
  } else if (verb == "cobordant") {
    app.add_option("--link", o.links, "Link file (give two)");
    app.add_option("--alpha", o.alphas, "Degree of a link in normal form (give two)");
    app.add_option("--twist", o.twists, "Twist of the matching --alpha link");
  } else if (verb == "replay") {
    app.add_option("--mode", o.mode, "well-definedness or injectivity")->required();
    app.add_option("--d", o.d, "Divisibility d(alpha)");
    app.add_option("--eL", o.e_L, "Euler class of the cobordism L");
    app.add_option("--eLp", o.e_Lprime, "Euler class of the cobordism L'");
    app.add_option("--pk", o.pk, "Intersection [pK].alpha");
    app.add_option("--ediff", o.e_diff, "Euler class of -L' u L");
    app.add_flag("--trace", o.trace, "Print the derivation transcript");
  }

  try {
    app.parse(argc - 1, argv + 1);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return run(verb, o);
  } catch (const framed::IoError& e) {
    std::cerr << "framed-links: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const framed::Error& e) {
    std::cerr << "framed-links: " << e.what() << '\n';
    return kExitInvalid;
  }
}
