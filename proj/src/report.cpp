#include "framed/report.hpp"

#include <sstream>

#include "framed/errors.hpp"

namespace framed {

std::string Report::as_record() const {
  std::string out;
  for (const auto& r : records)
    for (const auto& [k, v] : r) out += k + "=" + v + "\n";
  return out;
}

std::string Report::as_text() const {
  std::string out;
  for (const auto& line : text) out += line + "\n";
  return out;
}

namespace {

std::string join(const IntegerVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

std::string one_line(const Record& r) {
  std::string out;
  for (const auto& [k, v] : r) out += (out.empty() ? "" : " ") + k + "=" + v;
  return out;
}

}  // namespace

std::string format_alpha(const HomologyClass& alpha) {
  std::string out = alpha.free_part().empty() ? "0" : join(alpha.free_part());
  if (!alpha.torsion_part().empty()) out += "/t:" + join(alpha.torsion_part());
  return out;
}

IntegerVector parse_integer_list(const std::string& csv) {
  IntegerVector out;
  if (csv.empty()) return out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    Integer v;
    if (!item.empty() && item.front() == '+') item.erase(0, 1);
    if (item.empty() || v.set_str(item, 10) != 0)
      throw FormatError("expected a comma-separated integer list, found '" + csv + "'");
    out.push_back(v);
  }
  if (csv.back() == ',') throw FormatError("trailing comma in '" + csv + "'");
  return out;
}

HomologyClass parse_alpha(const std::string& text, const HomologyGroup& group) {
  const auto slash = text.find('/');
  const std::string free_text = text.substr(0, slash);
  IntegerVector free_part = parse_integer_list(free_text);
  if (group.free_rank() == 0 && free_part.size() == 1 && sgn(free_part[0]) == 0)
    free_part.clear();

  IntegerVector torsion_part(group.torsion().size());
  if (slash != std::string::npos) {
    const std::string rest = text.substr(slash + 1);
    if (rest.rfind("t:", 0) != 0) throw FormatError("torsion suffix must be '/t:r1,r2,...'");
    torsion_part = parse_integer_list(rest.substr(2));
  }
  if (free_part.size() != group.free_rank() || torsion_part.size() != group.torsion().size())
    throw FormatError("alpha '" + text + "' does not fit H_1 = " + group.describe() + " (" +
                      std::to_string(group.free_rank()) + " free, " +
                      std::to_string(group.torsion().size()) + " torsion coordinates)");
  return {group, std::move(free_part), std::move(torsion_part)};
}

Report homology_report(const ManifoldPresentation& p, std::size_t degree, bool list_edges) {
  const HomologyGroup h = homology(p, degree);
  Report out;
  Record r{{"manifold", p.name},
           {"degree", std::to_string(degree)},
           {"group", h.describe()},
           {"free_rank", std::to_string(h.free_rank())},
           {"torsion", h.torsion().empty() ? "none" : join(h.torsion())}};
  out.text.push_back("H_" + std::to_string(degree) + "(" + p.name + ") = " + h.describe());
  out.records.push_back(std::move(r));
  if (list_edges) {
    if (const auto* t = std::get_if<Triangulation3>(&p.data)) {
      const SimplicialChains s = simplicial_chains(*t);
      for (std::size_t i = 0; i < s.edges.size(); ++i) {
        const std::string v =
            std::to_string(s.edges[i].first) + "," + std::to_string(s.edges[i].second);
        out.records.push_back({{"edge", std::to_string(i)}, {"vertices", v}});
        out.text.push_back("edge " + std::to_string(i) + ": " + v);
      }
    }
  }
  return out;
}

Report classify_report(const ClassificationTable& table, long bound) {
  Report out;
  out.records.push_back({{"manifold", table.manifold()}, {"h1", table.h1().describe()}});
  out.text.push_back("manifold=" + table.manifold() + " h1=" + table.h1().describe());
  table.for_each_class(bound, [&](const HomologyClass& alpha) {
    Record r{{"alpha", format_alpha(alpha)},
             {"d", divisibility(alpha).get_str()},
             {"fiber", fiber(alpha).to_string()}};
    out.text.push_back(one_line(r));
    out.records.push_back(std::move(r));
  });
  return out;
}

Report fiber_report(const HomologyClass& alpha) {
  const Integer d = divisibility(alpha);
  const FiberGroup f = fiber(alpha);
  Report out;
  out.records.push_back(
      {{"alpha", format_alpha(alpha)}, {"d", d.get_str()}, {"fiber", f.to_string()}});
  out.text.push_back("d=" + d.get_str() + " fiber=" + f.to_string());
  return out;
}

Report torus_report(const TorusTuple& t) {
  Report out;
  out.records.push_back({{"p", t.p.get_str()},
                         {"q", t.q.get_str()},
                         {"r", t.r.get_str()},
                         {"fiber", t.fiber.to_string()},
                         {"description", t.description}});
  out.text.push_back("fiber=" + t.fiber.to_string());
  return out;
}

Report theorem2_report(const Theorem2Input& input) {
  const DegreeMap m = theorem2_classify(input);
  Report out;
  out.records.push_back({{"h2_mod2_rank", std::to_string(input.h2_mod2_rank)},
                         {"degree_map", to_string(m)}});
  out.text.push_back("degree_map=" + to_string(m));
  return out;
}

Report euler_report(const ImmersedSurfaceData& s) {
  const Integer e = euler_class(s);
  Report out;
  out.records.push_back(
      {{"ambient", s.ambient == AmbientKind::ProductN3xI ? "product" : "closed"},
       {"sigma", s.sigma.get_str()},
       {"euler", e.get_str()}});
  out.text.push_back("euler=" + e.get_str());
  return out;
}

Report cobordant_report(const FramedLinkClass& a, const FramedLinkClass& b) {
  const bool same = framed_cobordant(a, b);
  Report out;
  Record r{{"alpha1", format_alpha(a.alpha)},   {"h_1", h_invariant(a).to_string()},
           {"alpha2", format_alpha(b.alpha)},   {"h_2", h_invariant(b).to_string()},
           {"cobordant", same ? "true" : "false"}};
  out.text.push_back(one_line(r));
  out.records.push_back(std::move(r));
  return out;
}

Report replay_report(const ReplayReport& r, bool trace) {
  Report out;
  Record rec{{"accepted", r.accepted ? "true" : "false"},
             {"euler", r.euler.get_str()},
             {"cobordism", r.cobordism.describe()},
             {"verdict", r.verdict}};
  out.text.push_back(std::string(r.accepted ? "accepted: " : "rejected: ") + r.verdict);
  out.records.push_back(std::move(rec));
  if (trace) {
    for (const auto& s : r.trace) {
      Record step{{"step", std::to_string(s.step)},
                  {"rule", s.rule},
                  {"before", s.before.get_str()},
                  {"after", s.after.get_str()}};
      out.text.push_back(one_line(step));
      out.records.push_back(std::move(step));
    }
  }
  return out;
}

}  // namespace framed
