#include "framed/framed_links.hpp"

#include <fstream>
#include <sstream>

#include "framed/errors.hpp"
#include "text_io.hpp"

namespace framed {

std::string HInvariant::to_string() const {
  if (sgn(modulus) == 0) return value.get_str() + " in Z";
  return value.get_str() + " mod " + modulus.get_str();
}

const HomologyClass& degree(const FramedLinkClass& l) { return l.alpha; }

HInvariant h_invariant(const FramedLinkClass& l) {
  const Integer m = fiber(l.alpha).modulus;
  if (sgn(m) == 0) return {l.twist, m};
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), l.twist.get_mpz_t(), m.get_mpz_t());
  return {r, m};
}

FramedLinkClass twist(const FramedLinkClass& l, const Integer& k) {
  return {l.alpha, l.twist + k};
}

bool framed_cobordant(const FramedLinkClass& a, const FramedLinkClass& b) {
  if (!(a.alpha.group() == b.alpha.group()))
    throw DomainError("framed links live in different manifolds");
  if (!(a.alpha == b.alpha)) return false;
  return h_invariant(a) == h_invariant(b);
}

FramedLinkClass ingest_geometric(const HomologyGroup& h1, const LinkDescription& link) {
  FramedLinkClass out{HomologyClass::zero(h1), 0};
  for (std::size_t i = 0; i < link.components.size(); ++i) {
    const LinkComponent& c = link.components[i];
    const IntegerVector chain = chain_from_edges(c.cycle, h1.chain_rank());
    if (!h1.is_cycle(chain))
      throw DomainError("link component " + std::to_string(i) + " is not a cycle");
    out.alpha = out.alpha + class_of(h1, chain);
    out.twist += c.twist;
  }
  return out;
}

FramedLinkClass ingest_geometric(const ManifoldPresentation& p, const LinkDescription& link) {
  return ingest_geometric(homology(p, 1), link);
}

namespace {

std::string after_key(const std::string& line, const std::string& key) {
  std::istringstream in(line);
  std::string word;
  in >> word;
  if (word != key + ":") throw FormatError("expected '" + key + ":' line, found '" + line + "'");
  std::string rest;
  std::getline(in, rest);
  return rest;
}

SignedEdge parse_signed_edge(const std::string& token) {
  // e+3, e-3, or e3
  if (token.size() < 2 || token[0] != 'e')
    throw FormatError("edge token must look like e+i or e-i, found '" + token + "'");
  std::size_t pos = 1;
  int sign = 1;
  if (token[pos] == '+' || token[pos] == '-') {
    sign = token[pos] == '-' ? -1 : 1;
    ++pos;
  }
  const std::string digits = token.substr(pos);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw FormatError("edge token must look like e+i or e-i, found '" + token + "'");
  return {std::stoul(digits), sign};
}

}  // namespace

LinkDescription read_link(std::istream& in) {
  std::istringstream header(detail::next_data_line(in, "link header"));
  std::string link_word, comp_word, extra;
  long n = -1;
  if (!(header >> link_word >> comp_word >> n) || link_word != "link" ||
      comp_word != "components" || n < 0 || (header >> extra))
    throw FormatError("link file must start with 'link components N'");

  LinkDescription out;
  for (long i = 0; i < n; ++i) {
    LinkComponent c;
    std::istringstream edges(after_key(detail::next_data_line(in, "cycle line"), "cycle"));
    std::string token;
    while (edges >> token) c.cycle.push_back(parse_signed_edge(token));

    std::istringstream tw(after_key(detail::next_data_line(in, "twist line"), "twist"));
    std::string value;
    if (!(tw >> value) || (tw >> extra) || c.twist.set_str(value, 10) != 0)
      throw FormatError("twist line of component " + std::to_string(i) +
                        " must hold one integer");
    out.components.push_back(std::move(c));
  }
  return out;
}

LinkDescription load_link(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  return read_link(file);
}

}  // namespace framed
