#include "framed/chain_homology.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "framed/errors.hpp"
#include "t3_data.hpp"
#include "text_io.hpp"

namespace framed {

namespace {

std::string simplex_text(std::span<const long> vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + ")";
}

// Sorts a small vertex tuple in place, returning the sign of the permutation.
template <std::size_t N>
int sort_with_sign(std::array<long, N>& vs) {
  int sign = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j + 1 < N - i; ++j)
      if (vs[j] > vs[j + 1]) {
        std::swap(vs[j], vs[j + 1]);
        sign = -sign;
      }
  return sign;
}

// Face i of an ordered tetrahedron, sorted, with the sign it carries in the
// tetrahedron's boundary.
std::pair<std::array<long, 3>, int> oriented_face(const Tetrahedron& t, std::size_t i) {
  std::array<long, 3> face{};
  std::size_t n = 0;
  for (std::size_t j = 0; j < 4; ++j)
    if (j != i) face[n++] = t[j];
  const int parity = (i % 2 == 0) ? 1 : -1;
  return {face, parity * sort_with_sign(face)};
}

void check_facets(const Triangulation3& t) {
  if (t.facets.empty()) throw FormatError("triangulation has no facets");
  for (std::size_t f = 0; f < t.facets.size(); ++f) {
    const Tetrahedron& tet = t.facets[f];
    for (long v : tet)
      if (v < 0) throw FormatError("facet " + std::to_string(f) + " " + simplex_text(tet) +
                                   " has a negative vertex index");
    std::array<long, 4> sorted = tet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw FormatError("facet " + std::to_string(f) + " " + simplex_text(tet) +
                        " has a repeated vertex");
  }
}

struct FaceIncidence {
  std::size_t facet;
  int sign;
};

struct Combinatorics {
  std::map<std::array<long, 3>, std::vector<FaceIncidence>> faces;
  std::vector<std::string> diagnostics;
  bool closed = true;
  bool oriented = true;
  bool connected = true;
  std::vector<int> flips;
};

Combinatorics analyse(const Triangulation3& t) {
  check_facets(t);
  Combinatorics c;
  for (std::size_t f = 0; f < t.facets.size(); ++f)
    for (std::size_t i = 0; i < 4; ++i) {
      auto [face, sign] = oriented_face(t.facets[f], i);
      c.faces[face].push_back({f, sign});
    }

  for (const auto& [face, inc] : c.faces) {
    if (inc.size() != 2) {
      c.closed = false;
      c.diagnostics.push_back("triangle " + simplex_text(face) + " lies in " +
                              std::to_string(inc.size()) + " tetrahedra, expected 2");
    }
  }

  // Breadth-first propagation of orientation flips across shared triangles.
  std::vector<std::vector<std::pair<std::size_t, const std::array<long, 3>*>>> adjacent(
      t.facets.size());
  for (const auto& [face, inc] : c.faces)
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = 0; b < inc.size(); ++b)
        if (a != b) adjacent[inc[a].facet].push_back({inc[b].facet, &face});

  c.flips.assign(t.facets.size(), 0);
  std::size_t components = 0;
  for (std::size_t start = 0; start < t.facets.size(); ++start) {
    if (c.flips[start] != 0) continue;
    ++components;
    c.flips[start] = 1;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      const std::size_t f = todo.front();
      todo.pop();
      for (const auto& [g, face] : adjacent[f]) {
        const auto& inc = c.faces.at(*face);
        if (inc.size() != 2) {
          if (c.flips[g] == 0) {
            c.flips[g] = 1;
            todo.push(g);
          }
          continue;
        }
        const FaceIncidence& mine = inc[0].facet == f ? inc[0] : inc[1];
        const FaceIncidence& theirs = inc[0].facet == f ? inc[1] : inc[0];
        const int wanted = -c.flips[f] * mine.sign * theirs.sign;
        if (c.flips[g] == 0) {
          c.flips[g] = wanted;
          todo.push(g);
        } else if (c.flips[g] != wanted && c.oriented) {
          c.oriented = false;
          c.diagnostics.push_back("no coherent orientation: conflict across triangle " +
                                  simplex_text(*face));
        }
      }
    }
  }
  if (components != 1) {
    c.connected = false;
    c.diagnostics.push_back("facet adjacency graph has " + std::to_string(components) +
                            " components");
  }
  return c;
}

void check_shapes(const ChainComplexDirect& c) {
  if (c.boundaries.empty()) throw FormatError("chain complex has dimension 0");
  for (std::size_t k = 0; k + 1 < c.boundaries.size(); ++k) {
    if (c.boundaries[k].cols() != c.boundaries[k + 1].rows()) {
      throw FormatError("boundary " + std::to_string(k + 1) + " has " +
                        std::to_string(c.boundaries[k].cols()) + " columns but boundary " +
                        std::to_string(k + 2) + " has " +
                        std::to_string(c.boundaries[k + 1].rows()) + " rows");
    }
  }
}

std::vector<std::string> composition_failures(const ChainComplexDirect& c) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k + 1 < c.boundaries.size(); ++k)
    if (!(c.boundaries[k] * c.boundaries[k + 1]).is_zero())
      out.push_back("boundary " + std::to_string(k + 1) + " * boundary " +
                    std::to_string(k + 2) + " is not zero");
  return out;
}

}  // namespace

ValidationReport validate(const ManifoldPresentation& p) {
  ValidationReport report;
  if (const auto* t = std::get_if<Triangulation3>(&p.data)) {
    Combinatorics c = analyse(*t);
    report.closed = c.closed;
    report.oriented = c.oriented;
    report.connected = c.connected;
    report.diagnostics = std::move(c.diagnostics);
    report.is_complex = true;
    return report;
  }
  const auto& cc = std::get<ChainComplexDirect>(p.data);
  check_shapes(cc);
  report.diagnostics = composition_failures(cc);
  report.is_complex = report.diagnostics.empty();
  report.closed = report.oriented = report.connected = true;
  report.trusted = true;
  return report;
}

void require_valid(const ManifoldPresentation& p) {
  const ValidationReport r = validate(p);
  if (r.ok()) return;
  std::string msg = (p.name.empty() ? std::string("manifold") : p.name) + ":";
  if (!r.is_complex) msg += " not a chain complex;";
  if (!r.closed) msg += " not closed;";
  if (!r.oriented) msg += " not orientable;";
  if (!r.connected) msg += " not connected;";
  for (const auto& d : r.diagnostics) msg += " " + d + ";";
  msg.pop_back();
  throw HypothesisError(msg);
}

long SimplicialChains::signed_edge(long u, long v) const {
  const std::pair<long, long> key{std::min(u, v), std::max(u, v)};
  const auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key || u == v)
    throw DomainError("no edge between vertices " + std::to_string(u) + " and " +
                      std::to_string(v));
  const long index = static_cast<long>(it - edges.begin()) + 1;
  return u < v ? index : -index;
}

IntegerVector SimplicialChains::loop_chain(std::span<const long> vertices) const {
  IntegerVector chain(edges.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const long e = signed_edge(vertices[i], vertices[(i + 1) % vertices.size()]);
    chain[static_cast<std::size_t>(std::abs(e) - 1)] += e > 0 ? 1 : -1;
  }
  return chain;
}

SimplicialChains simplicial_chains(const Triangulation3& t) {
  const Combinatorics comb = analyse(t);
  SimplicialChains s;

  std::set<long> labels;
  for (const auto& tet : t.facets) labels.insert(tet.begin(), tet.end());
  s.vertex_labels.assign(labels.begin(), labels.end());

  std::set<std::pair<long, long>> edge_set;
  for (const auto& [face, inc] : comb.faces) {
    s.triangles.push_back(face);
    edge_set.insert({face[0], face[1]});
    edge_set.insert({face[0], face[2]});
    edge_set.insert({face[1], face[2]});
  }
  s.edges.assign(edge_set.begin(), edge_set.end());

  s.oriented_facets = t.facets;
  if (comb.oriented)
    for (std::size_t f = 0; f < t.facets.size(); ++f)
      if (comb.flips[f] < 0) std::swap(s.oriented_facets[f][0], s.oriented_facets[f][1]);

  const auto vertex_index = [&](long label) {
    return static_cast<std::size_t>(
        std::lower_bound(s.vertex_labels.begin(), s.vertex_labels.end(), label) -
        s.vertex_labels.begin());
  };
  const auto edge_index = [&](long a, long b) {
    return static_cast<std::size_t>(std::abs(s.signed_edge(a, b)) - 1);
  };

  IntegerMatrix d1(s.vertex_labels.size(), s.edges.size());
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    d1(vertex_index(s.edges[e].first), e) = -1;
    d1(vertex_index(s.edges[e].second), e) = 1;
  }

  IntegerMatrix d2(s.edges.size(), s.triangles.size());
  for (std::size_t f = 0; f < s.triangles.size(); ++f) {
    const auto& [a, b, c] = s.triangles[f];
    d2(edge_index(b, c), f) += 1;
    d2(edge_index(a, c), f) -= 1;
    d2(edge_index(a, b), f) += 1;
  }

  IntegerMatrix d3(s.triangles.size(), s.oriented_facets.size());
  for (std::size_t f = 0; f < s.oriented_facets.size(); ++f)
    for (std::size_t i = 0; i < 4; ++i) {
      auto [face, sign] = oriented_face(s.oriented_facets[f], i);
      const auto row = static_cast<std::size_t>(
          std::lower_bound(s.triangles.begin(), s.triangles.end(), face) - s.triangles.begin());
      d3(row, f) += sign;
    }

  s.complex.boundaries = {std::move(d1), std::move(d2), std::move(d3)};
  return s;
}

ChainComplexDirect chain_complex(const ManifoldPresentation& p) {
  if (const auto* t = std::get_if<Triangulation3>(&p.data)) return simplicial_chains(*t).complex;
  return std::get<ChainComplexDirect>(p.data);
}

// ---------------------------------------------------------------------------
// Homology

struct HomologyGroup::Data {
  std::size_t degree = 0;
  std::size_t chain_rank = 0;
  IntegerMatrix boundary_out;     // boundary from this degree, for cycle checks
  IntegerMatrix coordinate_map;   // raw coordinates of a cycle
  std::vector<std::size_t> free_rows;
  std::vector<std::size_t> torsion_rows;
  IntegerVector torsion;
  std::vector<IntegerVector> cycle_basis;
  std::vector<IntegerVector> cocycle_basis;
};

std::size_t HomologyGroup::degree() const { return data_->degree; }
std::size_t HomologyGroup::free_rank() const { return data_->free_rows.size(); }
const IntegerVector& HomologyGroup::torsion() const { return data_->torsion; }
std::size_t HomologyGroup::chain_rank() const { return data_->chain_rank; }
const std::vector<IntegerVector>& HomologyGroup::cycle_basis() const {
  return data_->cycle_basis;
}
const std::vector<IntegerVector>& HomologyGroup::cocycle_basis() const {
  return data_->cocycle_basis;
}

bool HomologyGroup::is_cycle(std::span<const Integer> chain) const {
  if (chain.size() != data_->chain_rank) return false;
  const IntegerVector image = data_->boundary_out * chain;
  return std::all_of(image.begin(), image.end(), [](const Integer& v) { return sgn(v) == 0; });
}

std::pair<IntegerVector, IntegerVector> HomologyGroup::coordinates(
    std::span<const Integer> chain) const {
  if (chain.size() != data_->chain_rank)
    throw DomainError("chain has " + std::to_string(chain.size()) + " entries, expected " +
                      std::to_string(data_->chain_rank));
  if (!is_cycle(chain)) throw DomainError("chain is not a cycle");
  const IntegerVector raw = data_->coordinate_map * chain;
  IntegerVector free_part, torsion_part;
  for (std::size_t r : data_->free_rows) free_part.push_back(raw[r]);
  for (std::size_t i = 0; i < data_->torsion_rows.size(); ++i) {
    Integer v;
    mpz_fdiv_r(v.get_mpz_t(), raw[data_->torsion_rows[i]].get_mpz_t(),
               data_->torsion[i].get_mpz_t());
    torsion_part.push_back(v);
  }
  return {free_part, torsion_part};
}

std::string HomologyGroup::describe() const {
  std::string out;
  const std::size_t r = free_rank();
  if (r == 1) out = "Z";
  if (r > 1) out = "Z^" + std::to_string(r);
  for (const Integer& t : data_->torsion) out += (out.empty() ? "" : " + ") + ("Z_" + t.get_str());
  return out.empty() ? "0" : out;
}

bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->degree == b.data_->degree && a.data_->torsion == b.data_->torsion &&
         a.data_->free_rows == b.data_->free_rows &&
         a.data_->torsion_rows == b.data_->torsion_rows &&
         a.data_->coordinate_map == b.data_->coordinate_map;
}

HomologyGroup homology(const ChainComplexDirect& c, std::size_t k) {
  check_shapes(c);
  const std::size_t dim = c.dimension();
  if (k > dim)
    throw DomainError("degree " + std::to_string(k) + " exceeds complex dimension " +
                      std::to_string(dim));

  const std::size_t n = k < dim ? c.boundaries[k].rows() : c.boundaries[dim - 1].cols();
  const IntegerMatrix out = k == 0 ? IntegerMatrix(0, n) : c.boundaries[k - 1];
  const IntegerMatrix in = k == dim ? IntegerMatrix(n, 0) : c.boundaries[k];

  // Cycles: the last n - r columns of V span ker(out), and the matching rows
  // of V^-1 give kernel coordinates.
  const SmithDecomposition out_snf = smith_normal_form(out);
  const std::size_t r = out_snf.rank();
  const IntegerMatrix kernel = out_snf.V.column_block(r, n);
  const IntegerMatrix kernel_coords = out_snf.V_inverse.row_block(r, n);

  // Boundaries in kernel coordinates, then the quotient via a second Smith form.
  const IntegerMatrix relations = kernel_coords * in;
  const SmithDecomposition rel_snf = smith_normal_form(relations);
  const std::size_t z = n - r;
  const std::size_t rel_rank = rel_snf.rank();

  auto data = std::make_shared<HomologyGroup::Data>();
  data->degree = k;
  data->chain_rank = n;
  data->boundary_out = out;
  data->coordinate_map = rel_snf.U * kernel_coords;
  for (std::size_t i = rel_rank; i < z; ++i) data->free_rows.push_back(i);
  for (std::size_t i = 0; i < rel_rank; ++i)
    if (rel_snf.S(i, i) > 1) {
      data->torsion_rows.push_back(i);
      data->torsion.push_back(rel_snf.S(i, i));
    }

  const IntegerMatrix generators = kernel * rel_snf.U_inverse;
  for (std::size_t i : data->free_rows) data->cycle_basis.push_back(generators.column(i));
  for (std::size_t i : data->torsion_rows) data->cycle_basis.push_back(generators.column(i));

  const SmithDecomposition dual_snf = smith_normal_form(in.transpose());
  for (std::size_t j = dual_snf.rank(); j < n; ++j)
    data->cocycle_basis.push_back(dual_snf.V.column(j));

  return HomologyGroup(std::move(data));
}

HomologyGroup homology(const ManifoldPresentation& p, std::size_t k) {
  require_valid(p);
  return homology(chain_complex(p), k);
}

HomologyClass::HomologyClass(HomologyGroup group, IntegerVector free_part,
                             IntegerVector torsion_part)
    : group_(std::move(group)), free_(std::move(free_part)), torsion_(std::move(torsion_part)) {
  if (free_.size() != group_.free_rank() || torsion_.size() != group_.torsion().size())
    throw DomainError("class has " + std::to_string(free_.size()) + " free and " +
                      std::to_string(torsion_.size()) + " torsion coordinates; group " +
                      group_.describe() + " needs " + std::to_string(group_.free_rank()) +
                      " and " + std::to_string(group_.torsion().size()));
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    mpz_fdiv_r(torsion_[i].get_mpz_t(), torsion_[i].get_mpz_t(),
               group_.torsion()[i].get_mpz_t());
}

HomologyClass HomologyClass::zero(const HomologyGroup& group) {
  return {group, IntegerVector(group.free_rank()), IntegerVector(group.torsion().size())};
}

bool HomologyClass::is_zero() const {
  const auto nil = [](const Integer& v) { return sgn(v) == 0; };
  return std::all_of(free_.begin(), free_.end(), nil) &&
         std::all_of(torsion_.begin(), torsion_.end(), nil);
}

IntegerVector HomologyClass::representative() const {
  IntegerVector chain(group_.chain_rank());
  const auto& basis = group_.cycle_basis();
  const auto accumulate = [&](const IntegerVector& gen, const Integer& coeff) {
    if (sgn(coeff) == 0) return;
    for (std::size_t i = 0; i < chain.size(); ++i) chain[i] += coeff * gen[i];
  };
  for (std::size_t i = 0; i < free_.size(); ++i) accumulate(basis[i], free_[i]);
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    accumulate(basis[free_.size() + i], torsion_[i]);
  return chain;
}

HomologyClass HomologyClass::operator+(const HomologyClass& other) const {
  if (!(group_ == other.group_)) throw DomainError("adding classes from different groups");
  IntegerVector f = free_, t = torsion_;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += other.free_[i];
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += other.torsion_[i];
  return {group_, std::move(f), std::move(t)};
}

HomologyClass HomologyClass::operator-() const {
  IntegerVector f = free_, t = torsion_;
  for (auto& v : f) v = -v;
  for (auto& v : t) v = -v;
  return {group_, std::move(f), std::move(t)};
}

HomologyClass operator*(const Integer& k, const HomologyClass& c) {
  IntegerVector f = c.free_, t = c.torsion_;
  for (auto& v : f) v *= k;
  for (auto& v : t) v *= k;
  return {c.group_, std::move(f), std::move(t)};
}

HomologyClass class_of(const HomologyGroup& group, std::span<const Integer> chain) {
  auto [f, t] = group.coordinates(chain);
  return {group, std::move(f), std::move(t)};
}

HomologyClass cycle_class(const ManifoldPresentation& p, std::span<const Integer> chain) {
  return class_of(homology(p, 1), chain);
}

IntegerVector chain_from_edges(std::span<const SignedEdge> edges, std::size_t edge_count) {
  IntegerVector chain(edge_count);
  for (const SignedEdge& e : edges) {
    if (e.index >= edge_count)
      throw DomainError("edge index " + std::to_string(e.index) + " out of range (" +
                        std::to_string(edge_count) + " edges)");
    chain[e.index] += e.sign;
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Built-in manifolds and file formats

ManifoldPresentation sphere_s3() {
  Triangulation3 t;
  for (long omit = 0; omit < 5; ++omit) {
    Tetrahedron tet{};
    std::size_t n = 0;
    for (long v = 0; v < 5; ++v)
      if (v != omit) tet[n++] = v;
    t.facets.push_back(tet);
  }
  return {"builtin:s3", std::move(t)};
}

ManifoldPresentation torus_t3() {
  std::istringstream in{std::string(kT3Triangulation)};
  return {"builtin:t3", read_triangulation(in)};
}

// CW structure with one cell in each degree 0..3.
ManifoldPresentation lens_space(long p, long q) {
  if (p < 0) throw FormatError("lens space L(p,q) needs p >= 0");
  if (p > 0 && std::gcd(p, q) != 1)
    throw FormatError("lens space L(p,q) needs gcd(p,q) = 1");
  ChainComplexDirect c;
  c.boundaries = {IntegerMatrix{{0}}, IntegerMatrix{{p}}, IntegerMatrix{{0}}};
  return {"builtin:lens:" + std::to_string(p) + ":" + std::to_string(q), std::move(c)};
}

ManifoldPresentation s1_x_s2() {
  ManifoldPresentation m = lens_space(0, 1);
  m.name = "builtin:s1xs2";
  return m;
}

namespace {

long parse_long(const std::string& token, const std::string& context) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size())
    throw FormatError("expected an integer in " + context + ", found '" + token + "'");
  return v;
}

}  // namespace

ManifoldPresentation builtin_manifold(const std::string& uri) {
  const std::string prefix = "builtin:";
  if (uri.rfind(prefix, 0) != 0) throw FormatError("not a builtin manifold: " + uri);
  const std::string name = uri.substr(prefix.size());
  if (name == "s3") return sphere_s3();
  if (name == "t3") return torus_t3();
  if (name == "s1xs2") return s1_x_s2();
  if (name.rfind("lens:", 0) == 0) {
    const std::string rest = name.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw FormatError("lens space must be builtin:lens:p:q");
    return lens_space(parse_long(rest.substr(0, colon), uri),
                      parse_long(rest.substr(colon + 1), uri));
  }
  throw FormatError("unknown builtin manifold '" + name +
                    "' (known: s3, t3, s1xs2, lens:p:q)");
}

Triangulation3 read_triangulation(std::istream& in) {
  std::istringstream dim_line(detail::next_data_line(in, "triangulation header"));
  std::string word, extra;
  long dim = 0;
  if (!(dim_line >> word >> dim) || word != "dim" || (dim_line >> extra))
    throw FormatError("triangulation must start with 'dim 3'");
  if (dim != 3) throw FormatError("only 3-dimensional triangulations are supported");

  std::istringstream count_line(detail::next_data_line(in, "facet count"));
  long count = -1;
  if (!(count_line >> word >> count) || word != "facets" || count < 0 || (count_line >> extra))
    throw FormatError("second line must be 'facets N'");

  Triangulation3 t;
  for (long f = 0; f < count; ++f) {
    std::istringstream line(detail::next_data_line(in, "facet"));
    std::vector<long> vs;
    std::string token;
    while (line >> token) vs.push_back(parse_long(token, "facet " + std::to_string(f)));
    if (vs.size() != 4)
      throw FormatError("facet " + std::to_string(f) + " has " + std::to_string(vs.size()) +
                        " vertices, expected 4");
    t.facets.push_back({vs[0], vs[1], vs[2], vs[3]});
  }
  check_facets(t);
  return t;
}

ChainComplexDirect read_chain_complex(std::istream& in) {
  std::istringstream header(detail::next_data_line(in, "chain complex header"));
  std::string chain, dim_word, extra;
  long dim = 0;
  if (!(header >> chain >> dim_word >> dim) || chain != "chain" || dim_word != "dim" ||
      (header >> extra))
    throw FormatError("chain complex must start with 'chain dim D'");
  if (dim < 1) throw FormatError("chain complex dimension must be at least 1");
  ChainComplexDirect c;
  for (long k = 0; k < dim; ++k) c.boundaries.push_back(read_matrix(in));
  check_shapes(c);
  return c;
}

ManifoldPresentation load_manifold(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();

  std::istringstream probe(text);
  std::istringstream first(detail::next_data_line(probe, path.c_str()));
  std::string word;
  first >> word;
  std::istringstream in(text);
  if (word == "dim") return {path, read_triangulation(in)};
  if (word == "chain") return {path, read_chain_complex(in)};
  throw FormatError(path + ": first line must be 'dim 3' or 'chain dim D'");
}

ManifoldPresentation resolve_manifold(const std::string& uri_or_path) {
  if (uri_or_path.rfind("builtin:", 0) == 0) return builtin_manifold(uri_or_path);
  return load_manifold(uri_or_path);
}

}  // namespace framed
