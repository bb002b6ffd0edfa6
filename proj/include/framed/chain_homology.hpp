#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "framed/exact_linalg.hpp"

namespace framed {

using Tetrahedron = std::array<long, 4>;

// A 3-dimensional simplicial complex given by its facets. Facet orientation
// in the input is irrelevant; a coherent orientation is searched for.
struct Triangulation3 {
  std::vector<Tetrahedron> facets;
};

// A chain complex given by its boundary maps. boundaries[k-1] is the
// boundary map from degree k to degree k-1, a (rank C_{k-1}) x (rank C_k)
// matrix.
struct ChainComplexDirect {
  std::vector<IntegerMatrix> boundaries;

  std::size_t dimension() const { return boundaries.size(); }
};

struct ManifoldPresentation {
  std::string name;
  std::variant<Triangulation3, ChainComplexDirect> data;

  bool is_triangulation() const { return std::holds_alternative<Triangulation3>(data); }
};

struct ValidationReport {
  bool closed = false;
  bool oriented = false;
  bool connected = false;
  bool is_complex = false;
  // True for direct chain complexes, whose manifold properties are taken on
  // trust rather than checked.
  bool trusted = false;
  // One line per violated hypothesis, naming the offending simplex.
  std::vector<std::string> diagnostics;

  bool ok() const { return is_complex && closed && oriented && connected; }
};

// Throws FormatError for malformed facets (repeated or negative vertex,
// empty facet list) or boundary maps whose shapes do not compose.
ValidationReport validate(const ManifoldPresentation& p);

// validate() followed by HypothesisError if any hypothesis fails.
void require_valid(const ManifoldPresentation& p);

// The simplicial chain complex of a triangulation, with the facets
// coherently oriented when that is possible. Vertices are relabelled
// 0..n-1 in increasing order of their input labels; edges and triangles are
// listed in lexicographic order of their sorted vertex labels, each oriented
// from lower to higher label.
struct SimplicialChains {
  std::vector<long> vertex_labels;
  std::vector<std::pair<long, long>> edges;
  std::vector<std::array<long, 3>> triangles;
  std::vector<Tetrahedron> oriented_facets;
  ChainComplexDirect complex;

  // Signed index of the edge between two vertex labels: +(i+1) if u < v,
  // -(i+1) otherwise. Throws DomainError when no such edge exists.
  long signed_edge(long u, long v) const;
  // 1-chain of a closed vertex path v0 -> v1 -> ... -> v0.
  IntegerVector loop_chain(std::span<const long> vertices) const;
};

SimplicialChains simplicial_chains(const Triangulation3& t);

// The chain complex behind any presentation.
ChainComplexDirect chain_complex(const ManifoldPresentation& p);

// H_k(C; Z) with canonical coordinates: free generators first, then torsion
// generators in divisibility order. The basis comes from Smith forms of the
// boundary maps and is deterministic for a given presentation.
//
// Cheap to copy; copies share the computed data.
class HomologyGroup {
 public:
  std::size_t degree() const;
  std::size_t free_rank() const;
  const IntegerVector& torsion() const;
  std::size_t chain_rank() const;
  // Representative cycles, free generators then torsion generators.
  const std::vector<IntegerVector>& cycle_basis() const;
  // Integral cocycles of this degree (phi with phi o boundary = 0), a basis of
  // the lattice. Each evaluates on cycles to a homomorphism H_k -> Z.
  const std::vector<IntegerVector>& cocycle_basis() const;

  // Raw coordinates of a cycle; free and torsion entries are then selected.
  // Throws DomainError if the chain is not a cycle.
  std::pair<IntegerVector, IntegerVector> coordinates(std::span<const Integer> chain) const;
  bool is_cycle(std::span<const Integer> chain) const;

  std::string describe() const;  // e.g. "Z^3 + Z_2 + Z_4", "0"

  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b);

 private:
  struct Data;
  explicit HomologyGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  friend HomologyGroup homology(const ChainComplexDirect& c, std::size_t k);

  std::shared_ptr<const Data> data_;
};

// An element of a HomologyGroup in canonical coordinates.
class HomologyClass {
 public:
  // Torsion entries are reduced into [0, t_i). Throws DomainError when the
  // coordinate counts do not match the group.
  HomologyClass(HomologyGroup group, IntegerVector free_part, IntegerVector torsion_part);
  static HomologyClass zero(const HomologyGroup& group);

  const HomologyGroup& group() const { return group_; }
  const IntegerVector& free_part() const { return free_; }
  const IntegerVector& torsion_part() const { return torsion_; }
  bool is_zero() const;

  // A cycle representing this class.
  IntegerVector representative() const;

  HomologyClass operator+(const HomologyClass& other) const;
  HomologyClass operator-() const;
  HomologyClass operator-(const HomologyClass& other) const { return *this + (-other); }
  friend HomologyClass operator*(const Integer& k, const HomologyClass& c);

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  HomologyGroup group_;
  IntegerVector free_;
  IntegerVector torsion_;
};

HomologyGroup homology(const ChainComplexDirect& c, std::size_t k);
// Validates first; throws HypothesisError on failure and DomainError when k
// exceeds the dimension.
HomologyGroup homology(const ManifoldPresentation& p, std::size_t k);

// Class of a cycle in H_k. Throws DomainError if the chain is not a cycle.
HomologyClass class_of(const HomologyGroup& group, std::span<const Integer> chain);
HomologyClass cycle_class(const ManifoldPresentation& p, std::span<const Integer> chain);

// 1-chain from signed edge indices; entry (+i) adds edge i, (-i) subtracts it.
// Indices are 0-based, so sign is carried separately.
struct SignedEdge {
  std::size_t index;
  int sign;  // +1 or -1
};
IntegerVector chain_from_edges(std::span<const SignedEdge> edges, std::size_t edge_count);

// Built-in manifolds. Names: "s3", "t3", "s1xs2", "lens:p:q".
ManifoldPresentation sphere_s3();
ManifoldPresentation torus_t3();
ManifoldPresentation s1_x_s2();
ManifoldPresentation lens_space(long p, long q);
// Resolves "builtin:<name>"; throws FormatError on unknown names.
ManifoldPresentation builtin_manifold(const std::string& uri);

// Triangulation file: "dim 3", "facets N", N lines of 4 vertex indices.
Triangulation3 read_triangulation(std::istream& in);
// Chain-complex file: "chain dim D" then D matrices, boundary 1 first.
ChainComplexDirect read_chain_complex(std::istream& in);
// Reads either kind of file, dispatching on the first line. Throws IoError
// if the file cannot be opened.
ManifoldPresentation load_manifold(const std::string& path);
// builtin:<name> or a file path.
ManifoldPresentation resolve_manifold(const std::string& uri_or_path);

}  // namespace framed
