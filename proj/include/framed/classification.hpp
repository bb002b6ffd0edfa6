#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "framed/chain_homology.hpp"

namespace framed {

// Z_m for m > 0, Z for m = 0.
struct FiberGroup {
  Integer modulus = 0;

  bool is_infinite() const { return sgn(modulus) == 0; }
  std::string to_string() const;  // "Z" or "Z_m"

  friend bool operator==(const FiberGroup&, const FiberGroup&) = default;
};

// Divisibility of the projection of a class to the free part: the gcd of the
// free coordinates, 0 for classes with zero free part. Torsion is ignored.
Integer divisibility(const HomologyClass& alpha);

// Framed links of degree alpha up to framed cobordism form a copy of Z_{2d}.
FiberGroup fiber(const HomologyClass& alpha);

// Generator g >= 0 of 2 * {phi(alpha) : phi in Hom(H_1, Z)}. The
// homomorphisms are integral cocycles evaluated on a cycle representing
// alpha, so this never touches the canonical coordinates. Agrees with
// 2 * divisibility(alpha).
Integer steenrod_subgroup(const HomologyClass& alpha);

// Maps T^3 -> S^2 are classified by (p, q, r, t): p, q, r the degrees on the
// coordinate 2-subtori, t in Z when p = q = r = 0 and in Z_{2 gcd(p,q,r)}
// otherwise.
struct TorusTuple {
  Integer p, q, r;
  FiberGroup fiber;
  std::string description;
};
TorusTuple torus_example(const Integer& p, const Integer& q, const Integer& r);

// An element (alpha, t) of the classification. For finite fibers t lies in
// [0, 2d); for Z fibers t is any integer.
struct ClassifiedLink {
  HomologyClass alpha;
  Integer t;
};

// Framed links in M up to framed cobordism, fibered over H_1(M; Z).
class ClassificationTable {
 public:
  ClassificationTable(std::string manifold, HomologyGroup h1);

  const std::string& manifold() const { return manifold_; }
  const HomologyGroup& h1() const { return h1_; }

  FiberGroup fiber_of(const HomologyClass& alpha) const;
  // Class from canonical coordinates in this table's H_1.
  HomologyClass class_at(IntegerVector free_part, IntegerVector torsion_part = {}) const;

  // Every alpha with free coordinates in [-bound, bound], all torsion values.
  void for_each_class(long bound, const std::function<void(const HomologyClass&)>& visit) const;
  // Every (alpha, t) with alpha as above and t in [0, 2d(alpha)), or in
  // [-bound, bound] when the fiber is Z. Each pair is visited once.
  void for_each_link(long bound, const std::function<void(const ClassifiedLink&)>& visit) const;
  std::vector<HomologyClass> classes(long bound) const;
  std::vector<ClassifiedLink> links(long bound) const;

 private:
  std::string manifold_;
  HomologyGroup h1_;
};

// Throws HypothesisError unless the presentation is a closed, oriented,
// connected 3-manifold (or a trusted chain complex).
ClassificationTable classify(const ManifoldPresentation& p);

// Stable range n >= 4: deg is a bijection iff some integral 2-class beta has
// rho_2(beta) . w_2(M) = 1; otherwise every fiber has two points.
struct Theorem2Input {
  std::size_t h2_mod2_rank = 0;
  std::vector<std::uint8_t> w2_evaluations;  // one per mod-2 generator, each 0 or 1
};

enum class DegreeMap { Bijective, TwoToOne };

// Throws DomainError on entries outside {0,1} or a length that differs from
// h2_mod2_rank.
DegreeMap theorem2_classify(const Theorem2Input& input);
std::string to_string(DegreeMap m);  // "bijective" or "2-to-1"

}  // namespace framed
