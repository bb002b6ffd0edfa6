#include "framed/classification.hpp"

#include <algorithm>

#include "framed/errors.hpp"

namespace framed {

std::string FiberGroup::to_string() const {
  return is_infinite() ? "Z" : "Z_" + modulus.get_str();
}

Integer divisibility(const HomologyClass& alpha) { return gcd_of(alpha.free_part()); }

FiberGroup fiber(const HomologyClass& alpha) { return {2 * divisibility(alpha)}; }

Integer steenrod_subgroup(const HomologyClass& alpha) {
  const IntegerVector cycle = alpha.representative();
  Integer g = 0;
  for (const IntegerVector& phi : alpha.group().cocycle_basis()) {
    Integer value = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) value += phi[i] * cycle[i];
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
  }
  return 2 * g;
}

TorusTuple torus_example(const Integer& p, const Integer& q, const Integer& r) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
  TorusTuple out{p, q, r, FiberGroup{2 * g}, {}};
  out.description = "(p,q,r) = (" + p.get_str() + "," + q.get_str() + "," + r.get_str() +
                    ") are the degrees of the restrictions to the 2-dimensional subtori; t in " +
                    out.fiber.to_string();
  return out;
}

ClassificationTable::ClassificationTable(std::string manifold, HomologyGroup h1)
    : manifold_(std::move(manifold)), h1_(std::move(h1)) {}

FiberGroup ClassificationTable::fiber_of(const HomologyClass& alpha) const {
  if (!(alpha.group() == h1_)) throw DomainError("class does not belong to H_1 of " + manifold_);
  return fiber(alpha);
}

HomologyClass ClassificationTable::class_at(IntegerVector free_part,
                                            IntegerVector torsion_part) const {
  if (torsion_part.empty()) torsion_part.resize(h1_.torsion().size());
  return {h1_, std::move(free_part), std::move(torsion_part)};
}

void ClassificationTable::for_each_class(
    long bound, const std::function<void(const HomologyClass&)>& visit) const {
  if (bound < 0) throw DomainError("enumeration bound must be nonnegative");
  const std::size_t r = h1_.free_rank();
  const IntegerVector& torsion = h1_.torsion();
  IntegerVector free_part(r, Integer(-bound));
  IntegerVector torsion_part(torsion.size());
  // Odometer over the free box, then over torsion residues.
  for (;;) {
    visit(HomologyClass(h1_, free_part, torsion_part));
    std::size_t i = 0;
    for (; i < torsion.size(); ++i) {
      if (++torsion_part[i] < torsion[i]) break;
      torsion_part[i] = 0;
    }
    if (i < torsion.size()) continue;
    std::size_t j = 0;
    for (; j < r; ++j) {
      if (++free_part[j] <= bound) break;
      free_part[j] = -bound;
    }
    if (j == r) return;
  }
}

void ClassificationTable::for_each_link(
    long bound, const std::function<void(const ClassifiedLink&)>& visit) const {
  for_each_class(bound, [&](const HomologyClass& alpha) {
    const FiberGroup f = fiber(alpha);
    if (f.is_infinite()) {
      for (long t = -bound; t <= bound; ++t) visit({alpha, Integer(t)});
    } else {
      for (Integer t = 0; t < f.modulus; ++t) visit({alpha, t});
    }
  });
}

std::vector<HomologyClass> ClassificationTable::classes(long bound) const {
  std::vector<HomologyClass> out;
  for_each_class(bound, [&](const HomologyClass& a) { out.push_back(a); });
  return out;
}

std::vector<ClassifiedLink> ClassificationTable::links(long bound) const {
  std::vector<ClassifiedLink> out;
  for_each_link(bound, [&](const ClassifiedLink& l) { out.push_back(l); });
  return out;
}

ClassificationTable classify(const ManifoldPresentation& p) {
  return {p.name, homology(p, 1)};
}

DegreeMap theorem2_classify(const Theorem2Input& input) {
  if (input.w2_evaluations.size() != input.h2_mod2_rank)
    throw DomainError("expected " + std::to_string(input.h2_mod2_rank) +
                      " w2 evaluations, got " + std::to_string(input.w2_evaluations.size()));
  if (std::any_of(input.w2_evaluations.begin(), input.w2_evaluations.end(),
                  [](std::uint8_t v) { return v > 1; }))
    throw DomainError("w2 evaluations must be 0 or 1");
  // w2 pairs linearly with H_2(M; Z_2), so some beta pairs to 1 exactly when
  // some basis element does.
  const bool some_one = std::any_of(input.w2_evaluations.begin(), input.w2_evaluations.end(),
                                    [](std::uint8_t v) { return v == 1; });
  return some_one ? DegreeMap::Bijective : DegreeMap::TwoToOne;
}

std::string to_string(DegreeMap m) {
  return m == DegreeMap::Bijective ? "bijective" : "2-to-1";
}

}  // namespace framed
