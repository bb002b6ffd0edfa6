// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "framed/classification.hpp"
#include "framed/errors.hpp"
#include "framed/euler_calculus.hpp"
#include "framed/framed_links.hpp"
#include "test_support.hpp"

namespace {

using namespace framed;
using testing::Rng;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// Shipped T^3 triangulation -> H_1 -> fiber of p x + q y + r z, built from
// the coordinate circles, against the gcd formula computed with std::gcd.
Outcome torus_golden() {
  Outcome o;
  const auto t3 = torus_t3();
  const SimplicialChains s = simplicial_chains(std::get<Triangulation3>(t3.data));
  const ClassificationTable table = classify(t3);
  o.require(table.h1().free_rank() == 3 && table.h1().torsion().empty(),
            "H_1(T^3) = " + table.h1().describe());
  const std::vector<std::vector<long>> loops{{0, 1, 2}, {0, 3, 6}, {0, 9, 18}};
  std::vector<IntegerVector> z;
  for (const auto& l : loops) z.push_back(s.loop_chain(l));
  int checked = 0;
  for (long p = -5; p <= 5; ++p)
    for (long q = -5; q <= 5; ++q)
      for (long r = -5; r <= 5; ++r) {
        IntegerVector chain(s.edges.size());
        for (std::size_t e = 0; e < chain.size(); ++e) chain[e] = p * z[0][e] + q * z[1][e] + r * z[2][e];
        const FiberGroup f = table.fiber_of(class_of(table.h1(), chain));
        const long g = std::gcd(std::gcd(p, q), r);
        const bool ok = g == 0 ? f.is_infinite() : f.modulus == 2 * g;
        o.require(ok && torus_example(p, q, r).fiber == f,
                  "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                      ") gave " + f.to_string());
        ++checked;
      }
  if (o.pass) o.detail = std::to_string(checked) + " tuples";
  return o;
}

Outcome hopf_sanity() {
  Outcome o;
  const ClassificationTable table = classify(sphere_s3());
  const auto classes = table.classes(5);
  o.require(classes.size() == 1, std::to_string(classes.size()) + " classes");
  if (o.pass) {
    o.require(classes.front().is_zero(), "class is not zero");
    o.require(table.fiber_of(classes.front()).to_string() == "Z", "fiber is not Z");
  }
  if (o.pass) o.detail = "one class, fiber Z";
  return o;
}

Outcome torsion_manifolds() {
  Outcome o;
  for (long p : {2, 3, 5, 7}) {
    const ClassificationTable table = classify(builtin_manifold("builtin:lens:" + std::to_string(p) + ":1"));
    const auto classes = table.classes(3);
    o.require(classes.size() == static_cast<std::size_t>(p),
              "L(" + std::to_string(p) + ",1) has " + std::to_string(classes.size()) + " classes");
    for (const auto& a : classes)
      o.require(table.fiber_of(a).is_infinite(), "L(" + std::to_string(p) + ",1) finite fiber");
  }
  const ClassificationTable s1s2 = classify(builtin_manifold("builtin:s1xs2"));
  for (const auto& a : s1s2.classes(10)) {
    const long k = a.free_part()[0].get_si();
    const FiberGroup f = s1s2.fiber_of(a);
    const std::string expected = k == 0 ? "Z" : "Z_" + std::to_string(2 * std::labs(k));
    o.require(f.to_string() == expected, "S1xS2 k=" + std::to_string(k) + " gave " + f.to_string());
  }
  if (o.pass) o.detail = "lens 2,3,5,7 and S1xS2 |k|<=10";
  return o;
}

Outcome definition_regression() {
  Outcome o;
  ChainComplexDirect c;
  c.boundaries = {IntegerMatrix(1, 2), IntegerMatrix{{0}, {3}}};
  const HomologyGroup h1 = homology(c, 1);
  o.require(h1.describe() == "Z + Z_3", "H_1 = " + h1.describe());
  const HomologyClass a(h1, {2}, {1});
  o.require(divisibility(a) == 2, "d = " + divisibility(a).get_str());
  o.require(fiber(a).to_string() == "Z_4", "fiber " + fiber(a).to_string());
  // Z + Z_2, (2, 1): not twice anything in the whole group, still d = 2.
  c.boundaries = {IntegerMatrix(1, 2), IntegerMatrix{{0}, {2}}};
  const HomologyClass b(homology(c, 1), {2}, {1});
  o.require(divisibility(b) == 2, "Z+Z_2 d = " + divisibility(b).get_str());
  if (o.pass) o.detail = "free (2), torsion (1 mod 3) -> d = 2";
  return o;
}

Outcome steenrod_cross_check() {
  Outcome o;
  Rng rng(1729);
  int checked = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const testing::RandomH1 x = testing::random_h1(rng);
    const HomologyGroup h1 = homology(x.complex, 1);
    IntegerVector free(x.free_rank), torsion(x.torsion.size());
    for (auto& v : free) v = testing::uniform(rng, -30, 30);
    for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = testing::uniform(rng, 0, 9);
    const HomologyClass a(h1, free, torsion);
    o.require(steenrod_subgroup(a) == 2 * divisibility(a),
              "trial " + std::to_string(trial) + ": " + steenrod_subgroup(a).get_str() +
                  " vs 2*" + divisibility(a).get_str());
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " random classes";
  return o;
}

Outcome snf_suite() {
  Outcome o;
  Rng rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const IntegerMatrix a = testing::random_matrix(rng, rows, cols, -20, 20);
    const SmithDecomposition snf = smith_normal_form(a);
    const std::string tag = "trial " + std::to_string(trial) + ": ";
    o.require(snf.U * a * snf.V == snf.S, tag + "UAV != S");
    o.require(abs(determinant(snf.U)) == 1 && abs(determinant(snf.V)) == 1, tag + "not unimodular");
    bool diagonal = true;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && sgn(snf.S(i, j)) != 0) diagonal = false;
    o.require(diagonal, tag + "S not diagonal");
    const IntegerVector d = snf.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      o.require(sgn(d[i]) >= 0, tag + "negative invariant factor");
      const bool divides = sgn(d[i]) == 0 ? sgn(d[i + 1]) == 0
                                          : mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()) != 0;
      o.require(divides, tag + "divisibility chain broken");
    }
    if (rows == cols) {
      const __int128 det = testing::leibniz_determinant(a);
      Integer product = 1;
      for (const Integer& v : d) product *= v;
      o.require(product == Integer(static_cast<long>(det < 0 ? -det : det)),
                tag + "product of invariant factors != |det|");
    }
  }
  if (o.pass) o.detail = "500 matrices";
  return o;
}

Outcome divisibility_oracle() {
  Outcome o;
  Rng rng(4096);
  for (int trial = 0; trial < 200; ++trial) {
    const testing::RandomH1 x = testing::random_h1(rng, 3, 2, 8);
    const HomologyGroup h1 = homology(x.complex, 1);
    std::vector<long> free(x.free_rank);
    for (long& v : free) v = testing::uniform(rng, -12, 12);
    IntegerVector torsion(x.torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = testing::uniform(rng, 0, 7);
    const HomologyClass a(h1, testing::to_integers(free), torsion);
    const long brute = testing::brute_force_divisibility(free);
    o.require(divisibility(a) == brute, "trial " + std::to_string(trial) + ": " +
                                            divisibility(a).get_str() + " vs " + std::to_string(brute));
  }
  if (o.pass) o.detail = "200 random classes";
  return o;
}

Outcome fiber_cardinality() {
  Outcome o;
  int classes_checked = 0;
  for (const char* uri : {"builtin:s3", "builtin:t3", "builtin:s1xs2", "builtin:lens:2:1",
                          "builtin:lens:3:1", "builtin:lens:5:1", "builtin:lens:7:1"}) {
    const ClassificationTable table = classify(builtin_manifold(uri));
    table.for_each_class(6, [&](const HomologyClass& a) {
      const Integer d = divisibility(a);
      if (sgn(d) == 0 || d > 6) return;
      const long m = 2 * d.get_si();
      std::vector<FramedLinkClass> reps;
      for (long t = 0; t < m; ++t) {
        const FramedLinkClass l{a, t};
        o.require(framed_cobordant(l, twist(l, m)), std::string(uri) + ": twist by 2d not trivial");
        bool found = false;
        for (const auto& r : reps) found = found || framed_cobordant(r, l);
        if (!found) reps.push_back(l);
      }
      o.require(reps.size() == static_cast<std::size_t>(m),
                std::string(uri) + ": quotient has " + std::to_string(reps.size()) +
                    " elements, expected " + std::to_string(m));
      ++classes_checked;
    });
  }
  if (o.pass) o.detail = std::to_string(classes_checked) + " classes with 0 < d <= 6";
  return o;
}

Outcome euler_replay() {
  Outcome o;
  Rng rng(31);
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const long d = testing::uniform(rng, 0, 15);
    const long m = testing::uniform(rng, -25, 25);
    const long e_lp = testing::uniform(rng, -1000, 1000);
    const long pk = d * m;
    o.require(replay_well_definedness(d, e_lp + 2 * pk, e_lp, pk).accepted,
              "consistent well-definedness rejected");
    o.require(replay_injectivity(d, 2 * d * m).accepted, "consistent injectivity rejected");
    accepted += 2;

    // e_L - e_L' no longer equals 2 [pK].alpha
    o.require(!replay_well_definedness(d, e_lp + 2 * pk + testing::uniform(rng, 1, 7), e_lp, pk).accepted,
              "perturbed well-definedness accepted");
    // e_diff off the lattice 2d Z (or nonzero when d = 0)
    const long shift = d == 0 ? testing::uniform(rng, 1, 50) : testing::uniform(rng, 1, 2 * d - 1);
    o.require(!replay_injectivity(d, 2 * d * m + shift).accepted, "perturbed injectivity accepted");
    rejected += 2;
  }
  // Product ambient e = -2 sigma; closed ambient a^T Q a - 2 sigma.
  for (long sigma = -20; sigma <= 20; ++sigma)
    o.require(euler_class({AmbientKind::ProductN3xI, {}, std::nullopt, sigma}) == -2 * sigma,
              "product formula");
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    IntegerMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) q(i, j) = q(j, i) = testing::uniform(rng, -5, 5);
    IntegerVector a(n);
    for (auto& v : a) v = testing::uniform(rng, -5, 5);
    const long sigma = testing::uniform(rng, -9, 9);
    Integer expected = -2 * sigma;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) expected += a[i] * q(i, j) * a[j];
    o.require(euler_class({AmbientKind::Closed4Manifold, a, q, sigma}) == expected, "closed formula");
  }
  if (o.pass)
    o.detail = std::to_string(accepted) + " accepted, " + std::to_string(rejected) +
               " rejected, Euler class formulas exact";
  return o;
}

Outcome theorem2_table() {
  Outcome o;
  int rows = 0;
  for (std::size_t n = 0; n <= 6; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Theorem2Input in{n, {}};
      for (std::size_t i = 0; i < n; ++i) in.w2_evaluations.push_back((mask >> i) & 1u);
      const DegreeMap expected = mask != 0 ? DegreeMap::Bijective : DegreeMap::TwoToOne;
      o.require(theorem2_classify(in) == expected,
                "length " + std::to_string(n) + " mask " + std::to_string(mask));
      ++rows;
    }
  if (o.pass) o.detail = std::to_string(rows) + " vectors";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"T3 golden: fiber Z_{2gcd(p,q,r)} through the shipped triangulation", torus_golden},
      {"S3: one class with fiber Z", hopf_sanity},
      {"lens spaces and S1xS2 fibers", torsion_manifolds},
      {"divisibility ignores torsion", definition_regression},
      {"Steenrod subgroup equals 2 d", steenrod_cross_check},
      {"Smith normal form properties", snf_suite},
      {"divisibility matches brute force", divisibility_oracle},
      {"fiber cardinality 2d and twist periodicity", fiber_cardinality},
      {"Euler class replays and formulas", euler_replay},
      {"degree map truth table", theorem2_table},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures == 0 ? 0 : 1;
}
