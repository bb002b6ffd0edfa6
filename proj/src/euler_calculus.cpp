#include "framed/euler_calculus.hpp"

#include <algorithm>
#include <sstream>

#include "framed/errors.hpp"

namespace framed {

namespace {
// Each elimination move is materialized in the transcript.
constexpr unsigned long kMaxSurgerySteps = 10'000'000;
}  // namespace

Integer euler_class(const ImmersedSurfaceData& s) {
  if (s.ambient == AmbientKind::ProductN3xI) return -2 * s.sigma;
  if (!s.intersection_form) throw DomainError("closed ambient manifold needs an intersection form");
  const IntegerMatrix& q = *s.intersection_form;
  if (!q.is_symmetric()) throw DomainError("intersection form must be a symmetric square matrix");
  if (q.rows() != s.class_coords.size())
    throw DomainError("intersection form is " + std::to_string(q.rows()) + "x" +
                      std::to_string(q.cols()) + " but the class has " +
                      std::to_string(s.class_coords.size()) + " coordinates");
  const IntegerVector qa = q * std::span<const Integer>(s.class_coords);
  Integer square = 0;
  for (std::size_t i = 0; i < qa.size(); ++i) square += s.class_coords[i] * qa[i];
  return square - 2 * s.sigma;
}

std::string to_string(PieceTag t) {
  switch (t) {
    case PieceTag::Given: return "given";
    case PieceTag::Reflected: return "reflected";
    case PieceTag::Framed: return "framed";
    case PieceTag::Product: return "product";
  }
  return "?";
}

CobordismExpression CobordismExpression::given(std::string label, Integer euler) {
  CobordismExpression e;
  e.pieces_.push_back({std::move(label), 1, PieceTag::Given, std::move(euler)});
  return e;
}

CobordismExpression CobordismExpression::framed(std::string label) {
  CobordismExpression e;
  e.pieces_.push_back({std::move(label), 1, PieceTag::Framed, 0});
  return e;
}

CobordismExpression CobordismExpression::product(std::string label) {
  CobordismExpression e;
  e.pieces_.push_back({std::move(label), 1, PieceTag::Product, 0});
  return e;
}

Integer CobordismExpression::euler() const {
  Integer total = 0;
  for (const auto& p : pieces_) total += p.euler();
  return total;
}

std::string CobordismExpression::describe() const {
  std::string out;
  for (const auto& p : pieces_) {
    if (!out.empty()) out += " u ";
    out += p.orientation < 0 ? "(-" + p.label + ")" : p.label;
  }
  return out.empty() ? "empty" : out;
}

CobordismExpression stack(const CobordismExpression& lower, const CobordismExpression& upper) {
  CobordismExpression out = lower;
  out.pieces_.insert(out.pieces_.end(), upper.pieces_.begin(), upper.pieces_.end());
  return out;
}

CobordismExpression reflect(const CobordismExpression& e) {
  CobordismExpression out;
  out.pieces_.assign(e.pieces_.rbegin(), e.pieces_.rend());
  for (auto& p : out.pieces_) {
    p.orientation = -p.orientation;
    if (p.tag == PieceTag::Given) p.tag = PieceTag::Reflected;
    else if (p.tag == PieceTag::Reflected) p.tag = PieceTag::Given;
  }
  return out;
}

std::string format_transcript(const Transcript& t) {
  std::ostringstream out;
  for (const auto& s : t)
    out << "step=" << s.step << " rule=\"" << s.rule << "\" before=" << s.before
        << " after=" << s.after << '\n';
  return out.str();
}

namespace {

class TranscriptWriter {
 public:
  explicit TranscriptWriter(Transcript& t) : t_(t) {}
  void add(std::string rule, const Integer& before, const Integer& after) {
    t_.push_back({t_.size() + 1, std::move(rule), before, after});
  }

 private:
  Transcript& t_;
};

// Stacks one piece on top and records the change in Euler class.
void stack_logged(CobordismExpression& k, const CobordismExpression& piece,
                  TranscriptWriter& log) {
  const Integer before = k.euler();
  k = stack(k, piece);
  const CobordismPiece& p = piece.pieces().front();
  std::string rule = "stack " + piece.describe() + " [" + to_string(p.tag) + "]";
  if (p.tag == PieceTag::Framed || p.tag == PieceTag::Product) rule += " contributes 0";
  log.add(std::move(rule), before, k.euler());
}

void require_nonnegative(const Integer& d) {
  if (sgn(d) < 0) throw DomainError("divisibility d must be nonnegative, got " + d.get_str());
}

}  // namespace

SurgeryResult eliminate_self_intersections(const Integer& euler,
                                           std::span<const int> point_signs) {
  SurgeryResult out;
  TranscriptWriter log(out.steps);
  Integer e = euler;
  for (int s : point_signs) {
    if (s != 1 && s != -1) throw DomainError("double point signs must be +1 or -1");
    const Integer before = e;
    e -= 2 * s;
    log.add(s > 0 ? "remove positive double point" : "remove negative double point", before, e);
  }
  out.final_euler = e;
  out.frameable = sgn(e) == 0;
  return out;
}

SurgeryResult eliminate_self_intersections(const Integer& euler, const Integer& sigma) {
  const Integer count = abs(sigma);
  if (count > kMaxSurgerySteps)
    throw DomainError("refusing to replay " + count.get_str() + " elimination moves");
  const std::vector<int> signs(count.get_ui(), sgn(sigma) < 0 ? -1 : 1);
  return eliminate_self_intersections(euler, signs);
}

ReplayReport replay_well_definedness(const Integer& d, const Integer& e_L,
                                     const Integer& e_Lprime, const Integer& pK_dot_alpha) {
  require_nonnegative(d);
  ReplayReport r;
  TranscriptWriter log(r.trace);

  const auto L = CobordismExpression::given("L", e_L);
  const auto Lp = CobordismExpression::given("L'", e_Lprime);
  const auto delta = CobordismExpression::framed("D");
  const auto cylinder = CobordismExpression::product("L1'x[-1,1]");

  CobordismExpression k = reflect(Lp);
  log.add("reflect: e(-L') = -e(L')", e_Lprime, k.euler());
  stack_logged(k, L, log);
  stack_logged(k, delta, log);
  stack_logged(k, cylinder, log);
  stack_logged(k, reflect(delta), log);
  r.cobordism = k;
  r.euler = k.euler();

  if (r.euler != e_L - e_Lprime) {
    r.verdict = "stacking rules disagree: e(K) = " + r.euler.get_str() + " but e(L) - e(L') = " +
                Integer(e_L - e_Lprime).get_str();
    return r;
  }

  // K lies in M x R, where e(K) = -2 sigma.
  if (!mpz_even_p(r.euler.get_mpz_t())) {
    r.verdict = "e(K) = " + r.euler.get_str() + " is odd, but in M x R it equals -2 sigma";
    return r;
  }
  const Integer sigma = -r.euler / 2;
  log.add("product ambient: e(K) = -2 sigma with sigma = " + sigma.get_str(), r.euler,
          euler_class({AmbientKind::ProductN3xI, {}, std::nullopt, sigma}));

  const Integer paired = 2 * pK_dot_alpha;
  if (r.euler != paired) {
    r.verdict = "counterexample: e(K) = " + r.euler.get_str() + " but 2 [pK].alpha = " +
                paired.get_str();
    return r;
  }
  log.add("double points: e(K) = 2 [pK].alpha", r.euler, paired);

  const bool pairing_ok = sgn(d) == 0 ? sgn(pK_dot_alpha) == 0
                                       : mpz_divisible_p(pK_dot_alpha.get_mpz_t(), d.get_mpz_t());
  if (!pairing_ok) {
    r.verdict = "counterexample: [pK].alpha = " + pK_dot_alpha.get_str() +
                (sgn(d) == 0 ? " is nonzero but alpha is torsion"
                             : " is not a multiple of d = " + d.get_str());
    return r;
  }
  const Integer modulus = 2 * d;
  Integer residue = r.euler;
  if (sgn(modulus) != 0) mpz_fdiv_r(residue.get_mpz_t(), r.euler.get_mpz_t(), modulus.get_mpz_t());
  log.add("divisibility: 2 [pK].alpha = 0 mod " + modulus.get_str(), paired, residue);

  r.accepted = true;
  r.verdict = "e(L) = " + e_L.get_str() + " = " + e_Lprime.get_str() + " = e(L') mod " +
              modulus.get_str() + "; h does not depend on the cobordism";
  return r;
}

ReplayReport replay_injectivity(const Integer& d, const Integer& e_diff) {
  require_nonnegative(d);
  ReplayReport r;
  TranscriptWriter log(r.trace);

  CobordismExpression k = stack(reflect(CobordismExpression::given("L'", 0)),
                                CobordismExpression::given("L", e_diff));
  log.add("given: e(-L' u L) = e_diff", 0, e_diff);

  const Integer modulus = 2 * d;
  if (sgn(modulus) == 0) {
    if (sgn(e_diff) != 0) {
      r.verdict = "h values differ: e_diff = " + e_diff.get_str() + " but the fiber is Z";
      r.euler = e_diff;
      r.cobordism = k;
      return r;
    }
    r.y = 0;
  } else {
    if (!mpz_divisible_p(e_diff.get_mpz_t(), modulus.get_mpz_t())) {
      r.verdict = "h values differ: " + e_diff.get_str() + " is not divisible by " +
                  modulus.get_str();
      r.euler = e_diff;
      r.cobordism = k;
      return r;
    }
    r.y = e_diff / modulus;
  }

  // Connected sum with an embedded surface realizing y beta: no double
  // points, so its Euler class is 0.
  const Integer sum_euler = euler_class({AmbientKind::ProductN3xI, {}, std::nullopt, 0});
  const Integer before = k.euler();
  k = stack(k, CobordismExpression::given("K(y beta)", sum_euler));
  log.add("connected sum with K realizing y beta (embedded, e = 0)", before, k.euler());

  // y beta . alpha = d y double points, all of sign sgn(y).
  const Integer double_points = d * r.y;
  const SurgeryResult surgery = eliminate_self_intersections(k.euler(), double_points);
  for (const auto& s : surgery.steps) log.add(s.rule, s.before, s.after);

  r.cobordism = k;
  r.euler = surgery.final_euler;
  if (!surgery.frameable) {
    r.verdict = "surgery left e = " + surgery.final_euler.get_str();
    return r;
  }
  r.accepted = true;
  r.verdict = "y = " + r.y.get_str() + ", " + Integer(abs(double_points)).get_str() +
              " double points removed, e = 0: the cobordism can be framed";
  return r;
}

}  // namespace framed
