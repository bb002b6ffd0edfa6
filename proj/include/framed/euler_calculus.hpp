#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "framed/exact_linalg.hpp"

namespace framed {

// Bookkeeping for normal Euler classes of immersed surfaces and of
// cobordisms between framed links. Nothing here is geometric: surfaces are
// described by the integers that determine their Euler class, and the
// calculus takes "relative Euler class 0 implies the boundary framing
// extends" as an axiom.

enum class AmbientKind { Closed4Manifold, ProductN3xI };

// An immersed oriented surface L in an oriented 4-manifold. For a closed
// ambient manifold, class_coords are the coordinates of [L] in a basis of H_2
// with intersection form Q. In N^3 x I the class part vanishes.
struct ImmersedSurfaceData {
  AmbientKind ambient = AmbientKind::ProductN3xI;
  IntegerVector class_coords;
  std::optional<IntegerMatrix> intersection_form;
  Integer sigma = 0;  // signed count of double points
};

// e(L) = [L].[L] - 2 sigma, and -2 sigma in N^3 x I. Throws DomainError if Q
// is missing, not symmetric, or does not match the coordinate count.
Integer euler_class(const ImmersedSurfaceData& s);

enum class PieceTag { Given, Reflected, Framed, Product };
std::string to_string(PieceTag t);

// One layer of a stacked cobordism. Its Euler class is orientation times the
// class of the source it was built from; framed and product pieces have
// source class 0.
struct CobordismPiece {
  std::string label;
  int orientation = 1;
  PieceTag tag = PieceTag::Given;
  Integer source_euler = 0;

  Integer euler() const { return orientation * source_euler; }
  friend bool operator==(const CobordismPiece&, const CobordismPiece&) = default;
};

// Pieces listed bottom to top.
class CobordismExpression {
 public:
  CobordismExpression() = default;

  static CobordismExpression given(std::string label, Integer euler);
  static CobordismExpression framed(std::string label);
  static CobordismExpression product(std::string label);

  const std::vector<CobordismPiece>& pieces() const { return pieces_; }
  Integer euler() const;
  std::string describe() const;  // e.g. "(-L') u L u D"

  friend CobordismExpression stack(const CobordismExpression& lower,
                                   const CobordismExpression& upper);
  friend CobordismExpression reflect(const CobordismExpression& e);
  friend bool operator==(const CobordismExpression&, const CobordismExpression&) = default;

 private:
  std::vector<CobordismPiece> pieces_;
};

// Relative Euler classes add under stacking.
CobordismExpression stack(const CobordismExpression& lower, const CobordismExpression& upper);
// The image under t -> -t: order reversed, orientation reversed, Euler class
// negated. An involution.
CobordismExpression reflect(const CobordismExpression& e);

struct TraceStep {
  std::size_t step = 0;
  std::string rule;
  Integer before;
  Integer after;
};
using Transcript = std::vector<TraceStep>;

std::string format_transcript(const Transcript& t);

// Removes double points one at a time; a point of sign s lowers e by 2 s.
struct SurgeryResult {
  Transcript steps;
  Integer final_euler;
  bool frameable = false;  // final_euler == 0
};
SurgeryResult eliminate_self_intersections(const Integer& euler, std::span<const int> point_signs);
// |sigma| points, all of sign sgn(sigma).
SurgeryResult eliminate_self_intersections(const Integer& euler, const Integer& sigma);

struct ReplayReport {
  bool accepted = false;
  std::string verdict;
  Transcript trace;
  CobordismExpression cobordism;
  Integer euler;  // Euler class of the assembled cobordism
  Integer y = 0;  // injectivity only: e_diff / 2d
};

// Independence of h from the chosen cobordism. Assembles
// K = (-L') u L u D u (L1' x [-1,1]) u (-D), checks e(K) = e_L - e_L',
// e(K) = 2 [pK].alpha with [pK].alpha a multiple of d (zero when d = 0), and
// concludes e_L = e_L' mod 2d. Inputs that break the chain are rejected with
// the failing link named in the verdict. Throws DomainError if d < 0.
ReplayReport replay_well_definedness(const Integer& d, const Integer& e_L,
                                     const Integer& e_Lprime, const Integer& pK_dot_alpha);

// Injectivity of h. Given e(-L' u L) = e_diff = 2 d y, takes the connected
// sum with an embedded surface of class y beta (Euler class 0), removes its
// d y double points and checks the result has Euler class 0, so the
// cobordism can be framed. Rejects e_diff not divisible by 2d (nonzero e_diff
// when d = 0). Throws DomainError if d < 0.
ReplayReport replay_injectivity(const Integer& d, const Integer& e_diff);

}  // namespace framed
