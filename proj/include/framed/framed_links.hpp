#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "framed/chain_homology.hpp"
#include "framed/classification.hpp"

namespace framed {

// Normal form of a framed link up to framed cobordism: its degree alpha and
// the framing twist t relative to a fixed base framed circle of degree alpha.
// The base circle is abstract (t = 0 by declaration), so h is a relative
// invariant. For alpha = 0 with a null-cobordant base this is the classical
// Hopf invariant; that identification is not computed here.
//
// The twist is stored unreduced; comparisons reduce modulo 2 d(alpha).
struct FramedLinkClass {
  HomologyClass alpha;
  Integer twist = 0;
};

// Residue of the h invariant: value in [0, modulus) when modulus > 0, the
// integer itself when the fiber is Z.
struct HInvariant {
  Integer value;
  Integer modulus;

  std::string to_string() const;
  friend bool operator==(const HInvariant&, const HInvariant&) = default;
};

const HomologyClass& degree(const FramedLinkClass& l);
HInvariant h_invariant(const FramedLinkClass& l);
// Rotates the framing k full turns about the link.
FramedLinkClass twist(const FramedLinkClass& l, const Integer& k);
// Same degree and twists congruent modulo 2 d(alpha) (equal when d = 0).
// Throws DomainError when the classes live in different H_1's.
bool framed_cobordant(const FramedLinkClass& a, const FramedLinkClass& b);

// A link described by cycles in the 1-skeleton and one twist per component.
struct LinkComponent {
  std::vector<SignedEdge> cycle;
  Integer twist = 0;
};

struct LinkDescription {
  std::vector<LinkComponent> components;
};

// alpha is the sum of the component classes; the twist is the sum of the
// component twists, a convention that matches the single-circle construction
// when there is one component. Throws DomainError if a component is not a
// cycle, HypothesisError if the presentation fails validation.
FramedLinkClass ingest_geometric(const ManifoldPresentation& p, const LinkDescription& link);
FramedLinkClass ingest_geometric(const HomologyGroup& h1, const LinkDescription& link);

// "link components N", then per component "cycle: e+i e-j ..." and "twist: k".
LinkDescription read_link(std::istream& in);
LinkDescription load_link(const std::string& path);

}  // namespace framed
