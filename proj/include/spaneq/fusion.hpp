#pragma once

// Equivalence fusion: the category glued from an adjoint equivalence
// A ~ B, with objects the tagged disjoint union and mixed hom-sets
// B(Sx, y) and B(x, Sy). Its two projections are surjective on objects,
// full, and faithful, which turns any equivalence into a span; the reverse
// construction composes pseudo-inverses of the legs.

#include "spaneq/adjoint.hpp"
#include "spaneq/brute.hpp"

namespace spaneq::cat {

enum class Side : std::uint8_t { A, B };

struct FusionResult {
  CatPtr category;
  std::vector<Side> object_side;    // per fusion object
  std::vector<ObjIdx> object_payload;
  std::vector<MorIdx> morphism_payload;  // morphism of A or of B per the hom case
  AdjointEquivalence source;

  Side side_of(ObjIdx fusion_obj) const { return object_side[fusion_obj]; }
};

// Builds the fusion category of a valid adjoint equivalence. Objects are all
// of A's followed by all of B's; each hom-set is enumerated by payload in
// the underlying category's order; composition follows the eight-case table;
// identities are the tagged identities of the sides.
Checked<FusionResult> equivalence_fusion(const AdjointEquivalence& e);

// Projection onto A: identity on side-A objects, T on side-B objects;
// morphisms via (f; Tf; Tf . eta_x; eta_y^-1 . Tf).
FinFunctor projection_u(const FusionResult& fusion);

// Projection onto B: S on side-A objects, identity on side-B; morphisms Sf
// on the (A, A) case and the payload itself otherwise.
FinFunctor projection_v(const FusionResult& fusion);

struct CatSpan {
  CatPtr apex;
  FinFunctor left;   // apex -> A
  FinFunctor right;  // apex -> B
};

// The span (fusion, u, v); both legs satisfy the surjective-on-objects /
// full / faithful profile.
Checked<CatSpan> fuse_to_span(const AdjointEquivalence& e);

// Both legs surjective on objects, full, faithful, as one report.
PropertyReport span_profile(const CatSpan& span, std::size_t limit = kDefaultWitnessLimit);

// Recovers an adjoint equivalence A ~ B from a span whose legs satisfy the
// profile: compose_equivalences(swap(pseudo_inverse(left)),
// pseudo_inverse(right)).
Checked<AdjointEquivalence> span_to_equivalence(const CatSpan& span);

}  // namespace spaneq::cat
