#pragma once

// Adjoint equivalences (S, T, eta, eps) with machine-checked invariants:
// naturality, invertibility, and both triangle identities. Also the
// deterministic constructions that produce them: promotion of a plain
// equivalence, the pseudo-inverse of a surjective/full/faithful functor,
// composition, and reversal.

#include "spaneq/nat_trans.hpp"

namespace spaneq::cat {

struct AdjointEquivalence {
  FinFunctor forward;   // S : A -> B
  FinFunctor backward;  // T : B -> A
  std::vector<MorIdx> unit;    // eta_a : a -> T(S(a)), a morphism of A per A-object
  std::vector<MorIdx> counit;  // eps_b : S(T(b)) -> b, a morphism of B per B-object

  const FinCategory& a() const { return *forward.dom; }
  const FinCategory& b() const { return *forward.cod; }
  CatPtr a_ptr() const { return forward.dom; }
  CatPtr b_ptr() const { return forward.cod; }

  NatTrans unit_nat() const;    // I_A -> T.S
  NatTrans counit_nat() const;  // S.T -> I_B
};

AdjointEquivalence identity_equivalence(CatPtr c);

// Functor laws for S and T, natural isomorphism checks for eta and eps, and
// both triangle identities, all exhaustive.
PropertyReport check_adjoint_equivalence(const AdjointEquivalence& e,
                                         std::size_t limit = kDefaultWitnessLimit);

// Given natural isos eta : I_A -> TS and eps0 : ST -> I_B (triangles not
// assumed), keeps eta and rebuilds the counit so that both triangles hold:
// eps_b is the unique morphism with T(eps_b) = inverse(eta at T(b)). The
// result is re-verified, not trusted. Idempotent on adjoint equivalences.
Checked<AdjointEquivalence> promote_to_adjoint_equivalence(const FinFunctor& s,
                                                           const FinFunctor& t,
                                                           const NatTrans& eta,
                                                           const NatTrans& eps0);

// Completes a surjective-on-objects, full, faithful functor F : C -> A to an
// adjoint equivalence (F, G, eta, eps): G(a) is the first object of C mapped
// to a, G on morphisms is the unique preimage, eta_c the unique preimage of
// id_{F(c)}, eps the identity transformation. Rejects F when a precondition
// fails, naming the property.
Checked<AdjointEquivalence> pseudo_inverse(const FinFunctor& f);

// The reverse equivalence (T, S, eps^-1, eta^-1).
Checked<AdjointEquivalence> swap_equivalence(const AdjointEquivalence& e);

// Pasted composite A ~ C of e1 : A ~ B and e2 : B ~ C, re-promoted.
Checked<AdjointEquivalence> compose_equivalences(const AdjointEquivalence& e1,
                                                 const AdjointEquivalence& e2);

}  // namespace spaneq::cat
