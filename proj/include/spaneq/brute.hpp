#pragma once

// Exhaustive search oracles over small finite categories: functor
// enumeration and adjoint-equivalence search. Guarded by size limits;
// results are deterministic (lexicographically first witness).

#include <functional>
#include <optional>

#include "spaneq/adjoint.hpp"

namespace spaneq::cat {

// Enumerates every functor dom -> cod in lexicographic order (object map
// first, then morphism images in morphism order) and feeds it to the
// visitor; stops early when the visitor returns false.
void enumerate_functors(CatPtr dom, CatPtr cod, const std::function<bool(const FinFunctor&)>& visit);

// Exhaustively searches functor pairs and natural isos; returns the first
// witness promoted to an adjoint equivalence, or nothing when no equivalence
// exists. Throws std::invalid_argument when either category exceeds 4
// objects or 12 morphisms.
std::optional<AdjointEquivalence> are_equivalent_bruteforce(CatPtr a, CatPtr b);

}  // namespace spaneq::cat
