#pragma once

// Natural transformations between parallel functors, with naturality and
// invertibility checkers.

#include "spaneq/functor.hpp"

namespace spaneq::cat {

struct NatTrans {
  FinFunctor source, target;  // parallel: same dom, same cod
  std::vector<MorIdx> at;     // per domain object, a morphism of cod
};

// Component typing plus commuting naturality squares for every morphism.
PropertyReport check_naturality(const NatTrans& t, std::size_t limit = kDefaultWitnessLimit);

// Naturality plus an inverse for every component.
PropertyReport is_natural_iso(const NatTrans& t, std::size_t limit = kDefaultWitnessLimit);

// Componentwise inverse; requires every component invertible.
Checked<NatTrans> invert_nat_iso(const NatTrans& t);

NatTrans identity_nat(const FinFunctor& f);

}  // namespace spaneq::cat
