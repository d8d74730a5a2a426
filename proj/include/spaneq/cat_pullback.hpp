#pragma once

// Pullback of finite categories along a cospan of functors, computed
// directly: matching object pairs, matching morphism pairs, coordinatewise
// composition.

#include "spaneq/functor.hpp"

namespace spaneq::cat {

struct CatPullback {
  CatPtr apex;
  FinFunctor left;   // apex -> dom(F)
  FinFunctor right;  // apex -> dom(G)
};

// Requires cod(F) = cod(G). Pairs are ordered lexicographically by
// (F-side order, G-side order); names are "(a,b)" / "(f,g)".
CatPullback pullback_category(const FinFunctor& f, const FinFunctor& g);

}  // namespace spaneq::cat
