#pragma once

// Functors between finite categories and their law / property checkers.

#include "spaneq/fincat.hpp"

namespace spaneq::cat {

struct FinFunctor {
  CatPtr dom, cod;
  std::vector<ObjIdx> obj_map;  // per domain object
  std::vector<MorIdx> mor_map;  // per domain morphism

  ObjIdx on_object(ObjIdx o) const { return obj_map[o]; }
  MorIdx on_morphism(MorIdx m) const { return mor_map[m]; }
};

FinFunctor identity_functor(CatPtr c);

// g after f; throws on middle-category mismatch.
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

bool functors_equal(const FinFunctor& a, const FinFunctor& b);

// Preservation of boundaries, identities, and all binary composites.
PropertyReport check_functor_laws(const FinFunctor& f, std::size_t limit = kDefaultWitnessLimit);

// Reports surjectivity on objects, fullness, and faithfulness as named
// parts; verdict is their conjunction.
PropertyReport functor_props(const FinFunctor& f, std::size_t limit = kDefaultWitnessLimit);

}  // namespace spaneq::cat
