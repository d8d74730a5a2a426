#pragma once

// The four cell-wise map properties (surjective, injective, full, faithful
// on k-cells) and the aggregate equivalence profile: surjective on 0-cells,
// full on every positive dimension, faithful on top cells.

#include "spaneq/globular_map.hpp"

namespace spaneq::glob {

PropertyReport is_surjective_on(const GlobularMap& f, int k,
                                std::size_t limit = kDefaultWitnessLimit);

PropertyReport is_injective_on(const GlobularMap& f, int k,
                               std::size_t limit = kDefaultWitnessLimit);

// For all x, x' in X_{k-1} and b in Hom_Y(f(x), f(x')), some a in
// Hom_X(x, x') has f(a) = b. Witnesses are triples (x, x', b). Requires
// 1 <= k <= n.
PropertyReport is_full_on(const GlobularMap& f, int k, std::size_t limit = kDefaultWitnessLimit);

// For all x, x' in X_{k-1}, the restriction of f to Hom_X(x, x') is
// injective. Witnesses are pairs of distinct cells with equal image.
// Requires 1 <= k <= n.
PropertyReport is_faithful_on(const GlobularMap& f, int k,
                              std::size_t limit = kDefaultWitnessLimit);

// Surjective on 0-cells, full on m-cells for all 1 <= m <= n, faithful on
// n-cells. At n = 0 this degenerates to surjectivity on 0-cells.
PropertyReport equivalence_profile(const GlobularMap& f, std::size_t limit = kDefaultWitnessLimit);

}  // namespace spaneq::glob
