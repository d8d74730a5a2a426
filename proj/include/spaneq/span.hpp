#pragma once

// Spans of globular maps out of a common apex, the span-equivalence profile,
// composition via pullback, and the reflexivity/symmetry witnesses.

#include "spaneq/glob_pullback.hpp"

namespace spaneq::glob {

struct Span {
  GlobularMap left;   // apex -> X
  GlobularMap right;  // apex -> Y

  const GlobularSet& apex() const { return *left.dom; }
};

// Both legs must share a domain; throws otherwise.
Span make_span(GlobularMap left, GlobularMap right);

// Verdict iff both legs satisfy the equivalence profile.
PropertyReport is_span_equivalence(const Span& s, std::size_t limit = kDefaultWitnessLimit);

// Apex is the pullback of s1.right against s2.left; legs are the outer maps
// composed with the pullback projections. Requires cod(s1.right) =
// cod(s2.left).
Span compose_spans(const Span& s1, const Span& s2);

Span identity_span(GlobPtr x);

Span swap_span(const Span& s);

}  // namespace spaneq::glob
