#include "spaneq/span.hpp"

#include <stdexcept>

namespace spaneq::glob {

Span make_span(GlobularMap left, GlobularMap right) {
  if (!(*left.dom == *right.dom)) throw std::invalid_argument("make_span: legs must share a domain");
  return Span{std::move(left), std::move(right)};
}

PropertyReport is_span_equivalence(const Span& s, std::size_t limit) {
  PropertyReport report(limit);
  report.add_part("left", equivalence_profile(s.left, limit));
  report.add_part("right", equivalence_profile(s.right, limit));
  return report;
}

Span compose_spans(const Span& s1, const Span& s2) {
  if (!(*s1.right.cod == *s2.left.cod))
    throw std::invalid_argument("compose_spans: middle object mismatch");
  PullbackResult pb = pullback_globular(s1.right, s2.left);
  return Span{compose_maps(s1.left, pb.left), compose_maps(s2.right, pb.right)};
}

Span identity_span(GlobPtr x) { return Span{identity_map(x), identity_map(x)}; }

Span swap_span(const Span& s) { return Span{s.right, s.left}; }

}  // namespace spaneq::glob
