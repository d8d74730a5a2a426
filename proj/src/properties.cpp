#include "spaneq/properties.hpp"

#include <stdexcept>

namespace spaneq::glob {

namespace {

void require_dim(const GlobularMap& f, int k, int low) {
  if (k < low || k > f.dom->dimension()) throw std::invalid_argument("property check: k out of range");
}

}  // namespace

PropertyReport is_surjective_on(const GlobularMap& f, int k, std::size_t limit) {
  require_dim(f, k, 0);
  PropertyReport report(limit);
  std::vector<char> hit(f.cod->size(k), 0);
  for (CellIdx i : f.comp[k]) hit[i] = 1;
  for (CellIdx i = 0; i < f.cod->size(k); ++i)
    if (!hit[i]) report.fail("unhit " + std::to_string(k) + "-cell '" + f.cod->name(k, i) + "'");
  return report;
}

PropertyReport is_injective_on(const GlobularMap& f, int k, std::size_t limit) {
  require_dim(f, k, 0);
  PropertyReport report(limit);
  std::vector<CellIdx> first(f.cod->size(k), kNoCell);
  for (CellIdx i = 0; i < f.dom->size(k); ++i) {
    const CellIdx image = f.comp[k][i];
    if (first[image] == kNoCell)
      first[image] = i;
    else
      report.fail("collision ('" + f.dom->name(k, first[image]) + "', '" + f.dom->name(k, i) +
                  "') both map to '" + f.cod->name(k, image) + "'");
  }
  return report;
}

PropertyReport is_full_on(const GlobularMap& f, int k, std::size_t limit) {
  require_dim(f, k, 1);
  PropertyReport report(limit);
  const GlobularSet& x = *f.dom;
  const GlobularSet& y = *f.cod;
  for (CellIdx a = 0; a < x.size(k - 1); ++a) {
    for (CellIdx b = 0; b < x.size(k - 1); ++b) {
      const auto targets = hom_set(y, k, f.comp[k - 1][a], f.comp[k - 1][b]);
      if (targets.empty()) continue;
      const auto sources = hom_set(x, k, a, b);
      for (CellIdx beta : targets) {
        bool found = false;
        for (CellIdx alpha : sources)
          if (f.comp[k][alpha] == beta) {
            found = true;
            break;
          }
        if (!found)
          report.fail("no preimage over ('" + x.name(k - 1, a) + "', '" + x.name(k - 1, b) +
                      "') for '" + y.name(k, beta) + "'");
      }
    }
  }
  return report;
}

PropertyReport is_faithful_on(const GlobularMap& f, int k, std::size_t limit) {
  require_dim(f, k, 1);
  PropertyReport report(limit);
  const GlobularSet& x = *f.dom;
  for (CellIdx a = 0; a < x.size(k - 1); ++a) {
    for (CellIdx b = 0; b < x.size(k - 1); ++b) {
      const auto cells = hom_set(x, k, a, b);
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
          if (f.comp[k][cells[i]] == f.comp[k][cells[j]])
            report.fail("('" + x.name(k, cells[i]) + "', '" + x.name(k, cells[j]) +
                        "') identified in hom ('" + x.name(k - 1, a) + "', '" + x.name(k - 1, b) +
                        "')");
    }
  }
  return report;
}

PropertyReport equivalence_profile(const GlobularMap& f, std::size_t limit) {
  const int n = f.dom->dimension();
  PropertyReport report(limit);
  report.add_part("surjective_on_0", is_surjective_on(f, 0, limit));
  for (int k = 1; k <= n; ++k)
    report.add_part("full_on_" + std::to_string(k), is_full_on(f, k, limit));
  if (n >= 1) report.add_part("faithful_on_" + std::to_string(n), is_faithful_on(f, n, limit));
  return report;
}

}  // namespace spaneq::glob
