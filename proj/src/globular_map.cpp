#include "spaneq/globular_map.hpp"

#include <stdexcept>

namespace spaneq::glob {

Checked<GlobularMap> validate_map(GlobPtr dom, GlobPtr cod, const MapData& raw) {
  std::vector<std::string> errors;
  if (!dom || !cod) return Checked<GlobularMap>::failure({"map endpoints missing"});
  if (dom->dimension() != cod->dimension())
    return Checked<GlobularMap>::failure({"dimension mismatch: domain has n=" +
                                          std::to_string(dom->dimension()) + ", codomain n=" +
                                          std::to_string(cod->dimension())});
  const int n = dom->dimension();

  GlobularMap f;
  f.dom = dom;
  f.cod = cod;
  f.comp.assign(n + 1, {});
  for (int k = 0; k <= n; ++k) {
    f.comp[k].assign(dom->size(k), kNoCell);
    for (CellIdx i = 0; i < dom->size(k); ++i) {
      CellIdx image = kNoCell;
      if (k < static_cast<int>(raw.comp.size()) && i < static_cast<CellIdx>(raw.comp[k].size()))
        image = raw.comp[k][i];
      if (image == kNoCell) {
        errors.push_back("component not total: no image for cell '" + dom->name(k, i) +
                         "' at dimension " + std::to_string(k));
        continue;
      }
      if (image < 0 || image >= cod->size(k)) {
        errors.push_back("image out of range for cell '" + dom->name(k, i) + "' at dimension " +
                         std::to_string(k));
        continue;
      }
      f.comp[k][i] = image;
    }
  }
  if (!errors.empty()) return Checked<GlobularMap>::failure(std::move(errors));

  for (int k = 1; k <= n; ++k) {
    for (CellIdx i = 0; i < dom->size(k); ++i) {
      const CellIdx fi = f.comp[k][i];
      if (cod->src(k, fi) != f.comp[k - 1][dom->src(k, i)])
        errors.push_back("commutation failure at k=" + std::to_string(k) + " cell '" +
                         dom->name(k, i) + "': src(f(x)) = '" + cod->name(k - 1, cod->src(k, fi)) +
                         "' but f(src(x)) = '" + cod->name(k - 1, f.comp[k - 1][dom->src(k, i)]) + "'");
      if (cod->tgt(k, fi) != f.comp[k - 1][dom->tgt(k, i)])
        errors.push_back("commutation failure at k=" + std::to_string(k) + " cell '" +
                         dom->name(k, i) + "': tgt(f(x)) = '" + cod->name(k - 1, cod->tgt(k, fi)) +
                         "' but f(tgt(x)) = '" + cod->name(k - 1, f.comp[k - 1][dom->tgt(k, i)]) + "'");
    }
  }
  if (!errors.empty()) return Checked<GlobularMap>::failure(std::move(errors));
  return Checked<GlobularMap>::success(std::move(f));
}

GlobularMap identity_map(GlobPtr x) {
  GlobularMap f;
  f.dom = x;
  f.cod = x;
  f.comp.assign(x->dimension() + 1, {});
  for (int k = 0; k <= x->dimension(); ++k) {
    f.comp[k].resize(x->size(k));
    for (CellIdx i = 0; i < x->size(k); ++i) f.comp[k][i] = i;
  }
  return f;
}

GlobularMap compose_maps(const GlobularMap& g, const GlobularMap& f) {
  if (!(*f.cod == *g.dom)) throw std::invalid_argument("compose_maps: object mismatch");
  GlobularMap h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.comp.assign(f.comp.size(), {});
  for (std::size_t k = 0; k < f.comp.size(); ++k) {
    h.comp[k].resize(f.comp[k].size());
    for (std::size_t i = 0; i < f.comp[k].size(); ++i) h.comp[k][i] = g.comp[k][f.comp[k][i]];
  }
  return h;
}

bool maps_equal(const GlobularMap& a, const GlobularMap& b) {
  return *a.dom == *b.dom && *a.cod == *b.cod && a.comp == b.comp;
}

}  // namespace spaneq::glob
