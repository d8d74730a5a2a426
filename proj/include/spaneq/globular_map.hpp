#pragma once

// Maps of n-globular sets: dimension-indexed cell functions commuting with
// source and target.

#include <vector>

#include "spaneq/globular.hpp"

namespace spaneq::glob {

// Raw component tables by cell position; kNoCell marks missing entries.
struct MapData {
  std::vector<std::vector<CellIdx>> comp;  // [k][i] -> codomain index at k
};

struct GlobularMap {
  GlobPtr dom, cod;
  std::vector<std::vector<CellIdx>> comp;

  CellIdx at(int k, CellIdx i) const { return comp[k][i]; }
};

// Accepts iff every component is total and the commutation squares hold at
// every k >= 1. Violations name the offending cell and dimension.
Checked<GlobularMap> validate_map(GlobPtr dom, GlobPtr cod, const MapData& raw);

GlobularMap identity_map(GlobPtr x);

// g after f. Throws std::invalid_argument unless cod(f) equals dom(g)
// structurally.
GlobularMap compose_maps(const GlobularMap& g, const GlobularMap& f);

bool maps_equal(const GlobularMap& a, const GlobularMap& b);

}  // namespace spaneq::glob
