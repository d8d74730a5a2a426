#pragma once

// Paths over a 1-dimensional globular set and the bounded free category they
// generate. Paths are the elements of the free strict 1-category monad;
// flattening a path of paths is its multiplication, the length-1 inclusion
// its unit.

#include "spaneq/fincat.hpp"
#include "spaneq/globular.hpp"

namespace spaneq::glob {

struct Path {
  CellIdx start = kNoCell;          // base 0-cell; anchors the empty path
  std::vector<CellIdx> edges;       // consecutively composable 1-cells

  std::size_t length() const { return edges.size(); }
  bool is_empty() const { return edges.empty(); }
};

// End 0-cell of the path (start for empty paths).
CellIdx path_end(const GlobularSet& base, const Path& p);

// Consecutive composability over the given base; throws on dimension != 1.
bool path_valid(const GlobularSet& base, const Path& p);

// Concatenation of consecutively composable paths based at `start`;
// the empty list flattens to the empty path. Throws on a broken chain.
Path flatten(const GlobularSet& base, CellIdx start, const std::vector<Path>& parts);

// All paths of length <= max_length, grouped by nothing, ordered by length
// then lexicographically by (start, edges).
std::vector<Path> enumerate_paths(const GlobularSet& base, int max_length);

struct FreeCategoryResult {
  cat::CatPtr category;
  bool truncated = false;           // some concatenation escaped the bound
  std::vector<Path> morphism_path;  // per category morphism
};

// Objects are the 0-cells, morphisms the paths of length <= max_length,
// composition defined where the concatenated length stays within the bound.
// Identities are the empty paths, named id_<cell>; longer paths are named by
// joining edge names with '*' in traversal order. Requires max_length >= 1.
FreeCategoryResult free_category_bounded(const GlobularSet& graph, int max_length);

}  // namespace spaneq::glob
