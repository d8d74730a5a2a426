#pragma once

// Finite n-truncated globular sets: graded cell sets with source/target maps
// satisfying the globularity identities. Cells are opaque names with a fixed
// total order (insertion order), which anchors every downstream choice.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spaneq/report.hpp"

namespace spaneq::glob {

using CellIdx = std::int32_t;
inline constexpr CellIdx kNoCell = -1;

// Raw dimension-indexed tables as read from a file or assembled by hand.
// src[k][i] / tgt[k][i] name the boundary of cells[k][i]; the k = 0 rows are
// ignored. Empty strings mark missing entries.
struct GlobularData {
  int dimension = 0;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<std::string>> src;
  std::vector<std::vector<std::string>> tgt;
};

class GlobularSet {
 public:
  GlobularSet() = default;

  int dimension() const { return dim_; }
  // Cell count at dimension k (0 for k outside 0..n).
  int size(int k) const {
    return (k >= 0 && k <= dim_) ? static_cast<int>(names_[k].size()) : 0;
  }
  const std::vector<std::string>& names(int k) const { return names_[k]; }
  const std::string& name(int k, CellIdx i) const { return names_[k][i]; }
  CellIdx src(int k, CellIdx i) const { return src_[k][i]; }
  CellIdx tgt(int k, CellIdx i) const { return tgt_[k][i]; }
  std::optional<CellIdx> find(int k, std::string_view cell) const;
  bool empty() const;

  friend bool operator==(const GlobularSet& a, const GlobularSet& b) {
    return a.dim_ == b.dim_ && a.names_ == b.names_ && a.src_ == b.src_ && a.tgt_ == b.tgt_;
  }

  // Assembly for constructions that are valid by design (pullbacks, nerves,
  // generated instances). Boundary indices must already satisfy globularity.
  static GlobularSet unchecked(int dimension, std::vector<std::vector<std::string>> names,
                               std::vector<std::vector<CellIdx>> src,
                               std::vector<std::vector<CellIdx>> tgt);

 private:
  int dim_ = 0;
  std::vector<std::vector<std::string>> names_{{}};
  std::vector<std::vector<CellIdx>> src_{{}}, tgt_{{}};
  std::vector<std::unordered_map<std::string, CellIdx>> index_{{}};

  void build_index();
  friend Checked<GlobularSet> validate_globular(const GlobularData& raw);
};

using GlobPtr = std::shared_ptr<const GlobularSet>;

inline GlobPtr share(GlobularSet g) { return std::make_shared<const GlobularSet>(std::move(g)); }

// Resolves names, then accepts iff cell names are unique per dimension, all
// boundary references resolve, and the globularity identities hold at every
// k >= 2. Violating cells are all listed.
Checked<GlobularSet> validate_globular(const GlobularData& raw);

// { a in X_k | src(a) = x, tgt(a) = y }, in cell order. Throws
// std::invalid_argument when k or the endpoints are out of range.
std::vector<CellIdx> hom_set(const GlobularSet& x, int k, CellIdx from, CellIdx to);

// The terminal n-globular set: one cell per dimension.
GlobularSet terminal_globular(int dimension);

// No cells at any dimension.
GlobularSet empty_globular(int dimension);

}  // namespace spaneq::glob
