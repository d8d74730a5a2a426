#pragma once

// Explicit pullbacks of n-globular sets: apex cells are the matching pairs
// (x, y) with f(x) = g(y), boundaries act coordinatewise, the legs are the
// coordinate projections.

#include "spaneq/properties.hpp"

namespace spaneq::glob {

struct PullbackResult {
  GlobPtr apex;
  GlobularMap left;   // apex -> dom(f)
  GlobularMap right;  // apex -> dom(g)
  GlobularMap f, g;   // the cospan pulled back along
  // Pair (x-index, y-index) per apex cell, in apex cell order.
  std::vector<std::vector<std::pair<CellIdx, CellIdx>>> pairs;

  // Apex index of the pair (x, y) at dimension k, or kNoCell.
  CellIdx pair_index(int k, CellIdx x, CellIdx y) const;
};

// Requires cod(f) = cod(g). Apex cells at each dimension are ordered
// lexicographically by (x-order, y-order); names are "(x,y)".
PullbackResult pullback_globular(const GlobularMap& f, const GlobularMap& g);

// The unique h with left . h = p and right . h = q, built pointwise as
// z -> (p(z), q(z)). Rejects non-commuting cones, naming the first failing
// cell.
Checked<GlobularMap> mediating_map(const PullbackResult& pb, const GlobularMap& p,
                                   const GlobularMap& q);

// One hypothesis/conclusion pair of the property-transfer statement.
struct TransferClause {
  std::string property;
  bool hypothesis_on_f = false;
  bool conclusion_on_j = false;
  bool violated() const { return hypothesis_on_f && !conclusion_on_j; }
};

struct TransferReport {
  PullbackResult pullback;
  std::vector<TransferClause> clauses;
  bool ok = true;
};

// Builds the pullback of (f, g) and checks, for surjectivity on 0-cells and
// for fullness and faithfulness at every k in 1..n: whenever f has the
// property, the right leg j has it too.
TransferReport check_transfer(const GlobularMap& f, const GlobularMap& g);

}  // namespace spaneq::glob
