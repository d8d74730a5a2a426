#include "spaneq/globular.hpp"

#include <stdexcept>

namespace spaneq::glob {

std::optional<CellIdx> GlobularSet::find(int k, std::string_view cell) const {
  if (k < 0 || k > dim_) return std::nullopt;
  auto it = index_[k].find(std::string(cell));
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

bool GlobularSet::empty() const {
  for (const auto& level : names_)
    if (!level.empty()) return false;
  return true;
}

void GlobularSet::build_index() {
  index_.assign(names_.size(), {});
  for (std::size_t k = 0; k < names_.size(); ++k)
    for (CellIdx i = 0; i < static_cast<CellIdx>(names_[k].size()); ++i)
      index_[k].emplace(names_[k][i], i);
}

GlobularSet GlobularSet::unchecked(int dimension, std::vector<std::vector<std::string>> names,
                                   std::vector<std::vector<CellIdx>> src,
                                   std::vector<std::vector<CellIdx>> tgt) {
  GlobularSet g;
  g.dim_ = dimension;
  g.names_ = std::move(names);
  g.src_ = std::move(src);
  g.tgt_ = std::move(tgt);
  g.names_.resize(dimension + 1);
  g.src_.resize(dimension + 1);
  g.tgt_.resize(dimension + 1);
  g.build_index();
  return g;
}

Checked<GlobularSet> validate_globular(const GlobularData& raw) {
  std::vector<std::string> errors;
  if (raw.dimension < 0) return Checked<GlobularSet>::failure({"dimension must be >= 0"});
  const int n = raw.dimension;

  GlobularSet g;
  g.dim_ = n;
  g.names_.assign(n + 1, {});
  g.src_.assign(n + 1, {});
  g.tgt_.assign(n + 1, {});
  for (int k = 0; k <= n && k < static_cast<int>(raw.cells.size()); ++k) g.names_[k] = raw.cells[k];
  if (static_cast<int>(raw.cells.size()) > n + 1) {
    for (int k = n + 1; k < static_cast<int>(raw.cells.size()); ++k)
      if (!raw.cells[k].empty()) errors.push_back("cells declared above dimension " + std::to_string(n));
  }
  g.build_index();

  for (int k = 0; k <= n; ++k) {
    std::unordered_map<std::string, int> seen;
    for (const auto& name : g.names_[k])
      if (++seen[name] == 2)
        errors.push_back("duplicate cell name '" + name + "' at dimension " + std::to_string(k));
  }

  auto boundary_row = [&](const std::vector<std::vector<std::string>>& table, const char* what,
                          int k) -> std::vector<CellIdx> {
    std::vector<CellIdx> row(g.names_[k].size(), kNoCell);
    for (CellIdx i = 0; i < static_cast<CellIdx>(g.names_[k].size()); ++i) {
      const std::string* ref = nullptr;
      if (k < static_cast<int>(table.size()) && i < static_cast<CellIdx>(table[k].size()))
        ref = &table[k][i];
      if (ref == nullptr || ref->empty()) {
        errors.push_back(std::string("missing ") + what + " for cell '" + g.names_[k][i] +
                         "' at dimension " + std::to_string(k));
        continue;
      }
      auto hit = g.find(k - 1, *ref);
      if (!hit) {
        errors.push_back(std::string("dangling ") + what + " reference '" + *ref + "' for cell '" +
                         g.names_[k][i] + "' at dimension " + std::to_string(k));
        continue;
      }
      row[i] = *hit;
    }
    return row;
  };

  for (int k = 1; k <= n; ++k) {
    g.src_[k] = boundary_row(raw.src, "src", k);
    g.tgt_[k] = boundary_row(raw.tgt, "tgt", k);
  }
  if (!errors.empty()) return Checked<GlobularSet>::failure(std::move(errors));

  // Globularity: src(src(x)) = src(tgt(x)) and tgt(src(x)) = tgt(tgt(x)).
  for (int k = 2; k <= n; ++k) {
    for (CellIdx i = 0; i < g.size(k); ++i) {
      const CellIdx s = g.src_[k][i], t = g.tgt_[k][i];
      if (g.src_[k - 1][s] != g.src_[k - 1][t])
        errors.push_back("globularity failure at k=" + std::to_string(k) + " cell '" + g.names_[k][i] +
                         "': src(src) = '" + g.names_[k - 2][g.src_[k - 1][s]] + "' but src(tgt) = '" +
                         g.names_[k - 2][g.src_[k - 1][t]] + "'");
      if (g.tgt_[k - 1][s] != g.tgt_[k - 1][t])
        errors.push_back("globularity failure at k=" + std::to_string(k) + " cell '" + g.names_[k][i] +
                         "': tgt(src) = '" + g.names_[k - 2][g.tgt_[k - 1][s]] + "' but tgt(tgt) = '" +
                         g.names_[k - 2][g.tgt_[k - 1][t]] + "'");
    }
  }
  if (!errors.empty()) return Checked<GlobularSet>::failure(std::move(errors));
  return Checked<GlobularSet>::success(std::move(g));
}

std::vector<CellIdx> hom_set(const GlobularSet& x, int k, CellIdx from, CellIdx to) {
  if (k < 1 || k > x.dimension()) throw std::invalid_argument("hom_set: k out of range");
  if (from < 0 || from >= x.size(k - 1) || to < 0 || to >= x.size(k - 1))
    throw std::invalid_argument("hom_set: endpoint is not a (k-1)-cell");
  std::vector<CellIdx> out;
  for (CellIdx i = 0; i < x.size(k); ++i)
    if (x.src(k, i) == from && x.tgt(k, i) == to) out.push_back(i);
  return out;
}

GlobularSet terminal_globular(int dimension) {
  std::vector<std::vector<std::string>> names(dimension + 1);
  std::vector<std::vector<CellIdx>> src(dimension + 1), tgt(dimension + 1);
  for (int k = 0; k <= dimension; ++k) {
    names[k] = {"c" + std::to_string(k)};
    if (k >= 1) {
      src[k] = {0};
      tgt[k] = {0};
    }
  }
  return GlobularSet::unchecked(dimension, std::move(names), std::move(src), std::move(tgt));
}

GlobularSet empty_globular(int dimension) {
  return GlobularSet::unchecked(dimension, std::vector<std::vector<std::string>>(dimension + 1),
                                std::vector<std::vector<CellIdx>>(dimension + 1),
                                std::vector<std::vector<CellIdx>>(dimension + 1));
}

}  // namespace spaneq::glob
