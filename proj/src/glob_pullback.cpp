#include "spaneq/glob_pullback.hpp"

#include <stdexcept>

namespace spaneq::glob {

CellIdx PullbackResult::pair_index(int k, CellIdx x, CellIdx y) const {
  for (CellIdx i = 0; i < static_cast<CellIdx>(pairs[k].size()); ++i)
    if (pairs[k][i].first == x && pairs[k][i].second == y) return i;
  return kNoCell;
}

PullbackResult pullback_globular(const GlobularMap& f, const GlobularMap& g) {
  if (!(*f.cod == *g.cod)) throw std::invalid_argument("pullback_globular: cospan mismatch");
  const int n = f.dom->dimension();
  const GlobularSet& x = *f.dom;
  const GlobularSet& y = *g.dom;

  PullbackResult pb;
  pb.f = f;
  pb.g = g;
  pb.pairs.assign(n + 1, {});

  std::vector<std::vector<std::string>> names(n + 1);
  // index of the pair (a, b) at each dimension, for boundary wiring
  std::vector<std::vector<std::vector<CellIdx>>> at(n + 1);
  for (int k = 0; k <= n; ++k) {
    at[k].assign(x.size(k), std::vector<CellIdx>(y.size(k), kNoCell));
    for (CellIdx a = 0; a < x.size(k); ++a)
      for (CellIdx b = 0; b < y.size(k); ++b)
        if (f.comp[k][a] == g.comp[k][b]) {
          at[k][a][b] = static_cast<CellIdx>(pb.pairs[k].size());
          pb.pairs[k].emplace_back(a, b);
          names[k].push_back("(" + x.name(k, a) + "," + y.name(k, b) + ")");
        }
  }

  std::vector<std::vector<CellIdx>> src(n + 1), tgt(n + 1);
  for (int k = 1; k <= n; ++k) {
    src[k].reserve(pb.pairs[k].size());
    tgt[k].reserve(pb.pairs[k].size());
    for (const auto& [a, b] : pb.pairs[k]) {
      src[k].push_back(at[k - 1][x.src(k, a)][y.src(k, b)]);
      tgt[k].push_back(at[k - 1][x.tgt(k, a)][y.tgt(k, b)]);
    }
  }
  pb.apex = share(GlobularSet::unchecked(n, std::move(names), std::move(src), std::move(tgt)));

  pb.left.dom = pb.apex;
  pb.left.cod = f.dom;
  pb.right.dom = pb.apex;
  pb.right.cod = g.dom;
  pb.left.comp.assign(n + 1, {});
  pb.right.comp.assign(n + 1, {});
  for (int k = 0; k <= n; ++k)
    for (const auto& [a, b] : pb.pairs[k]) {
      pb.left.comp[k].push_back(a);
      pb.right.comp[k].push_back(b);
    }
  return pb;
}

Checked<GlobularMap> mediating_map(const PullbackResult& pb, const GlobularMap& p,
                                   const GlobularMap& q) {
  if (!(*p.dom == *q.dom))
    return Checked<GlobularMap>::failure({"cone legs do not share a domain"});
  if (!(*p.cod == *pb.f.dom) || !(*q.cod == *pb.g.dom))
    return Checked<GlobularMap>::failure({"cone legs do not match the pulled-back cospan"});
  const int n = p.dom->dimension();
  const GlobularSet& z = *p.dom;

  GlobularMap h;
  h.dom = p.dom;
  h.cod = pb.apex;
  h.comp.assign(n + 1, {});
  for (int k = 0; k <= n; ++k) {
    h.comp[k].resize(z.size(k));
    for (CellIdx i = 0; i < z.size(k); ++i) {
      const CellIdx a = p.comp[k][i], b = q.comp[k][i];
      if (pb.f.comp[k][a] != pb.g.comp[k][b])
        return Checked<GlobularMap>::failure({"cone does not commute at dimension " +
                                              std::to_string(k) + ", cell '" + z.name(k, i) + "'"});
      h.comp[k][i] = pb.pair_index(k, a, b);
    }
  }
  return Checked<GlobularMap>::success(std::move(h));
}

TransferReport check_transfer(const GlobularMap& f, const GlobularMap& g) {
  TransferReport report;
  report.pullback = pullback_globular(f, g);
  const GlobularMap& j = report.pullback.right;
  const int n = f.dom->dimension();

  auto clause = [&](std::string property, const PropertyReport& hyp, const PropertyReport& con) {
    TransferClause c{std::move(property), hyp.ok, con.ok};
    report.ok = report.ok && !c.violated();
    report.clauses.push_back(std::move(c));
  };

  clause("surjective_on_0", is_surjective_on(f, 0), is_surjective_on(j, 0));
  for (int k = 1; k <= n; ++k) {
    clause("full_on_" + std::to_string(k), is_full_on(f, k), is_full_on(j, k));
    clause("faithful_on_" + std::to_string(k), is_faithful_on(f, k), is_faithful_on(j, k));
  }
  return report;
}

}  // namespace spaneq::glob
