#include "spaneq/cat_pullback.hpp"

#include <stdexcept>

namespace spaneq::cat {

CatPullback pullback_category(const FinFunctor& f, const FinFunctor& g) {
  if (!(*f.cod == *g.cod)) throw std::invalid_argument("pullback_category: cospan mismatch");
  const FinCategory& a = *f.dom;
  const FinCategory& b = *g.dom;

  FinCategory::Builder builder;
  std::vector<std::pair<ObjIdx, ObjIdx>> obj_pairs;
  std::vector<std::vector<ObjIdx>> obj_at(a.object_count(),
                                          std::vector<ObjIdx>(b.object_count(), -1));
  for (ObjIdx x = 0; x < a.object_count(); ++x)
    for (ObjIdx y = 0; y < b.object_count(); ++y)
      if (f.obj_map[x] == g.obj_map[y]) {
        obj_at[x][y] = static_cast<ObjIdx>(obj_pairs.size());
        obj_pairs.emplace_back(x, y);
        builder.objects.push_back("(" + a.object_name(x) + "," + b.object_name(y) + ")");
      }

  std::vector<std::pair<MorIdx, MorIdx>> mor_pairs;
  std::vector<std::vector<MorIdx>> mor_at(a.morphism_count(),
                                          std::vector<MorIdx>(b.morphism_count(), kNone));
  for (MorIdx m = 0; m < a.morphism_count(); ++m)
    for (MorIdx w = 0; w < b.morphism_count(); ++w)
      if (f.mor_map[m] == g.mor_map[w]) {
        mor_at[m][w] = builder.add_morphism("(" + a.morphism_name(m) + "," + b.morphism_name(w) + ")",
                                            obj_at[a.src(m)][b.src(w)],
                                            obj_at[a.tgt(m)][b.tgt(w)]);
        mor_pairs.emplace_back(m, w);
      }

  builder.identity.resize(obj_pairs.size());
  for (std::size_t p = 0; p < obj_pairs.size(); ++p)
    builder.identity[p] = mor_at[a.identity(obj_pairs[p].first)][b.identity(obj_pairs[p].second)];

  builder.compose.assign(mor_pairs.size(), std::vector<MorIdx>(mor_pairs.size(), kNone));
  for (std::size_t gp = 0; gp < mor_pairs.size(); ++gp)
    for (std::size_t fp = 0; fp < mor_pairs.size(); ++fp) {
      const auto& [g1, g2] = mor_pairs[gp];
      const auto& [f1, f2] = mor_pairs[fp];
      if (a.tgt(f1) != a.src(g1) || b.tgt(f2) != b.src(g2)) continue;
      const MorIdx c1 = a.compose(g1, f1), c2 = b.compose(g2, f2);
      if (c1 == kNone || c2 == kNone) continue;
      builder.compose[gp][fp] = mor_at[c1][c2];
    }

  CatPullback out;
  out.apex = share(std::move(builder).build());
  out.left.dom = out.apex;
  out.left.cod = f.dom;
  out.right.dom = out.apex;
  out.right.cod = g.dom;
  for (const auto& [x, y] : obj_pairs) {
    out.left.obj_map.push_back(x);
    out.right.obj_map.push_back(y);
  }
  for (const auto& [m, w] : mor_pairs) {
    out.left.mor_map.push_back(m);
    out.right.mor_map.push_back(w);
  }
  return out;
}

}  // namespace spaneq::cat
