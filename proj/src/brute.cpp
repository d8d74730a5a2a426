#include "spaneq/brute.hpp"

#include <stdexcept>

namespace spaneq::cat {

namespace {

// Depth-first assignment: object images first, then morphism images chosen
// from the matching hom-set, pruning on every composite that becomes fully
// assigned. Only law-abiding functors reach the visitor.
struct FunctorSearch {
  const FinCategory& a;
  const FinCategory& b;
  FinFunctor f;
  const std::function<bool(const FinFunctor&)>& visit;
  bool stopped = false;

  bool consistent_after(MorIdx m) {
    for (MorIdx g = 0; g <= m; ++g)
      for (MorIdx x = 0; x <= m; ++x) {
        if (!a.composable(g, x)) continue;
        const MorIdx gx = a.compose(g, x);
        if (gx == kNone || gx > m) continue;
        if (g != m && x != m && gx != m) continue;
        const MorIdx rhs = b.compose(f.mor_map[g], f.mor_map[x]);
        if (rhs == kNone || rhs != f.mor_map[gx]) return false;
      }
    return true;
  }

  void morphisms(MorIdx m) {
    if (stopped) return;
    if (m == a.morphism_count()) {
      if (!visit(f)) stopped = true;
      return;
    }
    if (a.is_identity(m)) {
      f.mor_map[m] = b.identity(f.obj_map[a.src(m)]);
      if (consistent_after(m)) morphisms(m + 1);
      f.mor_map[m] = kNone;
      return;
    }
    for (MorIdx cand : b.hom(f.obj_map[a.src(m)], f.obj_map[a.tgt(m)])) {
      f.mor_map[m] = cand;
      if (consistent_after(m)) morphisms(m + 1);
      if (stopped) break;
    }
    f.mor_map[m] = kNone;
  }

  void objects(ObjIdx o) {
    if (stopped) return;
    if (o == a.object_count()) {
      morphisms(0);
      return;
    }
    for (ObjIdx cand = 0; cand < b.object_count(); ++cand) {
      f.obj_map[o] = cand;
      objects(o + 1);
      if (stopped) break;
    }
  }
};

// Lexicographically first natural iso between parallel functors, if any.
std::optional<NatTrans> first_natural_iso(const FinFunctor& f, const FinFunctor& g) {
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;
  std::vector<std::vector<MorIdx>> cands(a.object_count());
  for (ObjIdx o = 0; o < a.object_count(); ++o) {
    for (MorIdx m : b.hom(f.obj_map[o], g.obj_map[o]))
      if (b.inverse(m)) cands[o].push_back(m);
    if (cands[o].empty()) return std::nullopt;
  }

  NatTrans t;
  t.source = f;
  t.target = g;
  t.at.assign(a.object_count(), kNone);
  std::vector<std::size_t> pick(a.object_count(), 0);
  while (true) {
    for (ObjIdx o = 0; o < a.object_count(); ++o) t.at[o] = cands[o][pick[o]];
    if (check_naturality(t).ok) return t;
    int pos = a.object_count() - 1;
    while (pos >= 0 && ++pick[pos] == cands[pos].size()) pick[pos--] = 0;
    if (pos < 0) return std::nullopt;
  }
}

}  // namespace

void enumerate_functors(CatPtr dom, CatPtr cod,
                        const std::function<bool(const FinFunctor&)>& visit) {
  if (dom->object_count() > 0 && cod->object_count() == 0) return;
  FunctorSearch search{*dom, *cod, {}, visit};
  search.f.dom = dom;
  search.f.cod = cod;
  search.f.obj_map.assign(dom->object_count(), 0);
  search.f.mor_map.assign(dom->morphism_count(), kNone);
  search.objects(0);
}

std::optional<AdjointEquivalence> are_equivalent_bruteforce(CatPtr a, CatPtr b) {
  for (const FinCategory* c : {a.get(), b.get()})
    if (c->object_count() > 4 || c->morphism_count() > 12)
      throw std::invalid_argument("are_equivalent_bruteforce: size guard exceeded");

  std::vector<FinFunctor> backward;
  enumerate_functors(b, a, [&](const FinFunctor& t) {
    backward.push_back(t);
    return true;
  });

  std::optional<AdjointEquivalence> found;
  enumerate_functors(a, b, [&](const FinFunctor& s_live) {
    const FinFunctor s = s_live;
    for (const FinFunctor& t : backward) {
      auto eta = first_natural_iso(identity_functor(a), compose_functors(t, s));
      if (!eta) continue;
      auto eps = first_natural_iso(compose_functors(s, t), identity_functor(b));
      if (!eps) continue;
      auto promoted = promote_to_adjoint_equivalence(s, t, *eta, *eps);
      if (promoted.ok()) {
        found = promoted.value();
        return false;
      }
    }
    return true;
  });
  return found;
}

}  // namespace spaneq::cat
