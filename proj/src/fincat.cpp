#include "spaneq/fincat.hpp"

#include <stdexcept>

namespace spaneq::cat {

MorIdx FinCategory::Builder::add_morphism(std::string name, ObjIdx src, ObjIdx tgt) {
  mor_names.push_back(std::move(name));
  mor_src.push_back(src);
  mor_tgt.push_back(tgt);
  return static_cast<MorIdx>(mor_names.size() - 1);
}

FinCategory FinCategory::Builder::build() && {
  FinCategory c;
  c.objects_ = std::move(objects);
  c.mor_names_ = std::move(mor_names);
  c.mor_src_ = std::move(mor_src);
  c.mor_tgt_ = std::move(mor_tgt);
  c.identity_ = std::move(identity);
  c.identity_.resize(c.objects_.size(), kNone);
  c.compose_ = std::move(compose);
  c.compose_.resize(c.mor_names_.size());
  for (auto& row : c.compose_) row.resize(c.mor_names_.size(), kNone);
  return c;
}

std::vector<MorIdx> FinCategory::hom(ObjIdx x, ObjIdx y) const {
  std::vector<MorIdx> out;
  for (MorIdx m = 0; m < morphism_count(); ++m)
    if (mor_src_[m] == x && mor_tgt_[m] == y) out.push_back(m);
  return out;
}

std::optional<ObjIdx> FinCategory::find_object(std::string_view name) const {
  for (ObjIdx o = 0; o < object_count(); ++o)
    if (objects_[o] == name) return o;
  return std::nullopt;
}

std::optional<MorIdx> FinCategory::find_morphism(std::string_view name) const {
  for (MorIdx m = 0; m < morphism_count(); ++m)
    if (mor_names_[m] == name) return m;
  return std::nullopt;
}

std::optional<MorIdx> FinCategory::inverse(MorIdx m) const {
  for (MorIdx w : hom(tgt(m), src(m)))
    if (compose(w, m) == identity(src(m)) && compose(m, w) == identity(tgt(m))) return w;
  return std::nullopt;
}

PropertyReport check_category_laws(const FinCategory& c, bool allow_partial, std::size_t limit) {
  PropertyReport structural(limit);

  for (ObjIdx o = 0; o < c.object_count(); ++o) {
    const MorIdx id = c.identity(o);
    if (id == kNone)
      structural.fail("object '" + c.object_name(o) + "' has no identity");
    else if (c.src(id) != o || c.tgt(id) != o)
      structural.fail("identity of '" + c.object_name(o) + "' is not an endomorphism of it");
  }

  const int m = c.morphism_count();
  for (MorIdx g = 0; g < m; ++g)
    for (MorIdx f = 0; f < m; ++f) {
      const MorIdx gf = c.compose(g, f);
      if (!c.composable(g, f)) {
        if (gf != kNone)
          structural.fail("compose(" + c.morphism_name(g) + ", " + c.morphism_name(f) +
                          ") defined on a non-composable pair");
        continue;
      }
      if (gf == kNone) {
        if (!allow_partial)
          structural.fail("missing composite " + c.morphism_name(g) + "." + c.morphism_name(f));
        continue;
      }
      if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
        structural.fail("composite " + c.morphism_name(g) + "." + c.morphism_name(f) + " = " +
                        c.morphism_name(gf) + " has wrong boundary");
    }

  PropertyReport report(limit);
  report.add_part("structural", std::move(structural));
  if (!report.ok && !allow_partial) return report;

  PropertyReport identity_law(limit);
  for (MorIdx f = 0; f < m; ++f) {
    const MorIdx ids = c.identity(c.src(f)), idt = c.identity(c.tgt(f));
    if (ids != kNone && c.compose(f, ids) != kNone && c.compose(f, ids) != f)
      identity_law.fail(c.morphism_name(f) + ".id != " + c.morphism_name(f));
    if (idt != kNone && c.compose(idt, f) != kNone && c.compose(idt, f) != f)
      identity_law.fail("id." + c.morphism_name(f) + " != " + c.morphism_name(f));
  }
  report.add_part("identity", std::move(identity_law));

  PropertyReport assoc(limit);
  for (MorIdx h = 0; h < m; ++h)
    for (MorIdx g = 0; g < m; ++g) {
      if (!c.composable(h, g)) continue;
      const MorIdx hg = c.compose(h, g);
      for (MorIdx f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        const MorIdx gf = c.compose(g, f);
        if (gf == kNone || hg == kNone) continue;
        const MorIdx left = c.compose(h, gf), right = c.compose(hg, f);
        if (left == kNone || right == kNone) continue;
        if (left != right)
          assoc.fail("(" + c.morphism_name(h) + "." + c.morphism_name(g) + ")." +
                     c.morphism_name(f) + " != " + c.morphism_name(h) + ".(" + c.morphism_name(g) +
                     "." + c.morphism_name(f) + ")");
      }
    }
  report.add_part("associativity", std::move(assoc));
  return report;
}

FinCategory terminal_category() {
  FinCategory::Builder b;
  b.objects = {"pt"};
  b.add_morphism("id_pt", 0, 0);
  b.identity = {0};
  b.compose = {{0}};
  return std::move(b).build();
}

FinCategory walking_isomorphism() {
  FinCategory::Builder b;
  b.objects = {"a0", "a1"};
  const MorIdx id0 = b.add_morphism("id_a0", 0, 0);
  const MorIdx id1 = b.add_morphism("id_a1", 1, 1);
  const MorIdx fwd = b.add_morphism("i", 0, 1);
  const MorIdx bwd = b.add_morphism("j", 1, 0);
  b.identity = {id0, id1};
  b.compose.assign(4, std::vector<MorIdx>(4, kNone));
  b.compose[id0][id0] = id0;
  b.compose[id1][id1] = id1;
  b.compose[fwd][id0] = fwd;
  b.compose[id1][fwd] = fwd;
  b.compose[bwd][id1] = bwd;
  b.compose[id0][bwd] = bwd;
  b.compose[bwd][fwd] = id0;
  b.compose[fwd][bwd] = id1;
  return std::move(b).build();
}

FinCategory discrete_category(std::vector<std::string> objects) {
  FinCategory::Builder b;
  b.objects = std::move(objects);
  for (ObjIdx o = 0; o < static_cast<ObjIdx>(b.objects.size()); ++o) {
    b.identity.push_back(b.add_morphism("id_" + b.objects[o], o, o));
  }
  b.compose.assign(b.mor_names.size(), std::vector<MorIdx>(b.mor_names.size(), kNone));
  for (MorIdx m = 0; m < static_cast<MorIdx>(b.mor_names.size()); ++m) b.compose[m][m] = m;
  return std::move(b).build();
}

}  // namespace spaneq::cat
