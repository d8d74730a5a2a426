#include "spaneq/nat_trans.hpp"

namespace spaneq::cat {

PropertyReport check_naturality(const NatTrans& t, std::size_t limit) {
  PropertyReport report(limit);
  if (!(*t.source.dom == *t.target.dom) || !(*t.source.cod == *t.target.cod)) {
    report.fail("source and target functors are not parallel");
    return report;
  }
  const FinCategory& a = *t.source.dom;
  const FinCategory& b = *t.source.cod;
  if (static_cast<int>(t.at.size()) != a.object_count()) {
    report.fail("component table size mismatch");
    return report;
  }
  for (ObjIdx o = 0; o < a.object_count(); ++o) {
    const MorIdx c = t.at[o];
    if (b.src(c) != t.source.obj_map[o] || b.tgt(c) != t.target.obj_map[o])
      report.fail("component at '" + a.object_name(o) + "' has wrong boundary");
  }
  if (!report.ok) return report;

  for (MorIdx m = 0; m < a.morphism_count(); ++m) {
    const ObjIdx x = a.src(m), y = a.tgt(m);
    const MorIdx lhs = b.compose(t.at[y], t.source.mor_map[m]);
    const MorIdx rhs = b.compose(t.target.mor_map[m], t.at[x]);
    if (lhs == kNone || rhs == kNone || lhs != rhs)
      report.fail("naturality square fails at '" + a.morphism_name(m) + "'");
  }
  return report;
}

PropertyReport is_natural_iso(const NatTrans& t, std::size_t limit) {
  PropertyReport report(limit);
  report.add_part("naturality", check_naturality(t, limit));
  PropertyReport inv(limit);
  if (report.ok) {
    const FinCategory& a = *t.source.dom;
    const FinCategory& b = *t.source.cod;
    for (ObjIdx o = 0; o < a.object_count(); ++o)
      if (!b.inverse(t.at[o]))
        inv.fail("component at '" + a.object_name(o) + "' is not invertible");
  }
  report.add_part("invertible", std::move(inv));
  return report;
}

Checked<NatTrans> invert_nat_iso(const NatTrans& t) {
  const FinCategory& b = *t.source.cod;
  NatTrans out;
  out.source = t.target;
  out.target = t.source;
  out.at.resize(t.at.size());
  for (std::size_t o = 0; o < t.at.size(); ++o) {
    auto inv = b.inverse(t.at[o]);
    if (!inv)
      return Checked<NatTrans>::failure({"component '" + b.morphism_name(t.at[o]) +
                                         "' has no inverse"});
    out.at[o] = *inv;
  }
  return Checked<NatTrans>::success(std::move(out));
}

NatTrans identity_nat(const FinFunctor& f) {
  NatTrans t;
  t.source = f;
  t.target = f;
  t.at.resize(f.obj_map.size());
  for (std::size_t o = 0; o < f.obj_map.size(); ++o) t.at[o] = f.cod->identity(f.obj_map[o]);
  return t;
}

}  // namespace spaneq::cat
