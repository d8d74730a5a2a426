#include "spaneq/adjoint.hpp"

namespace spaneq::cat {

NatTrans AdjointEquivalence::unit_nat() const {
  NatTrans t;
  t.source = identity_functor(forward.dom);
  t.target = compose_functors(backward, forward);
  t.at = unit;
  return t;
}

NatTrans AdjointEquivalence::counit_nat() const {
  NatTrans t;
  t.source = compose_functors(forward, backward);
  t.target = identity_functor(forward.cod);
  t.at = counit;
  return t;
}

AdjointEquivalence identity_equivalence(CatPtr c) {
  AdjointEquivalence e;
  e.forward = identity_functor(c);
  e.backward = identity_functor(c);
  e.unit.resize(c->object_count());
  e.counit.resize(c->object_count());
  for (ObjIdx o = 0; o < c->object_count(); ++o) e.unit[o] = e.counit[o] = c->identity(o);
  return e;
}

PropertyReport check_adjoint_equivalence(const AdjointEquivalence& e, std::size_t limit) {
  PropertyReport report(limit);
  report.add_part("functor_laws_S", check_functor_laws(e.forward, limit));
  report.add_part("functor_laws_T", check_functor_laws(e.backward, limit));
  report.add_part("unit_iso", is_natural_iso(e.unit_nat(), limit));
  report.add_part("counit_iso", is_natural_iso(e.counit_nat(), limit));
  if (!report.ok) return report;

  const FinCategory& a = e.a();
  const FinCategory& b = e.b();
  PropertyReport triangles(limit);
  for (ObjIdx x = 0; x < a.object_count(); ++x) {
    const ObjIdx sx = e.forward.obj_map[x];
    const MorIdx lhs = b.compose(e.counit[sx], e.forward.mor_map[e.unit[x]]);
    if (lhs != b.identity(sx))
      triangles.fail("eps_S . S(eta) != id at '" + a.object_name(x) + "'");
  }
  for (ObjIdx y = 0; y < b.object_count(); ++y) {
    const ObjIdx ty = e.backward.obj_map[y];
    const MorIdx lhs = a.compose(e.backward.mor_map[e.counit[y]], e.unit[ty]);
    if (lhs != a.identity(ty))
      triangles.fail("T(eps) . eta_T != id at '" + b.object_name(y) + "'");
  }
  report.add_part("triangles", std::move(triangles));
  return report;
}

Checked<AdjointEquivalence> promote_to_adjoint_equivalence(const FinFunctor& s,
                                                           const FinFunctor& t,
                                                           const NatTrans& eta,
                                                           const NatTrans& eps0) {
  if (!(*s.dom == *t.cod) || !(*s.cod == *t.dom))
    return Checked<AdjointEquivalence>::failure({"S and T are not opposed"});
  if (auto laws = check_functor_laws(s); !laws.ok)
    return Checked<AdjointEquivalence>::failure({"S breaks functor laws"});
  if (auto laws = check_functor_laws(t); !laws.ok)
    return Checked<AdjointEquivalence>::failure({"T breaks functor laws"});
  if (auto iso = is_natural_iso(eta); !iso.ok)
    return Checked<AdjointEquivalence>::failure({"eta is not a natural isomorphism"});
  if (auto iso = is_natural_iso(eps0); !iso.ok)
    return Checked<AdjointEquivalence>::failure({"eps0 is not a natural isomorphism"});

  const FinCategory& a = *s.dom;
  const FinCategory& b = *s.cod;

  AdjointEquivalence e;
  e.forward = s;
  e.backward = t;
  e.unit = eta.at;
  e.counit.assign(b.object_count(), kNone);

  // eps_b := the unique morphism S(T(b)) -> b with T(eps_b) = (eta_{Tb})^-1.
  // T full gives existence, T faithful uniqueness; both are consequences of
  // the natural isos just verified, so failure here means broken input.
  for (ObjIdx y = 0; y < b.object_count(); ++y) {
    const ObjIdx ty = t.obj_map[y];
    const auto eta_inv = a.inverse(e.unit[ty]);
    if (!eta_inv)
      return Checked<AdjointEquivalence>::failure({"eta has a non-invertible component"});
    const ObjIdx sty = s.obj_map[ty];
    MorIdx chosen = kNone;
    for (MorIdx cand : b.hom(sty, y))
      if (t.mor_map[cand] == *eta_inv) {
        if (chosen != kNone)
          return Checked<AdjointEquivalence>::failure(
              {"counit candidate not unique at '" + b.object_name(y) + "'"});
        chosen = cand;
      }
    if (chosen == kNone)
      return Checked<AdjointEquivalence>::failure(
          {"no counit candidate at '" + b.object_name(y) + "'"});
    e.counit[y] = chosen;
  }

  if (auto verdict = check_adjoint_equivalence(e); !verdict.ok)
    return Checked<AdjointEquivalence>::failure({"promoted data fails the law suite:\n" +
                                                 verdict.to_string()});
  return Checked<AdjointEquivalence>::success(std::move(e));
}

Checked<AdjointEquivalence> pseudo_inverse(const FinFunctor& f) {
  if (auto laws = check_functor_laws(f); !laws.ok)
    return Checked<AdjointEquivalence>::failure({"input breaks functor laws"});
  auto props = functor_props(f);
  if (!props.ok) {
    std::vector<std::string> errors;
    for (const auto& [name, sub] : props.parts)
      if (!sub.ok) errors.push_back("pseudo_inverse precondition fails: not " + name);
    return Checked<AdjointEquivalence>::failure(std::move(errors));
  }

  const FinCategory& c = *f.dom;
  const FinCategory& a = *f.cod;

  FinFunctor g;
  g.dom = f.cod;
  g.cod = f.dom;
  g.obj_map.assign(a.object_count(), -1);
  for (ObjIdx x = 0; x < a.object_count(); ++x)
    for (ObjIdx z = 0; z < c.object_count(); ++z)
      if (f.obj_map[z] == x) {
        g.obj_map[x] = z;  // first preimage in C's object order
        break;
      }

  auto unique_preimage = [&](MorIdx target, ObjIdx from, ObjIdx to) -> MorIdx {
    for (MorIdx m : c.hom(from, to))
      if (f.mor_map[m] == target) return m;
    return kNone;
  };

  g.mor_map.assign(a.morphism_count(), kNone);
  for (MorIdx m = 0; m < a.morphism_count(); ++m) {
    g.mor_map[m] = unique_preimage(m, g.obj_map[a.src(m)], g.obj_map[a.tgt(m)]);
    if (g.mor_map[m] == kNone)
      return Checked<AdjointEquivalence>::failure({"no preimage for morphism '" +
                                                   a.morphism_name(m) + "'"});
  }

  AdjointEquivalence e;
  e.forward = f;
  e.backward = std::move(g);

  // eta_z: the unique preimage under F of id_{F(z)}, typed z -> G(F(z)).
  e.unit.assign(c.object_count(), kNone);
  for (ObjIdx z = 0; z < c.object_count(); ++z) {
    const ObjIdx image = f.obj_map[z];
    e.unit[z] = unique_preimage(a.identity(image), z, e.backward.obj_map[image]);
    if (e.unit[z] == kNone)
      return Checked<AdjointEquivalence>::failure({"no unit component at '" + c.object_name(z) +
                                                   "'"});
  }
  // F(G(x)) = x exactly, so the identity counit is well-typed.
  e.counit.assign(a.object_count(), kNone);
  for (ObjIdx x = 0; x < a.object_count(); ++x) e.counit[x] = a.identity(x);

  if (auto verdict = check_adjoint_equivalence(e); !verdict.ok)
    return Checked<AdjointEquivalence>::failure({"pseudo-inverse fails the law suite:\n" +
                                                 verdict.to_string()});
  return Checked<AdjointEquivalence>::success(std::move(e));
}

Checked<AdjointEquivalence> swap_equivalence(const AdjointEquivalence& e) {
  auto eta = invert_nat_iso(e.counit_nat());
  auto eps = invert_nat_iso(e.unit_nat());
  if (!eta.ok() || !eps.ok())
    return Checked<AdjointEquivalence>::failure({"unit or counit is not invertible"});

  AdjointEquivalence out;
  out.forward = e.backward;
  out.backward = e.forward;
  out.unit = eta.value().at;
  out.counit = eps.value().at;
  if (auto verdict = check_adjoint_equivalence(out); !verdict.ok)
    return Checked<AdjointEquivalence>::failure({"swapped equivalence fails the law suite:\n" +
                                                 verdict.to_string()});
  return Checked<AdjointEquivalence>::success(std::move(out));
}

Checked<AdjointEquivalence> compose_equivalences(const AdjointEquivalence& e1,
                                                 const AdjointEquivalence& e2) {
  if (!(*e1.b() == *e2.a()))
    return Checked<AdjointEquivalence>::failure({"middle category mismatch"});

  const FinCategory& a = e1.a();
  const FinCategory& c = e2.b();
  FinFunctor s = compose_functors(e2.forward, e1.forward);
  FinFunctor t = compose_functors(e1.backward, e2.backward);

  // Pasted unit: T1(eta2 at S1(x)) . eta1_x.
  NatTrans eta;
  eta.source = identity_functor(e1.forward.dom);
  eta.target = compose_functors(t, s);
  eta.at.resize(a.object_count());
  for (ObjIdx x = 0; x < a.object_count(); ++x) {
    const MorIdx inner = e1.backward.mor_map[e2.unit[e1.forward.obj_map[x]]];
    eta.at[x] = a.compose(inner, e1.unit[x]);
    if (eta.at[x] == kNone)
      return Checked<AdjointEquivalence>::failure({"pasted unit undefined at '" +
                                                   a.object_name(x) + "'"});
  }
  // Pasted counit: eps2_z . S2(eps1 at T2(z)).
  NatTrans eps;
  eps.source = compose_functors(s, t);
  eps.target = identity_functor(e2.forward.cod);
  eps.at.resize(c.object_count());
  for (ObjIdx z = 0; z < c.object_count(); ++z) {
    const MorIdx inner = e2.forward.mor_map[e1.counit[e2.backward.obj_map[z]]];
    eps.at[z] = c.compose(e2.counit[z], inner);
    if (eps.at[z] == kNone)
      return Checked<AdjointEquivalence>::failure({"pasted counit undefined at '" +
                                                   c.object_name(z) + "'"});
  }
  return promote_to_adjoint_equivalence(s, t, eta, eps);
}

}  // namespace spaneq::cat
