#include "spaneq/fusion.hpp"

#include <stdexcept>

namespace spaneq::cat {

namespace {

std::string tagged_object_name(const AdjointEquivalence& e, Side side, ObjIdx payload) {
  return (side == Side::A ? "A/" : "B/") +
         (side == Side::A ? e.a().object_name(payload) : e.b().object_name(payload));
}

}  // namespace

Checked<FusionResult> equivalence_fusion(const AdjointEquivalence& e) {
  if (auto verdict = check_adjoint_equivalence(e); !verdict.ok)
    return Checked<FusionResult>::failure({"invalid adjoint equivalence:\n" + verdict.to_string()});

  const FinCategory& a = e.a();
  const FinCategory& b = e.b();
  const auto& s_obj = e.forward.obj_map;

  FusionResult fusion;
  fusion.source = e;

  FinCategory::Builder builder;
  for (ObjIdx x = 0; x < a.object_count(); ++x) {
    fusion.object_side.push_back(Side::A);
    fusion.object_payload.push_back(x);
    builder.objects.push_back(tagged_object_name(e, Side::A, x));
  }
  for (ObjIdx y = 0; y < b.object_count(); ++y) {
    fusion.object_side.push_back(Side::B);
    fusion.object_payload.push_back(y);
    builder.objects.push_back(tagged_object_name(e, Side::B, y));
  }
  const int total = static_cast<int>(builder.objects.size());

  // Payloads of Hom(x, y) per the four cases of the definition.
  auto hom_payloads = [&](ObjIdx x, ObjIdx y) -> std::vector<MorIdx> {
    const Side sx = fusion.object_side[x], sy = fusion.object_side[y];
    const ObjIdx px = fusion.object_payload[x], py = fusion.object_payload[y];
    if (sx == Side::A && sy == Side::A) return a.hom(px, py);
    if (sx == Side::B && sy == Side::B) return b.hom(px, py);
    if (sx == Side::A && sy == Side::B) return b.hom(s_obj[px], py);
    return b.hom(px, s_obj[py]);  // x in B, y in A
  };

  // mor_at[x][y]: payload index -> fusion morphism index
  std::vector<std::vector<std::vector<MorIdx>>> mor_at(
      total, std::vector<std::vector<MorIdx>>(total));
  for (ObjIdx x = 0; x < total; ++x)
    for (ObjIdx y = 0; y < total; ++y)
      for (MorIdx payload : hom_payloads(x, y)) {
        const bool payload_in_a =
            fusion.object_side[x] == Side::A && fusion.object_side[y] == Side::A;
        const std::string payload_name =
            payload_in_a ? a.morphism_name(payload) : b.morphism_name(payload);
        const MorIdx idx = builder.add_morphism(
            "(" + payload_name + "|" + builder.objects[x] + "|" + builder.objects[y] + ")", x, y);
        fusion.morphism_payload.push_back(payload);
        mor_at[x][y].push_back(idx);
      }

  auto locate = [&](ObjIdx x, ObjIdx y, MorIdx payload) -> MorIdx {
    const auto payloads = hom_payloads(x, y);
    for (std::size_t i = 0; i < payloads.size(); ++i)
      if (payloads[i] == payload) return mor_at[x][y][i];
    return kNone;
  };

  builder.identity.resize(total);
  for (ObjIdx x = 0; x < total; ++x) {
    const ObjIdx p = fusion.object_payload[x];
    const MorIdx id_payload =
        fusion.object_side[x] == Side::A ? a.identity(p) : b.identity(p);
    builder.identity[x] = locate(x, x, id_payload);
  }

  const auto& t_mor = e.backward.mor_map;
  const auto& s_mor = e.forward.mor_map;
  auto eta_inv = [&](ObjIdx z) -> MorIdx {
    auto inv = a.inverse(e.unit[z]);
    return inv ? *inv : kNone;
  };

  // The eight composition cases, keyed by the sides of (x, y, z) for
  // g . f with f : x -> y and g : y -> z.
  auto compose_payload = [&](Side sx, Side sy, Side sz, MorIdx f, MorIdx g,
                             ObjIdx px, ObjIdx pz) -> MorIdx {
    if (sx == Side::A && sy == Side::A && sz == Side::A) return a.compose(g, f);
    if (sx == Side::B && sy == Side::B && sz == Side::B) return b.compose(g, f);
    if (sx == Side::A && sy == Side::A && sz == Side::B) return b.compose(g, s_mor[f]);
    if (sx == Side::A && sy == Side::B && sz == Side::B) return b.compose(g, f);
    if (sx == Side::B && sy == Side::B && sz == Side::A) return b.compose(g, f);
    if (sx == Side::B && sy == Side::A && sz == Side::A) return b.compose(s_mor[g], f);
    if (sx == Side::B && sy == Side::A && sz == Side::B) return b.compose(g, f);
    // x in A, y in B, z in A: eta_z^-1 . Tg . Tf . eta_x
    const MorIdx c1 = a.compose(t_mor[f], e.unit[px]);
    if (c1 == kNone) return kNone;
    const MorIdx c2 = a.compose(t_mor[g], c1);
    if (c2 == kNone) return kNone;
    return a.compose(eta_inv(pz), c2);
  };

  const int morphisms = static_cast<int>(builder.mor_names.size());
  builder.compose.assign(morphisms, std::vector<MorIdx>(morphisms, kNone));
  for (MorIdx g = 0; g < morphisms; ++g)
    for (MorIdx f = 0; f < morphisms; ++f) {
      if (builder.mor_tgt[f] != builder.mor_src[g]) continue;
      const ObjIdx x = builder.mor_src[f], y = builder.mor_tgt[f], z = builder.mor_tgt[g];
      const MorIdx payload =
          compose_payload(fusion.object_side[x], fusion.object_side[y], fusion.object_side[z],
                          fusion.morphism_payload[f], fusion.morphism_payload[g],
                          fusion.object_payload[x], fusion.object_payload[z]);
      if (payload == kNone)
        return Checked<FusionResult>::failure({"composition case produced no payload for (" +
                                               builder.mor_names[g] + ", " + builder.mor_names[f] +
                                               ")"});
      const MorIdx composite = locate(x, z, payload);
      if (composite == kNone)
        return Checked<FusionResult>::failure({"composite payload lands outside Hom for (" +
                                               builder.mor_names[g] + ", " + builder.mor_names[f] +
                                               ")"});
      builder.compose[g][f] = composite;
    }

  fusion.category = share(std::move(builder).build());
  return Checked<FusionResult>::success(std::move(fusion));
}

FinFunctor projection_u(const FusionResult& fusion) {
  const AdjointEquivalence& e = fusion.source;
  const FinCategory& a = e.a();
  const FinCategory& c = *fusion.category;

  FinFunctor u;
  u.dom = fusion.category;
  u.cod = e.forward.dom;
  u.obj_map.resize(c.object_count());
  for (ObjIdx x = 0; x < c.object_count(); ++x)
    u.obj_map[x] = fusion.object_side[x] == Side::A ? fusion.object_payload[x]
                                                    : e.backward.obj_map[fusion.object_payload[x]];

  u.mor_map.resize(c.morphism_count());
  for (MorIdx m = 0; m < c.morphism_count(); ++m) {
    const ObjIdx x = c.src(m), y = c.tgt(m);
    const Side sx = fusion.object_side[x], sy = fusion.object_side[y];
    const MorIdx f = fusion.morphism_payload[m];
    if (sx == Side::A && sy == Side::A) {
      u.mor_map[m] = f;
    } else if (sx == Side::B && sy == Side::B) {
      u.mor_map[m] = e.backward.mor_map[f];
    } else if (sx == Side::A && sy == Side::B) {
      u.mor_map[m] = a.compose(e.backward.mor_map[f], e.unit[fusion.object_payload[x]]);
    } else {
      const auto inv = a.inverse(e.unit[fusion.object_payload[y]]);
      if (!inv) throw std::logic_error("projection_u: unit component lost its inverse");
      u.mor_map[m] = a.compose(*inv, e.backward.mor_map[f]);
    }
  }
  return u;
}

FinFunctor projection_v(const FusionResult& fusion) {
  const AdjointEquivalence& e = fusion.source;
  const FinCategory& c = *fusion.category;

  FinFunctor v;
  v.dom = fusion.category;
  v.cod = e.forward.cod;
  v.obj_map.resize(c.object_count());
  for (ObjIdx x = 0; x < c.object_count(); ++x)
    v.obj_map[x] = fusion.object_side[x] == Side::A ? e.forward.obj_map[fusion.object_payload[x]]
                                                    : fusion.object_payload[x];

  v.mor_map.resize(c.morphism_count());
  for (MorIdx m = 0; m < c.morphism_count(); ++m) {
    const ObjIdx x = c.src(m), y = c.tgt(m);
    const bool both_a =
        fusion.object_side[x] == Side::A && fusion.object_side[y] == Side::A;
    v.mor_map[m] = both_a ? e.forward.mor_map[fusion.morphism_payload[m]]
                          : fusion.morphism_payload[m];
  }
  return v;
}

Checked<CatSpan> fuse_to_span(const AdjointEquivalence& e) {
  auto fusion = equivalence_fusion(e);
  if (!fusion.ok()) return Checked<CatSpan>::failure(fusion.errors);
  CatSpan span;
  span.apex = fusion->category;
  span.left = projection_u(fusion.value());
  span.right = projection_v(fusion.value());
  return Checked<CatSpan>::success(std::move(span));
}

PropertyReport span_profile(const CatSpan& span, std::size_t limit) {
  PropertyReport report(limit);
  report.add_part("left_functor_laws", check_functor_laws(span.left, limit));
  report.add_part("right_functor_laws", check_functor_laws(span.right, limit));
  report.add_part("left_props", functor_props(span.left, limit));
  report.add_part("right_props", functor_props(span.right, limit));
  return report;
}

Checked<AdjointEquivalence> span_to_equivalence(const CatSpan& span) {
  if (auto profile = span_profile(span); !profile.ok)
    return Checked<AdjointEquivalence>::failure({"span legs fail the profile:\n" +
                                                 profile.to_string()});
  auto left = pseudo_inverse(span.left);
  if (!left.ok()) return left;
  auto right = pseudo_inverse(span.right);
  if (!right.ok()) return right;
  auto reversed = swap_equivalence(left.value());
  if (!reversed.ok()) return reversed;
  return compose_equivalences(reversed.value(), right.value());
}

}  // namespace spaneq::cat
