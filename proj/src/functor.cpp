#include "spaneq/functor.hpp"

#include <stdexcept>

namespace spaneq::cat {

FinFunctor identity_functor(CatPtr c) {
  FinFunctor f;
  f.dom = c;
  f.cod = c;
  f.obj_map.resize(c->object_count());
  f.mor_map.resize(c->morphism_count());
  for (ObjIdx o = 0; o < c->object_count(); ++o) f.obj_map[o] = o;
  for (MorIdx m = 0; m < c->morphism_count(); ++m) f.mor_map[m] = m;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!(*f.cod == *g.dom)) throw std::invalid_argument("compose_functors: category mismatch");
  FinFunctor h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.obj_map.resize(f.obj_map.size());
  h.mor_map.resize(f.mor_map.size());
  for (std::size_t o = 0; o < f.obj_map.size(); ++o) h.obj_map[o] = g.obj_map[f.obj_map[o]];
  for (std::size_t m = 0; m < f.mor_map.size(); ++m) h.mor_map[m] = g.mor_map[f.mor_map[m]];
  return h;
}

bool functors_equal(const FinFunctor& a, const FinFunctor& b) {
  return *a.dom == *b.dom && *a.cod == *b.cod && a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

PropertyReport check_functor_laws(const FinFunctor& f, std::size_t limit) {
  PropertyReport report(limit);
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;

  for (MorIdx m = 0; m < a.morphism_count(); ++m) {
    const MorIdx fm = f.mor_map[m];
    if (b.src(fm) != f.obj_map[a.src(m)] || b.tgt(fm) != f.obj_map[a.tgt(m)])
      report.fail("boundary not preserved on '" + a.morphism_name(m) + "'");
  }
  for (ObjIdx o = 0; o < a.object_count(); ++o)
    if (f.mor_map[a.identity(o)] != b.identity(f.obj_map[o]))
      report.fail("identity of '" + a.object_name(o) + "' not preserved");
  for (MorIdx g = 0; g < a.morphism_count(); ++g)
    for (MorIdx m = 0; m < a.morphism_count(); ++m) {
      if (!a.composable(g, m) || a.compose(g, m) == kNone) continue;
      const MorIdx lhs = f.mor_map[a.compose(g, m)];
      const MorIdx rhs = b.compose(f.mor_map[g], f.mor_map[m]);
      if (lhs != rhs)
        report.fail("composition not preserved on (" + a.morphism_name(g) + ", " +
                    a.morphism_name(m) + ")");
    }
  return report;
}

PropertyReport functor_props(const FinFunctor& f, std::size_t limit) {
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;

  PropertyReport surj(limit);
  std::vector<char> hit(b.object_count(), 0);
  for (ObjIdx image : f.obj_map) hit[image] = 1;
  for (ObjIdx o = 0; o < b.object_count(); ++o)
    if (!hit[o]) surj.fail("unhit object '" + b.object_name(o) + "'");

  PropertyReport full(limit), faithful(limit);
  for (ObjIdx x = 0; x < a.object_count(); ++x)
    for (ObjIdx y = 0; y < a.object_count(); ++y) {
      const auto source_hom = a.hom(x, y);
      for (MorIdx g : b.hom(f.obj_map[x], f.obj_map[y])) {
        bool found = false;
        for (MorIdx m : source_hom)
          if (f.mor_map[m] == g) {
            found = true;
            break;
          }
        if (!found)
          full.fail("no preimage over ('" + a.object_name(x) + "', '" + a.object_name(y) +
                    "') for '" + b.morphism_name(g) + "'");
      }
      for (std::size_t i = 0; i < source_hom.size(); ++i)
        for (std::size_t j = i + 1; j < source_hom.size(); ++j)
          if (f.mor_map[source_hom[i]] == f.mor_map[source_hom[j]])
            faithful.fail("('" + a.morphism_name(source_hom[i]) + "', '" +
                          a.morphism_name(source_hom[j]) + "') identified");
    }

  PropertyReport report(limit);
  report.add_part("surjective_on_objects", std::move(surj));
  report.add_part("full", std::move(full));
  report.add_part("faithful", std::move(faithful));
  return report;
}

}  // namespace spaneq::cat
