#pragma once

// Finite category presentations: ordered objects and morphisms, an identity
// table, and a dense composition table on composable pairs. Law checking is
// exhaustive.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spaneq/report.hpp"

namespace spaneq::cat {

using ObjIdx = std::int32_t;
using MorIdx = std::int32_t;
inline constexpr MorIdx kNone = -1;

class FinCategory {
 public:
  struct Builder {
    std::vector<std::string> objects;
    std::vector<std::string> mor_names;
    std::vector<ObjIdx> mor_src, mor_tgt;
    std::vector<MorIdx> identity;              // per object; kNone if undeclared
    std::vector<std::vector<MorIdx>> compose;  // [g][f]; kNone where undefined

    MorIdx add_morphism(std::string name, ObjIdx src, ObjIdx tgt);
    FinCategory build() &&;
  };

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(mor_names_.size()); }
  const std::string& object_name(ObjIdx o) const { return objects_[o]; }
  const std::string& morphism_name(MorIdx m) const { return mor_names_[m]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& morphism_names() const { return mor_names_; }
  ObjIdx src(MorIdx m) const { return mor_src_[m]; }
  ObjIdx tgt(MorIdx m) const { return mor_tgt_[m]; }
  MorIdx identity(ObjIdx o) const { return identity_[o]; }
  bool is_identity(MorIdx m) const { return identity_[mor_src_[m]] == m && mor_src_[m] == mor_tgt_[m]; }

  bool composable(MorIdx g, MorIdx f) const { return mor_tgt_[f] == mor_src_[g]; }
  // g after f; kNone when either argument is kNone or the table has no entry.
  MorIdx compose(MorIdx g, MorIdx f) const {
    return (g == kNone || f == kNone) ? kNone : compose_[g][f];
  }

  std::vector<MorIdx> hom(ObjIdx x, ObjIdx y) const;
  std::optional<ObjIdx> find_object(std::string_view name) const;
  std::optional<MorIdx> find_morphism(std::string_view name) const;

  // Two-sided inverse of m, if the table contains one.
  std::optional<MorIdx> inverse(MorIdx m) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b) {
    return a.objects_ == b.objects_ && a.mor_names_ == b.mor_names_ && a.mor_src_ == b.mor_src_ &&
           a.mor_tgt_ == b.mor_tgt_ && a.identity_ == b.identity_ && a.compose_ == b.compose_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> mor_names_;
  std::vector<ObjIdx> mor_src_, mor_tgt_;
  std::vector<MorIdx> identity_;
  std::vector<std::vector<MorIdx>> compose_;
  friend struct Builder;
};

using CatPtr = std::shared_ptr<const FinCategory>;

inline CatPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

// Structural pass (identities typed x -> x, composition defined exactly on
// composable pairs with the expected boundaries), then associativity on all
// composable triples and both identity laws. When allow_partial is set,
// missing composites are tolerated and laws are checked only where every
// needed composite exists (bounded free categories).
PropertyReport check_category_laws(const FinCategory& c, bool allow_partial = false,
                                   std::size_t limit = kDefaultWitnessLimit);

FinCategory terminal_category();

// Two objects a0, a1 and a pair of mutually inverse arrows between them.
FinCategory walking_isomorphism();

FinCategory discrete_category(std::vector<std::string> objects);

}  // namespace spaneq::cat
