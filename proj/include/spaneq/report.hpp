#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spaneq {

inline constexpr std::size_t kDefaultWitnessLimit = 16;

// Verdict plus a capped list of counterexamples. A report is true exactly
// when it records no witnesses of its own and every named part is true.
struct PropertyReport {
  bool ok = true;
  std::vector<std::string> witnesses;
  std::size_t total_witnesses = 0;
  std::size_t witness_limit = kDefaultWitnessLimit;
  std::vector<std::pair<std::string, PropertyReport>> parts;

  PropertyReport() = default;
  explicit PropertyReport(std::size_t limit) : witness_limit(limit) {}

  void fail(std::string witness) {
    ok = false;
    ++total_witnesses;
    if (witnesses.size() < witness_limit) witnesses.push_back(std::move(witness));
  }

  void add_part(std::string label, PropertyReport sub) {
    ok = ok && sub.ok;
    parts.emplace_back(std::move(label), std::move(sub));
  }

  const PropertyReport* part(std::string_view label) const;

  // Flattened rendering: "<prefix>: ok|FAIL" lines followed by witnesses.
  std::string to_string() const;
};

// Validation outcome: either a value or a nonempty error list.
template <class T>
struct Checked {
  std::vector<std::string> errors;
  // Kept last so aggregate initialization reads {errors, value}.
  T* operator->() { return &value_.back(); }
  const T* operator->() const { return &value_.back(); }

  bool ok() const { return errors.empty() && !value_.empty(); }
  const T& value() const { return value_.back(); }
  T& value() { return value_.back(); }

  static Checked success(T v) {
    Checked c;
    c.value_.push_back(std::move(v));
    return c;
  }
  static Checked failure(std::vector<std::string> errs) {
    Checked c;
    c.errors = std::move(errs);
    if (c.errors.empty()) c.errors.push_back("unspecified error");
    return c;
  }

 private:
  std::vector<T> value_;  // empty or singleton; avoids requiring T default-construction
};

}  // namespace spaneq
