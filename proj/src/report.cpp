#include "spaneq/report.hpp"

#include <sstream>

namespace spaneq {

const PropertyReport* PropertyReport::part(std::string_view label) const {
  for (const auto& [name, sub] : parts)
    if (name == label) return &sub;
  return nullptr;
}

namespace {

void render(const PropertyReport& r, const std::string& prefix, std::ostringstream& out) {
  out << prefix << ": " << (r.ok ? "true" : "false") << "\n";
  for (const auto& w : r.witnesses) out << prefix << "  witness: " << w << "\n";
  if (r.total_witnesses > r.witnesses.size())
    out << prefix << "  (" << r.total_witnesses - r.witnesses.size() << " more witnesses suppressed)\n";
  for (const auto& [name, sub] : r.parts) render(sub, prefix + "." + name, out);
}

}  // namespace

std::string PropertyReport::to_string() const {
  std::ostringstream out;
  render(*this, "verdict", out);
  return out.str();
}

}  // namespace spaneq
