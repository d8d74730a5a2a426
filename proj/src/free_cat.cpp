#include "spaneq/free_cat.hpp"

#include <stdexcept>
#include <unordered_map>

namespace spaneq::glob {

CellIdx path_end(const GlobularSet& base, const Path& p) {
  return p.edges.empty() ? p.start : base.tgt(1, p.edges.back());
}

bool path_valid(const GlobularSet& base, const Path& p) {
  if (base.dimension() != 1) throw std::invalid_argument("path_valid: base must be 1-dimensional");
  if (p.start < 0 || p.start >= base.size(0)) return false;
  CellIdx at = p.start;
  for (CellIdx e : p.edges) {
    if (e < 0 || e >= base.size(1) || base.src(1, e) != at) return false;
    at = base.tgt(1, e);
  }
  return true;
}

Path flatten(const GlobularSet& base, CellIdx start, const std::vector<Path>& parts) {
  Path out;
  out.start = start;
  CellIdx at = start;
  for (const Path& part : parts) {
    if (part.start != at) throw std::invalid_argument("flatten: parts are not consecutive");
    out.edges.insert(out.edges.end(), part.edges.begin(), part.edges.end());
    at = path_end(base, part);
  }
  return out;
}

std::vector<Path> enumerate_paths(const GlobularSet& base, int max_length) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (CellIdx v = 0; v < base.size(0); ++v) frontier.push_back(Path{v, {}});
  out = frontier;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      const CellIdx at = path_end(base, p);
      for (CellIdx e = 0; e < base.size(1); ++e) {
        if (base.src(1, e) != at) continue;
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

FreeCategoryResult free_category_bounded(const GlobularSet& graph, int max_length) {
  if (graph.dimension() != 1)
    throw std::invalid_argument("free_category_bounded: graph must be 1-dimensional");
  if (max_length < 1) throw std::invalid_argument("free_category_bounded: bound must be >= 1");

  FreeCategoryResult result;
  result.morphism_path = enumerate_paths(graph, max_length);

  cat::FinCategory::Builder builder;
  builder.objects = graph.names(0);
  builder.identity.assign(builder.objects.size(), cat::kNone);
  for (const Path& p : result.morphism_path) {
    std::string name;
    if (p.is_empty()) {
      name = "id_" + graph.name(0, p.start);
    } else {
      for (std::size_t i = 0; i < p.edges.size(); ++i)
        name += (i ? "*" : "") + graph.name(1, p.edges[i]);
    }
    const cat::MorIdx m = builder.add_morphism(std::move(name), p.start, path_end(graph, p));
    if (p.is_empty()) builder.identity[p.start] = m;
  }

  const int count = static_cast<int>(result.morphism_path.size());
  builder.compose.assign(count, std::vector<cat::MorIdx>(count, cat::kNone));
  std::unordered_map<std::string, cat::MorIdx> index;
  auto key = [](const Path& p) {
    std::string k = std::to_string(p.start);
    for (CellIdx e : p.edges) k += "," + std::to_string(e);
    return k;
  };
  for (cat::MorIdx m = 0; m < count; ++m) index.emplace(key(result.morphism_path[m]), m);
  auto find_path = [&](const Path& p) -> cat::MorIdx {
    auto it = index.find(key(p));
    return it == index.end() ? cat::kNone : it->second;
  };
  for (cat::MorIdx g = 0; g < count; ++g)
    for (cat::MorIdx f = 0; f < count; ++f) {
      const Path& first = result.morphism_path[f];
      const Path& second = result.morphism_path[g];
      if (path_end(graph, first) != second.start) continue;
      if (static_cast<int>(first.length() + second.length()) > max_length) {
        result.truncated = true;
        continue;
      }
      builder.compose[g][f] = find_path(flatten(graph, first.start, {first, second}));
    }
  result.category = cat::share(std::move(builder).build());
  return result;
}

}  // namespace spaneq::glob
