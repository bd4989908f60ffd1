#include "antimagic/path_labeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace antimagic {

std::size_t DirectedPathFamily::total_length() const {
  std::size_t total = 0;
  for (const auto& p : paths) total += p.empty() ? 0 : p.size() - 1;
  return total;
}

void validate_family(const DirectedPathFamily& family) {
  if (family.paths.empty()) throw std::invalid_argument("path family must contain at least one path");
  // vertex -> (path, is_internal) of its first occurrence
  std::unordered_map<Vertex, std::pair<std::size_t, bool>> seen;
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    const auto& path = family.paths[i];
    if (path.size() < 2) {
      throw std::invalid_argument("path " + std::to_string(i + 1) + " has length 0; every path needs an arc");
    }
    for (std::size_t j = 0; j < path.size(); ++j) {
      const bool internal = j > 0 && j + 1 < path.size();
      auto [it, inserted] = seen.try_emplace(path[j], i, internal);
      if (inserted) continue;
      const bool same_path = it->second.first == i;
      if (same_path || internal || it->second.second) {
        throw std::invalid_argument("vertex " + std::to_string(path[j]) + " breaks internal disjointness");
      }
    }
  }
  if (!family.first_edge_labels.empty()) {
    if (family.first_edge_labels.size() != family.paths.size()) {
      throw std::invalid_argument("one first-edge label per path is required");
    }
    for (std::size_t i = 0; i < family.first_edge_labels.size(); ++i) {
      if (family.first_edge_labels[i] != static_cast<Label>(i + 1)) {
        throw std::invalid_argument("first edge of path " + std::to_string(i + 1) + " is labelled " +
                                    std::to_string(family.first_edge_labels[i]) + ", expected its index");
      }
    }
  }
}

EdgeOrdering order_edges(const DirectedPathFamily& family) {
  validate_family(family);
  EdgeOrdering ordering;
  std::size_t longest = 0;
  for (const auto& p : family.paths) longest = std::max(longest, p.size() - 1);
  for (std::size_t q = 0; q < longest; ++q) {
    auto& target = (q % 2 == 0) ? ordering.odd : ordering.even;
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
      if (q + 1 < family.paths[i].size()) target.push_back({i, q});
    }
  }
  return ordering;
}

PathLabeling label_paths(const DirectedPathFamily& family) {
  const EdgeOrdering ordering = order_edges(family);
  const auto total = static_cast<Label>(family.total_length());

  PathLabeling out;
  out.labels.resize(family.paths.size());
  for (std::size_t i = 0; i < family.paths.size(); ++i) out.labels[i].assign(family.paths[i].size() - 1, 0);
  for (std::size_t i = 0; i < ordering.odd.size(); ++i) {
    out.labels[ordering.odd[i].path][ordering.odd[i].arc] = static_cast<Label>(i + 1);
  }
  for (std::size_t i = 0; i < ordering.even.size(); ++i) {
    out.labels[ordering.even[i].path][ordering.even[i].arc] = total - static_cast<Label>(i);
  }
  out.internal_sums = internal_sums(family, out.labels);
  return out;
}

std::map<Vertex, Sum> internal_sums(const DirectedPathFamily& family, const std::vector<std::vector<Label>>& labels) {
  if (labels.size() != family.paths.size()) throw std::invalid_argument("labels do not match the path family");
  const std::size_t total = family.total_length();
  std::vector<char> used(total + 1, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].size() + 1 != family.paths[i].size()) {
      throw std::invalid_argument("labels do not match the length of path " + std::to_string(i + 1));
    }
    for (Label l : labels[i]) {
      if (l < 1 || static_cast<std::size_t>(l) > total || used[static_cast<std::size_t>(l)]) {
        throw std::invalid_argument("arc labels are not a bijection onto [1, " + std::to_string(total) + "]");
      }
      used[static_cast<std::size_t>(l)] = 1;
    }
  }
  std::map<Vertex, Sum> sums;
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    const auto& path = family.paths[i];
    for (std::size_t j = 1; j + 1 < path.size(); ++j) sums[path[j]] = labels[i][j - 1] - labels[i][j];
  }
  return sums;
}

}  // namespace antimagic
