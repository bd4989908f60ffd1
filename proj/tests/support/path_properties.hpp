// Property checks for labelled path families, computed from the raw labels.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "antimagic/path_labeling.hpp"

namespace oracle {

/// Random family of n paths with lengths in [1, max_len] on fresh vertices.
inline antimagic::DirectedPathFamily random_family(std::mt19937_64& rng, std::size_t max_n, std::size_t max_len) {
  antimagic::DirectedPathFamily family;
  const std::size_t n = 1 + rng() % max_n;
  antimagic::Vertex next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = 1 + rng() % max_len;
    std::vector<antimagic::Vertex> path;
    for (std::size_t q = 0; q <= len; ++q) path.push_back(next++);
    family.paths.push_back(std::move(path));
    family.first_edge_labels.push_back(static_cast<antimagic::Label>(i + 1));
  }
  return family;
}

/// Returns violated properties; empty when all hold.
inline std::vector<std::string> path_labeling_findings(const antimagic::DirectedPathFamily& family,
                                                       const std::vector<std::vector<antimagic::Label>>& labels) {
  std::vector<std::string> findings;
  const std::int64_t n = static_cast<std::int64_t>(family.paths.size());
  std::int64_t total = 0;
  for (const auto& p : family.paths) total += static_cast<std::int64_t>(p.size()) - 1;

  std::set<std::int64_t> used;
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    if (labels[i].size() + 1 != family.paths[i].size()) findings.push_back("wrong label count on a path");
    if (labels[i].empty()) continue;
    if (labels[i][0] != static_cast<std::int64_t>(i + 1)) findings.push_back("first arc label differs from path index");
    for (auto l : labels[i]) {
      if (l < 1 || l > total || !used.insert(l).second) findings.push_back("labels are not a bijection");
    }
  }

  struct Internal {
    std::size_t path, j;  // vertex between arcs j and j+1 (1-based j)
    std::int64_t sum;
  };
  std::vector<Internal> internal;
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    for (std::size_t j = 1; j < labels[i].size(); ++j) internal.push_back({i, j, labels[i][j - 1] - labels[i][j]});
  }
  std::set<std::int64_t> sums;
  for (const auto& v : internal) {
    if (!sums.insert(v.sum).second) findings.push_back("repeated internal sum");
    if (std::abs(v.sum) > total - 1 || v.sum == 0) findings.push_back("internal sum outside [1, l-1]");
    if (v.sum > 0 && v.sum > total - n - 1) findings.push_back("positive internal sum above l-n-1");
    if ((v.sum > 0) != (v.j % 2 == 0)) findings.push_back("sign does not follow position parity");
  }
  // Earlier same-parity arcs (by position, then path) give larger |s|.
  for (const auto& a : internal) {
    for (const auto& b : internal) {
      const bool before = a.j < b.j || (a.j == b.j && a.path < b.path);
      if (before && a.j % 2 == b.j % 2 && std::abs(a.sum) <= std::abs(b.sum)) {
        findings.push_back("magnitudes not decreasing along the ordering");
      }
    }
  }
  return findings;
}

}  // namespace oracle
