#include <algorithm>
#include <map>
#include <string>

#include "antimagic/verify.hpp"

namespace antimagic {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

std::string rooted_code(const Adjacency& adjacency, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t w : adjacency[v]) {
    if (w != parent) children.push_back(rooted_code(adjacency, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  return code + ")";
}

std::vector<std::size_t> centers(const Adjacency& adjacency) {
  const std::size_t n = adjacency.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = adjacency[i].size();
    if (degree[i] <= 1) layer.push_back(i);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer) {
      for (std::size_t w : adjacency[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

bool qualifies(const Adjacency& tree) {
  if (tree.size() < 3) return false;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (tree[v].size() == 2) continue;
    for (std::size_t w : tree[v]) {
      if (tree[w].size() != 2) return false;
    }
  }
  return true;
}

// Free trees on 1..max_vertices vertices, keyed by canonical code.
std::vector<std::map<std::string, Adjacency>> free_trees(std::size_t max_vertices) {
  std::vector<std::map<std::string, Adjacency>> by_size(max_vertices + 1);
  if (max_vertices == 0) return by_size;
  Adjacency single(1);
  by_size[1].emplace(canonical_tree_code(single), single);
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    for (const auto& [code, tree] : by_size[n - 1]) {
      for (std::size_t v = 0; v < tree.size(); ++v) {
        Adjacency grown = tree;
        grown.emplace_back(std::vector<std::size_t>{v});
        grown[v].push_back(n - 1);
        by_size[n].try_emplace(canonical_tree_code(grown), std::move(grown));
      }
    }
  }
  return by_size;
}

}  // namespace

std::string canonical_tree_code(const Adjacency& adjacency) {
  if (adjacency.empty()) return "";
  std::string best;
  for (std::size_t c : centers(adjacency)) {
    std::string code = rooted_code(adjacency, c, adjacency.size());
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

void for_each_small_qualifying_forest(std::size_t max_edges, const std::function<void(const Forest&)>& visit) {
  if (max_edges > 10) throw std::invalid_argument("small forest enumeration supports at most 10 edges");

  std::vector<Adjacency> pieces;
  const auto trees = free_trees(max_edges + 1);
  for (const auto& level : trees) {
    for (const auto& [code, tree] : level) {
      if (qualifies(tree)) pieces.push_back(tree);
    }
  }

  // Multisets of pieces as non-decreasing index sequences.
  std::vector<std::size_t> chosen;
  auto emit = [&]() {
    std::vector<Edge> edges;
    Vertex next = 1;
    for (std::size_t index : chosen) {
      const Adjacency& tree = pieces[index];
      for (std::size_t v = 0; v < tree.size(); ++v) {
        for (std::size_t w : tree[v]) {
          if (v < w) edges.push_back({next + v, next + w});
        }
      }
      next += tree.size();
    }
    if (!chosen.empty()) visit(Forest::build(edges));
    const Vertex lone = next;
    visit(Forest::build(edges, std::span<const Vertex>(&lone, 1)));
  };
  auto extend = [&](auto&& self, std::size_t from, std::size_t edges_used) -> void {
    emit();
    for (std::size_t i = from; i < pieces.size(); ++i) {
      const std::size_t size = pieces[i].size() - 1;
      if (edges_used + size > max_edges) continue;
      chosen.push_back(i);
      self(self, i, edges_used + size);
      chosen.pop_back();
    }
  };
  extend(extend, 0, 0);
}

std::vector<Forest> enumerate_small_qualifying_forests(std::size_t max_edges) {
  std::vector<Forest> out;
  for_each_small_qualifying_forest(max_edges, [&](const Forest& f) { out.push_back(f); });
  return out;
}

}  // namespace antimagic
