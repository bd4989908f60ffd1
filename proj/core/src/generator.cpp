#include "antimagic/generator.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

namespace antimagic {

void validate_config(const GeneratorConfig& cfg) {
  if (cfg.min_base_vertices < 2) throw std::invalid_argument("base forest needs at least 2 vertices");
  if (cfg.min_base_vertices > cfg.max_base_vertices) throw std::invalid_argument("empty base-vertex range");
  if (cfg.subdiv_min < 1) throw std::invalid_argument("every edge must be subdivided at least once");
  if (cfg.subdiv_min > cfg.subdiv_max) throw std::invalid_argument("empty subdivision range");
  if (cfg.max_components < 1) throw std::invalid_argument("max_components must be at least 1");
}

std::uint64_t draw_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + x % range;
}

namespace {

// Tree on 0..k-1 decoded from a uniformly random Pruefer sequence.
std::vector<std::pair<std::size_t, std::size_t>> random_tree(std::mt19937_64& rng, std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (k < 2) return edges;
  if (k == 2) return {{0, 1}};
  std::vector<std::size_t> code(k - 2);
  for (auto& c : code) c = draw_between(rng, 0, k - 1);
  std::vector<std::size_t> degree(k, 1);
  for (std::size_t c : code) ++degree[c];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < k; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (std::size_t c : code) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const std::size_t a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

}  // namespace

Forest generate_random_forest(const GeneratorConfig& cfg) {
  validate_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  const std::size_t n = draw_between(rng, cfg.min_base_vertices, cfg.max_base_vertices);

  // Every component gets at least two vertices; the rest are spread at random.
  const std::size_t components = draw_between(rng, 1, std::min(cfg.max_components, n / 2));
  std::vector<std::size_t> sizes(components, 2);
  for (std::size_t extra = n - 2 * components; extra > 0; --extra) ++sizes[draw_between(rng, 0, components - 1)];

  std::vector<Vertex> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i + 1;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(ids[i], ids[draw_between(rng, 0, i)]);

  std::vector<Edge> base;
  std::size_t offset = 0;
  for (std::size_t size : sizes) {
    for (auto [a, b] : random_tree(rng, size)) base.push_back(Edge::normalized(ids[offset + a], ids[offset + b]));
    offset += size;
  }
  const Forest base_forest = Forest::build(base);

  std::map<Edge, std::size_t> counts;
  for (const Edge& e : base_forest.edges()) counts.emplace(e, draw_between(rng, cfg.subdiv_min, cfg.subdiv_max));
  Forest forest = subdivide(base_forest, counts);
  if (!cfg.isolated_vertex) return forest;

  const Vertex lone = forest.max_vertex().value_or(0) + 1;
  return Forest::build(forest.edges(), std::span<const Vertex>(&lone, 1));
}

}  // namespace antimagic
