#include "antimagic/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <string>

namespace antimagic {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Returns match[source] (kNone if unmatched) with every listed source matched.
std::vector<std::size_t> saturate(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t target_count,
                                  std::span<const std::size_t> sources) {
  std::vector<std::size_t> match(adjacency.size(), kNone);
  std::vector<std::size_t> owner(target_count, kNone);

  for (std::size_t u : sources) {
    for (std::size_t t : adjacency[u]) {
      if (owner[t] == kNone) {
        owner[t] = u;
        match[u] = t;
        break;
      }
    }
  }

  std::vector<std::size_t> reached_from(target_count, kNone);
  std::vector<std::size_t> touched;
  for (std::size_t root : sources) {
    if (match[root] != kNone) continue;
    std::deque<std::size_t> queue{root};
    std::size_t free_target = kNone;
    while (!queue.empty() && free_target == kNone) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t t : adjacency[u]) {
        if (reached_from[t] != kNone) continue;
        reached_from[t] = u;
        touched.push_back(t);
        if (owner[t] == kNone) {
          free_target = t;
          break;
        }
        queue.push_back(owner[t]);
      }
    }
    if (free_target == kNone) {
      throw MatchingError("no saturating matching: Hall's condition fails at source " + std::to_string(root));
    }
    for (std::size_t t = free_target; t != kNone;) {
      const std::size_t u = reached_from[t];
      const std::size_t previous = match[u];
      match[u] = t;
      owner[t] = u;
      t = (u == root) ? kNone : previous;
    }
    for (std::size_t t : touched) reached_from[t] = kNone;
    touched.clear();
  }
  return match;
}

std::size_t position_of(const std::vector<Vertex>& sorted, Vertex y) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), y);
  if (it == sorted.end() || *it != y) throw std::invalid_argument("vertex " + std::to_string(y) + " is not in Y");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

std::vector<std::size_t> ContractedBipartite::paths_at(Vertex y) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i][0] == y || left[i][1] == y) out.push_back(i);
  }
  return out;
}

ContractedBipartite contract_paths(const Forest& forest, const PathDecomposition& decomposition) {
  ContractedBipartite graph;
  graph.left.reserve(decomposition.paths.size());
  for (const auto& p : decomposition.paths) graph.left.push_back({p.start_attachment, p.end_attachment});
  for (std::size_t i = 0; i < forest.vertex_count(); ++i) {
    const std::size_t d = forest.degree_at(i);
    if (d != 2 && d != 0) graph.right.push_back(forest.vertices()[i]);
  }
  return graph;
}

ContractedMatching saturating_matching_left(const ContractedBipartite& graph, std::span<const std::size_t> paths) {
  std::vector<std::vector<std::size_t>> adjacency(graph.left.size());
  for (std::size_t i = 0; i < graph.left.size(); ++i) {
    for (Vertex y : graph.left[i]) adjacency[i].push_back(position_of(graph.right, y));
    std::sort(adjacency[i].begin(), adjacency[i].end());
  }
  const auto match = saturate(adjacency, graph.right.size(), paths);
  ContractedMatching out;
  for (std::size_t i = 0; i < match.size(); ++i) {
    if (match[i] != kNone) out.edges.push_back({i, graph.right[match[i]]});
  }
  return out;
}

ContractedMatching saturating_matching_right(const ContractedBipartite& graph, std::span<const Vertex> ys) {
  std::vector<std::vector<std::size_t>> adjacency(graph.right.size());
  for (std::size_t i = 0; i < graph.left.size(); ++i) {
    for (Vertex y : graph.left[i]) adjacency[position_of(graph.right, y)].push_back(i);
  }
  std::vector<std::size_t> sources;
  for (Vertex y : ys) sources.push_back(position_of(graph.right, y));
  const auto match = saturate(adjacency, graph.left.size(), sources);
  ContractedMatching out;
  for (std::size_t j = 0; j < match.size(); ++j) {
    if (match[j] != kNone) out.edges.push_back({match[j], graph.right[j]});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

ContractedMatching combine_matchings(const ContractedMatching& m1, const ContractedMatching& m2,
                                     std::span<const std::size_t> x1, std::span<const Vertex> y1) {
  // Union graph; node ids: ('L', path) and ('R', y). Each node has degree <= 2.
  struct UnionEdge {
    ContractedEdge edge;
    bool in_m1 = false;
    bool in_m2 = false;
  };
  std::map<ContractedEdge, UnionEdge> merged;
  for (const auto& e : m1.edges) merged[e] = {e, true, false};
  for (const auto& e : m2.edges) {
    auto [it, inserted] = merged.try_emplace(e, UnionEdge{e, false, true});
    if (!inserted) it->second.in_m2 = true;
  }
  std::vector<UnionEdge> edges;
  for (auto& [key, value] : merged) edges.push_back(value);

  std::map<std::size_t, std::vector<std::size_t>> at_left;
  std::map<Vertex, std::vector<std::size_t>> at_right;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    at_left[edges[i].edge.path].push_back(i);
    at_right[edges[i].edge.y].push_back(i);
  }
  for (const auto& [node, list] : at_left) {
    if (list.size() > 2) throw std::invalid_argument("inputs are not matchings");
  }
  for (const auto& [node, list] : at_right) {
    if (list.size() > 2) throw std::invalid_argument("inputs are not matchings");
  }

  // Walks from edge `start`, leaving through the given side, and returns the
  // edges in order together with whether the walk closed into a cycle.
  std::vector<char> used(edges.size(), 0);
  auto walk = [&](std::size_t start, bool leave_right) {
    std::vector<std::size_t> order{start};
    used[start] = 1;
    std::size_t current = start;
    bool right = leave_right;
    for (;;) {
      const auto& list = right ? at_right[edges[current].edge.y] : at_left[edges[current].edge.path];
      std::size_t next = kNone;
      for (std::size_t e : list) {
        if (e != current) next = e;
      }
      if (next == kNone) return std::pair{order, false};
      if (used[next]) return std::pair{order, true};
      used[next] = 1;
      order.push_back(next);
      current = next;
      right = !right;
    }
  };

  std::vector<std::pair<std::vector<std::size_t>, bool>> components;
  // Path components first, each walked from one of its ends; what is left
  // over consists of cycles.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (used[i]) continue;
    const bool left_end = at_left[edges[i].edge.path].size() == 1;
    const bool right_end = at_right[edges[i].edge.y].size() == 1;
    if (left_end || right_end) components.push_back(walk(i, left_end));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!used[i]) components.push_back(walk(i, true));
  }

  ContractedMatching out;
  for (const auto& [order, cycle] : components) {
    std::vector<ContractedEdge> chosen;
    if (cycle) {
      for (std::size_t e : order) {
        if (edges[e].in_m1) chosen.push_back(edges[e].edge);
      }
    } else if (order.size() % 2 == 1) {
      for (std::size_t j = 0; j < order.size(); j += 2) chosen.push_back(edges[order[j]].edge);
    } else {
      const auto& first = edges[order.front()].edge;
      const bool starts_on_right = at_right[first.y].size() == 1;
      if (!starts_on_right) {
        throw MatchingError("even alternating path with both ends on the path side (starting at path " +
                            std::to_string(first.path) + ")");
      }
      for (std::size_t e : order) {
        if (edges[e].in_m2) chosen.push_back(edges[e].edge);
      }
    }
    out.edges.insert(out.edges.end(), chosen.begin(), chosen.end());
  }
  std::sort(out.edges.begin(), out.edges.end());

  std::vector<std::size_t> covered_left;
  std::vector<Vertex> covered_right;
  for (const auto& e : out.edges) {
    covered_left.push_back(e.path);
    covered_right.push_back(e.y);
  }
  std::sort(covered_left.begin(), covered_left.end());
  std::sort(covered_right.begin(), covered_right.end());
  if (std::adjacent_find(covered_left.begin(), covered_left.end()) != covered_left.end() ||
      std::adjacent_find(covered_right.begin(), covered_right.end()) != covered_right.end()) {
    throw MatchingError("combined edge set is not a matching");
  }
  for (std::size_t p : x1) {
    if (!std::binary_search(covered_left.begin(), covered_left.end(), p)) {
      throw MatchingError("combined matching misses path " + std::to_string(p));
    }
  }
  for (Vertex y : y1) {
    if (!std::binary_search(covered_right.begin(), covered_right.end(), y)) {
      throw MatchingError("combined matching misses vertex " + std::to_string(y));
    }
  }
  return out;
}

Matching build_end_edge_matching(const Forest& forest, const PathDecomposition& decomposition,
                               const DegreeClasses& classes) {
  const ContractedBipartite graph = contract_paths(forest, decomposition);
  std::vector<std::size_t> all_paths(graph.left.size());
  for (std::size_t i = 0; i < all_paths.size(); ++i) all_paths[i] = i;
  std::vector<Vertex> high(classes.y.begin(), classes.y.begin() + static_cast<std::ptrdiff_t>(classes.n1));
  std::sort(high.begin(), high.end());

  const ContractedMatching m1 = saturating_matching_left(graph, all_paths);
  const ContractedMatching m2 = saturating_matching_right(graph, high);
  const ContractedMatching combined = combine_matchings(m1, m2, all_paths, high);

  Matching out;
  out.edges.resize(decomposition.paths.size());
  out.chosen.resize(decomposition.paths.size());
  for (const auto& e : combined.edges) {
    const auto& path = decomposition.paths[e.path];
    if (e.y == path.start_attachment) {
      out.edges[e.path] = {path.front(), e.y};
      out.chosen[e.path] = PathEnd::Start;
    } else {
      out.edges[e.path] = {path.back(), e.y};
      out.chosen[e.path] = PathEnd::End;
    }
  }
  return out;
}

}  // namespace antimagic
