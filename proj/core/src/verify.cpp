#include "antimagic/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

namespace antimagic {

std::map<Vertex, Sum> vertex_sums(const LabeledOrientation& orientation) {
  std::map<Vertex, Sum> sums;
  for (Vertex v : orientation.vertices) sums.emplace(v, 0);
  for (const Arc& a : orientation.arcs) {
    auto head = sums.find(a.head);
    auto tail = sums.find(a.tail);
    if (head == sums.end() || tail == sums.end()) {
      throw std::invalid_argument("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                                  " uses an unlisted vertex");
    }
    head->second += a.label;
    tail->second -= a.label;
  }
  return sums;
}

SumReport verify_antimagic(const LabeledOrientation& orientation) {
  SumReport report;
  const std::size_t m = orientation.arcs.size();
  std::vector<char> used(m + 1, 0);
  report.bijection_ok = true;
  for (const Arc& a : orientation.arcs) {
    if (a.label < 1 || static_cast<std::size_t>(a.label) > m || used[static_cast<std::size_t>(a.label)]) {
      report.bijection_ok = false;
      break;
    }
    used[static_cast<std::size_t>(a.label)] = 1;
  }

  const auto sums = vertex_sums(orientation);
  std::map<Vertex, std::size_t> degree;
  for (const Arc& a : orientation.arcs) {
    ++degree[a.tail];
    ++degree[a.head];
  }
  std::map<Sum, std::vector<Vertex>> by_sum;
  for (const auto& [v, s] : sums) {
    by_sum[s].push_back(v);
    if (s == 0 && degree.count(v)) report.zero_sum_non_isolated.push_back(v);
  }
  for (const auto& [s, group] : by_sum) {
    for (std::size_t i = 1; i < group.size(); ++i) report.duplicate_sum_pairs.emplace_back(group[0], group[i]);
  }
  report.verdict = report.bijection_ok && report.duplicate_sum_pairs.empty();
  return report;
}

std::size_t default_search_bound() {
  if (const char* env = std::getenv(kOracleBoundEnv)) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(value);
  }
  return kDefaultSearchBound;
}

namespace {

class LabelingSearch {
 public:
  LabelingSearch(std::span<const Vertex> vertices, std::span<const Edge> edges, SearchResult& result)
      : vertices_(vertices.begin(), vertices.end()), edges_(edges.begin(), edges.end()), result_(result) {
    const std::size_t n = vertices_.size();
    std::vector<std::size_t> degree(n, 0);
    endpoints_.reserve(edges_.size());
    for (const Edge& e : edges_) {
      const std::size_t u = index(e.u);
      const std::size_t v = index(e.v);
      endpoints_.push_back({u, v});
      ++degree[u];
      ++degree[v];
    }
    // Edges grouped by vertices in decreasing degree, so high-degree vertices
    // finish early and collisions are caught near the root.
    std::vector<std::size_t> by_degree(n);
    for (std::size_t i = 0; i < n; ++i) by_degree[i] = i;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    std::vector<char> listed(edges_.size(), 0);
    for (std::size_t v : by_degree) {
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!listed[e] && (endpoints_[e][0] == v || endpoints_[e][1] == v)) {
          listed[e] = 1;
          order_.push_back(e);
        }
      }
    }
    std::vector<std::size_t> last(n, 0);
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      for (std::size_t v : endpoints_[order_[pos]]) last[v] = pos;
    }
    finishing_.resize(order_.size());
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 0) {
        isolated_.push_back(v);
      } else {
        finishing_[last[v]].push_back(v);
      }
    }
  }

  bool run(const std::vector<bool>& reversed) {
    reversed_ = reversed;
    sums_.assign(vertices_.size(), 0);
    labels_.assign(edges_.size(), 0);
    used_.assign(edges_.size() + 1, 0);
    finished_.assign(isolated_.size(), 0);
    if (isolated_.size() > 1) return false;
    return extend(0);
  }

  LabeledOrientation witness() const {
    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const Edge& edge = edges_[e];
      arcs.push_back(reversed_[e] ? Arc{edge.v, edge.u, labels_[e]} : Arc{edge.u, edge.v, labels_[e]});
    }
    return make_orientation(vertices_, std::move(arcs));
  }

 private:
  std::size_t index(Vertex v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) throw std::invalid_argument("edge endpoint " + std::to_string(v) + " is not a vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const std::size_t e = order_[pos];
    const std::size_t tail = endpoints_[e][reversed_[e] ? 1 : 0];
    const std::size_t head = endpoints_[e][reversed_[e] ? 0 : 1];
    for (Label l = 1; l <= static_cast<Label>(edges_.size()); ++l) {
      if (used_[static_cast<std::size_t>(l)]) continue;
      ++result_.labelings_tried;
      used_[static_cast<std::size_t>(l)] = 1;
      labels_[e] = l;
      sums_[head] += l;
      sums_[tail] -= l;
      const std::size_t mark = finished_.size();
      bool clash = false;
      for (std::size_t v : finishing_[pos]) {
        clash = clash || std::find(finished_.begin(), finished_.end(), sums_[v]) != finished_.end();
        finished_.push_back(sums_[v]);
      }
      if (!clash && extend(pos + 1)) return true;
      finished_.resize(mark);
      sums_[head] -= l;
      sums_[tail] += l;
      used_[static_cast<std::size_t>(l)] = 0;
    }
    return false;
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  SearchResult& result_;
  std::vector<std::array<std::size_t, 2>> endpoints_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> finishing_;
  std::vector<std::size_t> isolated_;
  std::vector<bool> reversed_;
  std::vector<Sum> sums_;
  std::vector<Label> labels_;
  std::vector<char> used_;
  std::vector<Sum> finished_;
};

}  // namespace

SearchResult exhaustive_antimagic_search(std::span<const Vertex> vertices, std::span<const Edge> edges,
                                         const SearchOptions& options) {
  if (edges.size() > options.max_edges) {
    throw SearchBoundError("exhaustive search is limited to " + std::to_string(options.max_edges) + " edges, got " +
                           std::to_string(edges.size()));
  }
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("repeated vertex in search input");
  }
  std::vector<Edge> normalized;
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop in search input");
    normalized.push_back(Edge::normalized(e.u, e.v));
  }
  std::vector<Edge> check = normalized;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
    throw std::invalid_argument("repeated edge in search input");
  }

  SearchResult result;
  LabelingSearch search(sorted, normalized, result);
  auto attempt = [&](const std::vector<bool>& reversed) {
    ++result.orientations_tried;
    if (!search.run(reversed)) return false;
    result.found = true;
    result.witness = search.witness();
    return true;
  };

  if (options.fixed_orientation) {
    if (options.fixed_orientation->size() != normalized.size()) {
      throw std::invalid_argument("fixed orientation must give one direction per edge");
    }
    // Directions refer to the caller's edge order, which normalization keeps.
    std::vector<bool> reversed = *options.fixed_orientation;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].u > edges[i].v) reversed[i] = !reversed[i];
    }
    attempt(reversed);
    return result;
  }
  const std::uint64_t codes = std::uint64_t{1} << normalized.size();
  for (std::uint64_t code = 0; code < codes; ++code) {
    std::vector<bool> reversed(normalized.size());
    for (std::size_t i = 0; i < normalized.size(); ++i) reversed[i] = (code >> i) & 1U;
    if (attempt(reversed)) break;
  }
  return result;
}

SearchResult exhaustive_antimagic_search(const Forest& forest, const SearchOptions& options) {
  return exhaustive_antimagic_search(forest.vertices(), forest.edges(), options);
}

std::vector<bool> orientation_bits(const Forest& forest, const LabeledOrientation& orientation) {
  std::vector<bool> bits(forest.edge_count(), false);
  std::map<Edge, bool> reversed;
  for (const Arc& a : orientation.arcs) reversed[Edge::normalized(a.tail, a.head)] = a.tail > a.head;
  for (std::size_t i = 0; i < forest.edge_count(); ++i) {
    auto it = reversed.find(forest.edges()[i]);
    if (it == reversed.end()) throw std::invalid_argument("orientation does not cover the forest");
    bits[i] = it->second;
  }
  return bits;
}

}  // namespace antimagic
