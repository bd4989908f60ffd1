#include "antimagic/forest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace antimagic {

namespace {

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<Vertex>{}(e.u * 0x9E3779B97F4A7C15ULL ^ (e.v + 0x632BE59BD9B4E019ULL));
  }
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string describe(ForestErrorKind kind, Edge e, std::size_t index) {
  std::ostringstream os;
  os << to_string(kind) << " at edge #" << index + 1 << " (" << e.u << ", " << e.v << ")";
  return os.str();
}

}  // namespace

const char* to_string(ForestErrorKind kind) {
  switch (kind) {
    case ForestErrorKind::SelfLoop: return "self-loop";
    case ForestErrorKind::DuplicateEdge: return "duplicate edge";
    case ForestErrorKind::Cycle: return "cycle detected";
  }
  return "unknown";
}

ForestError::ForestError(ForestErrorKind kind, Edge edge, std::size_t edge_index)
    : std::runtime_error(describe(kind, edge, edge_index)), kind_(kind), edge_(edge), edge_index_(edge_index) {}

Forest Forest::build(std::span<const Edge> edges, std::span<const Vertex> isolated) {
  Forest f;
  f.vertices_.reserve(2 * edges.size() + isolated.size());
  for (const Edge& e : edges) {
    f.vertices_.push_back(e.u);
    f.vertices_.push_back(e.v);
  }
  f.vertices_.insert(f.vertices_.end(), isolated.begin(), isolated.end());
  std::sort(f.vertices_.begin(), f.vertices_.end());
  f.vertices_.erase(std::unique(f.vertices_.begin(), f.vertices_.end()), f.vertices_.end());

  DisjointSets components(f.vertices_.size());
  std::unordered_set<Edge, EdgeHash> seen;
  seen.reserve(edges.size());
  f.edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = Edge::normalized(edges[i].u, edges[i].v);
    if (e.u == e.v) throw ForestError(ForestErrorKind::SelfLoop, e, i);
    if (!seen.insert(e).second) throw ForestError(ForestErrorKind::DuplicateEdge, e, i);
    if (!components.unite(f.index_of(e.u), f.index_of(e.v))) throw ForestError(ForestErrorKind::Cycle, e, i);
    f.edges_.push_back(e);
  }
  std::sort(f.edges_.begin(), f.edges_.end());

  const std::size_t n = f.vertices_.size();
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : f.edges_) {
    ++degree[f.index_of(e.u)];
    ++degree[f.index_of(e.v)];
  }
  f.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) f.offsets_[i + 1] = f.offsets_[i] + degree[i];
  f.adjacency_.resize(f.offsets_[n]);
  std::vector<std::size_t> fill(f.offsets_.begin(), f.offsets_.end() - 1);
  for (const Edge& e : f.edges_) {
    f.adjacency_[fill[f.index_of(e.u)]++] = e.v;
    f.adjacency_[fill[f.index_of(e.v)]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(f.adjacency_.begin() + static_cast<std::ptrdiff_t>(f.offsets_[i]),
              f.adjacency_.begin() + static_cast<std::ptrdiff_t>(f.offsets_[i + 1]));
  }
  return f;
}

bool Forest::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::size_t Forest::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw std::out_of_range("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Forest::component_count() const { return vertices_.size() - edges_.size(); }

std::optional<Vertex> Forest::max_vertex() const {
  if (vertices_.empty()) return std::nullopt;
  return vertices_.back();
}

std::string to_edge_list_text(const Forest& forest) {
  std::ostringstream os;
  for (const Edge& e : forest.edges()) os << e.u << ' ' << e.v << '\n';
  for (std::size_t i = 0; i < forest.vertex_count(); ++i) {
    if (forest.degree_at(i) == 0) os << forest.vertices()[i] << '\n';
  }
  return os.str();
}

DegreeClasses classify_vertices(const Forest& forest) {
  DegreeClasses dc;
  std::vector<Vertex> leaves;
  for (std::size_t i = 0; i < forest.vertex_count(); ++i) {
    const Vertex v = forest.vertices()[i];
    switch (forest.degree_at(i)) {
      case 0: dc.isolated.push_back(v); break;
      case 1: leaves.push_back(v); break;
      case 2: dc.x.push_back(v); break;
      default: dc.y.push_back(v); break;
    }
  }
  dc.n1 = dc.y.size();
  dc.y.insert(dc.y.end(), leaves.begin(), leaves.end());
  dc.n2 = dc.y.size();
  return dc;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::TooManyIsolated: return "tooManyIsolated";
    case ViolationKind::NonIndependentY: return "nonIndependentY";
    case ViolationKind::NotAForest: return "notAForest";
  }
  return "unknown";
}

HypothesisReport check_hypothesis(const Forest& forest) {
  HypothesisReport report;
  std::vector<Vertex> isolated;
  for (std::size_t i = 0; i < forest.vertex_count(); ++i) {
    if (forest.degree_at(i) == 0) isolated.push_back(forest.vertices()[i]);
  }
  if (isolated.size() > 1) {
    std::string detail = std::to_string(isolated.size()) + " isolated vertices (at most one allowed)";
    report.violations.push_back({ViolationKind::TooManyIsolated, std::move(isolated), std::move(detail)});
  }
  for (const Edge& e : forest.edges()) {
    if (forest.degree(e.u) != 2 && forest.degree(e.v) != 2) {
      std::string detail = "adjacent vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                           " both have degree != 2";
      report.violations.push_back({ViolationKind::NonIndependentY, {e.u, e.v}, std::move(detail)});
    }
  }
  return report;
}

HypothesisReport check_hypothesis(std::span<const Edge> edges, std::span<const Vertex> isolated) {
  try {
    return check_hypothesis(Forest::build(edges, isolated));
  } catch (const ForestError& err) {
    HypothesisReport report;
    report.violations.push_back({ViolationKind::NotAForest, {err.edge().u, err.edge().v}, err.what()});
    return report;
  }
}

PathDecomposition decompose_degree_two_paths(const Forest& forest, const DegreeClasses& classes) {
  PathDecomposition pd;
  const std::size_t n = forest.vertex_count();
  std::vector<char> in_x(n, 0);
  std::vector<char> visited(n, 0);
  for (Vertex v : classes.x) in_x[forest.index_of(v)] = 1;

  auto x_neighbors = [&](std::size_t idx) {
    std::vector<std::size_t> out;
    for (Vertex w : forest.neighbors_at(idx)) {
      const std::size_t j = forest.index_of(w);
      if (in_x[j]) out.push_back(j);
    }
    return out;
  };
  auto attachment = [&](std::size_t idx, std::size_t skip_count) {
    // Y-neighbours of an X vertex, ascending; skip_count selects which one.
    std::size_t seen = 0;
    for (Vertex w : forest.neighbors_at(idx)) {
      if (!in_x[forest.index_of(w)] && seen++ == skip_count) return w;
    }
    throw std::logic_error("degree-two vertex " + std::to_string(forest.vertices()[idx]) +
                           " lacks an attachment outside X");
  };

  for (Vertex start : classes.x) {
    std::size_t idx = forest.index_of(start);
    if (visited[idx]) continue;

    // Walk to one end of the component; components of F[X] are paths.
    std::size_t prev = n;
    std::size_t end = idx;
    for (;;) {
      auto nb = x_neighbors(end);
      std::size_t next = n;
      for (std::size_t j : nb) {
        if (j != prev) next = j;
      }
      if (next == n || next == idx) break;
      prev = end;
      end = next;
    }

    DegreeTwoPath path;
    prev = n;
    std::size_t cur = end;
    for (;;) {
      visited[cur] = 1;
      path.vertices.push_back(forest.vertices()[cur]);
      std::size_t next = n;
      for (std::size_t j : x_neighbors(cur)) {
        if (j != prev) next = j;
      }
      if (next == n) break;
      prev = cur;
      cur = next;
    }

    if (path.vertices.size() == 1) {
      path.start_attachment = attachment(end, 0);
      path.end_attachment = attachment(end, 1);
    } else {
      path.start_attachment = attachment(forest.index_of(path.vertices.front()), 0);
      path.end_attachment = attachment(forest.index_of(path.vertices.back()), 0);
      if (path.start_attachment > path.end_attachment) {
        std::reverse(path.vertices.begin(), path.vertices.end());
        std::swap(path.start_attachment, path.end_attachment);
      }
    }
    if (path.start_attachment == path.end_attachment) {
      throw std::logic_error("degree-two path with a repeated attachment; input contains a cycle");
    }
    pd.paths.push_back(std::move(path));
  }
  return pd;
}

Forest subdivide(const Forest& forest, const std::map<Edge, std::size_t>& counts) {
  Vertex next = forest.max_vertex().value_or(0) + (forest.vertex_count() ? 1 : 0);
  std::vector<Edge> edges;
  for (const Edge& e : forest.edges()) {
    auto it = counts.find(e);
    if (it == counts.end() || it->second == 0) {
      throw std::invalid_argument("subdivision count for edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") must be at least 1");
    }
    Vertex prev = e.u;
    for (std::size_t c = 0; c < it->second; ++c) {
      edges.push_back(Edge::normalized(prev, next));
      prev = next++;
    }
    edges.push_back(Edge::normalized(prev, e.v));
  }
  std::vector<Vertex> isolated;
  for (std::size_t i = 0; i < forest.vertex_count(); ++i) {
    if (forest.degree_at(i) == 0) isolated.push_back(forest.vertices()[i]);
  }
  return Forest::build(edges, isolated);
}

Forest subdivide(const Forest& forest, std::size_t count_per_edge) {
  std::map<Edge, std::size_t> counts;
  for (const Edge& e : forest.edges()) counts.emplace(e, count_per_edge);
  return subdivide(forest, counts);
}

}  // namespace antimagic
