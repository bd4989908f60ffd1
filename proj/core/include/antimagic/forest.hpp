#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace antimagic {

using Vertex = std::uint64_t;
using Label = std::int64_t;
using Sum = std::int64_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ForestErrorKind { SelfLoop, DuplicateEdge, Cycle };

const char* to_string(ForestErrorKind kind);

/// Raised by Forest::build. edge_index() is the position of the offending
/// edge in the input sequence.
class ForestError : public std::runtime_error {
 public:
  ForestError(ForestErrorKind kind, Edge edge, std::size_t edge_index);

  ForestErrorKind kind() const noexcept { return kind_; }
  Edge edge() const noexcept { return edge_; }
  std::size_t edge_index() const noexcept { return edge_index_; }

 private:
  ForestErrorKind kind_;
  Edge edge_;
  std::size_t edge_index_;
};

/// Simple acyclic undirected graph over arbitrary nonnegative identifiers.
/// Immutable after construction; vertices, edges and neighbour lists are all
/// kept in ascending identifier order.
class Forest {
 public:
  Forest() = default;

  /// Validates edges in input order: self-loops, then repeated edges, then
  /// cycles. `isolated` declares extra vertices (they stay isolated unless an
  /// edge mentions them).
  static Forest build(std::span<const Edge> edges, std::span<const Vertex> isolated = {});

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool contains(Vertex v) const;
  /// Position of v in vertices(); throws std::out_of_range for unknown ids.
  std::size_t index_of(Vertex v) const;
  std::size_t degree(Vertex v) const { return degree_at(index_of(v)); }
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_at(index_of(v)); }

  std::size_t degree_at(std::size_t index) const { return offsets_[index + 1] - offsets_[index]; }
  std::span<const Vertex> neighbors_at(std::size_t index) const {
    return std::span<const Vertex>(adjacency_).subspan(offsets_[index], degree_at(index));
  }

  std::size_t component_count() const;
  std::optional<Vertex> max_vertex() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Plain-text edge list ("u v" per line, "v" for isolated vertices).
std::string to_edge_list_text(const Forest& forest);

struct DegreeClasses {
  std::vector<Vertex> x;         // degree exactly 2, ascending
  std::vector<Vertex> y;         // degree >= 3 first, then degree 1; each group ascending
  std::size_t n1 = 0;            // Y-vertices of degree >= 3
  std::size_t n2 = 0;            // |y|
  std::vector<Vertex> isolated;  // degree 0 (at most one in a qualifying forest)
};

DegreeClasses classify_vertices(const Forest& forest);

enum class ViolationKind { TooManyIsolated, NonIndependentY, NotAForest };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> vertices;
  std::string detail;
};

struct HypothesisReport {
  std::vector<Violation> violations;

  bool passes() const noexcept { return violations.empty(); }
};

/// At most one isolated vertex, and no edge joins two vertices of degree != 2.
HypothesisReport check_hypothesis(const Forest& forest);

/// Same check on a raw edge list; a list that is not a forest is reported as
/// NotAForest instead of throwing.
HypothesisReport check_hypothesis(std::span<const Edge> edges, std::span<const Vertex> isolated = {});

/// A component of F[X]: v_0 ... v_len, plus the Y-neighbours of both ends.
/// A length-0 path has a single vertex with two distinct attachments.
struct DegreeTwoPath {
  std::vector<Vertex> vertices;
  Vertex start_attachment = 0;
  Vertex end_attachment = 0;

  std::size_t length() const noexcept { return vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

struct PathDecomposition {
  std::vector<DegreeTwoPath> paths;  // ordered by smallest member vertex
};

/// Paths are oriented so that start_attachment < end_attachment.
PathDecomposition decompose_degree_two_paths(const Forest& forest, const DegreeClasses& classes);

/// Replaces every edge by a path with `counts[edge]` new internal vertices.
/// New identifiers start after the current maximum, edges processed in
/// ascending order, internal vertices numbered from u towards v.
Forest subdivide(const Forest& forest, const std::map<Edge, std::size_t>& counts);
Forest subdivide(const Forest& forest, std::size_t count_per_edge);

}  // namespace antimagic
