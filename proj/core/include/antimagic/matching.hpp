#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "antimagic/forest.hpp"

namespace antimagic {

/// Bipartite graph obtained by contracting every degree-two path to a single
/// vertex w_i; w_i keeps the two attachment edges of its path.
struct ContractedBipartite {
  std::vector<std::array<Vertex, 2>> left;  // {start_attachment, end_attachment} of path i
  std::vector<Vertex> right;                // Y, ascending

  std::vector<std::size_t> paths_at(Vertex y) const;  // ascending path indices
};

struct ContractedEdge {
  std::size_t path = 0;
  Vertex y = 0;

  friend auto operator<=>(const ContractedEdge&, const ContractedEdge&) = default;
};

/// A matching of the contracted graph, edges sorted by (path, y).
struct ContractedMatching {
  std::vector<ContractedEdge> edges;
};

/// Raised when no saturating matching exists; for forest inputs this signals
/// that the input was not acyclic.
class MatchingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

ContractedBipartite contract_paths(const Forest& forest, const PathDecomposition& decomposition);

/// Matching saturating the given path vertices. Greedy pass in ascending
/// order first, then breadth-first augmenting paths.
ContractedMatching saturating_matching_left(const ContractedBipartite& graph, std::span<const std::size_t> paths);

/// Matching saturating the given Y vertices.
ContractedMatching saturating_matching_right(const ContractedBipartite& graph, std::span<const Vertex> ys);

/// Merges a matching saturating `x1` with one saturating `y1` into a single
/// matching saturating both, component by component of their union.
ContractedMatching combine_matchings(const ContractedMatching& m1, const ContractedMatching& m2,
                                     std::span<const std::size_t> x1, std::span<const Vertex> y1);

enum class PathEnd { Start, End };

struct AttachmentEdge {
  Vertex x = 0;  // path endpoint
  Vertex y = 0;  // attachment in Y

  friend auto operator<=>(const AttachmentEdge&, const AttachmentEdge&) = default;
};

/// Matching inside E(X, Y) with exactly one attachment edge per degree-two
/// path, saturating every vertex of degree >= 3.
struct Matching {
  std::vector<AttachmentEdge> edges;  // edges[i] belongs to path i
  std::vector<PathEnd> chosen;        // which attachment of path i is matched
};

Matching build_end_edge_matching(const Forest& forest, const PathDecomposition& decomposition,
                               const DegreeClasses& classes);

}  // namespace antimagic
