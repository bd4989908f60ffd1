#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "antimagic/forest.hpp"

namespace antimagic {

/// n internally disjoint directed paths, each given by its vertex sequence
/// (at least two vertices). The first arc of path i is expected to carry
/// label i+1; `first_edge_labels` may restate those labels for checking.
struct DirectedPathFamily {
  std::vector<std::vector<Vertex>> paths;
  std::vector<Label> first_edge_labels;

  std::size_t total_length() const;
};

/// Arc `arc` of path `path` runs from paths[path][arc] to paths[path][arc + 1].
/// Arc index 0 is the first arc, i.e. arc index q has 1-based position q + 1.
struct ArcPosition {
  std::size_t path = 0;
  std::size_t arc = 0;

  friend bool operator==(const ArcPosition&, const ArcPosition&) = default;
};

/// Arcs at odd 1-based positions and at even positions, each ordered by
/// position first and path index second.
struct EdgeOrdering {
  std::vector<ArcPosition> odd;
  std::vector<ArcPosition> even;
};

struct PathLabeling {
  std::vector<std::vector<Label>> labels;  // labels[i][q] for arc q of path i
  std::map<Vertex, Sum> internal_sums;
};

/// Throws std::invalid_argument for empty families, zero-length paths, shared
/// internal vertices, or first-edge labels other than 1..n.
void validate_family(const DirectedPathFamily& family);

EdgeOrdering order_edges(const DirectedPathFamily& family);

/// Odd-position arcs get 1, 2, ... in order; even-position arcs get l, l-1, ...
/// Internal sums are then pairwise distinct, |s| <= l-1, and positive sums are
/// at most l-n-1.
PathLabeling label_paths(const DirectedPathFamily& family);

/// s(v_j) = label(arc j-1) - label(arc j) for every internal vertex. Requires
/// the labels to be a bijection onto [1, l].
std::map<Vertex, Sum> internal_sums(const DirectedPathFamily& family, const std::vector<std::vector<Label>>& labels);

}  // namespace antimagic
