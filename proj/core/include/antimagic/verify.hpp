#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

#include "antimagic/forest.hpp"
#include "antimagic/orientation.hpp"

namespace antimagic {

/// Entering labels minus leaving labels, recomputed from the arcs.
std::map<Vertex, Sum> vertex_sums(const LabeledOrientation& orientation);

struct SumReport {
  bool bijection_ok = false;
  std::vector<std::pair<Vertex, Vertex>> duplicate_sum_pairs;
  std::vector<Vertex> zero_sum_non_isolated;  // informational only
  bool verdict = false;
};

/// verdict: labels form a bijection onto [1, m] and all vertex sums are
/// pairwise distinct.
SumReport verify_antimagic(const LabeledOrientation& orientation);

/// Name of the environment variable overriding the default search bound.
inline constexpr const char* kOracleBoundEnv = "ANTIMAGIC_ORACLE_MAX_EDGES";
inline constexpr std::size_t kDefaultSearchBound = 8;

/// kDefaultSearchBound unless ANTIMAGIC_ORACLE_MAX_EDGES holds a valid number.
std::size_t default_search_bound();

class SearchBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  std::size_t max_edges = default_search_bound();
  /// reversed[i] == false orients edge i as u -> v. When set, only this
  /// orientation is searched.
  std::optional<std::vector<bool>> fixed_orientation;
};

struct SearchResult {
  bool found = false;
  std::optional<LabeledOrientation> witness;
  std::uint64_t orientations_tried = 0;
  std::uint64_t labelings_tried = 0;  // single label assignments tried
};

/// Brute force over all 2^m orientations (lowest code first, bit i reversing
/// edge i of `edges`) and all labelings, pruning on colliding finished
/// vertices. `edges` may describe any simple graph.
SearchResult exhaustive_antimagic_search(std::span<const Vertex> vertices, std::span<const Edge> edges,
                                         const SearchOptions& options = {});
SearchResult exhaustive_antimagic_search(const Forest& forest, const SearchOptions& options = {});

/// Orientation of `forest.edges()` used by `orientation` (true = v -> u).
std::vector<bool> orientation_bits(const Forest& forest, const LabeledOrientation& orientation);

/// Every qualifying forest with at most max_edges edges (<= 10), one per
/// isomorphism class. The empty graph is not produced.
void for_each_small_qualifying_forest(std::size_t max_edges, const std::function<void(const Forest&)>& visit);
std::vector<Forest> enumerate_small_qualifying_forests(std::size_t max_edges);

/// Canonical code of a free tree given as adjacency lists over 0..n-1.
std::string canonical_tree_code(const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace antimagic
