#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "antimagic/forest.hpp"
#include "antimagic/matching.hpp"

namespace antimagic {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Label label = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Orientation with an arc labelling. Arcs sorted by label; sums[i] is the
/// oriented vertex-sum (entering minus leaving) of vertices[i].
struct LabeledOrientation {
  std::vector<Vertex> vertices;  // ascending
  std::vector<Arc> arcs;
  std::vector<Sum> sums;

  std::size_t m() const noexcept { return arcs.size(); }
  Sum sum_of(Vertex v) const;

  friend bool operator==(const LabeledOrientation&, const LabeledOrientation&) = default;
};

/// Recomputes sums from arcs and sorts arcs by label.
LabeledOrientation make_orientation(std::vector<Vertex> vertices, std::vector<Arc> arcs);

/// Input violates the forest hypothesis; carries the report.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(HypothesisReport report);
  const HypothesisReport& report() const noexcept { return report_; }

 private:
  HypothesisReport report_;
};

/// A postcondition of the construction failed. Never expected for valid
/// input; the offending instance is attached as an edge list.
class ConstructionDefect : public std::logic_error {
 public:
  ConstructionDefect(const std::string& what, std::string instance);
  const std::string& instance() const noexcept { return instance_; }

 private:
  std::string instance_;
};

struct OrientOptions {
  /// Check every step's structural bounds while building.
  bool verify_steps = true;
};

/// A degree-two path after renaming: runs from vertices.front() (entered by
/// the non-matching attachment) to vertices.back() (the matched end).
struct OrientedPath {
  std::vector<Vertex> vertices;
  Vertex entry = 0;          // Y-end of the non-matching attachment edge
  Vertex exit = 0;           // Y-end of the matching edge
  std::size_t original = 0;  // index in the path decomposition
  Label entry_label = 0;

  std::size_t length() const noexcept { return vertices.size() - 1; }
};

/// Intermediate state of the four-step construction. Counts follow the
/// construction: m edges, s degree-two paths, n2 = |Y|, n1 of them of degree
/// >= 3, h = 2s - n2 edges in the leftover bipartite part, g long paths in the
/// late group.
struct ConstructionContext {
  Forest forest;
  DegreeClasses classes;
  PathDecomposition decomposition;
  Matching matching;
  std::vector<AttachmentEdge> extra_edges;  // M* \ M
  std::vector<AttachmentEdge> leftover;     // E(X,Y) \ M*

  std::int64_t m = 0;
  std::int64_t s = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t h = 0;
  std::int64_t g = 0;
  std::int64_t step1_modulus = 0;  // 0 when h = 0

  std::vector<OrientedPath> paths;      // renamed order after step 2
  std::vector<std::size_t> late_long;   // indices into paths: r_1 < ... < r_g
  std::vector<Vertex> x1, x2, x3;

  std::map<AttachmentEdge, Label> attachment_labels;  // labels of non-matching attachment edges
  std::vector<Arc> arcs;        // accumulated, in step order
  std::vector<Sum> sums;        // aligned with forest.vertices()
  std::vector<Sum> step1_sums;  // partial sums of y_1..y_n1 after step 1
  OrientOptions options;

  std::int64_t floor_half_h() const noexcept { return h / 2; }
  std::int64_t ceil_half_h() const noexcept { return (h + 1) / 2; }
  void add_arc(Vertex tail, Vertex head, Label label);
  Sum sum_of(Vertex v) const { return sums[forest.index_of(v)]; }
};

/// Classifies, decomposes and matches. Throws HypothesisError for
/// non-qualifying input.
ConstructionContext prepare_construction(const Forest& forest, const OrientOptions& options = {});

/// One extra attachment edge for every Y vertex the matching misses, taking
/// its lowest-identifier X neighbour.
std::vector<AttachmentEdge> extend_to_mstar(const Forest& forest, const Matching& matching,
                                            const DegreeClasses& classes);

/// Leftover edges, directed Y -> X, labelled block-wise so that every
/// high-degree vertex's partial sum is a negative multiple of the modulus.
void step1_label_leftover(ConstructionContext& ctx);

/// Labels M* \ M and renames/permutes the paths.
void step2_label_extras_and_rename(ConstructionContext& ctx);

/// Directs and labels the degree-two paths through the path labeller.
void step3_label_paths(ConstructionContext& ctx);

/// Labels the matching edges m-s+1..m in ascending order of end-vertex sums.
void step4_label_matching(ConstructionContext& ctx);

LabeledOrientation finish_construction(const ConstructionContext& ctx);

/// Full pipeline.
LabeledOrientation orient_antimagic(const Forest& forest, const OrientOptions& options = {});

}  // namespace antimagic
