#include "antimagic/orientation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "antimagic/partition.hpp"
#include "antimagic/path_labeling.hpp"

namespace antimagic {

namespace {

std::string summarize(const HypothesisReport& report) {
  std::ostringstream os;
  os << "forest violates the hypothesis:";
  for (const auto& v : report.violations) os << " [" << to_string(v.kind) << "] " << v.detail << ";";
  return os.str();
}

[[noreturn]] void defect(const ConstructionContext& ctx, const std::string& what) {
  throw ConstructionDefect(what, to_edge_list_text(ctx.forest));
}

void expect(const ConstructionContext& ctx, bool condition, const std::string& what) {
  if (!condition) defect(ctx, what);
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

Sum LabeledOrientation::sum_of(Vertex v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) throw std::out_of_range("unknown vertex " + std::to_string(v));
  return sums[static_cast<std::size_t>(it - vertices.begin())];
}

LabeledOrientation make_orientation(std::vector<Vertex> vertices, std::vector<Arc> arcs) {
  LabeledOrientation out;
  out.vertices = std::move(vertices);
  std::sort(out.vertices.begin(), out.vertices.end());
  out.arcs = std::move(arcs);
  std::stable_sort(out.arcs.begin(), out.arcs.end(), [](const Arc& a, const Arc& b) { return a.label < b.label; });
  out.sums.assign(out.vertices.size(), 0);
  auto index = [&](Vertex v) {
    auto it = std::lower_bound(out.vertices.begin(), out.vertices.end(), v);
    if (it == out.vertices.end() || *it != v) {
      throw std::invalid_argument("arc endpoint " + std::to_string(v) + " is not a listed vertex");
    }
    return static_cast<std::size_t>(it - out.vertices.begin());
  };
  for (const Arc& a : out.arcs) {
    out.sums[index(a.head)] += a.label;
    out.sums[index(a.tail)] -= a.label;
  }
  return out;
}

HypothesisError::HypothesisError(HypothesisReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

ConstructionDefect::ConstructionDefect(const std::string& what, std::string instance)
    : std::logic_error("construction defect: " + what), instance_(std::move(instance)) {}

void ConstructionContext::add_arc(Vertex tail, Vertex head, Label label) {
  arcs.push_back({tail, head, label});
  sums[forest.index_of(head)] += label;
  sums[forest.index_of(tail)] -= label;
}

std::vector<AttachmentEdge> extend_to_mstar(const Forest& forest, const Matching& matching,
                                            const DegreeClasses& classes) {
  std::set<Vertex> saturated;
  for (const auto& e : matching.edges) saturated.insert(e.y);
  std::vector<AttachmentEdge> extras;
  for (Vertex y : classes.y) {
    if (saturated.count(y)) continue;
    const auto nb = forest.neighbors(y);
    if (nb.empty()) {
      throw ConstructionDefect("vertex " + std::to_string(y) + " has no attachment edge", to_edge_list_text(forest));
    }
    extras.push_back({nb.front(), y});
  }
  return extras;
}

ConstructionContext prepare_construction(const Forest& forest, const OrientOptions& options) {
  HypothesisReport report = check_hypothesis(forest);
  if (!report.passes()) throw HypothesisError(std::move(report));

  ConstructionContext ctx;
  ctx.forest = forest;
  ctx.options = options;
  ctx.sums.assign(forest.vertex_count(), 0);
  ctx.classes = classify_vertices(forest);
  ctx.m = static_cast<std::int64_t>(forest.edge_count());
  if (ctx.m == 0) return ctx;

  ctx.decomposition = decompose_degree_two_paths(forest, ctx.classes);
  ctx.matching = build_end_edge_matching(forest, ctx.decomposition, ctx.classes);
  ctx.s = static_cast<std::int64_t>(ctx.decomposition.paths.size());
  ctx.n1 = static_cast<std::int64_t>(ctx.classes.n1);
  ctx.n2 = static_cast<std::int64_t>(ctx.classes.n2);
  expect(ctx, ctx.n2 >= 2, "a nonempty qualifying forest has at least two leaves");

  // Matching: one attachment edge per path, all high-degree Y vertices covered.
  std::set<Vertex> saturated;
  for (std::size_t i = 0; i < ctx.matching.edges.size(); ++i) {
    const auto& e = ctx.matching.edges[i];
    const auto& path = ctx.decomposition.paths[i];
    const bool ok = (ctx.matching.chosen[i] == PathEnd::Start && e.x == path.front() && e.y == path.start_attachment) ||
                    (ctx.matching.chosen[i] == PathEnd::End && e.x == path.back() && e.y == path.end_attachment);
    expect(ctx, ok, "matching edge of path " + std::to_string(i) + " is not one of its attachments");
    expect(ctx, saturated.insert(e.y).second, "matching covers vertex " + std::to_string(e.y) + " twice");
  }
  for (std::size_t i = 0; i < ctx.classes.n1; ++i) {
    expect(ctx, saturated.count(ctx.classes.y[i]) == 1,
           "high-degree vertex " + std::to_string(ctx.classes.y[i]) + " is not matched");
  }

  ctx.extra_edges = extend_to_mstar(forest, ctx.matching, ctx.classes);
  const std::set<AttachmentEdge> extras(ctx.extra_edges.begin(), ctx.extra_edges.end());
  for (std::size_t i = 0; i < ctx.decomposition.paths.size(); ++i) {
    const auto& path = ctx.decomposition.paths[i];
    const AttachmentEdge other = ctx.matching.chosen[i] == PathEnd::Start
                                     ? AttachmentEdge{path.back(), path.end_attachment}
                                     : AttachmentEdge{path.front(), path.start_attachment};
    if (!extras.count(other)) ctx.leftover.push_back(other);
  }
  ctx.h = static_cast<std::int64_t>(ctx.leftover.size());
  expect(ctx, static_cast<std::int64_t>(ctx.extra_edges.size()) == ctx.n2 - ctx.s, "|M* \\ M| != n2 - s");
  expect(ctx, ctx.h == 2 * ctx.s - ctx.n2, "h != 2s - n2");
  expect(ctx, ctx.h == 0 || ctx.h >= 2, "leftover part has exactly one edge");
  return ctx;
}

void step1_label_leftover(ConstructionContext& ctx) {
  if (ctx.h == 0) return;
  const std::int64_t m = ctx.m;
  const std::int64_t s = ctx.s;
  const std::int64_t h = ctx.h;

  std::map<Vertex, std::vector<Vertex>> heads;
  for (const auto& e : ctx.leftover) heads[e.y].push_back(e.x);
  PartitionInstance inst{h, m - s - h, {}};
  std::vector<Vertex> owners(ctx.classes.y.begin(), ctx.classes.y.begin() + ctx.n1);
  for (Vertex y : owners) {
    auto it = heads.find(y);
    expect(ctx, it != heads.end() && it->second.size() >= 2,
           "high-degree vertex " + std::to_string(y) + " has fewer than two leftover edges");
    std::sort(it->second.begin(), it->second.end());
    inst.parts.push_back(static_cast<std::int64_t>(it->second.size()));
  }
  expect(ctx, heads.size() == owners.size(), "leftover edge at a leaf");

  const LabelBlocks blocks = partition_label_set(inst);
  ctx.step1_modulus = blocks.modulus;
  expect(ctx, blocks.modulus == (h % 2 == 0 ? m - s + 1 : m - s), "unexpected step-1 modulus");
  ctx.step1_sums.clear();
  for (std::size_t i = 0; i < owners.size(); ++i) {
    const auto& xs = heads[owners[i]];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      ctx.add_arc(owners[i], xs[j], blocks.blocks[i][j]);
      ctx.attachment_labels[{xs[j], owners[i]}] = blocks.blocks[i][j];
    }
    ctx.step1_sums.push_back(ctx.sum_of(owners[i]));
    if (ctx.options.verify_steps) {
      const Sum partial = ctx.step1_sums.back();
      expect(ctx, partial < 0 && partial % ctx.step1_modulus == 0,
             "step-1 sum " + str(partial) + " of vertex " + std::to_string(owners[i]) +
                 " is not a negative multiple of " + str(ctx.step1_modulus));
    }
  }
}

void step2_label_extras_and_rename(ConstructionContext& ctx) {
  const std::int64_t m = ctx.m;
  const std::int64_t s = ctx.s;
  const std::int64_t half_floor = ctx.floor_half_h();
  const std::int64_t half_ceil = ctx.ceil_half_h();

  std::vector<AttachmentEdge> extras = ctx.extra_edges;
  std::sort(extras.begin(), extras.end());
  Label next = m - half_ceil - ctx.n2 + 1;
  for (const auto& e : extras) {
    ctx.add_arc(e.y, e.x, next);
    ctx.attachment_labels[e] = next;
    ++next;
  }
  expect(ctx, next - 1 == m - half_ceil - s, "step-2 label range mismatch");

  ctx.paths.clear();
  for (std::size_t i = 0; i < ctx.decomposition.paths.size(); ++i) {
    const auto& path = ctx.decomposition.paths[i];
    OrientedPath op;
    op.original = i;
    op.vertices = path.vertices;
    if (ctx.matching.chosen[i] == PathEnd::End) {
      op.entry = path.start_attachment;
      op.exit = path.end_attachment;
    } else {
      std::reverse(op.vertices.begin(), op.vertices.end());
      op.entry = path.end_attachment;
      op.exit = path.start_attachment;
    }
    auto it = ctx.attachment_labels.find({op.vertices.front(), op.entry});
    expect(ctx, it != ctx.attachment_labels.end(), "unlabelled attachment edge on path " + std::to_string(i));
    op.entry_label = it->second;
    ctx.paths.push_back(std::move(op));
  }

  // Small entry labels first in ascending order, then large ones descending.
  std::sort(ctx.paths.begin(), ctx.paths.end(), [half_floor](const OrientedPath& a, const OrientedPath& b) {
    const bool a_small = a.entry_label <= half_floor;
    const bool b_small = b.entry_label <= half_floor;
    if (a_small != b_small) return a_small;
    return a_small ? a.entry_label < b.entry_label : a.entry_label > b.entry_label;
  });
  for (std::int64_t i = 1; i <= s; ++i) {
    const Label expected = i <= half_floor ? i : m - s + half_floor - i + 1;
    expect(ctx, ctx.paths[static_cast<std::size_t>(i - 1)].entry_label == expected,
           "entry label of renamed path " + str(i) + " is " +
               str(ctx.paths[static_cast<std::size_t>(i - 1)].entry_label) + ", expected " + str(expected));
  }
}

void step3_label_paths(ConstructionContext& ctx) {
  const std::int64_t m = ctx.m;
  const std::int64_t s = ctx.s;
  const std::int64_t h = ctx.h;
  const std::int64_t half_floor = ctx.floor_half_h();
  const std::int64_t half_ceil = ctx.ceil_half_h();

  ctx.late_long.clear();
  for (std::size_t i = static_cast<std::size_t>(half_floor); i < ctx.paths.size(); ++i) {
    if (ctx.paths[i].length() >= 1) ctx.late_long.push_back(i);
  }
  ctx.g = static_cast<std::int64_t>(ctx.late_long.size());
  const std::int64_t g = ctx.g;
  expect(ctx, m >= 2 * s + g, "m < 2s + g");

  DirectedPathFamily family;
  for (std::size_t i = 0; i < static_cast<std::size_t>(half_floor); ++i) {
    std::vector<Vertex> route{ctx.paths[i].entry};
    route.insert(route.end(), ctx.paths[i].vertices.begin(), ctx.paths[i].vertices.end());
    family.paths.push_back(std::move(route));
    family.first_edge_labels.push_back(ctx.paths[i].entry_label);
  }
  for (std::size_t j = 0; j < ctx.late_long.size(); ++j) {
    family.paths.push_back(ctx.paths[ctx.late_long[j]].vertices);
    family.first_edge_labels.push_back(half_floor + static_cast<Label>(j) + 1);
  }

  const std::int64_t total = m - ctx.n2 - half_ceil;
  expect(ctx, static_cast<std::int64_t>(family.total_length()) == total,
         "path family length " + std::to_string(family.total_length()) + " != m - n2 - ceil(h/2) = " + str(total));

  if (!family.paths.empty()) {
    const PathLabeling labeling = label_paths(family);
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
      const auto& route = family.paths[i];
      const bool early = i < static_cast<std::size_t>(half_floor);
      if (early) {
        expect(ctx, labeling.labels[i][0] == ctx.paths[i].entry_label, "path labeller changed an entry label");
      }
      for (std::size_t q = early ? 1 : 0; q + 1 < route.size(); ++q) ctx.add_arc(route[q], route[q + 1], labeling.labels[i][q]);
    }
  }

  ctx.x1.clear();
  ctx.x2.clear();
  ctx.x3.clear();
  for (const auto& p : ctx.paths) ctx.x1.push_back(p.vertices.back());
  for (std::size_t r : ctx.late_long) ctx.x2.push_back(ctx.paths[r].vertices.front());
  std::vector<Vertex> special = ctx.x1;
  special.insert(special.end(), ctx.x2.begin(), ctx.x2.end());
  std::sort(special.begin(), special.end());
  for (Vertex v : ctx.classes.x) {
    if (!std::binary_search(special.begin(), special.end(), v)) ctx.x3.push_back(v);
  }

  if (!ctx.options.verify_steps) return;

  // Internal vertices: distinct sums, |s| in [1, total-1], positive ones <= m-n2-g-h-1.
  std::vector<Sum> internal;
  for (Vertex v : ctx.x3) {
    const Sum sv = ctx.sum_of(v);
    internal.push_back(sv);
    expect(ctx, sv != 0 && std::abs(sv) <= total - 1,
           "internal vertex " + std::to_string(v) + " has sum " + str(sv) + " outside [1, " + str(total - 1) + "]");
    expect(ctx, sv < 0 || sv <= m - ctx.n2 - g - h - 1,
           "positive internal sum " + str(sv) + " exceeds m-n2-g-h-1 = " + str(m - ctx.n2 - g - h - 1));
  }
  std::sort(internal.begin(), internal.end());
  expect(ctx, std::adjacent_find(internal.begin(), internal.end()) == internal.end(), "repeated internal sum");

  // Starts of late long paths: strictly decreasing within (m-2s-g, m-s-floor(h/2)-1].
  for (std::size_t j = 0; j < ctx.x2.size(); ++j) {
    const Sum sv = ctx.sum_of(ctx.x2[j]);
    expect(ctx, sv <= m - s - half_floor - 1 && sv >= m - 2 * s - g + 1,
           "path start " + std::to_string(ctx.x2[j]) + " has sum " + str(sv) + " outside [" + str(m - 2 * s - g + 1) +
               ", " + str(m - s - half_floor - 1) + "]");
    if (j > 0) expect(ctx, sv < ctx.sum_of(ctx.x2[j - 1]), "path-start sums are not strictly decreasing");
  }
}

void step4_label_matching(ConstructionContext& ctx) {
  const std::int64_t m = ctx.m;
  const std::int64_t s = ctx.s;
  std::vector<std::size_t> order(ctx.paths.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Sum> before(ctx.paths.size());
  for (std::size_t i = 0; i < ctx.paths.size(); ++i) before[i] = ctx.sum_of(ctx.paths[i].vertices.back());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return before[a] < before[b]; });

  Label next = m - s + 1;
  for (std::size_t i : order) ctx.add_arc(ctx.paths[i].exit, ctx.paths[i].vertices.back(), next++);
  expect(ctx, next - 1 == m, "matching labels do not end at m");

  if (!ctx.options.verify_steps) return;
  Sum previous = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vertex v = ctx.paths[order[k]].vertices.back();
    const Sum sv = ctx.sum_of(v);
    expect(ctx, sv >= m - s + 2, "matched end " + std::to_string(v) + " has sum " + str(sv) + " < m-s+2");
    if (k > 0) expect(ctx, sv > previous, "matched-end sums are not strictly increasing");
    previous = sv;
  }
}

LabeledOrientation finish_construction(const ConstructionContext& ctx) {
  std::vector<Vertex> vertices(ctx.forest.vertices().begin(), ctx.forest.vertices().end());
  LabeledOrientation out = make_orientation(std::move(vertices), ctx.arcs);
  if (!ctx.options.verify_steps) return out;

  const std::int64_t m = ctx.m;
  const std::int64_t s = ctx.s;
  expect(ctx, static_cast<std::int64_t>(out.arcs.size()) == m, "arc count differs from edge count");
  for (std::size_t i = 0; i < out.arcs.size(); ++i) {
    expect(ctx, out.arcs[i].label == static_cast<Label>(i + 1), "labels are not a bijection onto [1, m]");
  }
  std::vector<Edge> covered;
  for (const Arc& a : out.arcs) covered.push_back(Edge::normalized(a.tail, a.head));
  std::sort(covered.begin(), covered.end());
  expect(ctx, std::equal(covered.begin(), covered.end(), ctx.forest.edges().begin(), ctx.forest.edges().end()),
         "arcs do not orient exactly the forest's edges");
  for (const Arc& a : out.arcs) {
    const bool tail_y = ctx.forest.degree(a.tail) != 2;
    const bool head_y = ctx.forest.degree(a.head) != 2;
    expect(ctx, !head_y || tail_y, "attachment arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                                        " points into Y");
  }

  if (m > 0) {
    const std::int64_t half_ceil = ctx.ceil_half_h();
    std::vector<std::pair<Edge, Label>> edge_labels;
    for (const Arc& a : out.arcs) edge_labels.emplace_back(Edge::normalized(a.tail, a.head), a.label);
    std::sort(edge_labels.begin(), edge_labels.end());
    std::set<Vertex> matched_y;
    for (const auto& p : ctx.paths) matched_y.insert(p.exit);
    for (Vertex y : ctx.classes.y) {
      const Sum sy = out.sum_of(y);
      if (matched_y.count(y)) {
        expect(ctx, sy <= -(m - s + 1), "matched vertex " + std::to_string(y) + " has sum " + str(sy) + " > -(m-s+1)");
      } else {
        expect(ctx, ctx.forest.degree(y) == 1, "unmatched Y vertex of degree >= 3");
        expect(ctx, -sy >= m - half_ceil - ctx.n2 + 1 && -sy <= m - half_ceil - s,
               "unmatched leaf " + std::to_string(y) + " has sum " + str(sy) + " outside the step-2 range");
      }
      if (ctx.forest.degree(y) == 1) {
        const Edge e = Edge::normalized(y, ctx.forest.neighbors(y).front());
        auto it = std::lower_bound(edge_labels.begin(), edge_labels.end(), std::pair<Edge, Label>{e, 0});
        expect(ctx, it != edge_labels.end() && it->first == e && sy == -it->second,
               "leaf sum is not the negated label of its arc");
      }
    }
  }

  std::vector<std::pair<Sum, Vertex>> by_sum;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    by_sum.emplace_back(out.sums[i], out.vertices[i]);
    expect(ctx, out.sums[i] != 0 || ctx.forest.degree_at(i) == 0,
           "vertex " + std::to_string(out.vertices[i]) + " has zero sum");
  }
  std::sort(by_sum.begin(), by_sum.end());
  for (std::size_t i = 1; i < by_sum.size(); ++i) {
    expect(ctx, by_sum[i].first != by_sum[i - 1].first,
           "vertices " + std::to_string(by_sum[i - 1].second) + " and " + std::to_string(by_sum[i].second) +
               " share sum " + str(by_sum[i].first));
  }
  return out;
}

LabeledOrientation orient_antimagic(const Forest& forest, const OrientOptions& options) {
  ConstructionContext ctx = prepare_construction(forest, options);
  if (ctx.m == 0) return finish_construction(ctx);
  try {
    step1_label_leftover(ctx);
    step2_label_extras_and_rename(ctx);
    step3_label_paths(ctx);
    step4_label_matching(ctx);
  } catch (const ConstructionDefect&) {
    throw;
  } catch (const std::exception& err) {
    defect(ctx, err.what());
  }
  return finish_construction(ctx);
}

}  // namespace antimagic
