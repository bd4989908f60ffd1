// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "antimagic/forest.hpp"
#include "antimagic/generator.hpp"
#include "antimagic/io.hpp"
#include "antimagic/matching.hpp"
#include "antimagic/orientation.hpp"
#include "antimagic/partition.hpp"
#include "antimagic/path_labeling.hpp"
#include "antimagic/verify.hpp"
#include "support/matching_properties.hpp"
#include "support/oracles.hpp"
#include "support/path_properties.hpp"

using namespace antimagic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

bool all_ok = true;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << title << " (" << o.detail << ")";
  if (!o.pass) std::cout << " first failure: " << o.first_failure;
  std::cout << std::endl;
  all_ok = all_ok && o.pass;
}

std::vector<Vertex> vertex_list(const Forest& f) { return {f.vertices().begin(), f.vertices().end()}; }
std::vector<Edge> edge_list(const Forest& f) { return {f.edges().begin(), f.edges().end()}; }

// Shared between criteria 1, 2 and 6.
struct StructuralTally {
  std::size_t runs = 0;
  std::size_t defects = 0;
  std::size_t findings = 0;
  std::string first;
};
StructuralTally structural;

// Orients, verifies, and records structural checks. Returns an empty string on
// success, otherwise a description.
std::string orient_and_check(const Forest& f, bool check_structure) {
  LabeledOrientation d;
  ++structural.runs;
  try {
    d = orient_antimagic(f, {true});
  } catch (const ConstructionDefect& e) {
    ++structural.defects;
    if (structural.first.empty()) structural.first = e.what();
    return e.what();
  }
  if (!verify_antimagic(d).verdict) return "verifier rejects the output";
  if (!check_structure) return {};
  if (!oracle::is_antimagic(vertex_list(f), d.arcs)) return "reference check rejects the output";
  const auto findings = oracle::structural_findings(vertex_list(f), edge_list(f), d.arcs);
  if (!findings.empty()) {
    structural.findings += findings.size();
    if (structural.first.empty()) structural.first = findings.front();
    return findings.front();
  }
  return {};
}

GeneratorConfig scale_config(std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.min_base_vertices = 2;
  cfg.max_base_vertices = 2500;
  cfg.subdiv_min = 1;
  cfg.subdiv_max = 3;
  cfg.max_components = 8;
  cfg.isolated_vertex = seed % 4 == 0;
  return cfg;
}

constexpr std::uint64_t kScaleSeeds = 1000;

void small_forests() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t count = 0;
  for_each_small_qualifying_forest(8, [&](const Forest& f) {
    ++count;
    const std::string problem = orient_and_check(f, true);
    if (!problem.empty()) o.fail(problem + " on\n" + to_edge_list_text(f));
  });
  const double secs = seconds_since(start);
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << count << " forests with m <= 8, " << secs << " s";
  o.detail = d.str();
  report(1, "every small qualifying forest is oriented antimagically", o);
}

void scale() {
  Outcome o;
  std::size_t max_m = 0;
  std::size_t total_m = 0;
  double secs = 0;
  for (std::uint64_t seed = 0; seed < kScaleSeeds; ++seed) {
    const Forest f = generate_random_forest(scale_config(seed));
    max_m = std::max(max_m, f.edge_count());
    total_m += f.edge_count();
    if (f.edge_count() > 10000) o.fail("seed " + std::to_string(seed) + " exceeds 10^4 edges");
    const auto start = Clock::now();
    const std::string problem = orient_and_check(f, false);
    secs += seconds_since(start);
    if (!problem.empty()) o.fail("seed " + std::to_string(seed) + ": " + problem);
  }
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << kScaleSeeds << " forests, max m = " << max_m << ", mean m = " << total_m / kScaleSeeds << ", " << secs
    << " s construction + verification";
  o.detail = d.str();
  report(2, "random subdivided forests up to 10^4 edges", o);
}

void partitions() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t instances = 0;
  std::size_t cross_checked = 0;
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> go = [&](std::int64_t k, std::int64_t a,
                                                                          std::int64_t left) {
    if (left == 0) {
      ++instances;
      const PartitionInstance inst{k, a, parts};
      std::ostringstream name;
      name << "k=" << k << " a=" << a << " parts=";
      for (auto r : parts) name << r << ',';
      try {
        // Constructive routine alone, no search fallback.
        const auto blocks = partition_label_set(inst, {0});
        if (auto problem = check_blocks(inst, blocks)) o.fail(name.str() + ": " + *problem);
      } catch (const std::exception& e) {
        o.fail(name.str() + ": " + e.what());
      }
      if (k <= 12) {
        ++cross_checked;
        try {
          const auto searched = partition_oracle(inst);
          if (auto problem = check_blocks(inst, searched)) o.fail(name.str() + " search: " + *problem);
        } catch (const std::exception& e) {
          o.fail(name.str() + " search: " + e.what());
        }
        if (!oracle::partition_feasible(k, a, parts)) o.fail(name.str() + ": reference says infeasible");
      }
      return;
    }
    for (std::int64_t r = 2; r <= left; ++r) {
      if (left - r == 1) continue;
      parts.push_back(r);
      go(k, a, left - r);
      parts.pop_back();
    }
  };
  for (std::int64_t k = 2; k <= 18; ++k) {
    for (std::int64_t a = 0; a <= 8; ++a) go(k, a, k);
  }
  const double secs = seconds_since(start);
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << instances << " instances, " << cross_checked << " cross-checked by search, " << secs << " s";
  o.detail = d.str();
  report(3, "label-set partition sweep k <= 18, a <= 8", o);
}

void path_families() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t arcs = 0;
  for (int round = 0; round < 1000; ++round) {
    const auto family = oracle::random_family(rng, 10, 20);
    arcs += family.total_length();
    try {
      const auto labeling = label_paths(family);
      const auto findings = oracle::path_labeling_findings(family, labeling.labels);
      if (!findings.empty()) o.fail("family " + std::to_string(round) + ": " + findings.front());
      if (internal_sums(family, labeling.labels) != labeling.internal_sums) {
        o.fail("family " + std::to_string(round) + ": reported sums differ from recomputed ones");
      }
    } catch (const std::exception& e) {
      o.fail("family " + std::to_string(round) + ": " + e.what());
    }
  }
  o.detail = "1000 families, " + std::to_string(arcs) + " arcs";
  report(4, "path labelling properties", o);
}

void matchings() {
  Outcome o;
  std::size_t paths = 0;
  for (std::uint64_t seed = 0; seed < kScaleSeeds; ++seed) {
    const Forest f = generate_random_forest(scale_config(seed));
    try {
      const auto classes = classify_vertices(f);
      const auto d = decompose_degree_two_paths(f, classes);
      paths += d.paths.size();
      const auto findings = oracle::matching_findings(f, d, build_end_edge_matching(f, d, classes));
      if (!findings.empty()) o.fail("seed " + std::to_string(seed) + ": " + findings.front());
    } catch (const std::exception& e) {
      o.fail("seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  o.detail = std::to_string(kScaleSeeds) + " forests, " + std::to_string(paths) + " degree-two paths";
  report(5, "path matching properties", o);
}

void structure() {
  // Structural checks on the scale workload (criterion 1 already ran them on
  // the small forests).
  for (std::uint64_t seed = 0; seed < kScaleSeeds; ++seed) {
    const Forest f = generate_random_forest(scale_config(seed));
    orient_and_check(f, true);
  }
  Outcome o;
  if (structural.defects) o.fail(std::to_string(structural.defects) + " step-check failures: " + structural.first);
  if (structural.findings) o.fail(std::to_string(structural.findings) + " bound violations: " + structural.first);
  o.detail = std::to_string(structural.runs) + " checked constructions";
  report(6, "structural bounds hold on every construction", o);
}

void goldens() {
  Outcome o;
  const std::string p4 =
      R"({"vertices":[1,2,3,4],"arcs":[{"tail":3,"head":2,"label":1},{"tail":4,"head":3,"label":2},)"
      R"({"tail":1,"head":2,"label":3}],"sums":{"1":-3,"2":4,"3":1,"4":-2},"m":3})";
  const std::string star =
      R"({"vertices":[0,1,2,3,4,5,6],"arcs":[{"tail":0,"head":5,"label":1},{"tail":1,"head":4,"label":2},)"
      R"({"tail":0,"head":6,"label":3},{"tail":2,"head":5,"label":4},{"tail":0,"head":4,"label":5},)"
      R"({"tail":3,"head":6,"label":6}],"sums":{"0":-9,"1":-2,"2":-4,"3":-6,"4":7,"5":5,"6":9},"m":6})";
  const std::string got_p4 = emit_json(orient_antimagic(parse_edge_list("1 2\n2 3\n3 4\n")));
  const std::string got_star =
      emit_json(orient_antimagic(subdivide(Forest::build(std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}), 1)));
  if (got_p4 != p4) o.fail("path: " + got_p4);
  if (got_star != star) o.fail("subdivided star: " + got_star);
  o.detail = "path on 4 vertices, subdivided 3-star";
  report(7, "golden JSON outputs are byte-identical", o);
}

}  // namespace

int main() {
  small_forests();
  scale();
  partitions();
  path_families();
  matchings();
  structure();
  goldens();
  std::cout << (all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES") << std::endl;
  return all_ok ? 0 : 1;
}
