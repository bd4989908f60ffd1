#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/generator.hpp"
#include "antimagic/io.hpp"
#include "antimagic/orientation.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text << '\n')) throw InputError("cannot write " + path);
}

void print_violations(const HypothesisReport& report, std::ostream& err) {
  for (const Violation& v : report.violations) {
    err << to_string(v.kind) << ":";
    for (Vertex x : v.vertices) err << ' ' << x;
    if (!v.detail.empty()) err << " (" << v.detail << ")";
    err << '\n';
  }
}

int cmd_check(const std::string& file, std::istream& in, std::ostream& out, std::ostream& err) {
  const EdgeListDocument doc = parse_edge_list_document(read_input(file, in));
  const HypothesisReport report = check_hypothesis(doc.edges, doc.isolated);
  if (!report.passes()) {
    print_violations(report, err);
    return kExitHypothesis;
  }
  const Forest forest = Forest::build(doc.edges, doc.isolated);
  out << "ok: " << forest.vertex_count() << " vertices, " << forest.edge_count() << " edges\n";
  return kExitOk;
}

int cmd_orient(const std::string& file, const std::string& format, const std::string& out_path, std::istream& in,
               std::ostream& out, std::ostream& err) {
  const Forest forest = parse_edge_list(read_input(file, in));
  LabeledOrientation orientation;
  try {
    orientation = orient_antimagic(forest);
  } catch (const HypothesisError& e) {
    print_violations(e.report(), err);
    return kExitHypothesis;
  }
  const SumReport report = verify_antimagic(orientation);
  if (!report.verdict) throw ConstructionDefect("result does not verify", to_edge_list_text(forest));
  write_output(out_path, format == "dot" ? emit_dot(orientation) : emit_json(orientation), out);
  return kExitOk;
}

int cmd_verify(const std::string& file, std::istream& in, std::ostream& out, std::ostream& err) {
  const LabeledOrientation orientation = parse_orientation_json(read_input(file, in));
  const SumReport report = verify_antimagic(orientation);
  for (Vertex v : report.zero_sum_non_isolated) err << "warning: vertex " << v << " has sum 0\n";
  if (!report.bijection_ok) err << "labels are not a bijection onto [1, " << orientation.m() << "]\n";
  for (const auto& [a, b] : report.duplicate_sum_pairs) {
    err << "vertices " << a << " and " << b << " share sum " << orientation.sum_of(a) << '\n';
  }
  if (!report.verdict) return kExitVerification;
  out << "ok: antimagic, m = " << orientation.m() << '\n';
  return kExitOk;
}

int cmd_search(const std::string& file, std::optional<std::size_t> max_edges, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const EdgeListDocument doc = parse_edge_list_document(read_input(file, in));
  std::vector<Vertex> vertices(doc.isolated);
  for (const Edge& e : doc.edges) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  SearchOptions options;
  if (max_edges) options.max_edges = *max_edges;
  SearchResult result;
  try {
    result = exhaustive_antimagic_search(vertices, doc.edges, options);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  err << "orientations tried: " << result.orientations_tried << ", label assignments tried: "
      << result.labelings_tried << '\n';
  if (!result.found) {
    err << "no antimagic orientation exists\n";
    return kExitVerification;
  }
  out << emit_json(*result.witness) << '\n';
  return kExitOk;
}

int cmd_gen(const GeneratorConfig& cfg, std::ostream& out) {
  out << to_edge_list_text(generate_random_forest(cfg));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antimagic orientations of forests"};
  app.name("antimagic");
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "Report whether a forest meets the hypothesis");
  check->add_option("file", file, "Edge-list file, - for stdin")->required();

  std::string format = "json";
  std::string out_path;
  auto* orient = app.add_subcommand("orient", "Construct an antimagic orientation");
  orient->add_option("file", file, "Edge-list file, - for stdin")->required();
  orient->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  orient->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a labeled-orientation JSON file");
  verify->add_option("file", file, "Orientation JSON, - for stdin")->required();

  std::optional<std::size_t> max_edges;
  auto* search = app.add_subcommand("search", "Exhaustive search for a small graph");
  search->add_option("file", file, "Edge-list file, - for stdin")->required();
  search->add_option("--max-edges", max_edges, std::string("Edge bound (default from ") + kOracleBoundEnv + ")");

  GeneratorConfig cfg;
  std::size_t size = 10;
  auto* gen = app.add_subcommand("gen", "Print a random subdivided forest");
  gen->add_option("--seed", cfg.seed, "Random seed")->required();
  gen->add_option("--subdiv-min", cfg.subdiv_min, "Fewest subdivisions per edge")->check(CLI::PositiveNumber);
  auto* subdiv_max = gen->add_option("--subdiv-max", cfg.subdiv_max, "Most subdivisions per edge")->check(CLI::PositiveNumber);
  gen->add_option("--size", size, "Number of base vertices")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  gen->add_option("--components", cfg.max_components, "Largest number of components")->check(CLI::PositiveNumber);
  gen->add_flag("--isolated", cfg.isolated_vertex, "Add one isolated vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*check) return cmd_check(file, in, out, err);
    if (*orient) return cmd_orient(file, format, out_path, in, out, err);
    if (*verify) return cmd_verify(file, in, out, err);
    if (*search) return cmd_search(file, max_edges, in, out, err);
    cfg.min_base_vertices = cfg.max_base_vertices = size;
    if (subdiv_max->count() == 0) cfg.subdiv_max = std::max(cfg.subdiv_max, cfg.subdiv_min);
    return cmd_gen(cfg, out);
  } catch (const ConstructionDefect& e) {
    err << e.what() << "\ninstance:\n" << e.instance();
    return kExitDefect;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SearchBoundError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace antimagic
