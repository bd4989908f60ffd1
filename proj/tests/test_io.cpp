#include <random>
#include <string>

#include "antimagic/generator.hpp"
#include "antimagic/io.hpp"
#include "antimagic/orientation.hpp"
#include "doctest.h"

using namespace antimagic;

namespace {

const char* const kPath4Json =
    R"({"vertices":[1,2,3,4],"arcs":[{"tail":3,"head":2,"label":1},{"tail":4,"head":3,"label":2},)"
    R"({"tail":1,"head":2,"label":3}],"sums":{"1":-3,"2":4,"3":1,"4":-2},"m":3})";

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a ParseError");
  return 0;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("edge lists") {
    const Forest p = parse_edge_list("1 2\n2 3");
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);

    const Forest lone = parse_edge_list("# comment\n5");
    CHECK(lone.vertex_count() == 1);
    CHECK(lone.contains(5));

    const Forest spaced = parse_edge_list("\n  1\t2 \r\n   # indented comment\n\n2 3\n");
    CHECK(spaced.edge_count() == 2);

    CHECK(parse_error_line("1 2\n1 2") == 2);
    CHECK(parse_error_line("1 2\n2 3\n3 1\n") == 3);
    CHECK(parse_error_line("1 x") == 1);
    CHECK(parse_error_line("# ok\n1 2 3") == 2);
    CHECK(parse_error_line("-1 2") == 1);
  }

  TEST_CASE("edge-list documents keep raw content") {
    const auto doc = parse_edge_list_document("1 2\n# c\n2 1\n7\n");
    CHECK(doc.edges.size() == 2);
    CHECK(doc.edge_lines == std::vector<std::size_t>{1, 3});
    CHECK(doc.isolated == std::vector<Vertex>{7});
  }

  TEST_CASE("JSON emission") {
    CHECK(emit_json(LabeledOrientation{}) == R"({"vertices":[],"arcs":[],"sums":{},"m":0})");
    CHECK(emit_json(orient_antimagic(parse_edge_list("1 2\n2 3\n3 4\n"))) == kPath4Json);
  }

  TEST_CASE("JSON round trip") {
    CHECK(parse_orientation_json(kPath4Json) == orient_antimagic(parse_edge_list("1 2\n2 3\n3 4\n")));
    CHECK(parse_orientation_json(emit_json(LabeledOrientation{})) == LabeledOrientation{});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      GeneratorConfig cfg;
      cfg.seed = seed;
      cfg.max_base_vertices = 30;
      cfg.subdiv_max = 2;
      cfg.isolated_vertex = seed % 2 == 0;
      const auto d = orient_antimagic(generate_random_forest(cfg));
      const std::string text = emit_json(d);
      CHECK(parse_orientation_json(text) == d);
      CHECK(emit_json(parse_orientation_json(text)) == text);
    }
  }

  TEST_CASE("JSON rejects inconsistent documents") {
    std::string tampered = kPath4Json;
    tampered.replace(tampered.find(R"("1":-3)"), 6, R"("1":-4)");
    CHECK_THROWS_AS(parse_orientation_json(tampered), ParseError);

    std::string wrong_m = kPath4Json;
    wrong_m.replace(wrong_m.find(R"("m":3)"), 5, R"("m":2)");
    CHECK_THROWS_AS(parse_orientation_json(wrong_m), ParseError);

    CHECK_THROWS_AS(parse_orientation_json("{"), ParseError);
    CHECK_THROWS_AS(parse_orientation_json("[]"), ParseError);
    CHECK_THROWS_AS(parse_orientation_json(R"({"vertices":[1],"arcs":[{"tail":1,"head":2,"label":1}],"sums":{"1":-1},"m":1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_orientation_json(R"({"vertices":[1,1],"arcs":[],"sums":{"1":0},"m":0})"), ParseError);
    CHECK_THROWS_AS(parse_orientation_json(R"({"vertices":["a"],"arcs":[],"sums":{},"m":0})"), ParseError);
  }

  TEST_CASE("DOT export") {
    CHECK(emit_dot(LabeledOrientation{}) == "digraph G { }");
    const auto single = make_orientation({1, 2}, {{1, 2, 1}});
    CHECK(emit_dot(single).find(R"(1 -> 2 [label="1"])") != std::string::npos);

    const std::string p4 = emit_dot(orient_antimagic(parse_edge_list("1 2\n2 3\n3 4\n")));
    CHECK(count(p4, " -> ") == 3);
    CHECK(count(p4, "xlabel=") == 4);
    CHECK(p4.rfind("digraph G {", 0) == 0);
    CHECK(p4.back() == '}');
  }
}
