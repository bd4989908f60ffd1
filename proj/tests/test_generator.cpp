#include "antimagic/generator.hpp"
#include "doctest.h"

using namespace antimagic;

TEST_SUITE("generator") {
  TEST_CASE("bounded draws stay in range and cover it") {
    std::mt19937_64 rng(5);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) {
      const auto x = draw_between(rng, 3, 9);
      REQUIRE(x >= 3);
      REQUIRE(x <= 9);
      ++hits[x - 3];
    }
    for (int h : hits) CHECK(h > 800);
    CHECK(draw_between(rng, 4, 4) == 4);
  }

  TEST_CASE("same seed, same forest") {
    GeneratorConfig cfg;
    cfg.seed = 99;
    cfg.max_base_vertices = 200;
    cfg.subdiv_max = 3;
    cfg.max_components = 4;
    CHECK(to_edge_list_text(generate_random_forest(cfg)) == to_edge_list_text(generate_random_forest(cfg)));
    GeneratorConfig other = cfg;
    other.seed = 100;
    CHECK(to_edge_list_text(generate_random_forest(cfg)) != to_edge_list_text(generate_random_forest(other)));
  }

  TEST_CASE("single subdivision doubles the edge count") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      GeneratorConfig cfg;
      cfg.seed = seed;
      cfg.min_base_vertices = 12;
      cfg.max_base_vertices = 12;
      cfg.max_components = 3;
      const Forest f = generate_random_forest(cfg);
      CHECK(check_hypothesis(f).passes());
      CHECK(f.edge_count() == 2 * (12 - f.component_count()));
      CHECK(f.component_count() <= 3);
    }
  }

  TEST_CASE("optional isolated vertex") {
    GeneratorConfig cfg;
    cfg.seed = 1;
    cfg.isolated_vertex = true;
    const Forest f = generate_random_forest(cfg);
    CHECK(classify_vertices(f).isolated.size() == 1);
    CHECK(check_hypothesis(f).passes());
  }

  TEST_CASE("invalid configurations") {
    GeneratorConfig cfg;
    cfg.subdiv_min = 0;
    CHECK_THROWS_AS(generate_random_forest(cfg), std::invalid_argument);
    cfg = {};
    cfg.subdiv_min = 3;
    cfg.subdiv_max = 2;
    CHECK_THROWS_AS(generate_random_forest(cfg), std::invalid_argument);
    cfg = {};
    cfg.min_base_vertices = 1;
    CHECK_THROWS_AS(generate_random_forest(cfg), std::invalid_argument);
    cfg = {};
    cfg.max_components = 0;
    CHECK_THROWS_AS(generate_random_forest(cfg), std::invalid_argument);
  }
}
