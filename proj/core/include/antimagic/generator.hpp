#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "antimagic/forest.hpp"

namespace antimagic {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t min_base_vertices = 2;
  std::size_t max_base_vertices = 20;
  std::size_t subdiv_min = 1;  // must be >= 1
  std::size_t subdiv_max = 1;
  bool isolated_vertex = false;
  std::size_t max_components = 1;
};

/// Throws std::invalid_argument for inconsistent ranges.
void validate_config(const GeneratorConfig& cfg);

/// Uniform draw from [lo, hi], identical on every platform for a given
/// engine state (unlike std::uniform_int_distribution).
std::uint64_t draw_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// Random base forest (uniform labelled tree per component from a Pruefer
/// sequence, shuffled identifiers), every edge subdivided a random number of
/// times in [subdiv_min, subdiv_max], plus an optional isolated vertex.
Forest generate_random_forest(const GeneratorConfig& cfg);

}  // namespace antimagic
