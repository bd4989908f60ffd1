#include <functional>
#include <set>

#include "antimagic/partition.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace antimagic;

namespace {

using Blocks = std::vector<std::vector<std::int64_t>>;

// Constructive routine only: a failed validation throws instead of falling
// back to the search.
LabelBlocks construct_only(const PartitionInstance& inst) { return partition_label_set(inst, {0}); }

void for_each_composition(std::int64_t k, const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t)> go = [&](std::int64_t left) {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (std::int64_t r = 2; r <= left; ++r) {
      if (left - r == 1) continue;
      parts.push_back(r);
      go(left - r);
      parts.pop_back();
    }
  };
  go(k);
}

}  // namespace

TEST_SUITE("partition") {
  TEST_CASE("domain and modulus") {
    const PartitionInstance even{4, 3, {4}};
    CHECK(label_domain(even) == std::vector<std::int64_t>{1, 2, 6, 7});
    CHECK(block_modulus(even) == 8);
    const PartitionInstance odd{5, 1, {2, 3}};
    CHECK(label_domain(odd) == std::vector<std::int64_t>{1, 2, 4, 5, 6});
    CHECK(block_modulus(odd) == 6);
  }

  TEST_CASE("instance validation") {
    CHECK_THROWS_AS(validate_instance({0, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance({3, 0, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance({4, 0, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance({4, -1, {4}}), std::invalid_argument);
    CHECK_NOTHROW(validate_instance({4, 0, {2, 2}}));
  }

  TEST_CASE("small constructive cases") {
    const auto single = construct_only({2, 1, {2}});
    CHECK(single.blocks == Blocks{{1, 3}});
    CHECK(single.modulus == 4);

    const auto pairs = construct_only({4, 0, {2, 2}});
    CHECK(pairs.blocks == Blocks{{1, 4}, {2, 3}});
    CHECK(pairs.modulus == 5);

    // Odd k: solve (4, 1, (2, 2)) and put 6 into the odd part.
    const auto odd = construct_only({5, 1, {2, 3}});
    CHECK(odd.blocks == Blocks{{1, 5}, {2, 4, 6}});
    CHECK(odd.modulus == 6);
  }

  TEST_CASE("tight odd parts that defeat pair-and-repair schemes") {
    for (std::int64_t a = 0; a <= 8; ++a) {
      const PartitionInstance inst{12, a, {3, 3, 3, 3}};
      const auto blocks = construct_only(inst);
      CHECK_MESSAGE(!check_blocks(inst, blocks), "a = " << a);
    }
  }

  TEST_CASE("oracle examples") {
    const auto tiny = partition_oracle({2, 0, {2}});
    CHECK(tiny.blocks == Blocks{{1, 2}});
    CHECK(tiny.modulus == 3);

    const auto whole = partition_oracle({4, 3, {4}});
    CHECK(whole.blocks == Blocks{{1, 2, 6, 7}});
    CHECK(whole.modulus == 8);

    const PartitionInstance triples{6, 0, {3, 3}};
    CHECK(!check_blocks(triples, partition_oracle(triples)));

    CHECK_THROWS_AS(partition_oracle({26, 0, {26}}), PartitionError);
  }

  TEST_CASE("block checker rejects broken certificates") {
    const PartitionInstance inst{4, 0, {2, 2}};
    CHECK(check_blocks(inst, {{{1, 4}, {2, 3}}, 5}) == std::nullopt);
    CHECK(check_blocks(inst, {{{1, 2}, {3, 4}}, 5}).has_value());
    CHECK(check_blocks(inst, {{{1, 4}, {2, 4}}, 5}).has_value());
    CHECK(check_blocks(inst, {{{1, 4, 2}, {3}}, 5}).has_value());
    CHECK(check_blocks(inst, {{{1, 4}, {2, 3}}, 6}).has_value());
  }

  TEST_CASE("zero-sum triples cover every signed value once") {
    for (std::int64_t p = 1; p <= 40; ++p) {
      const auto triples = zero_sum_triples(p);
      REQUIRE(triples.size() == static_cast<std::size_t>(2 * p));
      std::multiset<std::int64_t> used;
      for (const auto& t : triples) {
        CHECK(t[0] + t[1] + t[2] == 0);
        used.insert(t.begin(), t.end());
      }
      std::multiset<std::int64_t> expected;
      for (std::int64_t x = 1; x <= 3 * p; ++x) {
        expected.insert(x);
        expected.insert(-x);
      }
      CHECK(used == expected);
    }
  }

  TEST_CASE("constructive sweep with independent feasibility cross-check") {
    for (std::int64_t k = 2; k <= 12; ++k) {
      for (std::int64_t a = 0; a <= 6; ++a) {
        for_each_composition(k, [&](const std::vector<std::int64_t>& parts) {
          const PartitionInstance inst{k, a, parts};
          const auto blocks = construct_only(inst);
          CHECK(!check_blocks(inst, blocks));
          CHECK(oracle::partition_feasible(k, a, parts));
        });
      }
    }
  }

  TEST_CASE("large instances stay constructive") {
    for (std::int64_t k : {100, 101, 1000, 1001}) {
      std::vector<std::int64_t> parts(static_cast<std::size_t>(k / 3), 3);
      parts.back() += k - 3 * (k / 3);
      const PartitionInstance inst{k, 37, parts};
      CHECK(!check_blocks(inst, construct_only(inst)));
    }
  }
}
