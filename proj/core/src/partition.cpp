#include "antimagic/partition.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace antimagic {

namespace {

std::string format_instance(const PartitionInstance& inst) {
  std::ostringstream os;
  os << "k=" << inst.k << " a=" << inst.a << " parts=(";
  for (std::size_t i = 0; i < inst.parts.size(); ++i) os << (i ? "," : "") << inst.parts[i];
  os << ")";
  return os.str();
}

std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Even k: the domain is {x, M - x : x in [1, k/2]} with M = k + a + 1, i.e. the
// signed set {+-1, ..., +-k/2} read modulo M. Every block gets an exact
// zero-sum signed set, so the modular condition holds for any a.
LabelBlocks construct_even(const PartitionInstance& inst) {
  const std::int64_t half = inst.k / 2;
  const std::int64_t modulus = inst.k + inst.a + 1;
  auto embed = [&](std::int64_t signed_value) { return signed_value > 0 ? signed_value : modulus + signed_value; };

  std::int64_t odd_parts = 0;
  for (std::int64_t r : inst.parts) odd_parts += r % 2;
  const std::int64_t p = odd_parts / 2;
  const auto triples = zero_sum_triples(p);

  LabelBlocks out;
  out.modulus = modulus;
  out.blocks.resize(inst.parts.size());
  std::size_t next_triple = 0;
  std::int64_t next_pair = 3 * p + 1;
  for (std::size_t i = 0; i < inst.parts.size(); ++i) {
    auto& block = out.blocks[i];
    std::int64_t remaining = inst.parts[i];
    if (remaining % 2 != 0) {
      for (std::int64_t v : triples[next_triple]) block.push_back(embed(v));
      ++next_triple;
      remaining -= 3;
    }
    for (; remaining > 0; remaining -= 2, ++next_pair) {
      block.push_back(next_pair);
      block.push_back(modulus - next_pair);
    }
    std::sort(block.begin(), block.end());
  }
  if (next_pair != half + 1 || next_triple != triples.size()) {
    throw PartitionError(PartitionErrorKind::InternalFailure, "pair accounting mismatch for " + format_instance(inst));
  }
  return out;
}

LabelBlocks construct(const PartitionInstance& inst) {
  if (inst.k % 2 == 0) return construct_even(inst);

  // Odd k: drop the largest label k+a, shrink the first odd part, solve the
  // even instance on the remaining domain and put k+a back.
  auto odd = std::find_if(inst.parts.begin(), inst.parts.end(), [](std::int64_t r) { return r % 2 != 0; });
  const auto i0 = static_cast<std::size_t>(odd - inst.parts.begin());
  PartitionInstance reduced{inst.k - 1, inst.a, inst.parts};
  reduced.parts[i0] -= 1;
  LabelBlocks out = construct_even(reduced);
  out.blocks[i0].push_back(inst.k + inst.a);
  std::sort(out.blocks[i0].begin(), out.blocks[i0].end());
  out.modulus = inst.k + inst.a;
  return out;
}

class OracleSearch {
 public:
  OracleSearch(const PartitionInstance& inst)
      : inst_(inst), modulus_(block_modulus(inst)), domain_(label_domain(inst)), blocks_(inst.parts.size()),
        sums_(inst.parts.size(), 0) {
    std::reverse(domain_.begin(), domain_.end());
  }

  bool run() { return place(0); }

  LabelBlocks result() const {
    LabelBlocks out{blocks_, modulus_};
    for (auto& b : out.blocks) std::sort(b.begin(), b.end());
    return out;
  }

 private:
  bool place(std::size_t pos) {
    if (pos == domain_.size()) return true;
    const std::int64_t x = domain_[pos];
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const auto capacity = static_cast<std::size_t>(inst_.parts[i]);
      if (blocks_[i].size() == capacity) continue;
      // Empty blocks of equal size are interchangeable; try only the first.
      if (blocks_[i].empty()) {
        bool duplicate = false;
        for (std::size_t j = 0; j < i && !duplicate; ++j) {
          duplicate = blocks_[j].empty() && inst_.parts[j] == inst_.parts[i];
        }
        if (duplicate) continue;
      }
      if (blocks_[i].size() + 1 == capacity && mod_floor(sums_[i] + x, modulus_) != 0) continue;
      blocks_[i].push_back(x);
      sums_[i] += x;
      if (place(pos + 1)) return true;
      sums_[i] -= x;
      blocks_[i].pop_back();
    }
    return false;
  }

  const PartitionInstance& inst_;
  std::int64_t modulus_;
  std::vector<std::int64_t> domain_;
  std::vector<std::vector<std::int64_t>> blocks_;
  std::vector<std::int64_t> sums_;
};

}  // namespace

void validate_instance(const PartitionInstance& inst) {
  if (inst.k < 1) throw std::invalid_argument("partition instance needs k >= 1: " + format_instance(inst));
  if (inst.a < 0) throw std::invalid_argument("partition instance needs a >= 0: " + format_instance(inst));
  if (inst.parts.empty()) throw std::invalid_argument("partition instance needs at least one part");
  std::int64_t total = 0;
  for (std::int64_t r : inst.parts) {
    if (r < 2) throw std::invalid_argument("every part must be >= 2: " + format_instance(inst));
    total += r;
  }
  if (total != inst.k) throw std::invalid_argument("parts must sum to k: " + format_instance(inst));
}

std::int64_t block_modulus(const PartitionInstance& inst) {
  return inst.k % 2 == 0 ? inst.k + inst.a + 1 : inst.k + inst.a;
}

std::vector<std::int64_t> label_domain(const PartitionInstance& inst) {
  std::vector<std::int64_t> domain;
  domain.reserve(static_cast<std::size_t>(inst.k));
  const std::int64_t half = inst.k / 2;
  for (std::int64_t x = 1; x <= half; ++x) domain.push_back(x);
  for (std::int64_t x = half + inst.a + 1; x <= inst.k + inst.a; ++x) domain.push_back(x);
  return domain;
}

std::optional<std::string> check_blocks(const PartitionInstance& inst, const LabelBlocks& blocks) {
  if (blocks.modulus != block_modulus(inst)) {
    return "modulus " + std::to_string(blocks.modulus) + " != " + std::to_string(block_modulus(inst));
  }
  if (blocks.blocks.size() != inst.parts.size()) return std::string("wrong number of blocks");
  std::vector<std::int64_t> all;
  for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
    const auto& block = blocks.blocks[i];
    if (static_cast<std::int64_t>(block.size()) != inst.parts[i]) {
      return "block " + std::to_string(i) + " has size " + std::to_string(block.size()) + ", expected " +
             std::to_string(inst.parts[i]);
    }
    const std::int64_t sum = std::accumulate(block.begin(), block.end(), std::int64_t{0});
    if (mod_floor(sum, blocks.modulus) != 0) {
      return "block " + std::to_string(i) + " sums to " + std::to_string(sum) + ", not divisible by " +
             std::to_string(blocks.modulus);
    }
    all.insert(all.end(), block.begin(), block.end());
  }
  std::sort(all.begin(), all.end());
  if (all != label_domain(inst)) return std::string("blocks do not partition the label domain");
  return std::nullopt;
}

std::vector<std::array<std::int64_t, 3>> zero_sum_triples(std::int64_t p) {
  std::vector<std::array<std::int64_t, 3>> triples;
  if (p <= 0) return triples;
  triples.reserve(static_cast<std::size_t>(2 * p));
  // Positive entries {1..2p} and {2p+1..3p} below; negatives {p+2, p+4, .., 3p},
  // {p, p+1}, {1..p-1} and {p+3, p+5, .., 3p-1}. Each absolute value occurs
  // once with each sign.
  for (std::int64_t i = 1; i <= p; ++i) triples.push_back({i, i + p, -(2 * i + p)});
  triples.push_back({-p, -(p + 1), 2 * p + 1});
  for (std::int64_t j = 1; j < p; ++j) triples.push_back({-(p - j), -(p + 1 + 2 * j), 2 * p + 1 + j});
  return triples;
}

LabelBlocks partition_label_set(const PartitionInstance& inst, const PartitionOptions& options) {
  validate_instance(inst);
  LabelBlocks blocks = construct(inst);
  auto problem = check_blocks(inst, blocks);
  if (!problem) return blocks;
  if (inst.k <= options.oracle_fallback_bound) {
    blocks = partition_oracle(inst, options.oracle_fallback_bound);
    if (!check_blocks(inst, blocks)) return blocks;
  }
  throw PartitionError(PartitionErrorKind::InternalFailure,
                       "constructive partition failed validation (" + *problem + ") for " + format_instance(inst));
}

LabelBlocks partition_oracle(const PartitionInstance& inst, std::int64_t max_k) {
  validate_instance(inst);
  if (inst.k > max_k) {
    throw PartitionError(PartitionErrorKind::BoundExceeded,
                         "oracle bound " + std::to_string(max_k) + " exceeded by " + format_instance(inst));
  }
  OracleSearch search(inst);
  if (!search.run()) {
    throw PartitionError(PartitionErrorKind::NoSolution, "no valid partition exists for " + format_instance(inst));
  }
  return search.result();
}

}  // namespace antimagic
