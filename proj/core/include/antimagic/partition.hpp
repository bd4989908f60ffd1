#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace antimagic {

/// Label domain A = [1, floor(k/2)] U [floor(k/2)+a+1, k+a] to be split into
/// blocks of sizes parts[0..t) (each >= 2, summing to k).
struct PartitionInstance {
  std::int64_t k = 0;
  std::int64_t a = 0;
  std::vector<std::int64_t> parts;
};

struct LabelBlocks {
  std::vector<std::vector<std::int64_t>> blocks;  // each ascending, block i has parts[i] elements
  std::int64_t modulus = 0;                       // k+a+1 for even k, k+a for odd k
};

enum class PartitionErrorKind { NoSolution, BoundExceeded, InternalFailure };

class PartitionError : public std::runtime_error {
 public:
  PartitionError(PartitionErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  PartitionErrorKind kind() const noexcept { return kind_; }

 private:
  PartitionErrorKind kind_;
};

/// Throws std::invalid_argument unless k >= 1, a >= 0, t >= 1, parts >= 2 and sum(parts) == k.
void validate_instance(const PartitionInstance& inst);

std::int64_t block_modulus(const PartitionInstance& inst);

/// The domain A in ascending order.
std::vector<std::int64_t> label_domain(const PartitionInstance& inst);

/// Checks sizes, disjoint union equal to A, and the modular block sums.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_blocks(const PartitionInstance& inst, const LabelBlocks& blocks);

inline constexpr std::int64_t kDefaultOracleBound = 24;

struct PartitionOptions {
  /// The backtracking oracle is consulted only if the constructive result
  /// fails validation and k is within this bound.
  std::int64_t oracle_fallback_bound = kDefaultOracleBound;
};

/// Constructive partition; always post-validated before returning.
LabelBlocks partition_label_set(const PartitionInstance& inst, const PartitionOptions& options = {});

/// Independent backtracking search over block assignments.
LabelBlocks partition_oracle(const PartitionInstance& inst, std::int64_t max_k = kDefaultOracleBound);

/// Zero-sum triples covering {+-1, ..., +-3p} exactly once: p triples with two
/// positive entries and p with two negative entries.
std::vector<std::array<std::int64_t, 3>> zero_sum_triples(std::int64_t p);

}  // namespace antimagic
