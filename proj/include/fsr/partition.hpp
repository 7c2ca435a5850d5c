#pragma once

#include <vector>

#include "fsr/soft_set.hpp"
#include "fsr/universe.hpp"

namespace fsr {

/// A family of nonempty blocks over a ground universe; may or may not cover
/// or be disjoint.
using BlockFamily = std::vector<IndexSet>;

/// Pairwise-disjoint blocks covering the ground universe. Blocks are stored
/// canonically: each block ascending, blocks ordered by smallest member, so
/// equality and golden-file comparisons are deterministic.
class Partition {
 public:
  Partition() = default;
  /// Validates cover + disjointness; canonicalizes block order.
  Partition(Universe ground, BlockFamily blocks);

  const Universe& ground() const { return ground_; }
  const BlockFamily& blocks() const { return blocks_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
  }

 private:
  Universe ground_;
  BlockFamily blocks_;
};

/// Every ground element appears in some block. Blocks must be nonempty
/// subsets of the ground universe (empty block throws).
bool is_cover(const BlockFamily& blocks, const Universe& ground);

/// Cover with pairwise-disjoint blocks.
bool is_partition(const BlockFamily& blocks, const Universe& ground);

/// Every block of `finer` is contained in some block of `coarser`.
bool refines(const BlockFamily& finer, const BlockFamily& coarser, const Universe& ground);

/// All nonempty pairwise intersections of two partitions; refines both inputs.
Partition meet(const Partition& a, const Partition& b);

/// {ground} — the coarsest partition; {{e}} per element — the finest.
Partition coarsest_partition(const Universe& ground);
Partition finest_partition(const Universe& ground);

}  // namespace fsr
