#include "fsr/partition.hpp"

#include <algorithm>

namespace fsr {

namespace {

// Blocks must be nonempty subsets of the ground universe.
BlockFamily validated(BlockFamily blocks, const Universe& ground) {
  for (auto& block : blocks) {
    if (block.empty()) throw Error("block families may not contain an empty block");
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    if (block.front() < 0 || block.back() >= ground.size()) {
      throw Error("block indexes outside the ground universe");
    }
  }
  return blocks;
}

}  // namespace

Partition::Partition(Universe ground, BlockFamily blocks) : ground_(std::move(ground)) {
  blocks = validated(std::move(blocks), ground_);
  if (!is_partition(blocks, ground_)) {
    throw Error("blocks do not partition the ground universe");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
}

bool is_cover(const BlockFamily& blocks, const Universe& ground) {
  BlockFamily checked = validated(blocks, ground);
  std::vector<char> hit(static_cast<size_t>(ground.size()), 0);
  for (const auto& block : checked) {
    for (Eigen::Index i : block) hit[static_cast<size_t>(i)] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_partition(const BlockFamily& blocks, const Universe& ground) {
  BlockFamily checked = validated(blocks, ground);
  if (!is_cover(checked, ground)) return false;
  for (size_t p = 0; p < checked.size(); ++p) {
    for (size_t q = p + 1; q < checked.size(); ++q) {
      if (!disjoint(checked[p], checked[q])) return false;
    }
  }
  return true;
}

bool refines(const BlockFamily& finer, const BlockFamily& coarser, const Universe& ground) {
  BlockFamily fine = validated(finer, ground);
  BlockFamily coarse = validated(coarser, ground);
  return std::all_of(fine.begin(), fine.end(), [&](const IndexSet& block) {
    return std::any_of(coarse.begin(), coarse.end(),
                       [&](const IndexSet& target) { return is_subset(block, target); });
  });
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.ground() != b.ground()) throw Error("meet requires partitions of one universe");
  BlockFamily out;
  for (const auto& pa : a.blocks()) {
    for (const auto& pb : b.blocks()) {
      IndexSet cell = set_intersect(pa, pb);
      if (!cell.empty()) out.push_back(std::move(cell));
    }
  }
  return Partition(a.ground(), std::move(out));
}

Partition coarsest_partition(const Universe& ground) {
  if (ground.empty()) return Partition(ground, {});
  IndexSet all(static_cast<size_t>(ground.size()));
  for (Eigen::Index i = 0; i < ground.size(); ++i) all[static_cast<size_t>(i)] = i;
  return Partition(ground, {std::move(all)});
}

Partition finest_partition(const Universe& ground) {
  BlockFamily singletons;
  for (Eigen::Index i = 0; i < ground.size(); ++i) singletons.push_back({i});
  return Partition(ground, std::move(singletons));
}

}  // namespace fsr
