#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hyperdim {

using BlockMask = std::uint64_t;
inline constexpr std::size_t kMaxPartitionSize = 64;

/// A set partition of {0, ..., size-1}, stored as its restricted-growth
/// string: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]). Block k is the set
/// of positions labelled k, so blocks are ordered by least element.
class Partition {
public:
    static Partition from_rgs(std::vector<std::uint32_t> rgs) {
        if (rgs.empty()) throw PreconditionError("partition of an empty set");
        if (rgs.size() > kMaxPartitionSize)
            throw PreconditionError("partitions are limited to " +
                                    std::to_string(kMaxPartitionSize) + " elements");
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            if (rgs[i] > next)
                throw PreconditionError("not a restricted-growth string at position " +
                                        std::to_string(i));
            if (rgs[i] == next) ++next;
        }
        Partition p;
        p.rgs_ = std::move(rgs);
        p.blocks_ = next;
        return p;
    }

    /// Builds the canonical partition from blocks given in any order. The
    /// blocks must be nonempty, disjoint and cover {0, ..., size-1}.
    static Partition from_blocks(const std::vector<std::vector<std::size_t>>& blocks,
                                 std::size_t size) {
        if (size == 0 || size > kMaxPartitionSize)
            throw PreconditionError("partition size out of range");
        std::vector<long> label(size, -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw PreconditionError("empty block in partition");
            for (std::size_t i : blocks[b]) {
                if (i >= size) throw PreconditionError("block index out of range");
                if (label[i] != -1) throw PreconditionError("blocks overlap");
                label[i] = static_cast<long>(b);
            }
        }
        std::vector<long> relabel(blocks.size(), -1);
        std::vector<std::uint32_t> rgs(size);
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (label[i] == -1) throw PreconditionError("blocks do not cover every index");
            auto& target = relabel[static_cast<std::size_t>(label[i])];
            if (target == -1) target = next++;
            rgs[i] = static_cast<std::uint32_t>(target);
        }
        return from_rgs(std::move(rgs));
    }

    static Partition from_masks(const std::vector<BlockMask>& masks, std::size_t size) {
        std::vector<std::vector<std::size_t>> blocks;
        for (auto m : masks) {
            std::vector<std::size_t> b;
            for (std::size_t i = 0; i < size; ++i)
                if (m >> i & 1U) b.push_back(i);
            blocks.push_back(std::move(b));
        }
        return from_blocks(blocks, size);
    }

    std::size_t size() const { return rgs_.size(); }
    std::size_t block_count() const { return blocks_; }
    const std::vector<std::uint32_t>& rgs() const { return rgs_; }

    std::vector<std::vector<std::size_t>> blocks() const {
        std::vector<std::vector<std::size_t>> out(blocks_);
        for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(i);
        return out;
    }

    std::vector<BlockMask> masks() const {
        std::vector<BlockMask> out(blocks_, 0);
        for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]] |= BlockMask{1} << i;
        return out;
    }

    // Union of blocks i and j (i != j).
    Partition merged(std::size_t i, std::size_t j) const {
        if (i == j || i >= blocks_ || j >= blocks_) throw PreconditionError("bad merge");
        auto m = masks();
        m[std::min(i, j)] |= m[std::max(i, j)];
        m.erase(m.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
        return from_masks(m, size());
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.rgs_ < b.rgs_; }

private:
    Partition() = default;

    std::vector<std::uint32_t> rgs_;
    std::size_t blocks_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : p.rgs()) h = (h ^ x) * 1099511628211ULL;
        return h;
    }
};

/// Visits every partition of {0..size-1} in increasing restricted-growth
/// order. The visitor returns false to stop early.
inline void for_each_partition(std::size_t size,
                               const std::function<bool(const Partition&)>& visit) {
    if (size == 0 || size > kMaxPartitionSize) throw PreconditionError("partition size out of range");
    std::vector<std::uint32_t> rgs(size, 0);
    std::vector<std::uint32_t> prefix_max(size, 0);  // max of rgs[0..i]
    while (true) {
        if (!visit(Partition::from_rgs(rgs))) return;
        std::size_t i = size - 1;
        while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < size; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

/// All two-block partitions of {0..size-1}, in increasing restricted-growth order.
inline std::vector<Partition> bipartitions(std::size_t size) {
    std::vector<Partition> out;
    if (size < 2) return out;
    const BlockMask all = size == 64 ? ~BlockMask{0} : (BlockMask{1} << size) - 1;
    // Element 0 sits in block 0; every nonempty choice of the other block
    // among elements 1..size-1 is one bipartition.
    for (BlockMask other = 2; other <= all && other != 0; other += 2) {
        if ((other & ~all) != 0) break;
        out.push_back(Partition::from_masks({all & ~other, other}, size));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Refinements obtained by splitting exactly one block into two nonempty parts.
inline std::vector<Partition> single_splits(const Partition& p) {
    std::vector<Partition> out;
    const auto masks = p.masks();
    for (std::size_t b = 0; b < masks.size(); ++b) {
        const BlockMask block = masks[b];
        if (std::popcount(block) < 2) continue;
        const BlockMask lowest = block & (~block + 1);
        const BlockMask rest = block & ~lowest;
        // Enumerate nonempty proper subsets of `rest` as the part without `lowest`.
        for (BlockMask sub = rest; sub != 0; sub = (sub - 1) & rest) {
            auto split = masks;
            split[b] = block & ~sub;
            split.push_back(sub);
            out.push_back(Partition::from_masks(split, p.size()));
        }
    }
    return out;
}

/// Every partition obtained by merging blocks of p (including p itself).
inline std::vector<Partition> coarsenings(const Partition& p) {
    std::vector<Partition> out;
    const auto masks = p.masks();
    for_each_partition(masks.size(), [&](const Partition& grouping) {
        std::vector<BlockMask> merged(grouping.block_count(), 0);
        for (std::size_t b = 0; b < masks.size(); ++b) merged[grouping.rgs()[b]] |= masks[b];
        out.push_back(Partition::from_masks(merged, p.size()));
        return true;
    });
    return out;
}

}  // namespace hyperdim
