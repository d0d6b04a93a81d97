#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "arrangement.hpp"
#include "errors.hpp"
#include "exact_linalg.hpp"
#include "partition.hpp"

namespace hyperdim {

/// Spans of blocks keyed by their index mask. Not thread-safe; each search
/// worker owns one.
class SpanCache {
public:
    const FormSpace& get(const Arrangement& a, BlockMask block) {
        auto it = spans_.find(block);
        if (it != spans_.end()) return it->second;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (block >> i & 1U) idx.push_back(i);
        return spans_.emplace(block, a.span_of(idx)).first->second;
    }

    std::size_t size() const { return spans_.size(); }

private:
    std::unordered_map<BlockMask, FormSpace> spans_;
};

struct PartitionCheck {
    bool valid = false;
    FormSpace w_space;
    std::optional<std::size_t> violating_form;
};

/// Tests the partition criterion: with block spans (L_j), form
///   W = sum_j ( (L_j) ∩ sum_{i != j} (L_i) )
/// and report the partition valid iff no form of the arrangement lies in W.
/// The first violating form in canonical order is reported.
inline PartitionCheck check_partition(const Arrangement& a, const Partition& p,
                                      SpanCache* cache = nullptr) {
    if (p.size() != a.size())
        throw PreconditionError("partition covers " + std::to_string(p.size()) +
                                " indices but the arrangement has " + std::to_string(a.size()) +
                                " forms");
    if (p.block_count() < 2) throw PreconditionError("partition needs at least two blocks");

    SpanCache local;
    SpanCache& spans = cache ? *cache : local;
    const auto masks = p.masks();
    BlockMask all = 0;
    for (auto m : masks) all |= m;

    FormSpace w(a.width());
    for (auto block : masks) {
        const FormSpace& own = spans.get(a, block);
        const FormSpace& others = spans.get(a, all & ~block);
        w = sum(w, intersect(own, others));
    }

    PartitionCheck out{true, w, std::nullopt};
    if (w.is_zero()) return out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (w.contains(a.form(i).coeffs())) {
            out.valid = false;
            out.violating_form = i;
            break;
        }
    }
    return out;
}

struct MaxPartsResult {
    std::optional<std::size_t> parts_max;
    std::optional<Partition> witness;
    std::size_t partitions_checked = 0;
};

struct SearchOptions {
    std::size_t workers = 1;
    // Extra cap on the number of blocks explored, on top of min(r, n - m).
    std::optional<std::size_t> max_parts_limit;
};

namespace detail {

// Validity flag per candidate. Workers take a strided share and keep their
// own span caches, so the flags do not depend on scheduling.
inline std::vector<char> check_all(const Arrangement& a, const std::vector<Partition>& candidates,
                                   std::vector<SpanCache>& caches) {
    std::vector<char> valid(candidates.size(), 0);
    const std::size_t workers = std::min(caches.size(), std::max<std::size_t>(candidates.size(), 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            valid[i] = check_partition(a, candidates[i], &caches[0]).valid;
        return valid;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < candidates.size(); i += workers)
                valid[i] = check_partition(a, candidates[i], &caches[w]).valid;
        });
    }
    pool.clear();
    return valid;
}

}  // namespace detail

/// Largest p >= 2 such that some p-block partition satisfies the criterion,
/// with the least restricted-growth witness among p-block partitions.
///
/// Validity survives merging blocks, so invalidity is inherited by every
/// refinement. The search therefore walks the refinement lattice level by
/// level from the bipartitions: level k+1 candidates are single-block splits
/// of valid level-k partitions, and a candidate is only checked when every
/// pairwise merge of its blocks is a valid level-k partition.
inline MaxPartsResult max_valid_parts(const Arrangement& a, const SearchOptions& options = {}) {
    MaxPartsResult out;
    const std::size_t r = a.size();
    if (r < 2) return out;
    if (r > kMaxPartitionSize)
        throw PreconditionError("partition search supports at most " +
                                std::to_string(kMaxPartitionSize) + " forms");

    const int m = compute_m(a);
    std::size_t cap = std::min<std::size_t>(r, static_cast<std::size_t>(a.n() - m));
    if (options.max_parts_limit) cap = std::min(cap, *options.max_parts_limit);
    if (cap < 2) return out;

    std::vector<SpanCache> caches(std::max<std::size_t>(options.workers, 1));

    auto keep_valid = [&](std::vector<Partition> candidates) {
        const auto flags = detail::check_all(a, candidates, caches);
        out.partitions_checked += candidates.size();
        std::vector<Partition> valid;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (flags[i]) valid.push_back(std::move(candidates[i]));
        std::sort(valid.begin(), valid.end());
        return valid;
    };

    std::vector<Partition> level = keep_valid(bipartitions(r));
    std::size_t parts = 2;
    while (!level.empty()) {
        out.parts_max = parts;
        out.witness = level.front();
        if (parts == cap) break;

        const std::unordered_set<Partition, PartitionHash> valid_here(level.begin(), level.end());
        std::unordered_set<Partition, PartitionHash> seen;
        std::vector<Partition> candidates;
        for (const auto& p : level) {
            for (auto& q : single_splits(p)) {
                if (!seen.insert(q).second) continue;
                bool all_merges_valid = true;
                for (std::size_t i = 0; i < q.block_count() && all_merges_valid; ++i)
                    for (std::size_t j = i + 1; j < q.block_count() && all_merges_valid; ++j)
                        all_merges_valid = valid_here.contains(q.merged(i, j));
                if (all_merges_valid) candidates.push_back(std::move(q));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        level = keep_valid(std::move(candidates));
        ++parts;
    }
    return out;
}

inline constexpr std::size_t kBruteForceDefaultLimit = 9;

/// Oracle: checks every partition with at least two blocks, no pruning.
inline MaxPartsResult brute_force_max_parts(const Arrangement& a,
                                            std::size_t limit = kBruteForceDefaultLimit) {
    MaxPartsResult out;
    const std::size_t r = a.size();
    if (r > limit)
        throw PreconditionError("brute force refused: " + std::to_string(r) +
                                " forms exceeds the limit of " + std::to_string(limit));
    if (r < 2) return out;
    SpanCache cache;
    for_each_partition(r, [&](const Partition& p) {
        if (p.block_count() < 2) return true;
        ++out.partitions_checked;
        if (!check_partition(a, p, &cache).valid) return true;
        // Enumeration is in increasing RGS order, so the first hit at a new
        // maximum is the least witness for it.
        if (!out.parts_max || p.block_count() > *out.parts_max) {
            out.parts_max = p.block_count();
            out.witness = p;
        }
        return true;
    });
    return out;
}

struct DimensionReport {
    int m = -1;
    int d_max = 0;
    std::vector<int> achievable;  // 0..d_max; the empty set has dimension -1 by convention
    std::optional<Partition> best_partition;
    std::optional<std::size_t> parts_max;
    std::size_t partitions_checked = 0;
    // Set when the search claimed more than n dimensions; d_max is then
    // capped at n. The theory rules this out, so it marks a bug.
    bool bound_violation = false;
};

inline DimensionReport achievable_dimensions(const Arrangement& a, const SearchOptions& options = {},
                                             bool brute_force = false) {
    DimensionReport rep;
    rep.m = compute_m(a);
    rep.d_max = rep.m + 1;

    const MaxPartsResult found =
        brute_force ? brute_force_max_parts(a) : max_valid_parts(a, options);
    rep.partitions_checked = found.partitions_checked;
    if (found.parts_max && *found.parts_max >= 2) {
        rep.parts_max = found.parts_max;
        rep.best_partition = found.witness;
        rep.d_max = rep.m + static_cast<int>(*found.parts_max);
    }
    if (rep.d_max > a.n()) {
        rep.bound_violation = true;
        rep.d_max = a.n();
    }
    for (int d = 0; d <= rep.d_max; ++d) rep.achievable.push_back(d);
    return rep;
}

}  // namespace hyperdim
