// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hyperdim/hyperdim.hpp"
#include "hyperdim/io/generate.hpp"
#include "oracles.hpp"

using namespace hyperdim;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    long cases = 0;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

// Every witness seen in criteria 1-4, re-checked by criterion 5.
struct Emitted {
    Arrangement a;
    WitnessSubspace y;
    int claimed;
};
std::vector<Emitted> emitted;

SearchOptions search_options() {
    return SearchOptions{std::max(1U, std::thread::hardware_concurrency()), std::nullopt};
}

Arrangement moment(int n, int r) {
    const auto doc = io::generate({io::GenerateKind::general_position, n, static_cast<std::size_t>(r), 0, {}, {}, 3});
    return Arrangement::load(doc.n, doc.forms);
}

WitnessSubspace witness_for(const Arrangement& a, const DimensionReport& rep) {
    if (rep.best_partition) return witness_subspace(a, build_u_chain(a, *rep.best_partition));
    return build_witness_for_mplus1(a);
}

void record(const Arrangement& a, const DimensionReport& rep) {
    emitted.push_back({a, witness_for(a, rep), rep.d_max});
}

bool full_range(const DimensionReport& rep) {
    if (rep.achievable.size() != static_cast<std::size_t>(rep.d_max + 1)) return false;
    for (int d = 0; d <= rep.d_max; ++d)
        if (rep.achievable[static_cast<std::size_t>(d)] != d) return false;
    return true;
}

Outcome gp_grid() {
    Outcome out;
    for (int n = 2; n <= 4; ++n) {
        for (int r = n + 1; r <= n + 5; ++r) {
            const auto a = moment(n, r);
            const auto rep = achievable_dimensions(a, search_options());
            const int expected = n / (r - n);
            ++out.cases;
            if (rep.d_max != expected)
                out.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + ": d_max " +
                         std::to_string(rep.d_max) + ", expected " + std::to_string(expected));
            record(a, rep);
        }
    }
    return out;
}

Outcome finiteness_threshold() {
    Outcome out;
    for (int r = 5; r <= 7; ++r) {
        const auto a = moment(2, r);
        const auto rep = achievable_dimensions(a, search_options());
        ++out.cases;
        if (rep.d_max != 0) out.fail("r=" + std::to_string(r) + ": d_max " + std::to_string(rep.d_max));
        if (!finiteness_verdict(a)) out.fail("r=" + std::to_string(r) + ": finiteness verdict false");
        record(a, rep);
    }
    return out;
}

Outcome baseline(std::mt19937_64& rng) {
    Outcome out;
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<std::size_t> count(1, 7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = oracle::random_arrangement(rng, dim(rng), count(rng));
        const auto rep = achievable_dimensions(a, search_options());
        ++out.cases;
        if (rep.d_max < compute_m(a) + 1) out.fail("trial " + std::to_string(trial) + ": d_max below m + 1");
        if (!full_range(rep)) out.fail("trial " + std::to_string(trial) + ": achievable set is not 0..d_max");
        record(a, rep);
    }
    return out;
}

bool witness_partition_ok(const Arrangement& a, const MaxPartsResult& res) {
    if (!res.parts_max) return !res.witness;
    return res.witness && res.witness->block_count() == *res.parts_max && check_partition(a, *res.witness).valid;
}

Outcome oracle_equivalence(std::mt19937_64& rng) {
    Outcome out;
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<std::size_t> count(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = oracle::random_arrangement(rng, dim(rng), count(rng));
        const auto pruned = max_valid_parts(a, search_options());
        const auto brute = brute_force_max_parts(a);
        ++out.cases;
        const std::string tag = "trial " + std::to_string(trial);
        if (pruned.parts_max != brute.parts_max) out.fail(tag + ": parts_max differs");
        if (!witness_partition_ok(a, pruned)) out.fail(tag + ": pruned witness invalid");
        if (!witness_partition_ok(a, brute)) out.fail(tag + ": brute-force witness invalid");

        const auto rep = achievable_dimensions(a, search_options());
        record(a, rep);
        if (brute.witness) {
            const auto y = witness_subspace(a, build_u_chain(a, *brute.witness));
            emitted.push_back({a, y, compute_m(a) + static_cast<int>(*brute.parts_max)});
        }
    }
    return out;
}

Outcome witness_soundness() {
    Outcome out;
    long induced_checked = 0;
    for (std::size_t i = 0; i < emitted.size(); ++i) {
        const auto& [a, y, claimed] = emitted[i];
        ++out.cases;
        const std::string tag = "witness " + std::to_string(i);
        const auto check = verify_cond(a, y.points);
        if (!check.ok()) {
            out.fail(tag + ": " + check.diagnostic);
            continue;
        }
        if (y.dim != claimed || static_cast<int>(y.points.rank()) - 1 != claimed)
            out.fail(tag + ": dimension " + std::to_string(y.dim) + ", claimed " + std::to_string(claimed));
        const auto induced = induced_partition(a, y);
        if (induced) ++induced_checked;
        if (induced && !check_partition(a, *induced).valid) out.fail(tag + ": induced partition invalid");
        if (!induced && y.dim - compute_m(a) >= 2) out.fail(tag + ": no induced partition");
    }
    if (out.pass) out.detail = std::to_string(induced_checked) + " induced partitions checked";
    return out;
}

Outcome coarsening(std::mt19937_64& rng) {
    Outcome out;
    std::uniform_int_distribution<int> dim(2, 4);
    std::uniform_int_distribution<std::size_t> count(2, 7);
    long attempts = 0;
    while (out.cases < 100 && ++attempts < 100000) {
        const auto a = oracle::random_arrangement(rng, dim(rng), count(rng));
        // Pick a uniformly random partition with at least two blocks.
        std::vector<Partition> all;
        for_each_partition(a.size(), [&](const Partition& p) {
            if (p.block_count() >= 2) all.push_back(p);
            return true;
        });
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const Partition p = all[pick(rng)];
        if (!check_partition(a, p).valid) continue;
        ++out.cases;
        for (const auto& q : coarsenings(p)) {
            if (q.block_count() < 2) continue;
            if (!check_partition(a, q).valid) out.fail("a coarsening of a valid partition is invalid");
        }
    }
    if (out.cases < 100) out.fail("only " + std::to_string(out.cases) + " valid pairs found");
    return out;
}

Outcome linalg_kernel(std::mt19937_64& rng) {
    Outcome out;
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t width = dim(rng);
        std::uniform_int_distribution<std::size_t> rk(0, width);
        const auto rows_u = oracle::random_rows(rng, rk(rng) + 1, width, rk(rng));
        const auto rows_v = oracle::random_rows(rng, rk(rng) + 1, width, rk(rng));
        const auto u = span(width, rows_u);
        const auto v = span(width, rows_v);
        auto both = rows_u;
        both.insert(both.end(), rows_v.begin(), rows_v.end());
        // Sum rank by minors, intersection by the kernel route.
        const std::size_t sum_rank = oracle::rank_by_minors(both, width);
        const std::size_t meet_rank = oracle::intersect_by_kernels(u, v).rank();
        if (sum_rank + meet_rank != u.rank() + v.rank() || sum(u, v).rank() != sum_rank ||
            intersect(u, v).rank() != meet_rank)
            out.fail("Grassmann identity, trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t width = dim(rng);
        std::uniform_int_distribution<std::size_t> rk(0, width);
        const auto rows = oracle::random_rows(rng, rk(rng) + 1, width, rk(rng));
        // A different spanning set of the same space: random combinations plus the originals scaled.
        auto other = oracle::random_rows(rng, 3, width, 0);
        std::uniform_int_distribution<int> c(-3, 3);
        for (auto& row : other)
            for (const auto& g : rows) {
                const Rational k(c(rng), 2);
                for (std::size_t j = 0; j < width; ++j) row[j] += k * g[j];
            }
        for (const auto& g : rows) {
            Vector scaled = g;
            for (auto& x : scaled) x *= Rational(-5, 3);
            other.push_back(scaled);
        }
        std::shuffle(other.begin(), other.end(), rng);
        if (!(span(width, other) == span(width, rows)) || span(width, other).basis() != span(width, rows).basis())
            out.fail("canonical form, trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t width = dim(rng);
        std::uniform_int_distribution<std::size_t> rk(0, width);
        const auto rows = oracle::random_rows(rng, rk(rng) + 1, width, rk(rng));
        const auto forms = span(width, rows);
        const auto zeros = zero_set(forms);
        bool ok = zeros.rank() + oracle::rank_by_minors(rows, width) == width;
        for (const auto& p : zeros.basis())
            for (const auto& f : rows) ok = ok && dot(f, p) == 0;
        if (!ok) out.fail("zero_set rank complement, trial " + std::to_string(trial));
    }
    out.cases = 3000;
    return out;
}

template <class F>
bool run(int id, const char* name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %d  %-34s %5ld cases  %7.2fs%s%s\n", o.pass ? "PASS" : "FAIL", id, name, o.cases,
                secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    return o.pass;
}

}  // namespace

int main() {
    std::mt19937_64 rng(20260415);
    bool ok = true;
    ok &= run(1, "general-position grid", gp_grid);
    ok &= run(2, "finiteness threshold", finiteness_threshold);
    ok &= run(3, "baseline m + 1", [&] { return baseline(rng); });
    ok &= run(4, "pruned search vs brute force", [&] { return oracle_equivalence(rng); });
    ok &= run(5, "witness soundness", witness_soundness);
    ok &= run(6, "coarsening monotonicity", [&] { return coarsening(rng); });
    ok &= run(7, "exact linear algebra kernel", [&] { return linalg_kernel(rng); });
    return ok ? 0 : 1;
}
