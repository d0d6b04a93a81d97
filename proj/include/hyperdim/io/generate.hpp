#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../arrangement.hpp"
#include "../errors.hpp"
#include "input.hpp"

namespace hyperdim::io {

enum class GenerateKind { general_position, random, pencil };

inline GenerateKind parse_kind(const std::string& name) {
    if (name == "general_position" || name == "gp") return GenerateKind::general_position;
    if (name == "random") return GenerateKind::random;
    if (name == "pencil") return GenerateKind::pencil;
    throw InputError("unknown arrangement kind \"" + name + "\" (general_position, random, pencil)");
}

struct GenerateRequest {
    GenerateKind kind = GenerateKind::general_position;
    int n = 2;
    std::size_t r = 4;
    std::uint64_t seed = 0;
    // general_position: moment-curve parameters, default 0..r-1.
    std::vector<long> points;
    // pencil: rank of the span of the forms, default n (so m = 0).
    std::optional<int> pencil_rank;
    // random: coefficients drawn uniformly from [-bound, bound].
    int coeff_bound = 3;
};

namespace detail {
inline Vector moment_coeffs(std::size_t used, std::size_t width, long t) {
    Vector v(width, Rational(0));
    Rational power = 1;
    for (std::size_t i = 0; i < used; ++i) {
        v[i] = power;
        power *= t;
    }
    return v;
}
}  // namespace detail

/// Deterministic test arrangements.
///
/// general_position: forms (1, t, ..., t^n) at distinct integers t; any n+1
///   of them form an invertible Vandermonde matrix.
/// random: small integer coefficients from a seeded generator, redrawn until
///   the r forms are nonzero and pairwise non-proportional.
/// pencil: moment-curve forms in the first k variables only, so all of them
///   vanish on the common (n - k)-dimensional subspace x_0 = ... = x_{k-1} = 0.
inline InputDocument generate(const GenerateRequest& req) {
    if (req.n < 1) throw InputError("n must be at least 1");
    if (req.r < 1) throw InputError("r must be at least 1");
    const std::size_t width = static_cast<std::size_t>(req.n) + 1;
    InputDocument doc;
    doc.n = req.n;

    switch (req.kind) {
        case GenerateKind::general_position: {
            std::vector<long> ts = req.points;
            if (ts.empty())
                for (std::size_t i = 0; i < req.r; ++i) ts.push_back(static_cast<long>(i));
            if (ts.size() != req.r)
                throw InputError("expected " + std::to_string(req.r) + " moment-curve points, got " +
                                 std::to_string(ts.size()));
            if (std::set<long>(ts.begin(), ts.end()).size() != ts.size())
                throw InputError("moment-curve points must be distinct for general position");
            for (long t : ts) doc.forms.push_back(detail::moment_coeffs(width, width, t));
            break;
        }
        case GenerateKind::random: {
            if (req.coeff_bound < 1) throw InputError("coefficient bound must be positive");
            std::mt19937_64 rng(req.seed);
            std::uniform_int_distribution<int> coeff(-req.coeff_bound, req.coeff_bound);
            std::vector<LinearForm> seen;
            const std::size_t max_draws = 10000 * req.r;
            for (std::size_t draws = 0; doc.forms.size() < req.r; ++draws) {
                if (draws == max_draws)
                    throw InputError("could not draw " + std::to_string(req.r) +
                                     " distinct hyperplanes with this coefficient bound");
                Vector v(width);
                for (auto& x : v) x = coeff(rng);
                if (is_zero(v)) continue;
                LinearForm f(v);
                bool duplicate = false;
                for (const auto& g : seen) duplicate = duplicate || g == f;
                if (duplicate) continue;
                seen.push_back(f);
                doc.forms.push_back(std::move(v));
            }
            break;
        }
        case GenerateKind::pencil: {
            const int k = req.pencil_rank.value_or(req.n);
            if (k < 1 || k > req.n) throw InputError("pencil rank must be between 1 and n");
            if (k == 1 && req.r > 1)
                throw InputError("a rank-1 pencil holds a single hyperplane");
            for (std::size_t i = 0; i < req.r; ++i)
                doc.forms.push_back(detail::moment_coeffs(static_cast<std::size_t>(k), width,
                                                          static_cast<long>(i)));
            break;
        }
    }
    return doc;
}

}  // namespace hyperdim::io
