#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "dimension_search.hpp"
#include "errors.hpp"
#include "exact_linalg.hpp"
#include "partition.hpp"

namespace hyperdim {

/// Nested form spaces U_0 ⊆ U_1 ⊆ ... ⊆ U_p built from a valid partition.
/// Z(U_p) is a witness subspace of dimension m + p.
struct UChain {
    Partition partition;
    std::vector<FormSpace> spaces;
    int dimension = 0;
};

/// Outcome of checking that Y is not inside the arrangement and that the
/// restricted forms are linearly independent.
struct CondCheck {
    bool not_contained = false;
    bool independent = false;
    // Form indices grouped by the hyperplane of Y they cut out, ordered by
    // least index.
    std::vector<std::vector<std::size_t>> classes;
    std::string diagnostic;

    bool ok() const { return not_contained && independent; }
};

/// A projective linear subspace Y of P^n, parametrized by the rows of
/// `points` (its reduced echelon basis), together with the restrictions of
/// every form to that parameter space.
struct WitnessSubspace {
    PointSpace points;
    int dim = -1;
    std::vector<Vector> restrictions;
    CondCheck verification;
};

namespace detail {

// (1, t, t^2, ..., t^(width-1))
inline Vector moment_point(std::size_t width, long t) {
    Vector v(width, Rational(0));
    Rational power = 1;
    for (std::size_t i = 0; i < width; ++i) {
        v[i] = power;
        power *= t;
    }
    return v;
}

// First point on the integer moment curve, t = 0, 1, 2, ..., at which no
// covector vanishes. Each covector is a nonzero polynomial of degree below
// `width` in t, so at most covectors * (width - 1) values of t are bad.
inline Vector first_moment_point_off(std::size_t width, const std::vector<Vector>& covectors) {
    const long tries = static_cast<long>(covectors.size() * (width - 1) + 1);
    for (long t = 0; t < tries; ++t) {
        Vector p = moment_point(width, t);
        bool clear = true;
        for (const auto& c : covectors) {
            if (dot(c, p) == 0) {
                clear = false;
                break;
            }
        }
        if (clear) return p;
    }
    throw InternalError("no moment-curve point avoids the given covectors");
}

inline std::vector<Vector> restrict_forms(const Arrangement& a, const PointSpace& y) {
    std::vector<Vector> out;
    out.reserve(a.size());
    for (const auto& f : a.forms()) {
        Vector r;
        r.reserve(y.rank());
        for (const auto& p : y.basis()) r.push_back(f(p));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

/// Checks Y against the arrangement: (i) no form vanishes identically on Y,
/// (ii) the distinct restricted hyperplanes are cut out by linearly
/// independent forms on Y.
inline CondCheck verify_cond(const Arrangement& a, const PointSpace& y) {
    CondCheck out;
    if (y.ambient_dim() != a.width())
        throw DimensionMismatch("witness lives in dimension " + std::to_string(y.ambient_dim()) +
                                ", arrangement in " + std::to_string(a.width()));
    if (y.is_zero()) {
        out.diagnostic = "empty subspace";
        return out;
    }
    const auto restrictions = detail::restrict_forms(a, y);
    for (std::size_t i = 0; i < restrictions.size(); ++i) {
        if (is_zero(restrictions[i])) {
            out.diagnostic = "contained in arrangement: Y lies in hyperplane " + std::to_string(i);
            return out;
        }
    }
    out.not_contained = true;

    std::map<Vector, std::size_t, bool (*)(const Vector&, const Vector&)> class_of(
        [](const Vector& x, const Vector& z) { return compare_lex(x, z) < 0; });
    std::vector<Vector> representatives;
    for (std::size_t i = 0; i < restrictions.size(); ++i) {
        const Vector key = primitive_integer(restrictions[i]);
        auto [it, inserted] = class_of.emplace(key, out.classes.size());
        if (inserted) {
            out.classes.emplace_back();
            representatives.push_back(key);
        }
        out.classes[it->second].push_back(i);
    }
    out.independent = matrix_rank(y.rank(), representatives) == representatives.size();
    if (!out.independent)
        out.diagnostic = std::to_string(representatives.size()) +
                         " restricted hyperplanes are linearly dependent on Y";
    return out;
}

inline CondCheck verify_cond(const Arrangement& a, const WitnessSubspace& y) {
    return verify_cond(a, y.points);
}

/// Packages Y as a witness, filling in restrictions and the verification record.
inline WitnessSubspace make_witness(const Arrangement& a, PointSpace y) {
    WitnessSubspace w{y, static_cast<int>(y.rank()) - 1, detail::restrict_forms(a, y), {}};
    w.verification = verify_cond(a, w.points);
    return w;
}

/// A hyperplane V of `container` with inside ⊆ V that contains none of the
/// `avoid` vectors.
///
/// Pick a complement c_1..c_k of `inside` in `container`, write each avoid
/// vector's complement coordinates a(x), and look for a functional
/// phi = (1, t, ..., t^(k-1)) with phi(a(x)) != 0 for every x, trying
/// t = 0, 1, 2, ... in turn. Then V = inside + ker(phi).
inline FormSpace generic_avoiding_extension(const FormSpace& container, const FormSpace& inside,
                                            const std::vector<Vector>& avoid) {
    if (container.ambient_dim() != inside.ambient_dim())
        throw DimensionMismatch("generic_avoiding_extension: ambient dimensions differ");
    if (!is_subspace_of(inside, container) || inside.rank() == container.rank())
        throw PreconditionError("generic_avoiding_extension: inside must be a proper subspace");
    for (const auto& x : avoid) {
        if (!container.contains(x))
            throw PreconditionError("generic_avoiding_extension: avoid vector outside container");
        if (inside.contains(x))
            throw PreconditionError(
                "generic_avoiding_extension: avoid vector lies in inside; no hyperplane avoids it");
    }

    std::vector<Vector> frame = inside.basis();
    std::vector<Vector> complement;
    for (const auto& row : container.basis()) {
        if (FormSpace::spanned_by(container.ambient_dim(), frame).contains(row)) continue;
        frame.push_back(row);
        complement.push_back(row);
    }
    const std::size_t q = inside.rank();
    const std::size_t k = complement.size();
    if (k == 1) return inside;

    std::vector<Vector> coords;
    for (const auto& x : avoid) {
        auto c = express_in(frame, x);
        if (!c) throw InternalError("avoid vector left the container frame");
        coords.emplace_back(c->begin() + static_cast<std::ptrdiff_t>(q), c->end());
    }

    const Vector phi = detail::first_moment_point_off(k, coords);
    std::vector<Vector> rows = inside.basis();
    for (std::size_t j = 1; j < k; ++j) {
        Vector v = complement[j];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= phi[j] * complement[0][c];
        rows.push_back(std::move(v));
    }
    return FormSpace::spanned_by(container.ambient_dim(), rows);
}

namespace detail {

inline void require_chain_step(const Arrangement& a, const std::vector<FormSpace>& blocks,
                               const std::vector<FormSpace>& spaces, std::size_t i) {
    auto fail = [&](const std::string& what) {
        throw InternalError("U-chain step " + std::to_string(i) + ": " + what);
    };
    const FormSpace& u = spaces[i];
    if (i > 0 && !is_subspace_of(spaces[i - 1], u)) fail("not nested");
    if (i > 0 && intersect(u, blocks[i - 1]).rank() + 1 != blocks[i - 1].rank())
        fail("does not meet its block span in a hyperplane");
    for (const auto& f : a.forms())
        if (u.contains(f.coeffs())) fail("contains a form of the arrangement");
    FormSpace pieces(a.width());
    for (const auto& b : blocks) pieces = sum(pieces, intersect(u, b));
    if (!(pieces == u)) fail("is not the sum of its block pieces");
}

}  // namespace detail

/// Builds U_0 ⊆ ... ⊆ U_p for a valid partition. U_0 is the space W of the
/// partition check; U_i adds to U_{i-1} a hyperplane of block i's span that
/// contains U_{i-1} ∩ (L_i) and avoids every form of block i. Every step is
/// checked against the chain invariants, and so are the final dimension
/// counts; a failure throws InternalError.
inline UChain build_u_chain(const Arrangement& a, const Partition& p) {
    const PartitionCheck check = check_partition(a, p);
    if (!check.valid) throw PreconditionError("build_u_chain: partition fails the criterion");

    const int m = compute_m(a);
    const auto block_indices = p.blocks();
    std::vector<FormSpace> blocks;
    for (const auto& b : block_indices) blocks.push_back(a.span_of(b));

    UChain chain{p, {check.w_space}, m + static_cast<int>(p.block_count())};
    detail::require_chain_step(a, blocks, chain.spaces, 0);

    for (std::size_t i = 1; i <= blocks.size(); ++i) {
        const FormSpace& previous = chain.spaces.back();
        const FormSpace& block = blocks[i - 1];
        std::vector<Vector> avoid;
        for (std::size_t f : block_indices[i - 1]) avoid.push_back(a.form(f).coeffs());
        const FormSpace v = generic_avoiding_extension(block, intersect(previous, block), avoid);
        chain.spaces.push_back(sum(previous, v));
        detail::require_chain_step(a, blocks, chain.spaces, i);
    }

    // sum_i dim(L_i) - sum_j dim((L_{j+1}) ∩ sum_{i<=j} (L_i)) = n - m
    long counted = 0;
    FormSpace prefix(a.width());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        counted += static_cast<long>(blocks[j].rank());
        counted -= static_cast<long>(intersect(blocks[j], prefix).rank());
        prefix = sum(prefix, blocks[j]);
    }
    if (counted != a.n() - m) throw InternalError("block dimension count does not equal n - m");
    if (static_cast<int>(chain.spaces.back().rank()) != a.n() - chain.dimension)
        throw InternalError("final U-space has rank " + std::to_string(chain.spaces.back().rank()) +
                            ", expected n - d = " + std::to_string(a.n() - chain.dimension));
    return chain;
}

/// Y = Z(U_p), verified.
inline WitnessSubspace witness_subspace(const Arrangement& a, const UChain& chain) {
    WitnessSubspace w = make_witness(a, zero_set(chain.spaces.back()));
    if (w.dim != chain.dimension)
        throw InternalError("witness has dimension " + std::to_string(w.dim) + ", expected " +
                            std::to_string(chain.dimension));
    if (!w.verification.ok()) throw InternalError("witness fails verification: " + w.verification.diagnostic);
    return w;
}

/// The baseline witness of dimension m + 1: a point off every hyperplane
/// when m = -1, otherwise the span of the common zero set and such a point.
inline WitnessSubspace build_witness_for_mplus1(const Arrangement& a) {
    const Vector off = detail::first_moment_point_off(a.width(), a.coefficient_rows());
    std::vector<Vector> rows = zero_set(a.form_space()).basis();
    rows.push_back(off);
    WitnessSubspace w = make_witness(a, PointSpace::spanned_by(a.width(), rows));
    if (w.dim != compute_m(a) + 1 || !w.verification.ok())
        throw InternalError("baseline witness failed verification: " + w.verification.diagnostic);
    return w;
}

/// A witness of dimension d_target inside y.
///
/// With the restricted hyperplanes H_1..H_k of Y (in class order) and
/// c = dim Y + 1 - d_target: intersect the first min(k, c) of them, keep
/// d_target independent points of that intersection and add one point of Y
/// off every H_i.
inline WitnessSubspace shrink_witness(const Arrangement& a, const WitnessSubspace& y,
                                      int d_target) {
    if (d_target < 0 || d_target > y.dim)
        throw PreconditionError("shrink_witness: target dimension out of range");
    const CondCheck check = verify_cond(a, y.points);
    if (!check.ok()) throw PreconditionError("shrink_witness: input witness is not valid");
    if (d_target == y.dim) return y;

    const std::size_t param = static_cast<std::size_t>(y.dim) + 1;
    const auto restrictions = detail::restrict_forms(a, y.points);
    std::vector<Vector> hyperplanes;
    for (const auto& cls : check.classes) hyperplanes.push_back(restrictions[cls.front()]);

    const std::size_t cut = std::min(hyperplanes.size(), param - static_cast<std::size_t>(d_target));
    const std::vector<Vector> first(hyperplanes.begin(),
                                    hyperplanes.begin() + static_cast<std::ptrdiff_t>(cut));
    const PointSpace meet = zero_set(FormSpace::spanned_by(param, first));

    std::vector<Vector> chosen(meet.basis().begin(),
                               meet.basis().begin() + static_cast<std::ptrdiff_t>(d_target));
    chosen.push_back(detail::first_moment_point_off(param, hyperplanes));

    std::vector<Vector> ambient_rows;
    for (const auto& c : chosen) {
        Vector pt(a.width(), Rational(0));
        for (std::size_t k = 0; k < param; ++k)
            for (std::size_t j = 0; j < pt.size(); ++j) pt[j] += c[k] * y.points.basis()[k][j];
        ambient_rows.push_back(std::move(pt));
    }
    WitnessSubspace w = make_witness(a, PointSpace::spanned_by(a.width(), ambient_rows));
    if (w.dim != d_target || !w.verification.ok())
        throw InternalError("shrunk witness failed verification: " + w.verification.diagnostic);
    return w;
}

/// The partition a verified witness induces: group forms by the hyperplane
/// of Y they cut out, then merge the first m + 1 - m' groups, where m' is
/// the dimension of the common intersection inside Y. The result has
/// dim Y - m blocks; nullopt when that is below two.
inline std::optional<Partition> induced_partition(const Arrangement& a, const WitnessSubspace& y) {
    const CondCheck check = verify_cond(a, y.points);
    if (!check.ok()) throw PreconditionError("induced_partition: witness is not valid");
    const int m = compute_m(a);
    if (y.dim - m < 2) return std::nullopt;
    const int k = static_cast<int>(check.classes.size());
    const int m_inside = y.dim - k;
    if (m_inside > m) throw InternalError("restricted arrangement meets in more than the common zero set");

    const std::size_t merge = static_cast<std::size_t>(m + 1 - m_inside);
    std::vector<std::vector<std::size_t>> blocks(1);
    for (std::size_t c = 0; c < check.classes.size(); ++c) {
        if (c < merge) {
            blocks[0].insert(blocks[0].end(), check.classes[c].begin(), check.classes[c].end());
        } else {
            blocks.push_back(check.classes[c]);
        }
    }
    return Partition::from_blocks(blocks, a.size());
}

}  // namespace hyperdim
