#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hyperdim {

namespace detail {

// Gauss-Jordan elimination in place. On return `rows` holds the reduced
// row-echelon form with zero rows dropped; the result lists pivot columns.
inline std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
        std::size_t found = next;
        while (found < rows.size() && rows[found][col] == 0) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);

        const Rational inv = 1 / rows[next][col];
        for (std::size_t k = col; k < width; ++k) rows[next][k] *= inv;

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i][col] == 0) continue;
            const Rational factor = rows[i][col];
            for (std::size_t k = col; k < width; ++k) rows[i][k] -= factor * rows[next][k];
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    return pivots;
}

inline void require_width(std::span<const Vector> vectors, std::size_t width, const char* what) {
    for (const auto& v : vectors)
        if (v.size() != width)
            throw DimensionMismatch(std::string(what) + ": vector of length " +
                                    std::to_string(v.size()) + " in ambient dimension " +
                                    std::to_string(width));
}

// Null space basis of a matrix already in reduced row-echelon form.
inline std::vector<Vector> kernel_of_rref(const std::vector<Vector>& rref,
                                          const std::vector<std::size_t>& pivots,
                                          std::size_t width) {
    std::vector<bool> is_pivot(width, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < width; ++free) {
        if (is_pivot[free]) continue;
        Vector v(width, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rref[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

// Semantic roles. Linear forms (covectors) and points live in spaces of the
// same size but must not be mixed; `zero_set` is the bridge between them.
struct FormRole {};
struct PointRole {};

/// A linear subspace of Q^ambient_dim stored as its reduced row-echelon basis.
///
/// The basis is canonical: two Subspace values describe the same space iff
/// they compare equal.
template <class Role>
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {
        if (ambient_dim == 0) throw DimensionMismatch("ambient dimension must be positive");
    }

    static Subspace spanned_by(std::size_t ambient_dim, std::span<const Vector> vectors) {
        Subspace out(ambient_dim);
        detail::require_width(vectors, ambient_dim, "span");
        out.basis_.assign(vectors.begin(), vectors.end());
        out.pivots_ = detail::reduce_rows(out.basis_, ambient_dim);
        return out;
    }

    static Subspace full(std::size_t ambient_dim) {
        std::vector<Vector> unit;
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            Vector e(ambient_dim, Rational(0));
            e[i] = 1;
            unit.push_back(std::move(e));
        }
        return spanned_by(ambient_dim, unit);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Coefficients of x in this basis, or nullopt when x is not in the space.
    // With a reduced basis the coefficient on row k is x[pivot_k].
    std::optional<Vector> coordinates(const Vector& x) const {
        if (x.size() != ambient_)
            throw DimensionMismatch("coordinates: vector of length " + std::to_string(x.size()) +
                                    " in ambient dimension " + std::to_string(ambient_));
        Vector coeff;
        coeff.reserve(basis_.size());
        Vector residual = x;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Rational c = residual[pivots_[k]];
            coeff.push_back(c);
            if (c == 0) continue;
            for (std::size_t j = pivots_[k]; j < ambient_; ++j) residual[j] -= c * basis_[k][j];
        }
        if (!is_zero_vector(residual)) return std::nullopt;
        return coeff;
    }

    bool contains(const Vector& x) const { return coordinates(x).has_value(); }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    static bool is_zero_vector(const Vector& v) { return hyperdim::is_zero(v); }

    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

using FormSpace = Subspace<FormRole>;
using PointSpace = Subspace<PointRole>;

template <class Role = FormRole>
Subspace<Role> span(std::size_t ambient_dim, std::span<const Vector> vectors) {
    return Subspace<Role>::spanned_by(ambient_dim, vectors);
}

template <class Role = FormRole>
Subspace<Role> span(std::size_t ambient_dim, std::initializer_list<Vector> vectors) {
    const std::vector<Vector> v(vectors);
    return Subspace<Role>::spanned_by(ambient_dim, v);
}

namespace detail {
template <class Role>
void require_same_ambient(const Subspace<Role>& u, const Subspace<Role>& v, const char* what) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch(std::string(what) + ": ambient dimensions " +
                                std::to_string(u.ambient_dim()) + " and " +
                                std::to_string(v.ambient_dim()));
}
}  // namespace detail

template <class Role>
Subspace<Role> sum(const Subspace<Role>& u, const Subspace<Role>& v) {
    detail::require_same_ambient(u, v, "sum");
    if (v.is_zero()) return u;
    if (u.is_zero()) return v;
    std::vector<Vector> rows = u.basis();
    rows.insert(rows.end(), v.basis().begin(), v.basis().end());
    return Subspace<Role>::spanned_by(u.ambient_dim(), rows);
}

/// Intersection by the Zassenhaus block method.
///
/// Row-reduce the 2N-wide block matrix [u | u ; v | 0]. Rows whose left half
/// vanished carry a basis of u ∩ v in their right half.
template <class Role>
Subspace<Role> intersect(const Subspace<Role>& u, const Subspace<Role>& v) {
    detail::require_same_ambient(u, v, "intersect");
    const std::size_t n = u.ambient_dim();
    if (u.is_zero() || v.is_zero()) return Subspace<Role>(n);
    if (u.is_full()) return v;
    if (v.is_full()) return u;

    std::vector<Vector> block;
    block.reserve(u.rank() + v.rank());
    for (const auto& row : u.basis()) {
        Vector b(2 * n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) b[j] = b[n + j] = row[j];
        block.push_back(std::move(b));
    }
    for (const auto& row : v.basis()) {
        Vector b(2 * n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) b[j] = row[j];
        block.push_back(std::move(b));
    }
    const auto pivots = detail::reduce_rows(block, 2 * n);

    std::vector<Vector> meet;
    for (std::size_t k = 0; k < block.size(); ++k) {
        if (pivots[k] < n) continue;
        meet.emplace_back(block[k].begin() + static_cast<std::ptrdiff_t>(n), block[k].end());
    }
    return Subspace<Role>::spanned_by(n, meet);
}

template <class Role>
bool contains(const Subspace<Role>& u, const Vector& x) {
    return u.contains(x);
}

template <class Role>
bool is_subspace_of(const Subspace<Role>& inner, const Subspace<Role>& outer) {
    detail::require_same_ambient(inner, outer, "is_subspace_of");
    for (const auto& row : inner.basis())
        if (!outer.contains(row)) return false;
    return true;
}

/// Z(forms): the points on which every form in the space vanishes.
/// Its rank is ambient − rank(forms); the projective dimension is one less.
inline PointSpace zero_set(const FormSpace& forms) {
    const auto kernel = detail::kernel_of_rref(forms.basis(), forms.pivots(), forms.ambient_dim());
    return PointSpace::spanned_by(forms.ambient_dim(), kernel);
}

// The forms vanishing on every point of `points`.
inline FormSpace annihilator(const PointSpace& points) {
    const auto kernel =
        detail::kernel_of_rref(points.basis(), points.pivots(), points.ambient_dim());
    return FormSpace::spanned_by(points.ambient_dim(), kernel);
}

/// Coefficients c with x = sum_k c_k rows[k], or nullopt when x is outside
/// their span. The rows must be linearly independent.
inline std::optional<Vector> express_in(std::span<const Vector> rows, const Vector& x) {
    const std::size_t k = rows.size();
    detail::require_width(rows, x.size(), "express_in");
    // Augmented system [rows^T | x], one equation per coordinate.
    std::vector<Vector> system;
    system.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        Vector eq(k + 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i) eq[i] = rows[i][j];
        eq[k] = x[j];
        system.push_back(std::move(eq));
    }
    const auto pivots = detail::reduce_rows(system, k + 1);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    if (pivots.size() != k) throw PreconditionError("express_in: rows are linearly dependent");
    Vector coeff(k, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) coeff[pivots[r]] = system[r][k];
    return coeff;
}

// Rank of an arbitrary list of same-length vectors.
inline std::size_t matrix_rank(std::size_t width, std::span<const Vector> rows) {
    return FormSpace::spanned_by(width, rows).rank();
}

}  // namespace hyperdim
