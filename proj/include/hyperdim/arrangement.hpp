#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_linalg.hpp"
#include "rational.hpp"

namespace hyperdim {

/// A nonzero linear form in x_0..x_n, stored as the primitive integer
/// representative of its projective class (gcd 1, first nonzero entry > 0).
class LinearForm {
public:
    explicit LinearForm(const Vector& coeffs) : coeffs_(primitive_integer(coeffs)) {
        if (hyperdim::is_zero(coeffs_)) throw InputError("zero linear form");
    }

    const Vector& coeffs() const { return coeffs_; }
    std::size_t arity() const { return coeffs_.size(); }
    Rational operator()(const Vector& point) const { return dot(coeffs_, point); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    Vector coeffs_;
};

// Canonical form order: descending lexicographic on the primitive
// coefficients, which lists x_0, x_1, ..., x_n in their natural order.
inline bool canonical_before(const LinearForm& a, const LinearForm& b) {
    return compare_lex(a.coeffs(), b.coeffs()) > 0;
}

/// The set of hyperplanes of P^n, one canonical form per hyperplane.
class Arrangement {
public:
    /// Canonicalizes, deduplicates by projective class and sorts the input.
    /// Throws InputError for n < 1, an empty list, wrong arity or a zero form.
    static Arrangement load(int n, const std::vector<Vector>& raw_forms) {
        if (n < 1) throw InputError("projective dimension n must be at least 1");
        if (raw_forms.empty()) throw InputError("arrangement has no forms");
        const std::size_t width = static_cast<std::size_t>(n) + 1;

        std::vector<std::pair<LinearForm, std::size_t>> tagged;
        tagged.reserve(raw_forms.size());
        for (std::size_t i = 0; i < raw_forms.size(); ++i) {
            if (raw_forms[i].size() != width)
                throw InputError("form " + std::to_string(i) + " has " +
                                 std::to_string(raw_forms[i].size()) + " coefficients, expected " +
                                 std::to_string(width));
            if (hyperdim::is_zero(raw_forms[i]))
                throw InputError("zero form at index " + std::to_string(i));
            tagged.emplace_back(LinearForm(raw_forms[i]), i);
        }
        std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
            return canonical_before(a.first, b.first);
        });

        Arrangement out;
        out.n_ = n;
        for (auto& [form, source] : tagged) {
            if (!out.forms_.empty() && out.forms_.back() == form) {
                out.sources_.back().push_back(source);
                continue;
            }
            out.forms_.push_back(std::move(form));
            out.sources_.push_back({source});
        }
        return out;
    }

    int n() const { return n_; }
    std::size_t width() const { return static_cast<std::size_t>(n_) + 1; }
    std::size_t size() const { return forms_.size(); }
    const std::vector<LinearForm>& forms() const { return forms_; }
    const LinearForm& form(std::size_t i) const { return forms_.at(i); }

    // Input row indices that collapsed onto each canonical form.
    const std::vector<std::vector<std::size_t>>& sources() const { return sources_; }

    std::vector<Vector> coefficient_rows() const {
        std::vector<Vector> rows;
        rows.reserve(forms_.size());
        for (const auto& f : forms_) rows.push_back(f.coeffs());
        return rows;
    }

    // Span of the forms selected by `indices`.
    template <class Indices>
    FormSpace span_of(const Indices& indices) const {
        std::vector<Vector> rows;
        for (std::size_t i : indices) rows.push_back(forms_.at(i).coeffs());
        return FormSpace::spanned_by(width(), rows);
    }

    FormSpace form_space() const { return FormSpace::spanned_by(width(), coefficient_rows()); }

private:
    Arrangement() = default;

    int n_ = 0;
    std::vector<LinearForm> forms_;
    std::vector<std::vector<std::size_t>> sources_;
};

struct ArrangementProfile {
    int n = 0;
    std::size_t r = 0;
    int m = -1;
    std::size_t s = 0;
    bool general_position = false;
};

/// Dimension of the common intersection of all hyperplanes; -1 when empty.
inline int compute_m(const Arrangement& a) {
    return a.n() - static_cast<int>(a.form_space().rank());
}

/// Largest number of hyperplanes with a common point, i.e. the largest subset
/// of forms whose span has rank at most n.
///
/// Depth-first over include/exclude decisions. A form already in the current
/// span is always included (it costs no rank), a branch dies once its rank
/// would reach n+1, and a branch that cannot beat the incumbent is cut.
inline std::size_t compute_s(const Arrangement& a) {
    const std::size_t r = a.size();
    const std::size_t cap = static_cast<std::size_t>(a.n());
    if (a.form_space().rank() <= cap) return r;

    std::size_t best = 0;
    std::vector<Vector> chosen;
    std::function<void(std::size_t, const FormSpace&, std::size_t)> walk =
        [&](std::size_t next, const FormSpace& current, std::size_t count) {
            if (count + (r - next) <= best) return;
            if (next == r) {
                best = count;
                return;
            }
            const Vector& f = a.form(next).coeffs();
            if (current.contains(f)) {
                walk(next + 1, current, count + 1);
                return;
            }
            if (current.rank() + 1 <= cap) {
                std::vector<Vector> rows = current.basis();
                rows.push_back(f);
                walk(next + 1, FormSpace::spanned_by(a.width(), rows), count + 1);
            }
            walk(next + 1, current, count);
        };
    walk(0, FormSpace(a.width()), 0);
    return best;
}

/// Every subset of min(r, n+1) forms is linearly independent.
inline bool is_general_position(const Arrangement& a) {
    const std::size_t r = a.size();
    const std::size_t k = std::min(r, a.width());
    if (r <= a.width()) return a.form_space().rank() == r;

    // Walk all k-combinations in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (a.span_of(idx).rank() != k) return false;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == r - k + (pos - 1)) --pos;
        if (pos == 0) return true;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline ArrangementProfile profile(const Arrangement& a) {
    return {a.n(), a.size(), compute_m(a), compute_s(a), is_general_position(a)};
}

}  // namespace hyperdim
