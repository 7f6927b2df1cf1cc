#pragma once

#include <map>
#include <span>
#include <vector>

#include "gring/groebner.hpp"

namespace gring {

/// Per-degree dimensions of a graded quotient, degrees 0..D.
class HilbertTable {
public:
    HilbertTable() = default;
    explicit HilbertTable(std::vector<long long> dims) : dims_(std::move(dims)) {}

    long long max_degree() const { return static_cast<long long>(dims_.size()) - 1; }
    long long at(long long d) const { return dims_.at(static_cast<std::size_t>(d)); }
    const std::vector<long long>& values() const { return dims_; }

    bool operator==(const HilbertTable&) const = default;

private:
    std::vector<long long> dims_;
};

/// All monomials of the given weighted degree, in descending canonical order.
inline std::vector<Monomial> monomials_of_weighted_degree(std::span<const int> weights,
                                                          long long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<std::int32_t> exps(weights.size(), 0);
    const auto recurse = [&](auto&& self, std::size_t var, long long remaining) -> void {
        if (var + 1 == weights.size()) {
            if (remaining % weights[var] == 0) {
                exps[var] = static_cast<std::int32_t>(remaining / weights[var]);
                out.emplace_back(exps);
                exps[var] = 0;
            }
            return;
        }
        for (long long e = 0; e * weights[var] <= remaining; ++e) {
            exps[var] = static_cast<std::int32_t>(e);
            self(self, var + 1, remaining - e * weights[var]);
        }
        exps[var] = 0;
    };
    recurse(recurse, 0, degree);
    std::vector<int> w(weights.begin(), weights.end());
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        for (std::size_t i = w.size(); i-- > 0;) {
            const auto diff = a[i] - b[i];
            if (diff != 0) return diff < 0;
        }
        return false;
    });
    return out;
}

template <class F>
void require_homogeneous(const Ideal<F>& ideal) {
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous())
            throw std::invalid_argument("ideal is not homogeneous; offending generator: " +
                                        g.to_string());
}

/// Hilbert function of ring/I in degrees 0..D by standard-monomial counting:
/// entry d is the number of degree-d monomials outside the leading-term ideal
/// of a (degree-D truncated) Groebner basis.
template <class F>
HilbertTable hilbert_function(const Ideal<F>& ideal, long long max_degree = 14) {
    require_homogeneous(ideal);
    const auto& ring = ideal.ring();
    const auto gb = groebner_basis(ideal, MonomialOrder::wdegrevlex(ring), max_degree);
    std::vector<Monomial> leads;
    leads.reserve(gb.elements.size());
    for (const auto& g : gb.elements) leads.push_back(g.leading_term().mono);
    std::vector<long long> dims;
    dims.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (long long d = 0; d <= max_degree; ++d) {
        long long count = 0;
        for (const auto& m : monomials_of_weighted_degree(ring->weights(), d)) {
            bool standard = true;
            for (const auto& lm : leads)
                if (lm.divides(m)) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
        }
        dims.push_back(count);
    }
    return HilbertTable(std::move(dims));
}

namespace detail {

/// Rank of a dense matrix over F by Gaussian elimination.
template <class F>
std::size_t matrix_rank(const F& k, std::vector<std::vector<typename F::Element>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t found = pivot_row;
        while (found < rows.size() && k.is_zero(rows[found][col])) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        const auto inv = k.inv(rows[pivot_row][col]);
        for (std::size_t c = col; c < cols; ++c)
            rows[pivot_row][c] = k.mul(rows[pivot_row][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || k.is_zero(rows[r][col])) continue;
            const auto factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = k.sub(rows[r][c], k.mul(factor, rows[pivot_row][c]));
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Degree-d quotient dimension without Groebner bases: the span of
/// { m*g : g generator, m monomial of complementary degree } is row-reduced
/// inside the degree-d coefficient space.
template <class F>
long long dim_by_linear_algebra(const Ideal<F>& ideal, long long degree) {
    require_homogeneous(ideal);
    const auto& ring = ideal.ring();
    const F& k = ring->field();
    const auto basis_monos = monomials_of_weighted_degree(ring->weights(), degree);
    if (basis_monos.empty()) return 0;
    std::map<std::vector<std::int32_t>, std::size_t> column;
    for (std::size_t i = 0; i < basis_monos.size(); ++i) {
        auto e = basis_monos[i].exponents();
        column.emplace(std::vector<std::int32_t>(e.begin(), e.end()), i);
    }
    std::vector<std::vector<typename F::Element>> rows;
    for (const auto& g : ideal.generators()) {
        const long long dg = *g.weighted_degree();
        if (dg > degree) continue;
        for (const auto& m : monomials_of_weighted_degree(ring->weights(), degree - dg)) {
            std::vector<typename F::Element> row(basis_monos.size(), k.zero());
            for (const auto& t : g.terms()) {
                const Monomial prod = t.mono.times(m);
                auto e = prod.exponents();
                row[column.at(std::vector<std::int32_t>(e.begin(), e.end()))] = t.coef;
            }
            rows.push_back(std::move(row));
        }
    }
    const auto rank = detail::matrix_rank(k, std::move(rows));
    return static_cast<long long>(basis_monos.size()) - static_cast<long long>(rank);
}

}  // namespace gring
