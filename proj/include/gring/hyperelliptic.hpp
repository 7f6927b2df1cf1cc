#pragma once

#include <vector>

#include "gring/hilbert.hpp"
#include "gring/rng.hpp"

namespace gring {

/// dim of the degree-n piece of C[X,Y,T]/(T^2 - P14), deg(X,Y,T) = (1,2,7):
/// as a module this is C[X,Y] + T*C[X,Y], so the count is
/// #{(a,b) : a+2b = n} + #{(a,b) : a+2b = n-7}.
inline long long weierstrass_ring_dim(long long n) {
    const auto pairs = [](long long m) { return m < 0 ? 0 : m / 2 + 1; };
    return pairs(n) + pairs(n - 7);
}

/// Degree map of the 3/2-subring: subring degree 2d sits in ring degree 3d,
/// subring degree 2d+1 in ring degree 3d+1.
inline long long subring_degree_image(long long d) { return 3 * (d / 2) + (d % 2); }

/// Hilbert table of the 3/2-subring of the Weierstrass ring, degrees 0..D,
/// computed purely by monomial counting.
inline HilbertTable curve_dims_oracle(long long max_degree) {
    std::vector<long long> dims;
    dims.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (long long d = 0; d <= max_degree; ++d)
        dims.push_back(weierstrass_ring_dim(subring_degree_image(d)));
    return HilbertTable(std::move(dims));
}

/// Dimensions of the graded pieces of the surface's semicanonical ring:
/// 1, 2, 4, 7 in degrees 0..3, then 5 + 3m(m-1) in degree 2m and
/// 7 + 3(m+1)(m-1) in degree 2m+1.
inline long long semicanonical_dims(long long d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d == 0) return 1;
    if (d == 1) return 2;
    if (d == 2) return 4;
    if (d % 2 == 1) {
        const long long m = (d - 1) / 2;
        return 7 + 3 * (m + 1) * (m - 1);
    }
    const long long m = d / 2;
    return 5 + 3 * m * (m - 1);
}

template <class F>
RingPtr<F> hyperelliptic_ring(const F& field) {
    return make_ring<F>({"X", "Y"}, {1, 2}, field);
}

/// A genus-3 hyperelliptic Weierstrass-point model: the ring
/// C[X,Y,T]/(T^2 - P14) with P14 homogeneous of degree 14 whose Y^7
/// coefficient is normalized to 1.
template <class F>
struct HyperellipticModel {
    Polynomial<F> p14;  // over the ring (X:1, Y:2)

    explicit HyperellipticModel(Polynomial<F> poly) : p14(std::move(poly)) {
        const auto& ring = p14.ring();
        if (ring->names() != std::vector<std::string>{"X", "Y"} ||
            ring->weights() != std::vector<int>{1, 2})
            throw std::invalid_argument("P14 must live in the ring (X:1, Y:2)");
        if (p14.is_zero() || p14.weighted_degree() != 14)
            throw std::invalid_argument("P14 must be homogeneous of degree 14");
        const Monomial y7(std::vector<std::int32_t>{0, 7});
        if (!ring->field().is_one(p14.coefficient(y7)))
            throw std::invalid_argument("the Y^7 coefficient of P14 must be 1");
    }
};

template <class F>
HyperellipticModel<F> random_hyperelliptic_model(const F& field, std::uint64_t seed) {
    auto ring = hyperelliptic_ring(field);
    SplitMix64 rng(seed);
    auto p = random_homogeneous(ring, 14, rng);
    const Monomial y7(std::vector<std::int32_t>{0, 7});
    p = p - Polynomial<F>::monomial_term(ring, y7, p.coefficient(y7)) +
        Polynomial<F>::monomial_term(ring, y7, field.one());
    return HyperellipticModel<F>(std::move(p));
}

/// Per-degree outcome of the spanning check for the six subring generators
/// x=X, y=XY, z=Y^2, w=Y^3, v=T, u=YT.
struct SubringSpanRow {
    long long degree = 0;
    long long expected_dim = 0;
    long long achieved_rank = 0;
    bool spans = false;
};

struct SubringSpanResult {
    std::vector<SubringSpanRow> rows;
    bool all_span = true;
};

/// Checks, for each degree d <= D, that products of the six generators span
/// the degree-d piece of the 3/2-subring inside C[X,Y] + T*C[X,Y], reducing
/// T^2 via P14. Products of generators of odd subring degree pick up the
/// extra X factors demanded by the subring multiplication.
template <class F>
SubringSpanResult subring_generation_check(const HyperellipticModel<F>& model,
                                           long long max_degree) {
    const auto& ring2 = model.p14.ring();
    const F& k = ring2->field();
    static const std::vector<int> kGenWeights{1, 2, 3, 4, 5, 6};
    SubringSpanResult result;
    for (long long d = 0; d <= max_degree; ++d) {
        const long long n = subring_degree_image(d);
        // column layout: monomials X^aY^b with a+2b = n, then T*X^aY^b with a+2b = n-7
        const auto plain = monomials_of_weighted_degree(ring2->weights(), n);
        const auto tpart = monomials_of_weighted_degree(ring2->weights(), n - 7);
        const auto col_of = [&](const std::vector<Monomial>& monos, const Monomial& m,
                                std::size_t base) {
            for (std::size_t i = 0; i < monos.size(); ++i)
                if (monos[i] == m) return base + i;
            throw std::logic_error("monomial outside the expected degree slice");
        };
        const std::size_t cols = plain.size() + tpart.size();
        std::vector<std::vector<typename F::Element>> rows;
        for (const auto& e : monomials_of_weighted_degree(kGenWeights, d)) {
            // value of x^e0 y^e1 z^e2 w^e3 v^e4 u^e5 in C[X,Y] + T*C[X,Y]
            const std::int32_t odd_factors = e[0] + e[2] + e[4];
            const std::int32_t t_power = e[4] + e[5];
            const Monomial base(std::vector<std::int32_t>{e[0] + e[1] + odd_factors / 2,
                                                          e[1] + 2 * e[2] + 3 * e[3] + e[5]});
            Polynomial<F> value = Polynomial<F>::monomial_term(ring2, base, k.one());
            if (t_power >= 2) value = value * model.p14.pow(static_cast<unsigned>(t_power / 2));
            const bool has_t = t_power % 2 == 1;
            std::vector<typename F::Element> row(cols, k.zero());
            for (const auto& t : value.terms())
                row[has_t ? col_of(tpart, t.mono, plain.size()) : col_of(plain, t.mono, 0)] =
                    t.coef;
            rows.push_back(std::move(row));
        }
        const auto rank = cols == 0 ? 0 : detail::matrix_rank(k, std::move(rows));
        SubringSpanRow row{d, static_cast<long long>(cols), static_cast<long long>(rank),
                           static_cast<long long>(rank) == static_cast<long long>(cols)};
        result.all_span = result.all_span && row.spans;
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace gring
