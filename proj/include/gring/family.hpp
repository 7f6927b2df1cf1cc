#pragma once

#include <span>
#include <string>
#include <vector>

#include "gring/hilbert.hpp"
#include "gring/rng.hpp"
#include "gring/skew.hpp"

namespace gring {

template <class F>
RingPtr<F> family_spec_ring(const F& field) {
    return make_ring<F>({"x0", "x1", "y", "z", "w"}, {1, 1, 2, 3, 4}, field);
}

template <class F>
RingPtr<F> family_ring7(const F& field) {
    return make_ring<F>({"x0", "x1", "y", "z", "w", "v", "u"}, {1, 1, 2, 3, 4, 5, 6}, field);
}

template <class F>
RingPtr<F> hypersurface_ring(const F& field) {
    return make_ring<F>({"x0", "x1", "y", "z"}, {1, 1, 2, 3}, field);
}

/// Data of the deformation matrix M(t): homogeneous P3, P4, P9 in the first
/// five variables (x0:1, x1:1, y:2, z:3, w:4) and the specialized deformation
/// parameter t. Zero P_i are accepted as degenerate cases.
template <class F>
struct FamilySpec {
    Polynomial<F> p3, p4, p9;
    typename F::Element t;

    FamilySpec(Polynomial<F> p3_in, Polynomial<F> p4_in, Polynomial<F> p9_in,
               typename F::Element t_in)
        : p3(std::move(p3_in)), p4(std::move(p4_in)), p9(std::move(p9_in)), t(std::move(t_in)) {
        const auto& ring = p3.ring();
        if (ring->names() != std::vector<std::string>{"x0", "x1", "y", "z", "w"} ||
            ring->weights() != std::vector<int>{1, 1, 2, 3, 4})
            throw std::invalid_argument(
                "family data must live in the ring (x0:1, x1:1, y:2, z:3, w:4)");
        if (!compatible(ring, p4.ring()) || !compatible(ring, p9.ring()))
            throw std::invalid_argument("P3, P4, P9 must share one ring");
        check_degree(p3, 3, "P3");
        check_degree(p4, 4, "P4");
        check_degree(p9, 9, "P9");
    }

    const RingPtr<F>& ring() const { return p3.ring(); }
    const F& field() const { return p3.ring()->field(); }

    FamilySpec with_t(typename F::Element t_new) const { return {p3, p4, p9, std::move(t_new)}; }

    /// Coefficient of w in P4 (the only possible w-term by weight).
    typename F::Element p4_w_coefficient() const {
        return p4.coefficient(Monomial(std::vector<std::int32_t>{0, 0, 0, 0, 1}));
    }

private:
    static void check_degree(const Polynomial<F>& p, long long d, const char* name) {
        if (!p.is_zero() && p.weighted_degree() != d)
            throw std::invalid_argument(std::string(name) + " must be homogeneous of degree " +
                                        std::to_string(d));
    }
};

/// Seeded random family data; draws P3, P4, P9 in that order from one
/// splitmix64 stream. With require_w_unit, a vanishing w-coefficient in P4 is
/// replaced by 1 so the spec stays eligible for elimination.
template <class F>
FamilySpec<F> random_family_spec(const F& field, std::uint64_t seed, typename F::Element t,
                                 bool require_w_unit = false) {
    auto ring = family_spec_ring(field);
    SplitMix64 rng(seed);
    auto p3 = random_homogeneous(ring, 3, rng);
    auto p4 = random_homogeneous(ring, 4, rng);
    auto p9 = random_homogeneous(ring, 9, rng);
    if (require_w_unit) {
        const Monomial w_mono(std::vector<std::int32_t>{0, 0, 0, 0, 1});
        if (field.is_zero(p4.coefficient(w_mono)))
            p4 = p4 + Polynomial<F>::monomial_term(ring, w_mono, field.one());
    }
    return FamilySpec<F>(std::move(p3), std::move(p4), std::move(p9), std::move(t));
}

/// The deformation matrix
///   ( 0  t  z   v    y     x1  )
///   (    0  w   u    P3    y   )
///   (       0   P9   u     v   )
///   (           0    w*P4  z*P4)
///   (                0     t*P4)
///   (                      0   )
/// over (x0,x1,y,z,w,v,u) with t specialized; carries the derived
/// half-integer row-degree profile.
template <class F>
SkewMatrix6<F> family_matrix(const FamilySpec<F>& spec) {
    auto ring = family_ring7(spec.field());
    const auto var = [&](std::string_view n) { return Polynomial<F>::variable(ring, n); };
    const auto x1 = var("x1"), y = var("y"), z = var("z"), w = var("w"), v = var("v"),
               u = var("u");
    const auto t_const = Polynomial<F>::constant(ring, spec.t);
    const auto p3 = spec.p3.mapped_to(ring), p4 = spec.p4.mapped_to(ring),
               p9 = spec.p9.mapped_to(ring);
    SkewMatrix6<F> m(ring);
    m.set(1, 2, t_const);
    m.set(1, 3, z);
    m.set(1, 4, v);
    m.set(1, 5, y);
    m.set(1, 6, x1);
    m.set(2, 3, w);
    m.set(2, 4, u);
    m.set(2, 5, p3);
    m.set(2, 6, y);
    m.set(3, 4, p9);
    m.set(3, 5, u);
    m.set(3, 6, v);
    m.set(4, 5, w * p4);
    m.set(4, 6, z * p4);
    m.set(5, 6, t_const * p4);
    if (auto profile = m.derive_doubled_profile()) m.set_doubled_profile(*profile);
    return m;
}

/// Ideal of the fifteen 4x4 Pfaffians of M(t).
template <class F>
Ideal<F> family_ideal(const FamilySpec<F>& spec) {
    const auto m = family_matrix(spec);
    auto pf = all_pfaffians(m);
    return Ideal<F>(m.ring(), std::move(pf.values));
}

template <class F>
struct FlatnessResult {
    std::vector<std::string> t_labels;
    std::vector<HilbertTable> tables;
    bool all_equal = true;
};

/// Hilbert tables of the family quotient at each specialization of t; flatness
/// evidence is their equality.
template <class F>
FlatnessResult<F> flatness_check(const FamilySpec<F>& spec,
                                 std::span<const typename F::Element> t_values,
                                 long long max_degree) {
    FlatnessResult<F> result;
    for (const auto& t : t_values) {
        result.t_labels.push_back(spec.field().to_string(t));
        result.tables.push_back(hilbert_function(family_ideal(spec.with_t(t)), max_degree));
    }
    for (std::size_t i = 1; i < result.tables.size(); ++i)
        result.all_equal = result.all_equal && result.tables[i] == result.tables[0];
    return result;
}

template <class F>
struct EliminationResult {
    Ideal<F> elimination_ideal;        // in the ring (x0:1, x1:1, y:2, z:3)
    Polynomial<F> generator;           // monic generator when principal, else zero
    Polynomial<F> back_substituted;    // image of Pf_1234 under the solved w, v, u
    bool principal = false;
    bool generator_degree9 = false;
    bool paths_agree = false;
    std::vector<std::string> matching_pfaffians;  // labels with image a nonzero multiple of the generator
};

/// Eliminates u, v, w from the Pfaffian ideal of M(t), t != 0, two ways:
/// a block-elimination Groebner basis, and direct back-substitution solving
/// Pf_1256 for w, Pf_1236 for v, Pf_1235 for u. The two routes must agree up
/// to a scalar. Requires a nonzero w-coefficient in P4.
template <class F>
EliminationResult<F> eliminate_to_hypersurface(const FamilySpec<F>& spec) {
    const F& k = spec.field();
    if (k.is_zero(spec.t))
        throw std::invalid_argument("elimination needs t != 0");
    const auto c_w = spec.p4_w_coefficient();
    if (k.is_zero(c_w))
        throw std::invalid_argument("elimination needs a nonzero w-coefficient in P4");

    const auto ideal = family_ideal(spec);
    const std::vector<std::string> front{"u", "v", "w"};
    auto elim = eliminate_vars(ideal, front);

    EliminationResult<F> result{elim,  Polynomial<F>(elim.ring()), Polynomial<F>(elim.ring()),
                                false, false,                      false,
                                {}};
    result.principal = elim.generators().size() == 1;
    if (result.principal) {
        result.generator = elim.generators()[0];
        const auto deg = result.generator.weighted_degree();
        result.generator_degree9 = deg.has_value() && *deg == 9;
    }

    // Back-substitution route, entirely inside (x0,x1,y,z).
    auto back = hypersurface_ring(k);
    const auto var = [&](std::string_view n) { return Polynomial<F>::variable(back, n); };
    const auto x0 = var("x0"), x1 = var("x1"), y = var("y"), z = var("z");
    const Monomial w_mono(std::vector<std::int32_t>{0, 0, 0, 0, 1});
    const auto q4 = spec.p4 - Polynomial<F>::monomial_term(spec.ring(), w_mono, c_w);
    const auto p3b = spec.p3.mapped_to(back);
    const auto q4b = q4.mapped_to(back);
    const auto t2 = k.mul(spec.t, spec.t);
    const auto w_expr =
        (y * y - x1 * p3b - q4b.scaled(t2)).scaled(k.inv(k.mul(t2, c_w)));
    const auto v_expr = (z * y - x1 * w_expr).scaled(k.inv(spec.t));
    const auto u_expr = (z * p3b - y * w_expr).scaled(k.inv(spec.t));
    const std::vector<Polynomial<F>> images{x0, x1, y, z, w_expr, v_expr, u_expr};

    const auto pf = all_pfaffians(family_matrix(spec));
    for (std::size_t i = 0; i < pf.values.size(); ++i) {
        const auto image = pf.values[i].substitute(images);
        const auto label = subset_label(kFourSubsets[i]);
        if (label == "1234") result.back_substituted = image;
        if (image.is_zero() || result.generator.is_zero()) continue;
        const auto monic = image.scaled(k.inv(image.leading_term().coef));
        if (monic == result.generator) result.matching_pfaffians.push_back(label);
    }
    result.paths_agree =
        result.principal && !result.back_substituted.is_zero() &&
        result.back_substituted.scaled(k.inv(result.back_substituted.leading_term().coef)) ==
            result.generator;
    return result;
}

template <class F>
struct BranchCurveResult {
    Polynomial<F> curve;  // in the ring (x0:1, x1:1, y:2)
    bool degree14 = false;
    bool in_recipe_ideal = false;    // after x0 := 1
    bool in_extended_ideal = false;  // reported only, not asserted
};

/// The branch-curve recipe at t = 0: start from z^2 P4 + x1 P9, substitute
/// z -> y^2/x1 and w -> y^3/x1^2, and clear denominators with x1^4. The
/// result is checked for weighted degree 14 and, after setting x0 = 1, for
/// membership in the monomial ideal
/// (y^7, x1 y^6, x1^2 y^4, x1^3 y^3, x1^4 y^2, x1^5); membership in the
/// extension by x1^4 y is reported alongside.
template <class F>
BranchCurveResult<F> branch_curve(const FamilySpec<F>& spec) {
    const F& k = spec.field();
    if (!k.is_zero(spec.t))
        throw std::invalid_argument("the branch-curve recipe needs t = 0");
    const auto& ring = spec.ring();
    const auto z = Polynomial<F>::variable(ring, "z");
    const auto x1 = Polynomial<F>::variable(ring, "x1");
    BranchCurveResult<F> result{substitute_cleared(z * z * spec.p4 + x1 * spec.p9, 4)};

    result.degree14 = !result.curve.is_zero() && result.curve.weighted_degree() == 14;

    auto chart = make_ring<F>({"x1", "y"}, {1, 2}, k);
    const std::vector<Polynomial<F>> images{Polynomial<F>::constant(chart, k.one()),
                                            Polynomial<F>::variable(chart, "x1"),
                                            Polynomial<F>::variable(chart, "y")};
    const auto affine = result.curve.substitute(images);
    const auto mono = [](std::int32_t a, std::int32_t b) {
        return Monomial(std::vector<std::int32_t>{a, b});
    };
    const std::vector<Monomial> base{mono(0, 7), mono(1, 6), mono(2, 4),
                                     mono(3, 3), mono(4, 2), mono(5, 0)};
    std::vector<Monomial> extended = base;
    extended.push_back(mono(4, 1));
    const auto in_monomial_ideal = [&](const std::vector<Monomial>& gens) {
        for (const auto& term : affine.terms()) {
            bool divisible = false;
            for (const auto& g : gens) divisible = divisible || g.divides(term.mono);
            if (!divisible) return false;
        }
        return true;
    };
    result.in_recipe_ideal = in_monomial_ideal(base);
    result.in_extended_ideal = in_monomial_ideal(extended);
    return result;
}

}  // namespace gring
