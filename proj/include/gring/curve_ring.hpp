#pragma once

#include "gring/rng.hpp"
#include "gring/skew.hpp"

namespace gring {

template <class F>
RingPtr<F> curve_spec_ring(const F& field) {
    return make_ring<F>({"x", "y", "z", "w"}, {1, 2, 3, 4}, field);
}

template <class F>
RingPtr<F> curve_ring6(const F& field) {
    return make_ring<F>({"x", "y", "z", "w", "v", "u"}, {1, 2, 3, 4, 5, 6}, field);
}

/// The datum of the curve-ring presentation: a homogeneous degree-9
/// polynomial in (x:1, y:2, z:3, w:4). Zero is accepted as a degenerate case.
template <class F>
struct CurveRingSpec {
    Polynomial<F> p9;

    explicit CurveRingSpec(Polynomial<F> poly) : p9(std::move(poly)) {
        const auto& ring = p9.ring();
        if (ring->names() != std::vector<std::string>{"x", "y", "z", "w"} ||
            ring->weights() != std::vector<int>{1, 2, 3, 4})
            throw std::invalid_argument("P9 must live in the ring (x:1, y:2, z:3, w:4)");
        if (!p9.is_zero() && p9.weighted_degree() != 9)
            throw std::invalid_argument("P9 must be homogeneous of degree 9");
    }
};

template <class F>
CurveRingSpec<F> random_curve_spec(const F& field, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return CurveRingSpec<F>(random_homogeneous(curve_spec_ring(field), 9, rng));
}

/// The presentation matrix of the Weierstrass 3/2-subring in the ring
/// (x,y,z,w,v,u) of weights (1,...,6):
///   ( 0  0  z  v    y    x  )
///   (    0  w  u    z    y  )
///   (       0  P9   u    v  )
///   (          0    w^2  z*w)
///   (               0    0  )
///   (                    0  ).
template <class F>
SkewMatrix6<F> curve_ring_matrix(const CurveRingSpec<F>& spec) {
    auto ring = curve_ring6(spec.p9.ring()->field());
    const auto var = [&](std::string_view n) { return Polynomial<F>::variable(ring, n); };
    const auto x = var("x"), y = var("y"), z = var("z"), w = var("w"), v = var("v"), u = var("u");
    SkewMatrix6<F> m(ring);
    m.set(1, 3, z);
    m.set(1, 4, v);
    m.set(1, 5, y);
    m.set(1, 6, x);
    m.set(2, 3, w);
    m.set(2, 4, u);
    m.set(2, 5, z);
    m.set(2, 6, y);
    m.set(3, 4, spec.p9.mapped_to(ring));
    m.set(3, 5, u);
    m.set(3, 6, v);
    m.set(4, 5, w * w);
    m.set(4, 6, z * w);
    if (auto profile = m.derive_doubled_profile()) m.set_doubled_profile(*profile);
    return m;
}

/// Ideal of the fifteen 4x4 Pfaffians of the curve-ring matrix.
template <class F>
Ideal<F> curve_ring_ideal(const CurveRingSpec<F>& spec) {
    const auto m = curve_ring_matrix(spec);
    auto pf = all_pfaffians(m);
    return Ideal<F>(m.ring(), std::move(pf.values));
}

}  // namespace gring
