#pragma once

#include <cstdint>

#include "gring/hilbert.hpp"
#include "gring/polynomial.hpp"

namespace gring {

/// splitmix64: the 64-bit mix underlying all seeded randomness here. Fully
/// specified so that reports are reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (~0ULL / n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

private:
    std::uint64_t state_;
};

inline typename PrimeField::Element random_element(const PrimeField& k, SplitMix64& rng) {
    return static_cast<PrimeField::Element>(rng.below(k.modulus()));
}

inline typename RationalField::Element random_element(const RationalField& k, SplitMix64& rng) {
    return k.from_long(static_cast<long long>(rng.below(19)) - 9);
}

/// Dense random homogeneous polynomial: every monomial of the target weighted
/// degree appears with an independent coefficient drawn from the field.
template <class F>
Polynomial<F> random_homogeneous(const RingPtr<F>& ring, long long degree, SplitMix64& rng) {
    std::vector<Term<F>> terms;
    for (auto& m : monomials_of_weighted_degree(ring->weights(), degree))
        terms.push_back({std::move(m), random_element(ring->field(), rng)});
    return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace gring
