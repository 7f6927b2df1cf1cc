#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gring {

/// Exponent vector of a power product; the arity is fixed by the ambient ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {
        for (auto v : e_)
            if (v < 0) throw std::invalid_argument("negative exponent in monomial");
    }

    std::size_t arity() const { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    std::span<const std::int32_t> exponents() const { return e_; }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](auto v) { return v == 0; });
    }

    long long weighted_degree(std::span<const int> weights) const {
        long long d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<long long>(e_[i]) * weights[i];
        return d;
    }

    long long total_degree() const {
        long long d = 0;
        for (auto v : e_) d += v;
        return d;
    }

    Monomial times(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
        return r;
    }

    bool divides(const Monomial& multiple) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > multiple.e_[i]) return false;
        return true;
    }

    /// Componentwise difference; caller guarantees divisor.divides(*this).
    Monomial quotient_by(const Monomial& divisor) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= divisor.e_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    bool coprime_with(const Monomial& other) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && other.e_[i] > 0) return false;
        return true;
    }

    Monomial replaced(std::size_t i, std::int32_t value) const {
        if (value < 0) throw std::invalid_argument("negative exponent in monomial");
        Monomial r(*this);
        r.e_[i] = value;
        return r;
    }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::int32_t> e_;
};

}  // namespace gring
