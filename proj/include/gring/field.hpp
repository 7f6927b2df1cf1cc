#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gring {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

/// Runtime choice of coefficient field: exact rationals, or GF(p) for an odd prime p.
struct FieldSpec {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Rationals;
    std::uint32_t modulus = 0;

    static FieldSpec rationals() { return {}; }

    static FieldSpec prime(std::uint32_t p) {
        if (p <= 2 || !detail::is_prime_u32(p))
            throw std::invalid_argument("prime field modulus must be a prime > 2, got " +
                                        std::to_string(p));
        return {Kind::Prime, p};
    }

    /// Accepts "QQ" or "GF(<p>)".
    static FieldSpec parse(std::string_view text) {
        if (text == "QQ") return rationals();
        if (text.starts_with("GF(") && text.ends_with(")")) {
            const std::string_view digits = text.substr(3, text.size() - 4);
            if (digits.empty()) throw std::invalid_argument("empty modulus in field spec");
            std::uint64_t value = 0;
            for (char c : digits) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("bad modulus in field spec '" + std::string(text) + "'");
                value = value * 10 + static_cast<std::uint64_t>(c - '0');
                if (value > 0xffffffffULL) throw std::invalid_argument("modulus out of range");
            }
            return prime(static_cast<std::uint32_t>(value));
        }
        throw std::invalid_argument("unrecognized field '" + std::string(text) +
                                    "'; expected QQ or GF(<p>)");
    }

    std::string name() const {
        return kind == Kind::Rationals ? std::string("QQ") : "GF(" + std::to_string(modulus) + ")";
    }

    bool operator==(const FieldSpec&) const = default;
};

/// Exact rational arithmetic with arbitrary-precision integers, always in lowest terms.
class RationalField {
public:
    using Element = BigRational;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    std::string name() const { return "QQ"; }
    std::uint32_t characteristic() const { return 0; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }

    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("division by zero in QQ");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    bool is_zero(const Element& a) const { return a == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool is_negative(const Element& a) const { return a < 0; }
    Element abs(const Element& a) const { return a < 0 ? Element(-a) : a; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    Element from_long(long long v) const { return Element(v); }
    Element from_ratio(const BigInt& num, const BigInt& den) const {
        if (den == 0) throw std::domain_error("zero denominator");
        return Element(num, den);
    }

    std::string to_string(const Element& a) const { return a.str(); }

    /// Scale factor that clears denominators, removes integer content, and makes
    /// the first (leading) coefficient positive.
    Element normalizer(std::span<const Element> coeffs) const {
        using boost::multiprecision::gcd;
        using boost::multiprecision::lcm;
        if (coeffs.empty()) return one();
        BigInt den_lcm = 1;
        for (const Element& c : coeffs) den_lcm = lcm(den_lcm, denominator(c));
        BigInt num_gcd = 0;
        for (const Element& c : coeffs) num_gcd = gcd(num_gcd, BigInt(numerator(c) * (den_lcm / denominator(c))));
        if (num_gcd == 0) return one();
        Element factor(den_lcm, num_gcd);
        if (coeffs.front() < 0) factor = -factor;
        return factor;
    }

    bool operator==(const RationalField&) const = default;
};

/// GF(p) for an odd prime p; elements are canonical residues in [0, p).
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
        if (p <= 2 || !detail::is_prime_u32(p))
            throw std::invalid_argument("prime field modulus must be a prime > 2, got " +
                                        std::to_string(p));
    }

    FieldSpec spec() const { return FieldSpec::prime(p_); }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }

    Element add(Element a, Element b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<Element>(s);
    }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(std::uint64_t(a) * b % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }

    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("division by zero in " + name());
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) t += p_;
        return static_cast<Element>(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    bool is_negative(Element) const { return false; }
    Element abs(Element a) const { return a; }
    bool eq(Element a, Element b) const { return a == b; }

    Element from_long(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Element>(r);
    }
    Element from_ratio(const BigInt& num, const BigInt& den) const {
        const BigInt p(p_);
        BigInt n = num % p, d = den % p;
        if (n < 0) n += p;
        if (d < 0) d += p;
        Element dd = d.convert_to<Element>();
        if (dd == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
        return mul(n.convert_to<Element>(), inv(dd));
    }

    std::string to_string(Element a) const { return std::to_string(a); }

    /// Scale factor making the first (leading) coefficient 1.
    Element normalizer(std::span<const Element> coeffs) const {
        if (coeffs.empty() || coeffs.front() == 0) return one();
        return inv(coeffs.front());
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint32_t p_;
};

/// Calls fn with the concrete field instance described by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::Prime) return fn(PrimeField(spec.modulus));
    return fn(RationalField{});
}

}  // namespace gring
