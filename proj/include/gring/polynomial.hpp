#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gring/ring.hpp"

namespace gring {

template <class F>
struct Term {
    Monomial mono;
    typename F::Element coef;

    bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over a weighted ring. Terms are stored in
/// strictly descending canonical order with no zero coefficients; values are
/// immutable after construction.
template <class F>
class Polynomial {
public:
    using Field = F;
    using Coef = typename F::Element;

    explicit Polynomial(RingPtr<F> ring) : ring_(require_ring(std::move(ring))) {}

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<F> ring, Coef c) {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(p.ring_->arity()), std::move(c)});
        return p;
    }

    static Polynomial variable(RingPtr<F> ring, std::size_t index, std::int32_t exponent = 1) {
        Polynomial p(std::move(ring));
        if (index >= p.ring_->arity()) throw std::invalid_argument("variable index out of range");
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        if (exponent == 0) return constant(p.ring_, p.field().one());
        p.terms_.push_back({Monomial(p.ring_->arity()).replaced(index, exponent), p.field().one()});
        return p;
    }

    static Polynomial variable(RingPtr<F> ring, std::string_view name, std::int32_t exponent = 1) {
        auto idx = ring->index_of(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        return variable(std::move(ring), *idx, exponent);
    }

    static Polynomial monomial_term(RingPtr<F> ring, Monomial m, Coef c) {
        Polynomial p(std::move(ring));
        if (m.arity() != p.ring_->arity()) throw std::invalid_argument("monomial arity mismatch");
        if (!p.field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Sorts, merges duplicates, and drops zero coefficients.
    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
        Polynomial p(std::move(ring));
        for (const auto& t : terms)
            if (t.mono.arity() != p.ring_->arity())
                throw std::invalid_argument("monomial arity mismatch");
        std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
            return p.ring_->compare(a.mono, b.mono) > 0;
        });
        const F& k = p.field();
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coef = k.add(p.terms_.back().coef, t.coef);
            else
                p.terms_.push_back(std::move(t));
            if (!p.terms_.empty() && k.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
        }
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    const std::vector<Term<F>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Leading term under the canonical order; rejects the zero polynomial.
    const Term<F>& leading_term() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
        return terms_.front();
    }

    Coef coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coef;
        return field().zero();
    }

    bool depends_on(std::size_t var_index) const {
        for (const auto& t : terms_)
            if (t.mono[var_index] > 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coef = field().neg(t.coef);
        return r;
    }

    Polynomial operator+(const Polynomial& other) const { return merged(other, false); }
    Polynomial operator-(const Polynomial& other) const { return merged(other, true); }

    Polynomial operator*(const Polynomial& other) const {
        check_same_ring(other);
        Polynomial r(ring_);
        if (is_zero() || other.is_zero()) return r;
        const F& k = field();
        std::vector<Term<F>> products;
        products.reserve(terms_.size() * other.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : other.terms_)
                products.push_back({a.mono.times(b.mono), k.mul(a.coef, b.coef)});
        return from_terms(ring_, std::move(products));
    }

    Polynomial scaled(const Coef& c) const {
        const F& k = field();
        Polynomial r(ring_);
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Coef v = k.mul(t.coef, c);
            if (!k.is_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
        }
        return r;
    }

    /// c * x^m * this, in one pass; the term order is preserved.
    Polynomial times_term(const Monomial& m, const Coef& c) const {
        const F& k = field();
        Polynomial r(ring_);
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Coef v = k.mul(t.coef, c);
            if (!k.is_zero(v)) r.terms_.push_back({t.mono.times(m), std::move(v)});
        }
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(ring_, field().one());
        Polynomial base(*this);
        while (e > 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return r;
    }

    bool operator==(const Polynomial& other) const {
        if (!compatible(ring_, other.ring_)) return false;
        if (terms_.size() != other.terms_.size()) return false;
        const F& k = field();
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == other.terms_[i].mono) ||
                !k.eq(terms_[i].coef, other.terms_[i].coef))
                return false;
        return true;
    }

    /// Common weighted degree of all terms, or nullopt if inhomogeneous.
    /// The zero polynomial has no degree and is rejected.
    std::optional<long long> weighted_degree() const {
        if (is_zero()) throw std::domain_error("the zero polynomial has no weighted degree");
        const long long d = ring_->weighted_degree(terms_.front().mono);
        for (const auto& t : terms_)
            if (ring_->weighted_degree(t.mono) != d) return std::nullopt;
        return d;
    }

    /// Largest weighted degree over all terms; rejects the zero polynomial.
    long long max_weighted_degree() const {
        if (is_zero()) throw std::domain_error("the zero polynomial has no weighted degree");
        return ring_->weighted_degree(terms_.front().mono);
    }

    bool is_homogeneous() const { return is_zero() || weighted_degree().has_value(); }

    /// Composition: image[i] replaces variable i. All images must live in one
    /// ring, which becomes the ring of the result.
    Polynomial substitute(std::span<const Polynomial> images) const {
        if (images.size() != ring_->arity())
            throw std::invalid_argument("substitution needs one image per variable");
        const RingPtr<F>& target = images[0].ring();
        for (const auto& img : images)
            if (!compatible(target, img.ring()))
                throw std::invalid_argument("substitution images live in different rings");
        // Powers of each image are cached up to the largest exponent used.
        std::vector<std::vector<Polynomial>> powers(images.size());
        for (std::size_t i = 0; i < images.size(); ++i)
            powers[i].push_back(constant(target, target->field().one()));
        Polynomial acc(target);
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.coef);
            for (std::size_t i = 0; i < images.size(); ++i) {
                const auto e = static_cast<std::size_t>(t.mono[i]);
                while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
                if (e > 0) prod = prod * powers[i][e];
            }
            acc = acc + prod;
        }
        return acc;
    }

    /// Re-expresses the polynomial in another ring, matching variables by
    /// name; every occurring variable must exist there with the same weight.
    Polynomial mapped_to(const RingPtr<F>& target) const {
        std::vector<Term<F>> out;
        out.reserve(terms_.size());
        std::vector<std::optional<std::size_t>> where(ring_->arity());
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            where[i] = target->index_of(ring_->names()[i]);
            if (where[i] && target->weights()[*where[i]] != ring_->weights()[i])
                throw std::invalid_argument("variable '" + ring_->names()[i] +
                                            "' changes weight between rings");
        }
        for (const auto& t : terms_) {
            Monomial m(target->arity());
            for (std::size_t i = 0; i < ring_->arity(); ++i) {
                if (t.mono[i] == 0) continue;
                if (!where[i])
                    throw std::invalid_argument("variable '" + ring_->names()[i] +
                                                "' does not exist in the target ring");
                m = m.replaced(*where[i], t.mono[i]);
            }
            out.push_back({std::move(m), t.coef});
        }
        return from_terms(target, std::move(out));
    }

    std::string to_string() const;

private:
    static RingPtr<F> require_ring(RingPtr<F> ring) {
        if (!ring) throw std::invalid_argument("polynomial needs a ring");
        return ring;
    }

    void check_same_ring(const Polynomial& other) const {
        if (!compatible(ring_, other.ring_))
            throw std::invalid_argument("polynomials live in different rings");
    }

    Polynomial merged(const Polynomial& other, bool subtract) const {
        check_same_ring(other);
        const F& k = field();
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + other.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < other.terms_.size()) {
            int cmp;
            if (i == terms_.size())
                cmp = -1;
            else if (j == other.terms_.size())
                cmp = 1;
            else
                cmp = ring_->compare(terms_[i].mono, other.terms_[j].mono);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                const auto& t = other.terms_[j++];
                r.terms_.push_back({t.mono, subtract ? k.neg(t.coef) : t.coef});
            } else {
                Coef c = subtract ? k.sub(terms_[i].coef, other.terms_[j].coef)
                                  : k.add(terms_[i].coef, other.terms_[j].coef);
                if (!k.is_zero(c)) r.terms_.push_back({terms_[i].mono, std::move(c)});
                ++i, ++j;
            }
        }
        return r;
    }

    RingPtr<F> ring_;
    std::vector<Term<F>> terms_;
};

template <class F>
std::string Polynomial<F>::to_string() const {
    if (is_zero()) return "0";
    const F& k = field();
    std::string out;
    for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
        const auto& t = terms_[idx];
        const bool neg = k.is_negative(t.coef);
        if (idx == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const auto mag = k.abs(t.coef);
        std::string mono;
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->names()[i];
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty())
            out += k.to_string(mag);
        else if (k.is_one(mag))
            out += mono;
        else
            out += k.to_string(mag) + "*" + mono;
    }
    return out;
}

/// x1^e * f(z -> y^2/x1, w -> y^3/x1^2), expressed in the ring (x0:1, x1:1, y:2).
/// f must live in a ring containing x0, x1, y, z, w and must not involve any
/// other variable. Throws if the clearing exponent e cannot absorb all the
/// x1-denominators, naming the worst offending monomial.
template <class F>
Polynomial<F> substitute_cleared(const Polynomial<F>& f, int clearing_exponent) {
    const auto& src = f.ring();
    const auto need = [&](std::string_view n) {
        auto i = src->index_of(n);
        if (!i)
            throw std::invalid_argument("substitute_cleared needs variable '" + std::string(n) +
                                        "' in the ring");
        return *i;
    };
    const std::size_t ix0 = need("x0"), ix1 = need("x1"), iy = need("y"), iz = need("z"),
                      iw = need("w");
    for (std::size_t i = 0; i < src->arity(); ++i) {
        if (i == ix0 || i == ix1 || i == iy || i == iz || i == iw) continue;
        if (f.depends_on(i))
            throw std::invalid_argument("substitute_cleared input involves variable '" +
                                        src->names()[i] + "'");
    }
    auto target = make_ring<F>({"x0", "x1", "y"}, {1, 1, 2}, src->field());
    std::vector<Term<F>> out;
    for (const auto& t : f.terms()) {
        const std::int32_t a = t.mono[iz], b = t.mono[iw];
        const std::int32_t x1_exp = t.mono[ix1] + clearing_exponent - a - 2 * b;
        if (x1_exp < 0) {
            Polynomial<F> witness = Polynomial<F>::monomial_term(src, t.mono, t.coef);
            throw std::invalid_argument("clearing exponent " + std::to_string(clearing_exponent) +
                                        " is insufficient for monomial " + witness.to_string());
        }
        Monomial m(std::vector<std::int32_t>{t.mono[ix0], x1_exp, t.mono[iy] + 2 * a + 3 * b});
        out.push_back({std::move(m), t.coef});
    }
    return Polynomial<F>::from_terms(target, std::move(out));
}

}  // namespace gring
