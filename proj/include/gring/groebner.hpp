#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gring/order.hpp"
#include "gring/polynomial.hpp"

namespace gring {

/// Finitely generated ideal; zero generators are dropped at construction.
template <class F>
class Ideal {
public:
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators) : ring_(std::move(ring)) {
        for (auto& g : generators) {
            if (!compatible(g.ring(), ring_))
                throw std::invalid_argument("ideal generator lives in a different ring");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

private:
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted by ascending leading
/// monomial. When truncation_degree is set, the basis is only complete for
/// weighted degrees up to that bound (valid for homogeneous input only).
template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;
    MonomialOrder order;
    std::vector<Polynomial<F>> elements;
    std::optional<long long> truncation_degree;
};

namespace detail {

// Engine representation: term vector sorted strictly descending under the
// active order.
template <class F>
using TermVec = std::vector<Term<F>>;

template <class F>
TermVec<F> resorted(const Polynomial<F>& p, const MonomialOrder& ord) {
    TermVec<F> t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(),
              [&](const Term<F>& a, const Term<F>& b) { return ord.compare(a.mono, b.mono) > 0; });
    return t;
}

template <class F>
Polynomial<F> to_polynomial(const RingPtr<F>& ring, TermVec<F> terms) {
    return Polynomial<F>::from_terms(ring, std::move(terms));
}

// a - c * x^m * b, both sorted descending under ord.
template <class F>
TermVec<F> subtract_scaled(const F& k, const MonomialOrder& ord, const TermVec<F>& a,
                           const typename F::Element& c, const Monomial& m, const TermVec<F>& b) {
    TermVec<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        const Monomial bm = b[j].mono.times(m);
        int cmp = i == a.size() ? -1 : ord.compare(a[i].mono, bm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({bm, k.neg(k.mul(c, b[j].coef))});
            ++j;
        } else {
            auto v = k.sub(a[i].coef, k.mul(c, b[j].coef));
            if (!k.is_zero(v)) out.push_back({a[i].mono, std::move(v)});
            ++i, ++j;
        }
    }
    return out;
}

template <class F>
void scale_in_place(const F& k, TermVec<F>& p, const typename F::Element& c) {
    for (auto& t : p) t.coef = k.mul(t.coef, c);
}

// Rescales to the field's canonical intermediate form (primitive integral
// over QQ, monic over GF(p)); keeps coefficient growth in check.
template <class F>
void canonicalize(const F& k, TermVec<F>& p) {
    if (p.empty()) return;
    std::vector<typename F::Element> coeffs;
    coeffs.reserve(p.size());
    for (const auto& t : p) coeffs.push_back(t.coef);
    const auto factor = k.normalizer(coeffs);
    if (!k.is_one(factor)) scale_in_place(k, p, factor);
}

// Full normal form of p modulo the (sorted-descending) basis polynomials.
// Every term of the result is reducible by no basis leading monomial.
template <class F>
TermVec<F> reduce_full(const F& k, const MonomialOrder& ord, TermVec<F> p,
                       const std::vector<TermVec<F>>& basis) {
    TermVec<F> out;
    while (!p.empty()) {
        const Term<F>& lt = p.front();
        const TermVec<F>* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.empty() && g.front().mono.divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            out.push_back(lt);
            p.erase(p.begin());
            continue;
        }
        const auto c = k.div(lt.coef, reducer->front().coef);
        const Monomial q = lt.mono.quotient_by(reducer->front().mono);
        p = subtract_scaled(k, ord, p, c, q, *reducer);
    }
    return out;
}

template <class F>
struct Buchberger {
    Buchberger(const F& field, const MonomialOrder& order, std::optional<long long> degree_cap)
        : k(field), ord(order), cap(degree_cap) {}

    const F& k;
    const MonomialOrder& ord;
    std::optional<long long> cap;

    std::vector<TermVec<F>> basis;

    struct PairKey {
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairLess {
        const MonomialOrder* ord;
        bool operator()(const PairKey& a, const PairKey& b) const {
            const int c = ord->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<PairKey, PairLess> pending{PairLess{&ord}};
    std::set<std::pair<std::size_t, std::size_t>> pending_ij;

    const Monomial& lead(std::size_t i) const { return basis[i].front().mono; }

    void add_element(TermVec<F> p) {
        const std::size_t n = basis.size();
        basis.push_back(std::move(p));
        for (std::size_t i = 0; i < n; ++i) {
            pending.insert({Monomial::lcm(lead(i), lead(n)), i, n});
            pending_ij.insert({i, n});
        }
    }

    bool pair_pending(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        return pending_ij.contains({a, b});
    }

    // Buchberger's second (chain) criterion: some k divides the pair lcm and
    // both pairs (i,k), (j,k) were already treated.
    bool chain_redundant(const PairKey& pk) const {
        for (std::size_t k2 = 0; k2 < basis.size(); ++k2) {
            if (k2 == pk.i || k2 == pk.j) continue;
            if (!lead(k2).divides(pk.lcm)) continue;
            if (!pair_pending(pk.i, k2) && !pair_pending(pk.j, k2)) return true;
        }
        return false;
    }

    TermVec<F> s_polynomial(const PairKey& pk) const {
        const TermVec<F>& f = basis[pk.i];
        const TermVec<F>& g = basis[pk.j];
        const Monomial qf = pk.lcm.quotient_by(f.front().mono);
        const Monomial qg = pk.lcm.quotient_by(g.front().mono);
        // lc(g) * x^qf * f - lc(f) * x^qg * g
        TermVec<F> left;
        left.reserve(f.size());
        for (const auto& t : f) left.push_back({t.mono.times(qf), k.mul(t.coef, g.front().coef)});
        return subtract_scaled(k, ord, left, f.front().coef, qg, g);
    }

    void run(std::span<const Polynomial<F>> generators) {
        for (const auto& g : generators) {
            if (g.is_zero()) continue;
            TermVec<F> t = resorted(g, ord);
            canonicalize(k, t);
            bool duplicate = false;
            for (const auto& have : basis) duplicate = duplicate || have == t;
            if (!duplicate) add_element(std::move(t));
        }
        while (!pending.empty()) {
            const PairKey pk = *pending.begin();
            pending.erase(pending.begin());
            pending_ij.erase({pk.i, pk.j});
            if (cap && pk.lcm.weighted_degree(ord.weights()) > *cap) continue;
            if (pk.lcm == lead(pk.i).times(lead(pk.j))) continue;  // coprime leads
            if (chain_redundant(pk)) continue;
            TermVec<F> s = reduce_full(k, ord, s_polynomial(pk), basis);
            if (s.empty()) continue;
            canonicalize(k, s);
            add_element(std::move(s));
        }
    }

    std::vector<TermVec<F>> reduced() const {
        // Minimal basis: drop any element whose lead is divisible by another's.
        std::vector<bool> keep(basis.size(), true);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
                if (i == j || !keep[j]) continue;
                if (lead(j).divides(lead(i)) && !(i < j && lead(i) == lead(j))) keep[i] = false;
            }
        }
        std::vector<TermVec<F>> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (keep[i]) minimal.push_back(basis[i]);
        // Interreduce tails and normalize to monic.
        std::vector<TermVec<F>> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<TermVec<F>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            TermVec<F> r = reduce_full(k, ord, minimal[i], others);
            if (r.empty()) continue;
            scale_in_place(k, r, k.inv(r.front().coef));
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(), [&](const TermVec<F>& a, const TermVec<F>& b) {
            return ord.compare(a.front().mono, b.front().mono) < 0;
        });
        return out;
    }
};

}  // namespace detail

/// Buchberger's algorithm with the coprime and chain criteria, normal pair
/// selection by the order of the S-pair lcm. Deterministic for fixed input.
/// With degree_cap set (homogeneous input only) the pair queue is truncated,
/// which yields a basis valid through that weighted degree.
template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& ideal, const MonomialOrder& order,
                                std::optional<long long> degree_cap = std::nullopt) {
    if (degree_cap) {
        for (const auto& g : ideal.generators())
            if (!g.is_homogeneous())
                throw std::invalid_argument(
                    "degree-truncated bases require homogeneous generators; offending generator: " +
                    g.to_string());
    }
    detail::Buchberger<F> engine(ideal.ring()->field(), order, degree_cap);
    engine.run(ideal.generators());
    GroebnerBasis<F> gb{ideal.ring(), order, {}, degree_cap};
    for (auto& t : engine.reduced())
        gb.elements.push_back(detail::to_polynomial(ideal.ring(), std::move(t)));
    return gb;
}

template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& ideal) {
    return groebner_basis(ideal, MonomialOrder::wdegrevlex(ideal.ring()));
}

/// Full normal form: the remainder of f on division by the basis. No term of
/// the result is divisible by any basis leading monomial.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
    if (!compatible(f.ring(), gb.ring))
        throw std::invalid_argument("polynomial and basis live in different rings");
    if (gb.truncation_degree && !f.is_zero()) {
        if (!f.is_homogeneous() || *f.weighted_degree() > *gb.truncation_degree)
            throw std::invalid_argument("normal form beyond the basis truncation degree");
    }
    const F& k = f.field();
    std::vector<detail::TermVec<F>> basis;
    basis.reserve(gb.elements.size());
    for (const auto& g : gb.elements) basis.push_back(detail::resorted(g, gb.order));
    auto r = detail::reduce_full(k, gb.order, detail::resorted(f, gb.order), basis);
    return detail::to_polynomial(f.ring(), std::move(r));
}

template <class F>
bool ideal_member(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
    return normal_form(f, gb).is_zero();
}

template <class F>
bool ideal_member(const Ideal<F>& ideal, const Polynomial<F>& f) {
    return ideal_member(f, groebner_basis(ideal));
}

/// Mutual membership of generators; insensitive to generator order.
template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
    if (!compatible(a.ring(), b.ring())) throw std::invalid_argument("ideals in different rings");
    const auto gb_a = groebner_basis(a);
    for (const auto& g : b.generators())
        if (!ideal_member(g, gb_a)) return false;
    const auto gb_b = groebner_basis(b);
    for (const auto& g : a.generators())
        if (!ideal_member(g, gb_b)) return false;
    return true;
}

/// Generators of I intersected with the subring that omits the front
/// variables, computed from a block-elimination basis. The result lives in
/// the smaller ring (remaining variables, original order).
template <class F>
Ideal<F> eliminate_vars(const Ideal<F>& ideal, std::span<const std::string> front_names) {
    const auto& ring = ideal.ring();
    std::vector<char> front(ring->arity(), 0);
    for (const auto& name : front_names) {
        auto idx = ring->index_of(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
        front[*idx] = 1;
    }
    std::vector<std::string> back_names;
    std::vector<int> back_weights;
    for (std::size_t i = 0; i < ring->arity(); ++i) {
        if (!front[i]) {
            back_names.push_back(ring->names()[i]);
            back_weights.push_back(ring->weights()[i]);
        }
    }
    if (back_names.empty()) throw std::invalid_argument("cannot eliminate every variable");
    auto back_ring = make_ring<F>(back_names, back_weights, ring->field());
    const auto order = MonomialOrder::block_elimination(ring->weights(), front);
    const auto gb = groebner_basis(ideal, order);
    std::vector<Polynomial<F>> kept;
    for (const auto& g : gb.elements) {
        bool uses_front = false;
        for (std::size_t i = 0; i < ring->arity(); ++i)
            uses_front = uses_front || (front[i] && g.depends_on(i));
        if (!uses_front) kept.push_back(g.mapped_to(back_ring));
    }
    return Ideal<F>(back_ring, std::move(kept));
}

}  // namespace gring
