#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gring/field.hpp"
#include "gring/monomial.hpp"

namespace gring {

namespace detail {

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace detail

/// Polynomial ring with named variables carrying positive integer weights.
/// The declared variable order is significant: it fixes the canonical term
/// order (weighted degree descending, ties by reverse lexicographic).
template <class F>
class WeightedRing {
public:
    using Field = F;

    WeightedRing(std::vector<std::string> names, std::vector<int> weights, F field)
        : names_(std::move(names)), weights_(std::move(weights)), field_(std::move(field)) {
        if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
        if (names_.size() != weights_.size())
            throw std::invalid_argument("variable/weight count mismatch");
        std::set<std::string> seen;
        for (const auto& n : names_) {
            if (!detail::is_identifier(n))
                throw std::invalid_argument("bad variable name '" + n + "'");
            if (!seen.insert(n).second)
                throw std::invalid_argument("duplicate variable name '" + n + "'");
        }
        for (int w : weights_)
            if (w < 1) throw std::invalid_argument("variable weights must be >= 1");
    }

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }
    const F& field() const { return field_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    long long weighted_degree(const Monomial& m) const { return m.weighted_degree(weights_); }

    /// Canonical order: weighted degree first, then reverse lexicographic on
    /// the declared variable order. Returns >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        const long long da = weighted_degree(a), db = weighted_degree(b);
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = arity(); i-- > 0;) {
            const auto diff = a[i] - b[i];
            if (diff != 0) return diff > 0 ? -1 : 1;
        }
        return 0;
    }

    bool same_structure(const WeightedRing& other) const {
        return names_ == other.names_ && weights_ == other.weights_ &&
               field_.spec() == other.field_.spec();
    }

    /// One-line declaration, e.g. "ring x:1 y:2 over GF(32003)".
    std::string declaration() const {
        std::string out = "ring";
        for (std::size_t i = 0; i < names_.size(); ++i)
            out += " " + names_[i] + ":" + std::to_string(weights_[i]);
        out += " over " + field_.name();
        return out;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
    F field_;
};

template <class F>
using RingPtr = std::shared_ptr<const WeightedRing<F>>;

template <class F>
RingPtr<F> make_ring(std::vector<std::string> names, std::vector<int> weights, F field) {
    return std::make_shared<const WeightedRing<F>>(std::move(names), std::move(weights),
                                                   std::move(field));
}

template <class F>
bool compatible(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a && b && a->same_structure(*b));
}

}  // namespace gring
