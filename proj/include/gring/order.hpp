#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gring/monomial.hpp"
#include "gring/ring.hpp"

namespace gring {

/// Total multiplicative well-order on monomials. Two kinds:
///  - weighted degrevlex: weighted degree, ties by reverse lexicographic;
///  - block elimination: weighted degree of the front block first, then
///    weighted degrevlex on the whole monomial. Any basis element whose
///    leading monomial avoids the front block is then entirely front-free,
///    which is what makes elimination work.
class MonomialOrder {
public:
    enum class Kind { WeightedDegRevLex, BlockElimination };

    static MonomialOrder wdegrevlex(std::vector<int> weights) {
        return MonomialOrder(Kind::WeightedDegRevLex, std::move(weights), {});
    }

    static MonomialOrder block_elimination(std::vector<int> weights, std::vector<char> front) {
        if (front.size() != weights.size())
            throw std::invalid_argument("front mask size mismatch");
        bool any = false;
        for (char f : front) any = any || f;
        if (!any) throw std::invalid_argument("elimination order needs a nonempty front block");
        return MonomialOrder(Kind::BlockElimination, std::move(weights), std::move(front));
    }

    template <class F>
    static MonomialOrder wdegrevlex(const RingPtr<F>& ring) {
        return wdegrevlex(ring->weights());
    }

    template <class F>
    static MonomialOrder block_elimination(const RingPtr<F>& ring,
                                           std::span<const std::string> front_names) {
        std::vector<char> front(ring->arity(), 0);
        for (const auto& name : front_names) {
            auto idx = ring->index_of(name);
            if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
            front[*idx] = 1;
        }
        return block_elimination(ring->weights(), std::move(front));
    }

    Kind kind() const { return kind_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<char>& front() const { return front_; }

    /// Returns >0 if a > b, <0 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::BlockElimination) {
            long long fa = 0, fb = 0;
            for (std::size_t i = 0; i < weights_.size(); ++i)
                if (front_[i]) {
                    fa += static_cast<long long>(a[i]) * weights_[i];
                    fb += static_cast<long long>(b[i]) * weights_[i];
                }
            if (fa != fb) return fa > fb ? 1 : -1;
        }
        const long long da = a.weighted_degree(weights_), db = b.weighted_degree(weights_);
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = weights_.size(); i-- > 0;) {
            const auto diff = a[i] - b[i];
            if (diff != 0) return diff > 0 ? -1 : 1;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder&) const = default;

private:
    MonomialOrder(Kind kind, std::vector<int> weights, std::vector<char> front)
        : kind_(kind), weights_(std::move(weights)), front_(std::move(front)) {}

    Kind kind_;
    std::vector<int> weights_;
    std::vector<char> front_;
};

}  // namespace gring
