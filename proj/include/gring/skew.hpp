#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gring/groebner.hpp"
#include "gring/specfile.hpp"

namespace gring {

/// The 15 index pairs (i,j), 1 <= i < j <= 6, in lexicographic order.
inline constexpr std::array<std::pair<int, int>, 15> kSkewPairs = {
    {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5},
     {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}};

/// The 15 four-element subsets of {1..6}, lexicographically.
inline constexpr std::array<std::array<int, 4>, 15> kFourSubsets = {
    {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 4, 5}, {1, 2, 4, 6},
     {1, 2, 5, 6}, {1, 3, 4, 5}, {1, 3, 4, 6}, {1, 3, 5, 6}, {1, 4, 5, 6},
     {2, 3, 4, 5}, {2, 3, 4, 6}, {2, 3, 5, 6}, {2, 4, 5, 6}, {3, 4, 5, 6}}};

inline std::string subset_label(const std::array<int, 4>& s) {
    std::string out;
    for (int v : s) out += static_cast<char>('0' + v);
    return out;
}

inline std::size_t pair_index(int i, int j) {
    // flat offset of (i,j), i < j, within kSkewPairs
    return static_cast<std::size_t>((i - 1) * (12 - i) / 2 + (j - i - 1));
}

/// Skew-symmetric 6x6 matrix of polynomials; only the upper triangle is
/// stored. An optional row-degree profile (half-integers kept as doubled
/// integers) asserts that every nonzero entry m_ij is homogeneous of
/// weighted degree (r_i + r_j) / 2.
template <class F>
class SkewMatrix6 {
public:
    explicit SkewMatrix6(RingPtr<F> ring)
        : ring_(std::move(ring)), upper_(15, Polynomial<F>(ring_)) {}

    SkewMatrix6(RingPtr<F> ring, std::vector<Polynomial<F>> upper)
        : ring_(std::move(ring)), upper_(std::move(upper)) {
        if (upper_.size() != 15) throw std::invalid_argument("need 15 upper entries");
        for (const auto& e : upper_)
            if (!compatible(e.ring(), ring_))
                throw std::invalid_argument("matrix entry lives in a different ring");
    }

    const RingPtr<F>& ring() const { return ring_; }

    const Polynomial<F>& upper(int i, int j) const { return upper_[pair_index(i, j)]; }

    void set(int i, int j, Polynomial<F> value) {
        if (!(1 <= i && i < j && j <= 6)) throw std::invalid_argument("need 1 <= i < j <= 6");
        if (!compatible(value.ring(), ring_))
            throw std::invalid_argument("matrix entry lives in a different ring");
        upper_[pair_index(i, j)] = std::move(value);
    }

    /// Signed entry m_ij for any i, j in 1..6.
    Polynomial<F> entry(int i, int j) const {
        if (i == j) return Polynomial<F>(ring_);
        if (i < j) return upper(i, j);
        return -upper(j, i);
    }

    const std::optional<std::array<long long, 6>>& doubled_profile() const { return profile_; }
    void set_doubled_profile(std::array<long long, 6> p) { profile_ = p; }
    void clear_profile() { profile_.reset(); }

    /// Solves r_i + r_j = deg m_ij over the nonzero entries (doubled to stay
    /// integral). Returns nullopt if some entry is inhomogeneous, the system
    /// is inconsistent, or the solution is not unique.
    std::optional<std::array<long long, 6>> derive_doubled_profile() const {
        struct Edge {
            int u, v;
            long long d;  // doubled degree
        };
        std::vector<Edge> edges;
        for (std::size_t p = 0; p < 15; ++p) {
            const auto& poly = upper_[p];
            if (poly.is_zero()) continue;
            auto deg = poly.weighted_degree();
            if (!deg) return std::nullopt;
            edges.push_back({kSkewPairs[p].first - 1, kSkewPairs[p].second - 1, 2 * *deg});
        }
        if (edges.empty()) return std::nullopt;
        std::array<long long, 6> offset{}, sign{};
        std::array<bool, 6> seen{};
        std::array<long long, 6> result{};
        std::array<bool, 6> resolved{};
        for (int start = 0; start < 6; ++start) {
            if (seen[start]) continue;
            bool has_edge = false;
            for (const auto& e : edges) has_edge = has_edge || e.u == start || e.v == start;
            if (!has_edge) {
                seen[start] = resolved[start] = true;
                result[start] = 0;
                continue;
            }
            seen[start] = true;
            offset[start] = 0;
            sign[start] = 1;
            std::vector<int> component{start};
            std::optional<long long> x;
            bool grew = true;
            while (grew) {
                grew = false;
                for (const auto& e : edges) {
                    const bool su = seen[e.u], sv = seen[e.v];
                    if (su == sv) continue;
                    const int known = su ? e.u : e.v, fresh = su ? e.v : e.u;
                    seen[fresh] = true;
                    offset[fresh] = e.d - offset[known];
                    sign[fresh] = -sign[known];
                    component.push_back(fresh);
                    grew = true;
                }
            }
            for (const auto& e : edges) {
                if (!seen[e.u] || !seen[e.v]) continue;
                bool in_component = false;
                for (int c : component) in_component = in_component || c == e.u || c == e.v;
                if (!in_component) continue;
                const long long coef = sign[e.u] + sign[e.v];
                const long long rhs = e.d - offset[e.u] - offset[e.v];
                if (coef == 0) {
                    if (rhs != 0) return std::nullopt;
                } else {
                    if (rhs % coef != 0) return std::nullopt;
                    const long long candidate = rhs / coef;
                    if (x && *x != candidate) return std::nullopt;
                    x = candidate;
                }
            }
            if (!x) return std::nullopt;
            for (int c : component) {
                result[c] = offset[c] + sign[c] * *x;
                resolved[c] = true;
            }
        }
        for (bool r : resolved)
            if (!r) return std::nullopt;
        return result;
    }

    /// Checks every nonzero entry against the stored profile; returns the
    /// offending entry name on failure.
    std::optional<std::string> profile_violation() const {
        if (!profile_) return std::nullopt;
        for (std::size_t p = 0; p < 15; ++p) {
            const auto& poly = upper_[p];
            if (poly.is_zero()) continue;
            const auto [i, j] = kSkewPairs[p];
            const auto deg = poly.weighted_degree();
            if (!deg || 2 * *deg != (*profile_)[i - 1] + (*profile_)[j - 1])
                return "m" + std::to_string(i) + std::to_string(j);
        }
        return std::nullopt;
    }

private:
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> upper_;
    std::optional<std::array<long long, 6>> profile_;
};

/// Pfaffian of the 4x4 skew submatrix on rows/columns {i<j<k<l}:
/// Pf = m_ij m_kl - m_ik m_jl + m_il m_jk.
template <class F>
Polynomial<F> pfaffian4(const SkewMatrix6<F>& m, const std::array<int, 4>& s) {
    for (std::size_t a = 0; a + 1 < 4; ++a)
        if (!(1 <= s[a] && s[a] < s[a + 1] && s[3] <= 6))
            throw std::invalid_argument("need a sorted 4-subset of {1..6}");
    const auto [i, j, k, l] = std::array{s[0], s[1], s[2], s[3]};
    return m.upper(i, j) * m.upper(k, l) - m.upper(i, k) * m.upper(j, l) +
           m.upper(i, l) * m.upper(j, k);
}

/// Determinant of the same 4x4 skew submatrix (Laplace expansion); test
/// oracle for the identity Pf^2 = det.
template <class F>
Polynomial<F> det4_skew_submatrix(const SkewMatrix6<F>& m, const std::array<int, 4>& s) {
    std::array<std::array<Polynomial<F>, 4>, 4> a{{
        {m.entry(s[0], s[0]), m.entry(s[0], s[1]), m.entry(s[0], s[2]), m.entry(s[0], s[3])},
        {m.entry(s[1], s[0]), m.entry(s[1], s[1]), m.entry(s[1], s[2]), m.entry(s[1], s[3])},
        {m.entry(s[2], s[0]), m.entry(s[2], s[1]), m.entry(s[2], s[2]), m.entry(s[2], s[3])},
        {m.entry(s[3], s[0]), m.entry(s[3], s[1]), m.entry(s[3], s[2]), m.entry(s[3], s[3])},
    }};
    const auto det3 = [&](int skip_col) {
        std::array<int, 3> cols{};
        int n = 0;
        for (int c = 0; c < 4; ++c)
            if (c != skip_col) cols[n++] = c;
        Polynomial<F> acc(m.ring());
        acc = a[1][cols[0]] * (a[2][cols[1]] * a[3][cols[2]] - a[2][cols[2]] * a[3][cols[1]]) -
              a[1][cols[1]] * (a[2][cols[0]] * a[3][cols[2]] - a[2][cols[2]] * a[3][cols[0]]) +
              a[1][cols[2]] * (a[2][cols[0]] * a[3][cols[1]] - a[2][cols[1]] * a[3][cols[0]]);
        return acc;
    };
    Polynomial<F> det(m.ring());
    for (int c = 0; c < 4; ++c) {
        Polynomial<F> contrib = a[0][c] * det3(c);
        det = (c % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

/// The 15 Pfaffians, indexed parallel to kFourSubsets.
template <class F>
struct PfaffianSet {
    std::vector<Polynomial<F>> values;  // size 15

    const Polynomial<F>& by_label(std::string_view label) const {
        for (std::size_t i = 0; i < kFourSubsets.size(); ++i)
            if (subset_label(kFourSubsets[i]) == label) return values[i];
        throw std::invalid_argument("unknown Pfaffian label '" + std::string(label) + "'");
    }
};

/// All 15 Pfaffians. If the matrix carries a degree profile, entries are
/// validated against it before any expansion.
template <class F>
PfaffianSet<F> all_pfaffians(const SkewMatrix6<F>& m) {
    if (auto bad = m.profile_violation())
        throw std::invalid_argument("matrix entry " + *bad + " violates the degree profile");
    PfaffianSet<F> out;
    out.values.reserve(15);
    for (const auto& s : kFourSubsets) out.values.push_back(pfaffian4(m, s));
    return out;
}

/// Data of the extrasymmetric format: entries a..i and multipliers p, q.
template <class F>
struct ExtrasymmetricSpec {
    Polynomial<F> a, b, c, d, e, f, g, h, i, p, q;

    const RingPtr<F>& ring() const { return a.ring(); }
};

/// The extrasymmetric matrix
///   ( 0  a  b   c    d    e   )
///   (    0  f   g    h    d   )
///   (       0   i    p*g  p*c )
///   (           0    q*f  q*b )
///   (                0    p*q*a)
///   (                     0   ).
template <class F>
SkewMatrix6<F> build_extrasymmetric(const ExtrasymmetricSpec<F>& s) {
    SkewMatrix6<F> m(s.ring());
    m.set(1, 2, s.a);
    m.set(1, 3, s.b);
    m.set(1, 4, s.c);
    m.set(1, 5, s.d);
    m.set(1, 6, s.e);
    m.set(2, 3, s.f);
    m.set(2, 4, s.g);
    m.set(2, 5, s.h);
    m.set(2, 6, s.d);
    m.set(3, 4, s.i);
    m.set(3, 5, s.p * s.g);
    m.set(3, 6, s.p * s.c);
    m.set(4, 5, s.q * s.f);
    m.set(4, 6, s.q * s.b);
    m.set(5, 6, s.p * s.q * s.a);
    return m;
}

/// Doubling construction: split A = B + C into antisymmetric and symmetric
/// parts and assemble the congruent image of (0 A; -A^T 0),
///   D = ( B   C )
///       ( -C -B ),
/// which is conjugate to (0 A; -A^T 0) by (I I; -I I)/sqrt(2). The sign on
/// the lower-right block is forced: with +B the Pfaffians do not cut out the
/// rank-one locus. Needs characteristic != 2.
template <class F>
SkewMatrix6<F> segre_double(const std::array<std::array<Polynomial<F>, 3>, 3>& a) {
    const RingPtr<F>& ring = a[0][0].ring();
    if (ring->field().characteristic() == 2)
        throw std::invalid_argument("the doubling construction needs characteristic != 2");
    const auto half = ring->field().inv(ring->field().from_long(2));
    const auto b = [&](int i, int j) { return (a[i][j] - a[j][i]).scaled(half); };
    const auto c = [&](int i, int j) { return (a[i][j] + a[j][i]).scaled(half); };
    SkewMatrix6<F> d(ring);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i < j) {
                d.set(i + 1, j + 1, b(i, j));  // upper-left block B
                d.set(i + 4, j + 4, b(j, i));  // lower-right block -B
            }
            d.set(i + 1, j + 4, c(i, j));      // upper-right block C
        }
    return d;
}

/// Extracts the B and C blocks back from a doubled matrix.
template <class F>
std::pair<std::array<std::array<Polynomial<F>, 3>, 3>, std::array<std::array<Polynomial<F>, 3>, 3>>
split_double(const SkewMatrix6<F>& d) {
    std::array<std::array<Polynomial<F>, 3>, 3> b{{{Polynomial<F>(d.ring()), Polynomial<F>(d.ring()), Polynomial<F>(d.ring())},
                                                   {Polynomial<F>(d.ring()), Polynomial<F>(d.ring()), Polynomial<F>(d.ring())},
                                                   {Polynomial<F>(d.ring()), Polynomial<F>(d.ring()), Polynomial<F>(d.ring())}}};
    auto c = b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            b[i][j] = d.entry(i + 1, j + 1);
            c[i][j] = d.entry(i + 1, j + 4);
        }
    return {b, c};
}

/// Result of the greedy nine-generator selection.
template <class F>
struct NineReport {
    std::vector<std::string> chosen;                       // subset labels, in keep order
    std::vector<std::pair<std::string, bool>> residuals;   // label -> lies in chosen ideal
    bool all_residuals_member = true;
    Ideal<F> chosen_ideal;
};

/// Greedy minimal generating subset of the 15 Pfaffians: walk them in
/// increasing degree (ties by subset label) and keep one exactly when it is
/// not in the ideal of those already kept; then test the remaining ones for
/// membership. Zero Pfaffians are trivially members.
template <class F>
NineReport<F> reduce_to_nine(const SkewMatrix6<F>& m) {
    const auto pf = all_pfaffians(m);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < 15; ++i)
        if (!pf.values[i].is_zero()) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const auto dx = pf.values[x].max_weighted_degree(), dy = pf.values[y].max_weighted_degree();
        if (dx != dy) return dx < dy;
        return x < y;
    });
    NineReport<F> report{{}, {}, true, Ideal<F>(m.ring(), {})};
    std::vector<Polynomial<F>> kept;
    auto gb = groebner_basis(Ideal<F>(m.ring(), kept));
    std::vector<bool> is_chosen(15, false);
    for (std::size_t idx : order) {
        if (ideal_member(pf.values[idx], gb)) continue;
        kept.push_back(pf.values[idx]);
        is_chosen[idx] = true;
        report.chosen.push_back(subset_label(kFourSubsets[idx]));
        gb = groebner_basis(Ideal<F>(m.ring(), kept));
    }
    for (std::size_t i = 0; i < 15; ++i) {
        if (is_chosen[i]) continue;
        const bool member = pf.values[i].is_zero() || ideal_member(pf.values[i], gb);
        report.residuals.emplace_back(subset_label(kFourSubsets[i]), member);
        report.all_residuals_member = report.all_residuals_member && member;
    }
    report.chosen_ideal = Ideal<F>(m.ring(), kept);
    return report;
}

/// Matrix file format: a ring declaration line followed by entry lines
/// `m<i><j> = <polynomial>`; omitted entries are zero.
template <class F>
SkewMatrix6<F> matrix_from_spec(const SpecFileText& text, const RingPtr<F>& ring) {
    SkewMatrix6<F> m(ring);
    for (const auto& [name, expr] : text.assignments) {
        if (name.size() != 3 || name[0] != 'm' || name[1] < '1' || name[1] > '6' ||
            name[2] < '1' || name[2] > '6')
            throw std::invalid_argument("matrix entry name must look like m<i><j>, got '" + name +
                                        "'");
        const int i = name[1] - '0', j = name[2] - '0';
        if (i >= j) throw std::invalid_argument("matrix entries must be upper-triangular, got '" +
                                                name + "'");
        m.set(i, j, parse_polynomial<F>(expr, ring));
    }
    return m;
}

template <class F>
std::string format_matrix_file(const SkewMatrix6<F>& m) {
    std::string out = m.ring()->declaration() + "\n";
    for (const auto& [i, j] : kSkewPairs)
        out += "m" + std::to_string(i) + std::to_string(j) + " = " + m.upper(i, j).to_string() +
               "\n";
    return out;
}

}  // namespace gring
