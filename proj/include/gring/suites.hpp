#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gring/curve_ring.hpp"
#include "gring/family.hpp"
#include "gring/hyperelliptic.hpp"
#include "gring/report.hpp"

namespace gring {

namespace detail {

inline std::string dims_witness(const HilbertTable& table) {
    std::string out = "dims:";
    for (auto v : table.values()) out += " " + std::to_string(v);
    return out;
}

/// "GF(32003)" -> "gf32003", "QQ" -> "qq"; keeps check names sortable.
inline std::string field_slug(const std::string& name) {
    std::string out;
    for (char c : name)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace detail

inline std::vector<std::string> trial_labels(std::uint64_t seed_base, int count) {
    std::vector<std::string> labels;
    for (int i = 0; i < count; ++i)
        labels.push_back("trial" + std::to_string(i) + "-seed" + std::to_string(seed_base + i));
    return labels;
}

/// Generic 3x3 matrix of independent variables a11..a33.
template <class F>
std::array<std::array<Polynomial<F>, 3>, 3> generic_matrix3(const RingPtr<F>& ring) {
    using P = Polynomial<F>;
    std::array<std::array<P, 3>, 3> a{{{P(ring), P(ring), P(ring)},
                                       {P(ring), P(ring), P(ring)},
                                       {P(ring), P(ring), P(ring)}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            a[i][j] = P::variable(ring, "a" + std::to_string(i + 1) + std::to_string(j + 1));
    return a;
}

template <class F>
RingPtr<F> generic_matrix_ring(const F& field) {
    return make_ring<F>({"a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33"},
                        std::vector<int>(9, 1), field);
}

template <class F>
std::vector<Polynomial<F>> two_by_two_minors(const std::array<std::array<Polynomial<F>, 3>, 3>& a) {
    std::vector<Polynomial<F>> minors;
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = c1 + 1; c2 < 3; ++c2)
                    minors.push_back(a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]);
    return minors;
}

/// Doubling a generic 3x3 matrix of indeterminates: the ideal of the fifteen
/// 4x4 Pfaffians equals the ideal of the nine 2x2 minors.
template <class F>
VerificationReport segre_suite(const F& field) {
    VerificationReport report;
    CheckTimer timer;
    auto ring = generic_matrix_ring(field);
    const auto a = generic_matrix3<F>(ring);
    const auto d = segre_double(a);
    auto pf = all_pfaffians(d);
    Ideal<F> pfaffian_ideal(ring, pf.values);
    Ideal<F> minor_ideal(ring, two_by_two_minors(a));
    const bool equal = ideal_equal(pfaffian_ideal, minor_ideal);
    report.add(timer.stamp(Check::make(
        "segre-pfaffian-ideal-equals-minors-" + detail::field_slug(field.name()), equal,
        {"pfaffian generators: " + std::to_string(pfaffian_ideal.generators().size()),
         "minor generators: " + std::to_string(minor_ideal.generators().size())})));
    return report;
}

/// Generic extrasymmetric matrix in the eleven indeterminates a..i, p, q:
/// nine greedily chosen Pfaffians generate, the remaining six are members.
template <class F>
VerificationReport extrasym_suite(const F& field) {
    VerificationReport report;
    const auto slug = detail::field_slug(field.name());
    CheckTimer timer;
    using P = Polynomial<F>;
    auto ring = make_ring<F>({"a", "b", "c", "d", "e", "f", "g", "h", "i", "p", "q"},
                             std::vector<int>(11, 1), field);
    const ExtrasymmetricSpec<F> spec{
        P::variable(ring, "a"), P::variable(ring, "b"), P::variable(ring, "c"),
        P::variable(ring, "d"), P::variable(ring, "e"), P::variable(ring, "f"),
        P::variable(ring, "g"), P::variable(ring, "h"), P::variable(ring, "i"),
        P::variable(ring, "p"), P::variable(ring, "q")};
    const auto result = reduce_to_nine(build_extrasymmetric(spec));
    std::string chosen = "chosen:";
    for (const auto& label : result.chosen) chosen += " " + label;
    report.add(timer.stamp(Check::make("extrasym-nine-generators-chosen-" + slug,
                                       result.chosen.size() == 9, {chosen})));
    CheckTimer timer2;
    std::vector<std::string> witnesses{chosen};
    for (const auto& [label, member] : result.residuals)
        if (!member) witnesses.push_back("residual " + label + " not generated");
    report.add(timer2.stamp(Check::make("extrasym-residuals-in-chosen-ideal-" + slug,
                                        result.all_residuals_member, witnesses)));
    return report;
}

/// Curve-ring checks per trial: the Pfaffian-ideal Hilbert table equals the
/// Weierstrass counting oracle, and the six generators span the subring.
template <class F>
VerificationReport curve_ring_suite(const F& field, std::uint64_t seed, int trials,
                                    long long degree) {
    VerificationReport report;
    const auto oracle = curve_dims_oracle(degree);
    const auto labels = trial_labels(seed, trials);
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
        CheckTimer timer;
        const auto spec = random_curve_spec(field, trial_seed);
        const auto table = hilbert_function(curve_ring_ideal(spec), degree);
        Check check = Check::make("curve-hilbert-matches-oracle-" + labels[trial], table == oracle,
                                  {"P9 = " + spec.p9.to_string()}, table.values());
        if (table != oracle) check.witnesses.push_back("oracle " + detail::dims_witness(oracle));
        report.add(timer.stamp(std::move(check)));

        CheckTimer timer2;
        const auto model = random_hyperelliptic_model(field, trial_seed);
        const auto span = subring_generation_check(model, degree);
        std::vector<std::string> witnesses;
        std::vector<long long> ranks;
        for (const auto& row : span.rows) {
            ranks.push_back(row.achieved_rank);
            if (!row.spans)
                witnesses.push_back("degree " + std::to_string(row.degree) + ": rank " +
                                    std::to_string(row.achieved_rank) + " < " +
                                    std::to_string(row.expected_dim));
        }
        report.add(timer2.stamp(Check::make("curve-subring-generators-span-" + labels[trial],
                                            span.all_span, witnesses, ranks)));
    }
    report.sort_by_name();
    return report;
}

/// Hilbert check of a single named curve-ring spec against the oracle.
template <class F>
VerificationReport curve_ring_spec_suite(const CurveRingSpec<F>& spec, const std::string& label,
                                         long long degree) {
    VerificationReport report;
    CheckTimer timer;
    const auto oracle = curve_dims_oracle(degree);
    const auto table = hilbert_function(curve_ring_ideal(spec), degree);
    Check check = Check::make("curve-hilbert-matches-oracle-" + label, table == oracle,
                              {"P9 = " + spec.p9.to_string()}, table.values());
    if (table != oracle) check.witnesses.push_back("oracle " + detail::dims_witness(oracle));
    report.add(timer.stamp(std::move(check)));
    return report;
}

/// Family checks per spec: Hilbert tables agree across the t-list (flatness
/// evidence, needs at least two t values), and the t = 0 table matches the
/// closed-form semicanonical dimensions.
template <class F>
VerificationReport family_suite(const F& field, const std::vector<FamilySpec<F>>& specs,
                                const std::vector<std::string>& labels,
                                std::span<const typename F::Element> t_values, long long degree) {
    VerificationReport report;
    for (std::size_t trial = 0; trial < specs.size(); ++trial) {
        CheckTimer timer;
        const auto flat = flatness_check(specs[trial], t_values, degree);
        if (t_values.size() >= 2) {
            std::vector<std::string> witnesses;
            for (std::size_t i = 0; i < flat.tables.size(); ++i)
                witnesses.push_back("t=" + flat.t_labels[i] + " " +
                                    detail::dims_witness(flat.tables[i]));
            report.add(timer.stamp(Check::make("family-flatness-hilbert-constant-" + labels[trial],
                                               flat.all_equal, witnesses,
                                               flat.tables.front().values())));
        }
        for (std::size_t i = 0; i < t_values.size(); ++i) {
            if (!field.is_zero(t_values[i])) continue;
            CheckTimer timer2;
            bool match = true;
            std::vector<std::string> mismatch;
            for (long long d = 0; d <= degree; ++d) {
                if (flat.tables[i].at(d) != semicanonical_dims(d)) {
                    match = false;
                    mismatch.push_back("degree " + std::to_string(d) + ": " +
                                       std::to_string(flat.tables[i].at(d)) + " != " +
                                       std::to_string(semicanonical_dims(d)));
                }
            }
            report.add(timer2.stamp(Check::make("family-t0-matches-semicanonical-" + labels[trial],
                                                match, mismatch, flat.tables[i].values())));
            break;
        }
    }
    report.sort_by_name();
    return report;
}

/// Elimination checks per spec (t != 0): principal elimination ideal, degree-9
/// generator, agreement of the Groebner and back-substitution routes, and the
/// quotient Hilbert table equal to the semicanonical dimensions.
template <class F>
VerificationReport eliminate_suite(const std::vector<FamilySpec<F>>& specs,
                                   const std::vector<std::string>& labels, long long degree) {
    VerificationReport report;
    for (std::size_t trial = 0; trial < specs.size(); ++trial) {
        const auto& tag = labels[trial];
        CheckTimer timer;
        const auto result = eliminate_to_hypersurface(specs[trial]);
        report.add(timer.stamp(Check::make(
            "eliminate-principal-" + tag, result.principal,
            {"elimination ideal generators: " +
             std::to_string(result.elimination_ideal.generators().size())})));
        report.add(Check::make("eliminate-generator-degree9-" + tag, result.generator_degree9,
                               {"generator = " + result.generator.to_string()}));
        report.add(Check::make(
            "eliminate-paths-agree-" + tag, result.paths_agree,
            {"back-substituted Pf_1234 = " + result.back_substituted.to_string()}));
        std::string matched = "generator matches Pfaffian image:";
        for (const auto& label : result.matching_pfaffians) matched += " " + label;
        report.add(Check::info("eliminate-pfaffian-image-" + tag, {matched}));
        CheckTimer timer2;
        const auto table = hilbert_function(
            Ideal<F>(result.elimination_ideal.ring(), {result.generator}), degree);
        bool match = true;
        std::vector<std::string> mismatch;
        for (long long d = 0; d <= degree; ++d)
            if (table.at(d) != semicanonical_dims(d)) {
                match = false;
                mismatch.push_back("degree " + std::to_string(d) + ": " +
                                   std::to_string(table.at(d)) + " != " +
                                   std::to_string(semicanonical_dims(d)));
            }
        report.add(timer2.stamp(Check::make("eliminate-quotient-semicanonical-" + tag, match,
                                            mismatch, table.values())));
    }
    report.sort_by_name();
    return report;
}

/// Branch-curve checks per spec (t = 0): degree 14 and monomial-ideal
/// membership after x0 = 1; membership in the extended ideal is reported.
template <class F>
VerificationReport branch_suite(const std::vector<FamilySpec<F>>& specs,
                                const std::vector<std::string>& labels) {
    VerificationReport report;
    for (std::size_t trial = 0; trial < specs.size(); ++trial) {
        const auto& tag = labels[trial];
        CheckTimer timer;
        const auto result = branch_curve(specs[trial]);
        report.add(timer.stamp(Check::make("branch-degree14-" + tag, result.degree14,
                                           {"curve = " + result.curve.to_string()})));
        report.add(Check::make("branch-ideal-membership-" + tag, result.in_recipe_ideal,
                               {"curve = " + result.curve.to_string()}));
        const auto z = Polynomial<F>::variable(specs[trial].ring(), "z");
        report.add(Check::info(
            "branch-extended-ideal-" + tag,
            {std::string("in extended ideal: ") + (result.in_extended_ideal ? "yes" : "no"),
             std::string("P3 == z: ") + (specs[trial].p3 == z ? "yes" : "no")}));
    }
    report.sort_by_name();
    return report;
}

/// Pf^2 = det for all 15 subsets on seeded random matrices; pins the sign
/// convention.
template <class F>
VerificationReport pfaffian_soundness_suite(const F& field, std::uint64_t seed, int matrices) {
    VerificationReport report;
    CheckTimer timer;
    auto ring = make_ring<F>({"x", "y", "z"}, {1, 2, 3}, field);
    SplitMix64 rng(seed);
    bool all_ok = true;
    std::vector<std::string> witnesses{"matrices: " + std::to_string(matrices),
                                       "seed: " + std::to_string(seed)};
    for (int n = 0; n < matrices && all_ok; ++n) {
        SkewMatrix6<F> m(ring);
        for (const auto& [i, j] : kSkewPairs) {
            Polynomial<F> entry(ring);
            for (long long d = 0; d <= 2; ++d) entry = entry + random_homogeneous(ring, d, rng);
            m.set(i, j, entry);
        }
        for (const auto& subset : kFourSubsets) {
            const auto pf = pfaffian4(m, subset);
            if (!(pf * pf == det4_skew_submatrix(m, subset))) {
                all_ok = false;
                witnesses.push_back("failure at matrix " + std::to_string(n) + ", subset " +
                                    subset_label(subset));
                break;
            }
        }
    }
    report.add(timer.stamp(Check::make("pfaffian-square-equals-det", all_ok, witnesses)));
    return report;
}

/// Independent-oracle agreement: hilbert_function equals dim_by_linear_algebra
/// degree by degree on the curve ring and the family ideal at t = 0 and t = 1.
template <class F>
VerificationReport oracle_equivalence_suite(const F& field, std::uint64_t seed,
                                            long long degree) {
    VerificationReport report;
    const auto compare = [&](const std::string& name, const Ideal<F>& ideal) {
        CheckTimer timer;
        const auto table = hilbert_function(ideal, degree);
        bool match = true;
        std::vector<std::string> witnesses;
        std::vector<long long> dims;
        for (long long d = 0; d <= degree; ++d) {
            const auto direct = dim_by_linear_algebra(ideal, d);
            dims.push_back(direct);
            if (direct != table.at(d)) {
                match = false;
                witnesses.push_back("degree " + std::to_string(d) + ": groebner " +
                                    std::to_string(table.at(d)) + " != linear-algebra " +
                                    std::to_string(direct));
            }
        }
        report.add(timer.stamp(Check::make(name, match, witnesses, dims)));
    };
    compare("oracle-equivalence-curve-ring", curve_ring_ideal(random_curve_spec(field, seed)));
    const auto spec = random_family_spec(field, seed + 1, field.zero());
    compare("oracle-equivalence-family-t0", family_ideal(spec));
    compare("oracle-equivalence-family-t1", family_ideal(spec.with_t(field.one())));
    report.sort_by_name();
    return report;
}

/// Seeded batches of family data; trial i draws from seed_base + i.
template <class F>
std::vector<FamilySpec<F>> random_family_specs(const F& field, std::uint64_t seed_base, int count,
                                               typename F::Element t, bool require_w_unit = false) {
    std::vector<FamilySpec<F>> specs;
    for (int i = 0; i < count; ++i)
        specs.push_back(
            random_family_spec(field, seed_base + static_cast<std::uint64_t>(i), t, require_w_unit));
    return specs;
}

}  // namespace gring
