// Acceptance suite: one line per criterion, wall-clock budget enforced.
// Exits 0 only if every criterion passes within its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gring/suites.hpp"

using namespace gring;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<long long> kCurveOracle14{1, 1, 2, 3, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19};
const std::vector<long long> kSemicanonical12{1, 2, 4, 7, 11, 16, 23, 31, 41, 52, 65, 79, 95};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    PrimeField fp(32003);
    RationalField qq;
    std::vector<Criterion> criteria;

    criteria.push_back({"1-segre-reduction", 30.0, [&](std::string&) {
        return segre_suite(qq).all_pass() && segre_suite(fp).all_pass();
    }});

    criteria.push_back({"2-extrasymmetric-nine-generation", 120.0, [&](std::string&) {
        return extrasym_suite(qq).all_pass() && extrasym_suite(fp).all_pass();
    }});

    criteria.push_back({"3-curve-ring-hilbert", 60.0, [&](std::string& note) {
        if (curve_dims_oracle(14).values() != kCurveOracle14) {
            note = "oracle sequence drifted";
            return false;
        }
        for (std::uint64_t seed = 1003; seed < 1008; ++seed) {
            const auto table =
                hilbert_function(curve_ring_ideal(random_curve_spec(fp, seed)), 14);
            if (table.values() != kCurveOracle14) {
                note = "mismatch at seed " + std::to_string(seed);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"4-semicanonical-hilbert-t0", 180.0, [&](std::string& note) {
        for (std::uint64_t seed = 1004; seed < 1009; ++seed) {
            const auto table =
                hilbert_function(family_ideal(random_family_spec(fp, seed, fp.zero())), 12);
            if (table.values() != kSemicanonical12) {
                note = "mismatch at seed " + std::to_string(seed);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"5-flatness-evidence", 300.0, [&](std::string& note) {
        const std::vector<PrimeField::Element> ts{fp.from_long(0), fp.from_long(1),
                                                  fp.from_long(7)};
        for (std::uint64_t seed = 1005; seed < 1008; ++seed) {
            const auto result =
                flatness_check(random_family_spec(fp, seed, fp.zero()), ts, 12);
            if (!result.all_equal) {
                note = "tables differ at seed " + std::to_string(seed);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"6-elimination-degree9", 120.0, [&](std::string& note) {
        for (std::uint64_t seed = 1006; seed < 1009; ++seed) {
            const auto spec = random_family_spec(fp, seed, fp.one(), true);
            const auto result = eliminate_to_hypersurface(spec);
            if (!result.principal || !result.generator_degree9 || !result.paths_agree) {
                note = "elimination failed at seed " + std::to_string(seed);
                return false;
            }
            const auto table = hilbert_function(
                Ideal<PrimeField>(result.elimination_ideal.ring(), {result.generator}), 12);
            if (table.values() != kSemicanonical12) {
                note = "quotient table mismatch at seed " + std::to_string(seed);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"7-branch-curve", 10.0, [&](std::string& note) {
        auto r5 = family_spec_ring(fp);
        const auto p5 = [&](const char* s) { return parse_polynomial<PrimeField>(s, r5); };
        const FamilySpec<PrimeField> hand(p5("z"), p5("w"), p5("x1*w^2"), fp.zero());
        const auto hand_result = branch_curve(hand);
        if (!(hand_result.curve ==
              parse_polynomial<PrimeField>("y^7 + x1^2*y^6", hand_result.curve.ring()))) {
            note = "hand instance mismatch: " + hand_result.curve.to_string();
            return false;
        }
        for (std::uint64_t seed = 1007; seed < 1012; ++seed) {
            const auto result = branch_curve(random_family_spec(fp, seed, fp.zero()));
            if (!result.degree14 || !result.in_recipe_ideal) {
                note = "recipe failed at seed " + std::to_string(seed);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"8-pfaffian-soundness", 10.0, [&](std::string&) {
        return pfaffian_soundness_suite(fp, 1008, 100).all_pass();
    }});

    criteria.push_back({"9-oracle-equivalence", 120.0, [&](std::string&) {
        return oracle_equivalence_suite(fp, 1009, 10).all_pass();
    }});

    int failures = 0;
    double total = 0.0;
    for (auto& criterion : criteria) {
        const auto start = Clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = criterion.run(note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        total += elapsed;
        const bool in_budget = elapsed < criterion.budget_seconds;
        const bool pass = ok && in_budget;
        failures += !pass;
        std::printf("%s criterion-%s (%.2fs of %.0fs budget)%s%s\n", pass ? "PASS" : "FAIL",
                    criterion.name.c_str(), elapsed, criterion.budget_seconds,
                    note.empty() ? "" : " -- ", note.c_str());
    }
    std::printf("%zu/%zu criteria passed in %.2fs\n", criteria.size() - failures,
                criteria.size(), total);
    return failures == 0 ? 0 : 1;
}
