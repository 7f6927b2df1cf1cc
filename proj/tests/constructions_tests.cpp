#include <catch2/catch_amalgamated.hpp>

#include "gring/parser.hpp"
#include "gring/specfile.hpp"
#include "gring/suites.hpp"

using namespace gring;

TEST_CASE("Weierstrass counting oracle") {
    SECTION("low degrees by hand") {
        // subring degrees 0..7 reindex into ring degrees 0,1,3,4,6,7,9,10
        auto table = curve_dims_oracle(7);
        REQUIRE(table.values() == std::vector<long long>{1, 1, 2, 3, 4, 5, 7, 8});
    }
    SECTION("degree 6 matches the even/odd dimension difference") {
        // dim B_6 - dim B_5 = 23 - 16
        REQUIRE(curve_dims_oracle(6).at(6) == semicanonical_dims(6) - semicanonical_dims(5));
        REQUIRE(semicanonical_dims(6) == 23);
        REQUIRE(semicanonical_dims(5) == 16);
    }
    SECTION("full table through degree 14") {
        REQUIRE(curve_dims_oracle(14).values() ==
                std::vector<long long>{1, 1, 2, 3, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19});
    }
}

TEST_CASE("semicanonical dimensions") {
    REQUIRE(semicanonical_dims(0) == 1);
    REQUIRE(semicanonical_dims(3) == 7);   // h^0(3L)
    REQUIRE(semicanonical_dims(5) == 16);  // odd formula at m = 2
    std::vector<long long> table;
    for (long long d = 0; d <= 12; ++d) table.push_back(semicanonical_dims(d));
    REQUIRE(table ==
            std::vector<long long>{1, 2, 4, 7, 11, 16, 23, 31, 41, 52, 65, 79, 95});

    SECTION("first differences reproduce the curve oracle") {
        // hyperplane-section principle: quotient by x0 drops to the curve ring
        const auto oracle = curve_dims_oracle(14);
        for (long long d = 1; d <= 14; ++d)
            REQUIRE(semicanonical_dims(d) - semicanonical_dims(d - 1) == oracle.at(d));
    }
}

TEST_CASE("curve ring ideal contains the stated relations") {
    PrimeField fp(32003);
    auto spec = random_curve_spec(fp, 1234);
    auto ideal = curve_ring_ideal(spec);
    auto gb = groebner_basis(ideal);
    auto ring = ideal.ring();
    auto p = [&](const char* s) { return parse_polynomial<PrimeField>(s, ring); };
    auto p9 = spec.p9.mapped_to(ring);

    REQUIRE(ideal_member(p("x*z - y^2"), gb));
    REQUIRE(ideal_member(p("v^2 - z^2*w") - p("x") * p9, gb));
    REQUIRE(ideal_member(p("u^2 - w^3") - p("z") * p9, gb));
    REQUIRE_FALSE(ideal_member(p("v^2"), gb));
}

TEST_CASE("curve ring Hilbert function matches the oracle") {
    PrimeField fp(32003);
    auto spec = random_curve_spec(fp, 99);
    REQUIRE(hilbert_function(curve_ring_ideal(spec), 14) == curve_dims_oracle(14));

    SECTION("also for the degenerate P9 = 0") {
        auto zero_spec = CurveRingSpec<PrimeField>(
            Polynomial<PrimeField>::zero(curve_spec_ring(fp)));
        REQUIRE(hilbert_function(curve_ring_ideal(zero_spec), 10) == curve_dims_oracle(10));
    }
}

TEST_CASE("subring generators span every graded piece") {
    PrimeField fp(32003);
    auto model = random_hyperelliptic_model(fp, 555);
    auto result = subring_generation_check(model, 14);
    REQUIRE(result.all_span);
    REQUIRE(result.rows.size() == 15);
    // degree 1 is spanned by X alone; degree 2 by x^2 -> X^3 and y -> XY
    REQUIRE(result.rows[1].expected_dim == 1);
    REQUIRE(result.rows[2].expected_dim == 2);
    // expected dimensions reproduce the oracle table
    const auto oracle = curve_dims_oracle(14);
    for (const auto& row : result.rows) REQUIRE(row.expected_dim == oracle.at(row.degree));
}

TEST_CASE("hyperelliptic model validation") {
    PrimeField fp(32003);
    auto ring = hyperelliptic_ring(fp);
    SECTION("Y^7 coefficient must be 1") {
        auto bad = parse_polynomial<PrimeField>("X^14 + 2*Y^7", ring);
        REQUIRE_THROWS_WITH(HyperellipticModel<PrimeField>(bad),
                            Catch::Matchers::ContainsSubstring("Y^7"));
    }
    SECTION("degree must be exactly 14") {
        auto bad = parse_polynomial<PrimeField>("Y^7 + X^2", ring);
        REQUIRE_THROWS_AS(HyperellipticModel<PrimeField>(bad), std::invalid_argument);
    }
    SECTION("seeded models are reproducible") {
        auto a = random_hyperelliptic_model(fp, 9);
        auto b = random_hyperelliptic_model(fp, 9);
        REQUIRE(a.p14 == b.p14);
    }
}

TEST_CASE("family spec validation") {
    RationalField qq;
    auto r5 = family_spec_ring(qq);
    auto p5 = [&](const char* s) { return parse_polynomial<RationalField>(s, r5); };
    SECTION("degrees are enforced") {
        REQUIRE_THROWS_AS(FamilySpec<RationalField>(p5("z"), p5("z"), p5("x1^9"), qq.one()),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(FamilySpec<RationalField>(p5("z + x0"), p5("w"), p5("x1^9"), qq.one()),
                          std::invalid_argument);
    }
    SECTION("zero entries are accepted as degenerate data") {
        REQUIRE_NOTHROW(FamilySpec<RationalField>(p5("0"), p5("0"), p5("0"), qq.zero()));
    }
    SECTION("the ring must be the five-variable family ring") {
        auto wrong = make_ring<RationalField>({"x0", "x1", "y", "z"}, {1, 1, 2, 3}, qq);
        auto f = parse_polynomial<RationalField>("z", wrong);
        REQUIRE_THROWS_AS(FamilySpec<RationalField>(f, f, f, qq.one()), std::invalid_argument);
    }
}

TEST_CASE("setting t = 0 recovers the central-fibre matrix") {
    RationalField qq;
    auto r5 = family_spec_ring(qq);
    auto p5 = [&](const char* s) { return parse_polynomial<RationalField>(s, r5); };
    FamilySpec<RationalField> spec(p5("z + x0^3"), p5("w + x0*x1*y"), p5("x1^9"), qq.zero());
    auto m = family_matrix(spec);
    auto ring = m.ring();
    auto p = [&](const char* s) { return parse_polynomial<RationalField>(s, ring); };
    // the two t-entries vanish, everything else keeps the displayed shape
    REQUIRE(m.upper(1, 2).is_zero());
    REQUIRE(m.upper(5, 6).is_zero());
    REQUIRE(m.upper(2, 5) == p("z + x0^3"));
    REQUIRE(m.upper(3, 4) == p("x1^9"));
    REQUIRE(m.upper(4, 5) == p("w") * p("w + x0*x1*y"));
    REQUIRE(m.upper(4, 6) == p("z") * p("w + x0*x1*y"));
}

TEST_CASE("family matrix at t = 0 and degenerate data") {
    RationalField qq;
    auto r5 = family_spec_ring(qq);
    auto zero5 = Polynomial<RationalField>::zero(r5);
    FamilySpec<RationalField> spec(zero5, zero5, zero5, qq.zero());
    auto m = family_matrix(spec);
    auto ring = m.ring();
    auto p = [&](const char* s) { return parse_polynomial<RationalField>(s, ring); };
    // only the variable entries survive
    REQUIRE(m.upper(1, 2).is_zero());
    REQUIRE(m.upper(1, 3) == p("z"));
    REQUIRE(m.upper(1, 4) == p("v"));
    REQUIRE(m.upper(1, 5) == p("y"));
    REQUIRE(m.upper(1, 6) == p("x1"));
    REQUIRE(m.upper(2, 3) == p("w"));
    REQUIRE(m.upper(2, 4) == p("u"));
    REQUIRE(m.upper(2, 5).is_zero());
    REQUIRE(m.upper(2, 6) == p("y"));
    REQUIRE(m.upper(3, 4).is_zero());
    REQUIRE(m.upper(3, 5) == p("u"));
    REQUIRE(m.upper(3, 6) == p("v"));
    REQUIRE(m.upper(4, 5).is_zero());
    REQUIRE(m.upper(4, 6).is_zero());
    REQUIRE(m.upper(5, 6).is_zero());
    REQUIRE(m.doubled_profile().has_value());
}

TEST_CASE("family Hilbert table at t = 0 equals the semicanonical dimensions") {
    PrimeField fp(32003);
    auto spec = random_family_spec(fp, 2026, fp.zero());
    auto table = hilbert_function(family_ideal(spec), 12);
    for (long long d = 0; d <= 12; ++d) REQUIRE(table.at(d) == semicanonical_dims(d));
}

TEST_CASE("flatness evidence across specializations of t") {
    PrimeField fp(32003);
    auto spec = random_family_spec(fp, 31337, fp.zero());
    std::vector<PrimeField::Element> ts{fp.from_long(0), fp.from_long(1), fp.from_long(7)};
    auto result = flatness_check(spec, ts, 10);
    REQUIRE(result.all_equal);
    REQUIRE(result.tables.size() == 3);
    REQUIRE(result.t_labels == std::vector<std::string>{"0", "1", "7"});
}

TEST_CASE("elimination down to the degree-9 hypersurface") {
    RationalField qq;
    auto r5 = family_spec_ring(qq);
    auto p5 = [&](const char* s) { return parse_polynomial<RationalField>(s, r5); };

    SECTION("hand instance P3 = z, P4 = w, P9 = x1^9, t = 1") {
        FamilySpec<RationalField> spec(p5("z"), p5("w"), p5("x1^9"), qq.one());
        auto result = eliminate_to_hypersurface(spec);
        REQUIRE(result.principal);
        REQUIRE(result.generator_degree9);
        REQUIRE(result.paths_agree);
        // back-substitution by hand: w = y^2 - x1 z, v = zy - x1 w, u = z P3 - y w
        // into Pf_1234 = t P9 - z u + v w gives
        auto expected = parse_polynomial<RationalField>(
            "x1^9 - x1*y^4 - x1^3*z^2 + 2*y^3*z + 2*x1^2*y^2*z - 2*x1*y*z^2 - z^3",
            result.generator.ring());
        REQUIRE(result.generator == expected);
        REQUIRE(std::find(result.matching_pfaffians.begin(), result.matching_pfaffians.end(),
                          "1234") != result.matching_pfaffians.end());
    }
    SECTION("quotient Hilbert table equals the semicanonical table") {
        PrimeField fp(32003);
        auto spec = random_family_spec(fp, 606, fp.one(), true);
        auto result = eliminate_to_hypersurface(spec);
        REQUIRE(result.principal);
        REQUIRE(result.generator_degree9);
        REQUIRE(result.paths_agree);
        auto table = hilbert_function(
            Ideal<PrimeField>(result.elimination_ideal.ring(), {result.generator}), 12);
        const auto& weights = result.elimination_ideal.ring()->weights();
        for (long long d = 0; d <= 12; ++d) {
            REQUIRE(table.at(d) == semicanonical_dims(d));
            // a degree-9 hypersurface drops exactly the degree-(d-9) count
            const auto count = [&](long long n) {
                return static_cast<long long>(monomials_of_weighted_degree(weights, n).size());
            };
            REQUIRE(table.at(d) == count(d) - count(d - 9));
        }
    }
    SECTION("t = 0 is rejected") {
        FamilySpec<RationalField> spec(p5("z"), p5("w"), p5("x1^9"), qq.zero());
        REQUIRE_THROWS_AS(eliminate_to_hypersurface(spec), std::invalid_argument);
    }
    SECTION("P4 without w is rejected") {
        FamilySpec<RationalField> spec(p5("z"), p5("y^2"), p5("x1^9"), qq.one());
        REQUIRE_THROWS_WITH(eliminate_to_hypersurface(spec),
                            Catch::Matchers::ContainsSubstring("w-coefficient"));
    }
    SECTION("a non-general P9 breaks the degree-9 generation") {
        // P9 chosen so that the back-substituted Pf_1234 vanishes identically
        auto p9 = p5("z^3 - 2*y^3*z + 2*x1*y*z^2 + x1*y^4 - 2*x1^2*y^2*z + x1^3*z^2");
        FamilySpec<RationalField> spec(p5("z"), p5("w"), p9, qq.one());
        auto result = eliminate_to_hypersurface(spec);
        REQUIRE(result.back_substituted.is_zero());
        REQUIRE_FALSE((result.principal && result.generator_degree9 && result.paths_agree));
    }
}

TEST_CASE("branch curve recipe") {
    PrimeField fp(32003);
    auto r5 = family_spec_ring(fp);
    auto p5 = [&](const char* s) { return parse_polynomial<PrimeField>(s, r5); };

    SECTION("P4 = w, P9 = x1*w^2 gives y^7 + x1^2*y^6") {
        FamilySpec<PrimeField> spec(p5("z"), p5("w"), p5("x1*w^2"), fp.zero());
        auto result = branch_curve(spec);
        REQUIRE(result.curve ==
                parse_polynomial<PrimeField>("y^7 + x1^2*y^6", result.curve.ring()));
        REQUIRE(result.degree14);
        REQUIRE(result.in_recipe_ideal);
        REQUIRE(result.in_extended_ideal);
    }
    SECTION("P4 = w, P9 = 0 gives the single term y^7") {
        FamilySpec<PrimeField> spec(p5("z"), p5("w"), p5("0"), fp.zero());
        auto result = branch_curve(spec);
        REQUIRE(result.curve.to_string() == "y^7");
        REQUIRE(result.degree14);
        REQUIRE(result.in_recipe_ideal);
    }
    SECTION("random data always lands in the recipe ideal with degree 14") {
        for (std::uint64_t seed : {50u, 51u, 52u, 53u, 54u}) {
            auto spec = random_family_spec(fp, seed, fp.zero());
            auto result = branch_curve(spec);
            REQUIRE(result.degree14);
            REQUIRE(result.in_recipe_ideal);
        }
    }
    SECTION("t != 0 is rejected") {
        FamilySpec<PrimeField> spec(p5("z"), p5("w"), p5("0"), fp.one());
        REQUIRE_THROWS_AS(branch_curve(spec), std::invalid_argument);
    }
}

TEST_CASE("oracle equivalence between counting and linear algebra") {
    PrimeField fp(32003);
    SECTION("curve ring through degree 10") {
        auto ideal = curve_ring_ideal(random_curve_spec(fp, 4242));
        auto table = hilbert_function(ideal, 10);
        for (long long d = 0; d <= 10; ++d)
            REQUIRE(dim_by_linear_algebra(ideal, d) == table.at(d));
    }
    SECTION("family ideal at t = 0 through degree 12") {
        auto ideal = family_ideal(random_family_spec(fp, 4243, fp.zero()));
        auto table = hilbert_function(ideal, 12);
        for (long long d = 0; d <= 12; ++d)
            REQUIRE(dim_by_linear_algebra(ideal, d) == table.at(d));
    }
}

TEST_CASE("random generation is deterministic in the seed") {
    PrimeField fp(32003);
    auto a = random_family_spec(fp, 17, fp.one());
    auto b = random_family_spec(fp, 17, fp.one());
    REQUIRE(a.p3 == b.p3);
    REQUIRE(a.p4 == b.p4);
    REQUIRE(a.p9 == b.p9);
    auto c = random_family_spec(fp, 18, fp.one());
    REQUIRE_FALSE(a.p9 == c.p9);
}

TEST_CASE("spec files materialize bindings in order") {
    const std::string text =
        "# deformation data\n"
        "ring x0:1 x1:1 y:2 z:3 w:4 over GF(32003)\n"
        "P3 = z\n"
        "P4 = w + y^2\n"
        "P9 = x1^4*z*y + w*P3*y   # may reference earlier names\n"
        "t = 1\n";
    auto parsed = read_spec_string(text);
    REQUIRE(parsed.decl.names.size() == 5);
    PrimeField fp(32003);
    auto ring = realize_ring(parsed.decl, fp);
    auto bindings = materialize_assignments(parsed, ring);
    REQUIRE(bindings.size() == 4);
    auto expected = parse_polynomial<PrimeField>("x1^4*z*y + w*z*y", ring);
    REQUIRE(bindings.at("P9") == expected);
    FamilySpec<PrimeField> spec(bindings.at("P3"), bindings.at("P4"), bindings.at("P9"),
                                fp.one());
    REQUIRE(spec.p4_w_coefficient() == fp.one());

    SECTION("shadowing a ring variable is rejected") {
        auto bad = read_spec_string("ring x:1 over QQ\nx = 1\n");
        RationalField qq;
        auto r = realize_ring(bad.decl, qq);
        REQUIRE_THROWS_AS(materialize_assignments(bad, r), std::invalid_argument);
    }
}

TEST_CASE("verification suites compose") {
    PrimeField fp(32003);
    SECTION("pfaffian soundness") {
        auto report = pfaffian_soundness_suite(fp, 1, 10);
        REQUIRE(report.all_pass());
    }
    SECTION("curve ring suite") {
        auto report = curve_ring_suite(fp, 7, 1, 10);
        REQUIRE(report.all_pass());
        REQUIRE(report.checks().size() == 2);
    }
    SECTION("family suite emits flatness and semicanonical checks") {
        auto specs = random_family_specs(fp, 3, 1, fp.zero());
        std::vector<PrimeField::Element> ts{fp.from_long(0), fp.from_long(1)};
        auto report = family_suite(fp, specs, trial_labels(3, 1), ts, 8);
        REQUIRE(report.all_pass());
        REQUIRE(report.checks().size() == 2);
    }
}
