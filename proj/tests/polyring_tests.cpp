#include <catch2/catch_amalgamated.hpp>

#include "gring/parser.hpp"
#include "gring/rng.hpp"

using namespace gring;

namespace {

template <class F>
Polynomial<F> random_poly(const RingPtr<F>& ring, SplitMix64& rng, long long max_degree = 3) {
    Polynomial<F> p(ring);
    for (long long d = 0; d <= max_degree; ++d) p = p + random_homogeneous(ring, d, rng);
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics over QQ") {
    RationalField qq;
    auto ring = make_ring<RationalField>({"x", "y"}, {1, 1}, qq);
    auto x = Polynomial<RationalField>::variable(ring, "x");
    auto y = Polynomial<RationalField>::variable(ring, "y");
    auto zero = Polynomial<RationalField>::zero(ring);

    SECTION("additive identity") {
        auto g = x * x + y;
        REQUIRE(zero + g == g);
        REQUIRE(g + zero == g);
    }
    SECTION("difference of squares") {
        REQUIRE((x + y) * (x - y) == x * x - y * y);
    }
    SECTION("scaling and negation") {
        REQUIRE(x.scaled(qq.from_long(-1)) == -x);
        REQUIRE((x + y).scaled(qq.from_ratio(1, 2)) + (x + y).scaled(qq.from_ratio(1, 2)) ==
                x + y);
    }
}

TEST_CASE("arithmetic in a small prime field") {
    PrimeField f5(5);
    auto ring = make_ring<PrimeField>({"x"}, {1}, f5);
    auto x = Polynomial<PrimeField>::variable(ring, "x");
    // 3x * 4x = 12 x^2 = 2 x^2 mod 5
    REQUIRE(x.scaled(3) * x.scaled(4) == (x * x).scaled(2));
    // 5x collapses to zero
    REQUIRE(x.scaled(f5.from_long(5)).is_zero());
}

TEST_CASE("ring mismatch is rejected") {
    RationalField qq;
    auto r1 = make_ring<RationalField>({"x"}, {1}, qq);
    auto r2 = make_ring<RationalField>({"x"}, {2}, qq);
    auto a = Polynomial<RationalField>::variable(r1, "x");
    auto b = Polynomial<RationalField>::variable(r2, "x");
    REQUIRE_THROWS_AS(a + b, std::invalid_argument);
    REQUIRE_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("weighted degree") {
    RationalField qq;
    auto ring = make_ring<RationalField>({"x", "y", "z", "w"}, {1, 2, 3, 4}, qq);
    auto parse = [&](const char* s) { return parse_polynomial<RationalField>(s, ring); };

    REQUIRE(parse("w").weighted_degree() == 4);
    REQUIRE(parse("z*w").weighted_degree() == 7);
    REQUIRE_FALSE(parse("x + y").weighted_degree().has_value());  // 1 vs 2
    REQUIRE_THROWS_AS(Polynomial<RationalField>::zero(ring).weighted_degree(), std::domain_error);
}

TEST_CASE("degree of a product adds for homogeneous factors") {
    PrimeField fp(32003);
    auto ring = make_ring<PrimeField>({"x", "y", "z"}, {1, 2, 3}, fp);
    SplitMix64 rng(2024);
    for (int i = 0; i < 50; ++i) {
        auto f = random_homogeneous(ring, 1 + static_cast<long long>(rng.below(4)), rng);
        auto g = random_homogeneous(ring, 1 + static_cast<long long>(rng.below(4)), rng);
        if (f.is_zero() || g.is_zero()) continue;
        REQUIRE(*(f * g).weighted_degree() == *f.weighted_degree() + *g.weighted_degree());
    }
}

TEST_CASE("substitution composes exactly") {
    RationalField qq;
    SECTION("z^2 with z -> y^2") {
        auto src = make_ring<RationalField>({"z"}, {3}, qq);
        auto dst = make_ring<RationalField>({"y"}, {2}, qq);
        auto z = Polynomial<RationalField>::variable(src, "z");
        auto y = Polynomial<RationalField>::variable(dst, "y");
        std::vector<Polynomial<RationalField>> images{y * y};
        REQUIRE((z * z).substitute(images) == y.pow(4));
    }
    SECTION("T^2 with T -> X*T'") {
        auto src = make_ring<RationalField>({"T"}, {7}, qq);
        auto dst = make_ring<RationalField>({"X", "Tp"}, {1, 7}, qq);
        auto t = Polynomial<RationalField>::variable(src, "T");
        std::vector<Polynomial<RationalField>> images{
            parse_polynomial<RationalField>("X*Tp", dst)};
        REQUIRE((t * t).substitute(images) ==
                parse_polynomial<RationalField>("X^2*Tp^2", dst));
    }
    SECTION("P9 under (x,y,z,w) -> (X, XY, Y^2, Y^3) yields P13") {
        // x*w^2 -> X*Y^6 and y^3*z -> X^3*Y^5: a pair realizing the identity.
        auto src = make_ring<RationalField>({"x", "y", "z", "w"}, {1, 2, 3, 4}, qq);
        auto dst = make_ring<RationalField>({"X", "Y"}, {1, 2}, qq);
        auto p9 = parse_polynomial<RationalField>("x*w^2 + y^3*z", src);
        std::vector<Polynomial<RationalField>> images{
            parse_polynomial<RationalField>("X", dst),
            parse_polynomial<RationalField>("X*Y", dst),
            parse_polynomial<RationalField>("Y^2", dst),
            parse_polynomial<RationalField>("Y^3", dst)};
        auto p13 = p9.substitute(images);
        REQUIRE(p13 == parse_polynomial<RationalField>("X*Y^6 + X^3*Y^5", dst));
        REQUIRE(p13.weighted_degree() == 13);
    }
}

TEST_CASE("cleared substitution z -> y^2/x1, w -> y^3/x1^2") {
    RationalField qq;
    auto ring = make_ring<RationalField>({"x0", "x1", "y", "z", "w"}, {1, 1, 2, 3, 4}, qq);
    auto parse = [&](const char* s) { return parse_polynomial<RationalField>(s, ring); };

    SECTION("z^2*w clears to y^7") {
        // (y^2/x1)^2 * (y^3/x1^2) * x1^4 = y^7
        auto out = substitute_cleared(parse("z^2*w"), 4);
        REQUIRE(out.to_string() == "y^7");
        REQUIRE(out.weighted_degree() == 14);
    }
    SECTION("x1 * x1*w^2 clears to x1^2*y^6") {
        auto out = substitute_cleared(parse("x1*x1*w^2"), 4);
        REQUIRE(out == parse_polynomial<RationalField>("x1^2*y^6", out.ring()));
    }
    SECTION("x0^4 only picks up the clearing factor") {
        auto out = substitute_cleared(parse("x0^4"), 4);
        REQUIRE(out == parse_polynomial<RationalField>("x0^4*x1^4", out.ring()));
    }
    SECTION("insufficient exponent names the offender") {
        REQUIRE_THROWS_WITH(substitute_cleared(parse("z^5"), 4),
                            Catch::Matchers::ContainsSubstring("z^5"));
    }
    SECTION("exponent 4 always suffices for z^2*P4 + x1*P9") {
        PrimeField fp(32003);
        auto r5 = make_ring<PrimeField>({"x0", "x1", "y", "z", "w"}, {1, 1, 2, 3, 4}, fp);
        auto z = Polynomial<PrimeField>::variable(r5, "z");
        auto x1 = Polynomial<PrimeField>::variable(r5, "x1");
        SplitMix64 rng(77);
        for (int i = 0; i < 25; ++i) {
            auto p4 = random_homogeneous(r5, 4, rng);
            auto p9 = random_homogeneous(r5, 9, rng);
            REQUIRE_NOTHROW(substitute_cleared(z * z * p4 + x1 * p9, 4));
        }
    }
}

TEST_CASE("mapping between rings matches variables by name") {
    RationalField qq;
    auto small = make_ring<RationalField>({"x", "y"}, {1, 2}, qq);
    auto big = make_ring<RationalField>({"x", "y", "z"}, {1, 2, 3}, qq);
    auto f = parse_polynomial<RationalField>("x^2 + y", small);
    auto g = f.mapped_to(big);
    REQUIRE(g == parse_polynomial<RationalField>("x^2 + y", big));
    REQUIRE(g.mapped_to(small) == f);
    auto h = parse_polynomial<RationalField>("z", big);
    REQUIRE_THROWS_AS(h.mapped_to(small), std::invalid_argument);
}

TEST_CASE("parsing") {
    RationalField qq;
    auto ring =
        make_ring<RationalField>({"x", "x1", "y", "z", "w", "v", "u"}, {1, 1, 2, 3, 4, 5, 6}, qq);

    SECTION("bound names expand") {
        Bindings<RationalField> env;
        env.emplace("P", parse_polynomial<RationalField>("x*w^2 + y^3*z", ring));
        auto f = parse_polynomial<RationalField>("v^2 - z^2*w - x1*P", ring, env);
        auto expected =
            parse_polynomial<RationalField>("v^2 - z^2*w - x1*(x*w^2 + y^3*z)", ring);
        REQUIRE(f == expected);
    }
    SECTION("format of zero") {
        REQUIRE(Polynomial<RationalField>::zero(ring).to_string() == "0");
        REQUIRE(parse_polynomial<RationalField>("0", ring).is_zero());
    }
    SECTION("rationals, parentheses, unary minus") {
        auto f = parse_polynomial<RationalField>("-3/2*(x + y)^2 + 1/2", ring);
        auto g = parse_polynomial<RationalField>("1/2 - 3/2*x^2 - 3*x*y - 3/2*y^2", ring);
        REQUIRE(f == g);
    }
    SECTION("syntax errors carry a position") {
        try {
            parse_polynomial<RationalField>("x + * y", ring);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            REQUIRE(e.position == 4);
        }
    }
    SECTION("unknown variables are rejected") {
        REQUIRE_THROWS_WITH(parse_polynomial<RationalField>("x + q", ring),
                            Catch::Matchers::ContainsSubstring("unknown variable 'q'"));
    }
    SECTION("coefficients reduce modulo p") {
        PrimeField f5(5);
        auto r5 = make_ring<PrimeField>({"x"}, {1}, f5);
        REQUIRE(parse_polynomial<PrimeField>("5*x", r5).is_zero());
        // 1/2 = 3 mod 5
        REQUIRE(parse_polynomial<PrimeField>("1/2*x", r5) ==
                Polynomial<PrimeField>::variable(r5, "x").scaled(3));
    }
}

TEST_CASE("canonical term order is weighted degree then revlex") {
    RationalField qq;
    auto ring = make_ring<RationalField>({"x", "y"}, {1, 2}, qq);
    // x^2 and y share weighted degree 2; revlex puts x^2 first
    REQUIRE(parse_polynomial<RationalField>("y + x^2", ring).to_string() == "x^2 + y");
    // higher weighted degree leads regardless of support
    REQUIRE(parse_polynomial<RationalField>("x + y", ring).to_string() == "y + x");
}

TEST_CASE("parse and format are mutually inverse on random polynomials") {
    SplitMix64 rng(424242);
    SECTION("over GF(32003)") {
        PrimeField fp(32003);
        auto ring = make_ring<PrimeField>({"x", "y", "z"}, {1, 2, 3}, fp);
        for (int i = 0; i < 100; ++i) {
            auto f = random_poly(ring, rng, 4);
            REQUIRE(parse_polynomial<PrimeField>(f.to_string(), ring) == f);
        }
    }
    SECTION("over QQ") {
        RationalField qq;
        auto ring = make_ring<RationalField>({"x", "y", "z"}, {1, 2, 3}, qq);
        for (int i = 0; i < 100; ++i) {
            auto f = random_poly(ring, rng, 4);
            REQUIRE(parse_polynomial<RationalField>(f.to_string(), ring) == f);
        }
    }
}

TEST_CASE("ring axioms hold on random triples") {
    auto check = [](auto field, std::uint64_t seed) {
        using F = decltype(field);
        auto ring = make_ring<F>({"x", "y"}, {1, 2}, field);
        SplitMix64 rng(seed);
        for (int i = 0; i < 30; ++i) {
            auto f = random_poly(ring, rng);
            auto g = random_poly(ring, rng);
            auto h = random_poly(ring, rng);
            REQUIRE((f + g) + h == f + (g + h));
            REQUIRE(f + g == g + f);
            REQUIRE(f * g == g * f);
            REQUIRE((f * g) * h == f * (g * h));
            REQUIRE(f * (g + h) == f * g + f * h);
            REQUIRE((f - g) + g == f);
        }
    };
    check(PrimeField(32003), 7);
    check(RationalField{}, 8);
}

TEST_CASE("ring declarations parse and print") {
    auto decl = parse_ring_decl("ring x0:1 x1:1 y:2 z:3 w:4 over GF(32003)");
    REQUIRE(decl.names == std::vector<std::string>{"x0", "x1", "y", "z", "w"});
    REQUIRE(decl.weights == std::vector<int>{1, 1, 2, 3, 4});
    REQUIRE(decl.field == FieldSpec::prime(32003));
    PrimeField fp(32003);
    auto ring = realize_ring(decl, fp);
    REQUIRE(ring->declaration() == "ring x0:1 x1:1 y:2 z:3 w:4 over GF(32003)");

    REQUIRE(parse_ring_decl("ring x:2 over QQ").field == FieldSpec::rationals());
    REQUIRE_THROWS_AS(parse_ring_decl("ring over QQ"), ParseError);
    REQUIRE_THROWS_AS(parse_ring_decl("x:1 over QQ"), ParseError);
    REQUIRE_THROWS_AS(FieldSpec::parse("GF(4)"), std::invalid_argument);
    REQUIRE_THROWS_AS(FieldSpec::parse("GF(2)"), std::invalid_argument);
}

TEST_CASE("field spec parsing round trips") {
    REQUIRE(FieldSpec::parse("QQ").name() == "QQ");
    REQUIRE(FieldSpec::parse("GF(32003)").name() == "GF(32003)");
    REQUIRE(FieldSpec::parse("GF(5)") == FieldSpec::prime(5));
}
