#include <catch2/catch_amalgamated.hpp>

#include "hzoo/expr.hpp"

#include <random>
#include <string>

#include "hzoo/constructions.hpp"
#include "support/oracles.hpp"

using namespace hzoo;

TEST_CASE("basic expressions lower to the expected polynomials") {
    const RatPoly f2 = parse_poly("x1^2 - x2^2", 2);
    CHECK(f2 == squared_vandermonde(2));
    CHECK(parse_poly("(x1 - x2)*(x1 + x2)", 2) == f2);

    const RatPoly t = parse_poly("3/2 * x1 * x2^3", 2);
    CHECK(t.term_count() == 1);
    CHECK(t.leading().second == make_rational(3, 2));

    CHECK(parse_poly("x1", 1) == RatPoly::variable(1, 0));
    CHECK(parse_poly("x1 - x1", 1).is_zero());
    CHECK(parse_poly("0", 3).is_zero());
    CHECK(parse_poly("-x1^2", 1) == -(pow(RatPoly::variable(1, 0), 2)));
    CHECK(parse_poly("2^3", 1) == RatPoly::constant(1, Rational(8)));
    CHECK(parse_poly("-(x1 - 2)", 1) ==
          RatPoly::constant(1, Rational(2)) - RatPoly::variable(1, 0));

    // leading zeros are plain decimal, never octal
    CHECK(parse_poly("09", 1) == RatPoly::constant(1, Rational(9)));
    CHECK(parse_poly("007/002", 1) == RatPoly::constant(1, make_rational(7, 2)));
    CHECK(parse_poly("x1^03", 1) == pow(RatPoly::variable(1, 0), 3));
    CHECK(rational_from_string("08/04") == Rational(2));
}

TEST_CASE("parse errors carry offsets and expected tokens") {
    const auto bad_var = parse("x1 + x5", 2);
    REQUIRE(!bad_var.ok());
    CHECK(bad_var.error->offset == 6);  // points at the index digits

    const auto implicit = parse("x1 x2", 2);
    REQUIRE(!implicit.ok());
    CHECK(implicit.error->offset == 3);
    CHECK(!implicit.error->expected.empty());

    const auto neg_exp = parse("x1^-2", 2);
    REQUIRE(!neg_exp.ok());

    const auto missing_paren = parse("(x1 + x2", 2);
    REQUIRE(!missing_paren.ok());
    CHECK(missing_paren.error->expected == std::vector<std::string>{"')'"});

    const auto bad_lit = parse("3/", 2);
    REQUIRE(!bad_lit.ok());

    const auto zero_den = parse("1/0", 2);
    REQUIRE(!zero_den.ok());

    const auto empty = parse("", 2);
    REQUIRE(!empty.ok());
    CHECK(empty.error->offset == 0);

    const auto lone_x = parse("x", 2);
    REQUIRE(!lone_x.ok());

    const auto x0 = parse("x0", 2);
    REQUIRE(!x0.ok());
}

TEST_CASE("round trip: parse(pretty(p)) == p on generated constructions") {
    for (int d = 2; d <= 5; ++d) {
        const RatPoly fd = squared_vandermonde(d);
        CHECK(parse_poly(to_string(fd), d) == fd);
        const RatPoly vd = vandermonde(d);
        CHECK(parse_poly(to_string(vd), d) == vd);
    }
    for (int n = 1; n <= 2; ++n) {
        for (const auto& p : quadratic_morphism_powers(n, 2)) {
            CHECK(parse_poly(to_string(p), 2 * n) == p);
        }
    }

    oracles::Rng rng(301);
    for (int iter = 0; iter < 80; ++iter) {
        const RatPoly p = rng.poly(3, 4, 6);
        CHECK(parse_poly(to_string(p), 3) == p);
    }
}

TEST_CASE("random byte fuzzing never crashes the parser") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len_dist(0, 64);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    const std::string structured = "x0123456789/^*()-+ \t\n";
    std::uniform_int_distribution<std::size_t> structured_dist(0, structured.size() - 1);

    int parsed_ok = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::string input;
        const int len = len_dist(rng);
        const bool use_structured = iter % 2 == 0;
        for (int i = 0; i < len; ++i) {
            input += use_structured ? structured[structured_dist(rng)]
                                    : static_cast<char>(byte_dist(rng));
        }
        const ParseResult r = parse(input, 3);
        if (r.ok()) {
            ++parsed_ok;
            (void)lower(*r.ast, 3);  // lowering must be total on accepted input
        } else {
            CHECK(r.error->offset <= input.size());
        }
    }
    CHECK(parsed_ok > 0);  // the structured half should hit some valid inputs
}

TEST_CASE("deep nesting is rejected, not crashed") {
    std::string deep(2000, '(');
    deep += "x1";
    deep += std::string(2000, ')');
    const ParseResult r = parse(deep, 1);
    REQUIRE(!r.ok());
    CHECK(r.error->message == "expression nesting too deep");

    std::string minus_chain(3000, '-');
    minus_chain += "x1";
    CHECK(!parse(minus_chain, 1).ok());
}

TEST_CASE("exponent cap") {
    CHECK(parse("x1^9999", 1).ok());
    CHECK(!parse("x1^10000", 1).ok());
}

TEST_CASE("exponentiation does not chain") {
    // factor := base ('^' uint)? -- a second '^' is trailing input ...
    CHECK(!parse("x1^2^3", 1).ok());
    // ... except through unary minus, whose operand is itself a factor:
    // -x1^2^3 reads as (-(x1^2))^3.
    const RatPoly p = parse_poly("-x1^2^3", 1);
    CHECK(p == -pow(RatPoly::variable(1, 0), 6));
    CHECK(parse_poly("(x1^2)^3", 1) == pow(RatPoly::variable(1, 0), 6));
}
