#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rswt/function.hpp"

using rswt::FunctionInstance;
using rswt::parse_function;
using rswt::QuadraticRS;

TEST_CASE("parsing the canonical grammar") {
    const QuadraticRS q = parse_function("(1,4)+(1,3)+(1,2)");
    CHECK(q.offsets() == std::vector<int>{4, 3, 2});
    CHECK(q.m() == 3);
    CHECK(q.T() == 3);
    CHECK(q.to_spec() == "(1,4)+(1,3)+(1,2)");

    CHECK(parse_function("(1,2)").offsets() == std::vector<int>{2});
    // Whitespace-insensitive; order normalized to decreasing.
    CHECK(parse_function(" (1, 2) + (1, 5) ").offsets() == std::vector<int>{5, 2});
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_function(""), rswt::ParseError);
    CHECK_THROWS_AS(parse_function("(1,1)"), rswt::ParseError);      // t < 2
    CHECK_THROWS_AS(parse_function("(1,x)"), rswt::ParseError);      // not a number
    CHECK_THROWS_AS(parse_function("(2,3)"), rswt::ParseError);      // not quadratic form
    CHECK_THROWS_AS(parse_function("(1,3)+(1,3)"), rswt::ParseError); // duplicate cancels
    CHECK_THROWS_AS(parse_function("(1,3)+"), rswt::ParseError);
    CHECK_THROWS_AS(parse_function("(1,3"), rswt::ParseError);
    CHECK_THROWS_AS(parse_function("1,3"), rswt::ParseError);
}

TEST_CASE("instances require n >= t_1") {
    const QuadraticRS q = parse_function("(1,4)");
    CHECK_THROWS_AS(FunctionInstance(q, 3), rswt::ParseError);
    CHECK_NOTHROW(FunctionInstance(q, 4));
}

TEST_CASE("evaluation expands the rotated monomials") {
    const FunctionInstance f(parse_function("(1,2)"), 3);
    // x1x2 + x2x3 + x3x1 at (1,1,0) = 1.
    const std::vector<uint8_t> x{1, 1, 0};
    CHECK(rswt::evaluate(f, x) == 1);
    CHECK(rswt::evaluate_mask(f, 0b011) == 1);

    const std::vector<uint8_t> zero{0, 0, 0};
    CHECK(rswt::evaluate(f, zero) == 0);

    // (1,2)_2 = x1x2 + x2x1 cancels.
    const FunctionInstance g(parse_function("(1,2)"), 2);
    CHECK(rswt::evaluate_mask(g, 0b11) == 0);
    CHECK(rswt::evaluate_mask(g, 0b01) == 0);

    const std::vector<uint8_t> wrong_len{1, 1};
    CHECK_THROWS_AS(rswt::evaluate(f, wrong_len), rswt::ParseError);
}

TEST_CASE("evaluate agrees with evaluate_mask") {
    std::mt19937 rng(5);
    const FunctionInstance f(parse_function("(1,5)+(1,2)"), 9);
    for (int it = 0; it < 200; ++it) {
        const uint64_t mask = rng() & 0x1FF;
        std::vector<uint8_t> x(9);
        for (int j = 0; j < 9; ++j) x[static_cast<size_t>(j)] = (mask >> j) & 1;
        CHECK(rswt::evaluate(f, x) == rswt::evaluate_mask(f, mask));
    }
}

TEST_CASE("rotation symmetry: f(rho(x)) = f(x)") {
    std::mt19937 rng(17);
    for (int it = 0; it < 100; ++it) {
        const int n = 5 + static_cast<int>(rng() % 8);
        std::vector<int> offsets;
        for (int t = 2; t <= n; ++t)
            if (rng() % 3 == 0) offsets.push_back(t);
        if (offsets.empty()) offsets.push_back(2);
        const FunctionInstance f(QuadraticRS::from_offsets(offsets), n);
        const uint64_t mask = rng() & ((1ull << n) - 1);
        // rotate left by one variable position
        const uint64_t rotated = ((mask >> 1) | (mask << (n - 1))) & ((1ull << n) - 1);
        CHECK(rswt::evaluate_mask(f, mask) == rswt::evaluate_mask(f, rotated));
    }
}
