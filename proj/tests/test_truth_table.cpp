#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rswt/truth_table.hpp"

using rswt::FunctionInstance;
using rswt::parse_function;

TEST_CASE("known weights of (1,2)") {
    CHECK(rswt::brute_force_weight(FunctionInstance(parse_function("(1,2)"), 2)) == 0);
    CHECK(rswt::brute_force_weight(FunctionInstance(parse_function("(1,2)"), 3)) == 4);
    CHECK(rswt::brute_force_weight(FunctionInstance(parse_function("(1,2)"), 4)) == 4);
    CHECK(rswt::brute_force_weight(FunctionInstance(parse_function("(1,2)"), 5)) == 16);
    CHECK(rswt::brute_force_weight(FunctionInstance(parse_function("(1,2)"), 6)) == 24);
}

TEST_CASE("short functions cancel to zero") {
    for (int t = 2; t <= 6; ++t) {
        const FunctionInstance f(rswt::QuadraticRS::from_offsets({t}), 2 * t - 2);
        CHECK(rswt::brute_force_weight(f) == 0);
    }
    CHECK(rswt::brute_force_weight(FunctionInstance(parse_function("(1,4)"), 6)) == 0);
}

TEST_CASE("bitsliced kernel matches the serial scalar reference") {
    std::mt19937 rng(23);
    for (int it = 0; it < 20; ++it) {
        const int n = 6 + static_cast<int>(rng() % 9); // 6..14
        std::vector<int> offsets;
        for (int t = 2; t <= std::min(n, 7); ++t)
            if (rng() % 2) offsets.push_back(t);
        if (offsets.empty()) offsets.push_back(2);
        const FunctionInstance f(rswt::QuadraticRS::from_offsets(offsets), n);
        CHECK(rswt::brute_force_weight(f) == rswt::brute_force_weight_serial(f));
    }
}

TEST_CASE("cap is enforced") {
    const FunctionInstance f(parse_function("(1,2)"), 20);
    CHECK_THROWS_AS(rswt::brute_force_weight(f, 16), rswt::CapExceeded);
}

TEST_CASE("walsh transform against the direct-sum reference") {
    std::mt19937 rng(31);
    for (int it = 0; it < 10; ++it) {
        const int n = 3 + static_cast<int>(rng() % 6); // 3..8
        std::vector<int> offsets;
        for (int t = 2; t <= n; ++t)
            if (rng() % 2) offsets.push_back(t);
        if (offsets.empty()) offsets.push_back(2);
        const FunctionInstance f(rswt::QuadraticRS::from_offsets(offsets), n);
        const rswt::WalshSpectrum fast = rswt::walsh_spectrum(f);
        const std::vector<int64_t> ref = rswt::walsh_spectrum_reference(f);
        REQUIRE(fast.values.size() == ref.size());
        for (size_t u = 0; u < ref.size(); ++u) CHECK(int64_t{fast.values[u]} == ref[u]);
    }
}

TEST_CASE("walsh spectrum fixed points") {
    // values[0] = 2^n - 2 wt(f)
    const FunctionInstance f(parse_function("(1,2)"), 3);
    const rswt::WalshSpectrum s = rswt::walsh_spectrum(f);
    CHECK(s.values[0] == 8 - 2 * 4);

    // The zero function (short (1,2) at n=2): values[0] = 4, rest 0.
    const FunctionInstance z(parse_function("(1,2)"), 2);
    const rswt::WalshSpectrum sz = rswt::walsh_spectrum(z);
    CHECK(sz.values[0] == 4);
    for (size_t u = 1; u < sz.values.size(); ++u) CHECK(sz.values[u] == 0);
}

TEST_CASE("walsh identity and Parseval across a sample family") {
    for (const char* spec : {"(1,2)", "(1,3)", "(1,4)+(1,2)", "(1,5)+(1,4)+(1,3)"}) {
        const rswt::QuadraticRS q = parse_function(spec);
        for (int n = q.t1(); n <= q.t1() + 6; ++n) {
            const FunctionInstance f(q, n);
            const rswt::WalshSpectrum s = rswt::walsh_spectrum(f);
            const uint64_t w = rswt::brute_force_weight(f);
            CHECK(int64_t{s.values[0]} == (int64_t{1} << n) - 2 * static_cast<int64_t>(w));
            CHECK(s.parseval_sum() == (uint64_t{1} << (2 * n)));
        }
    }
}

TEST_CASE("nonlinearity against an affine-enumeration oracle") {
    // Distance to the closest of all 2^(n+1) affine functions, by hand.
    auto oracle = [](const FunctionInstance& f) {
        const int64_t size = int64_t{1} << f.n;
        uint64_t best = ~uint64_t{0};
        for (int64_t a = 0; a < size; ++a) {
            for (int c = 0; c <= 1; ++c) {
                uint64_t dist = 0;
                for (int64_t x = 0; x < size; ++x) {
                    const int g = (__builtin_popcountll(static_cast<uint64_t>(a & x)) & 1) ^ c;
                    dist += static_cast<uint64_t>(
                        rswt::evaluate_mask(f, static_cast<uint64_t>(x)) ^ g);
                }
                best = std::min(best, dist);
            }
        }
        return best;
    };

    const FunctionInstance f3(parse_function("(1,2)"), 3);
    CHECK(rswt::nonlinearity(f3) == 2);
    CHECK(oracle(f3) == 2);

    const FunctionInstance z(parse_function("(1,2)"), 2);
    CHECK(rswt::nonlinearity(z) == 0);

    for (const char* spec : {"(1,3)", "(1,4)+(1,2)"}) {
        const rswt::QuadraticRS q = parse_function(spec);
        for (int n = q.t1(); n <= q.t1() + 2; ++n) {
            const FunctionInstance f(q, n);
            CHECK(rswt::nonlinearity(f) == oracle(f));
        }
    }
}

TEST_CASE("affine equivalence via the weight/nonlinearity pair") {
    const FunctionInstance f(parse_function("(1,2)"), 5);
    CHECK(rswt::affine_equivalent_quadratics(f, f)); // reflexive

    // (1,3)_3 has the same monomial set as (1,2)_3.
    const FunctionInstance a(parse_function("(1,2)"), 3);
    const FunctionInstance b(parse_function("(1,3)"), 3);
    CHECK(rswt::affine_equivalent_quadratics(a, b));

    const FunctionInstance f5(parse_function("(1,2)"), 5);
    const FunctionInstance g5(parse_function("(1,3)"), 5);
    CHECK(rswt::brute_force_weight(f5) == 16); // balanced
    const bool expected = rswt::brute_force_weight(g5) == 16 &&
                          rswt::nonlinearity(f5) == rswt::nonlinearity(g5);
    CHECK(rswt::affine_equivalent_quadratics(f5, g5) == expected);

    const FunctionInstance h(parse_function("(1,2)"), 6);
    CHECK_THROWS_AS(rswt::affine_equivalent_quadratics(f5, h), rswt::ParseError);
}
