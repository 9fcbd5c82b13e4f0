#include <doctest.h>

#include "delliptic/arith.hpp"
#include "delliptic/errors.hpp"
#include "oracles.hpp"

using namespace delliptic;

TEST_SUITE("arith_fn") {

TEST_CASE("divisor functions") {
    CHECK(arith::sigma(1, 6) == 12);
    CHECK(arith::sigma(3, 2) == 9);
    CHECK(arith::sigma(3, 3) == 28);
    CHECK(arith::sigma(5, 2) == 33);
    CHECK(arith::tau(12) == 6);
    CHECK(arith::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    for (std::int64_t d = 1; d <= 120; ++d) {
        for (unsigned k : {0u, 1u, 3u, 5u}) CHECK(arith::sigma(k, d) == oracle::sigma(k, d));
    }
    CHECK_THROWS_AS(arith::sigma(1, 0), PreconditionError);
}

TEST_CASE("convolutions: small values") {
    CHECK(arith::conv2(2) == 1);
    CHECK(arith::conv2(3) == 6);
    CHECK(arith::conv2(4) == 17);
    CHECK(arith::conv3(3) == 1);
    CHECK(arith::conv2_or_zero(1) == 0);
    CHECK(arith::conv3_or_zero(2) == 0);
}

TEST_CASE("convolutions: direct sums, closed forms and brute force agree") {
    for (std::int64_t d = 2; d <= 60; ++d) {
        CHECK(arith::conv2_direct(d) == oracle::conv2(d));
        CHECK(arith::conv2_closed(d) == Rational(oracle::conv2(d)));
        CHECK(arith::conv2_weighted_direct(d) == oracle::conv2_weighted(d));
        CHECK(arith::conv2_weighted_closed(d) == Rational(oracle::conv2_weighted(d)));
        if (d >= 3) {
            CHECK(arith::conv3_direct(d) == oracle::conv3(d));
            CHECK(arith::conv3_closed(d) == Rational(oracle::conv3(d)));
        }
    }
    for (std::int64_t d = 2; d <= 200; ++d) {
        CHECK(Rational(arith::conv2_direct(d)) == arith::conv2_closed(d));
        CHECK(Rational(arith::conv2_weighted_direct(d)) == arith::conv2_weighted_closed(d));
        if (d >= 3) CHECK(Rational(arith::conv3_direct(d)) == arith::conv3_closed(d));
    }
}

}
