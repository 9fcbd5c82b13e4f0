#pragma once

#include <cstdint>
#include <vector>

#include "delliptic/rational.hpp"

namespace delliptic::arith {

/// Positive divisors of d in increasing order, by trial division up to sqrt(d).
std::vector<std::int64_t> divisors(std::int64_t d);

/// Sum of k-th powers of the positive divisors of d.
Integer sigma(unsigned k, std::int64_t d);

/// Number of positive divisors of d.
Integer tau(std::int64_t d);

// Convolution sums over ordered compositions with positive parts. The public
// functions evaluate the direct sum and the closed form and throw
// CrossCheckFailure if they differ; the _direct/_closed halves are exposed so
// tests can exercise each route on its own.

/// sum_{d1+d2=d} sigma_1(d1) sigma_1(d2), d >= 2.
Integer conv2(std::int64_t d);
Integer conv2_direct(std::int64_t d);
Rational conv2_closed(std::int64_t d);

/// sum_{d1+d2=d} d1 sigma_1(d1) sigma_1(d2), d >= 2.
Integer conv2_weighted(std::int64_t d);
Integer conv2_weighted_direct(std::int64_t d);
Rational conv2_weighted_closed(std::int64_t d);

/// sum_{d1+d2+d3=d} sigma_1(d1) sigma_1(d2) sigma_1(d3), d >= 3.
Integer conv3(std::int64_t d);
Integer conv3_direct(std::int64_t d);
Rational conv3_closed(std::int64_t d);

/// Same as conv2/conv3 but returning 0 below the minimum d instead of throwing;
/// the assembly formulas sum over empty index sets at small d.
Integer conv2_or_zero(std::int64_t d);
Integer conv3_or_zero(std::int64_t d);

} // namespace delliptic::arith
