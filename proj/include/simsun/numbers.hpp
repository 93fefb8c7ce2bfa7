#pragma once

#include "simsun/polynomial.hpp"

namespace simsun {

Integer factorial(int n);

/// Zero when k < 0 or k > n.
Integer binomial(int n, int k);

/// Stirling numbers of the second kind, {n brace i}.
Integer stirling2(int n, int i);

Integer pow2(int e);

} // namespace simsun
