#pragma once

#include "rrcf/series.hpp"

namespace rrcf {

// Builders for the q-expansions used by the identity catalog. All exponents
// are in x = q^(1/10): q^k is x^(10k), q^(k/5) is x^(2k).

enum class RrSum { numerator, denominator };

/// sum_lambda (-1)^lambda q^(lambda(5 lambda + 3)/2) (numerator) or
/// q^(lambda(5 lambda + 1)/2) (denominator), every term with x-exponent <= order.
GoldenSeries rr_theta_sum(RrSum kind, long order);

/// prod (1-q^(5n-1))(1-q^(5n-4)) / ((1-q^(5n-2))(1-q^(5n-3))), valuation 0.
GoldenSeries rr_product(long order);

/// t = R(q) = x^2 * rr_product, known to the given order.
GoldenSeries rr_series(long order);

/// f(-q) = prod (1 - q^n).
GoldenSeries euler_product(long order);
/// f(-q) from the pentagonal-number sum.
GoldenSeries pentagonal_sum(long order);
/// f(-q^5) = prod (1 - q^(5n)).
GoldenSeries euler_product_q5(long order);

/// prod_{n>=1} (1 + c x^(step n) + x^(2 step n))^power.
GoldenSeries golden_factor_product(const GoldenNumber& c, long step, int power, long order);

}  // namespace rrcf
