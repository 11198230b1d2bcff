#pragma once

#include <optional>
#include <string>

#include "rrcf/big_real.hpp"
#include "rrcf/eval_point.hpp"
#include "rrcf/golden.hpp"
#include "rrcf/series.hpp"

namespace rrcf {

/// The real angle z = r * pi.
struct PiRationalAngle {
    Rational r;

    [[nodiscard]] std::string to_string() const { return r.to_string() + "*pi"; }
    friend bool operator==(const PiRationalAngle&, const PiRationalAngle&) = default;
};

// Error contract shared by every evaluator below: the result, carried at
// `prec` bits, is within 2^-prec * max(1, |value|) of the true value. Work
// runs at prec + g bits with g = 32 + ceil(log2(terms)) and a single rounding
// at the end; alternating sums raise the working precision further when
// cancellation would otherwise eat into the guard.

/// cos(r pi). Exact for the rational values 0, +-1/2, +-1.
BigReal cos_pi_rational(const Rational& r, Precision prec);

/// theta_2(z; q) = 2 sum_{n>=0} q^((n+1/2)^2) cos((2n+1) z).
BigReal theta2_sum(const PiRationalAngle& z, const EvalPoint& q, Precision prec);

/// theta_4(z; q) = 1 + 2 sum_{n>=1} (-1)^n q^(n^2) cos(2 n z).
BigReal theta4_sum(const PiRationalAngle& z, const EvalPoint& q, Precision prec);

/// theta_2 from its product expansion
/// 2 q^(1/4) cos z prod (1 - q^(2n)) (1 + 2 q^(2n) cos 2z + q^(4n)).
BigReal theta2_product(const PiRationalAngle& z, const EvalPoint& q, Precision prec);

/// theta_2(z; e^(-pi s)) through the imaginary transformation:
/// s^(-1/2) sum_n (-1)^n e^(-pi (n - z/pi)^2 / s). Requires s > 0.
BigReal theta2_transformed(const PiRationalAngle& z, const GoldenNumber& s, Precision prec);

/// f(-q) from the pentagonal sum sum_n (-1)^n q^(n(3n-1)/2).
BigReal f_numeric(const EvalPoint& q, Precision prec);

struct ContinuedFractionOptions {
    /// Maximum recurrence depth; defaults to 10 * prec.bits.
    std::optional<long> depth_cap;
};

/// R(q) from its continued fraction, by the forward convergent recurrence.
/// Throws NonConvergence when the depth cap is reached first.
BigReal cf_R(const EvalPoint& q, Precision prec, ContinuedFractionOptions options = {});

/// R(q) = q^(1/5) prod (1-q^(5n-1))(1-q^(5n-4)) / ((1-q^(5n-2))(1-q^(5n-3))).
BigReal product_R(const EvalPoint& q, Precision prec);

/// R(q) = q^(1/5) sum (-1)^l q^(l(5l+3)/2) / sum (-1)^l q^(l(5l+1)/2).
BigReal theta_quotient_R(const EvalPoint& q, Precision prec);

/// prod_{n>=1} (1 + c q^(n/root) + q^(2n/root))^power.
BigReal golden_factor_product(const EvalPoint& q, const GoldenNumber& c, unsigned root, int power, Precision prec);

/// sum_e c_e x^e over the stored terms of a truncated series, at the precision of x.
BigReal evaluate_series(const GoldenSeries& s, const BigReal& x);

}  // namespace rrcf
