#include "rrcf/numeric.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

constexpr long kBaseGuardBits = 32;
constexpr long kCancellationSlackBits = 16;
constexpr int kMaxPrecisionRounds = 8;

long guard_bits(double terms) {
    return kBaseGuardBits + static_cast<long>(std::ceil(std::log2(std::max(2.0, terms))));
}

// Number of terms before q^(n^2) drops below 2^-bits.
double quadratic_terms(double rate, long bits) { return std::sqrt(bits * std::log(2.0) / rate) + 2.0; }

// Number of factors before q^(c n) drops below 2^-bits.
double geometric_terms(double rate, long bits) { return bits * std::log(2.0) / rate + 2.0; }

BigReal times_pow2(const BigReal& x, long k) {
    BigReal r(x.precision());
    mpfr_mul_2si(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

// True once `tail` is negligible against the partial sum at precision w.
bool tail_negligible(const BigReal& tail, const BigReal& partial, Precision w) {
    if (partial.is_zero()) return tail <= times_pow2(BigReal(1, w), -w.bits);
    return tail <= times_pow2(abs(partial), -w.bits);
}

bool product_tail_negligible(const BigReal& tail_log_bound, Precision w) {
    return tail_log_bound <= times_pow2(BigReal(1, w), -w.bits);
}

struct Accumulation {
    BigReal sum;
    BigReal magnitude;  // sum of |terms|
};

// Runs attempt(w) and repeats at higher precision while cancellation, measured
// as log2(magnitude / |sum|), exceeds the extra bits already granted.
template <class Attempt>
BigReal cancellation_controlled(Precision prec, long guard, Attempt attempt) {
    long extra = 0;
    std::optional<BigReal> last;
    for (int round = 0; round < kMaxPrecisionRounds; ++round) {
        const Precision w{prec.bits + guard + extra};
        Accumulation acc = attempt(w);
        if (acc.magnitude.is_zero()) return acc.sum;
        const long lost = acc.sum.is_zero() ? w.bits : acc.magnitude.exponent2() - acc.sum.exponent2();
        if (lost <= extra + kCancellationSlackBits) return acc.sum;
        extra = lost + kCancellationSlackBits;
        last = std::move(acc.sum);
    }
    // Persistent exact cancellation: the absolute contract still holds.
    return *last;
}

int parity_sign(long n) { return n % 2 == 0 ? 1 : -1; }

BigReal nth_root_of_nome(const EvalPoint& q, long k, Precision w) { return exp(q.log_nome(w) / k); }

void require_positive_root(unsigned root) {
    if (root == 0) throw ParameterOutOfDomain("root must be positive");
}

// sum_l (-1)^l q^(l(5l+shift)/2)
BigReal rr_bilateral_sum(const EvalPoint& point, long shift, Precision prec) {
    const double rate = point.decay_rate();
    const long guard = guard_bits(2.0 * quadratic_terms(rate, prec.bits));
    return cancellation_controlled(prec, guard, [&](Precision w) {
        const BigReal q = point.nome(w);
        const BigReal one_minus_q = 1 - q;
        Accumulation acc{BigReal(1, w), BigReal(1, w)};
        for (long m = 1;; ++m) {
            for (long l : {m, -m}) {
                const long e = l * (5 * l + shift) / 2;
                BigReal term = pow(q, static_cast<unsigned long>(e));
                acc.magnitude += term;
                if (parity_sign(l) > 0)
                    acc.sum += term;
                else
                    acc.sum -= term;
            }
            const long next = m + 1;
            const long e_next = std::min(next * (5 * next + shift), next * (5 * next - shift)) / 2;
            const BigReal tail = 2 * pow(q, static_cast<unsigned long>(e_next)) / one_minus_q;
            if (tail_negligible(tail, acc.sum, w)) break;
        }
        return acc;
    });
}

}  // namespace

BigReal cos_pi_rational(const Rational& r, Precision prec) {
    // Reduce to [0, 2), then to [0, 1] using cos((2 - r) pi) = cos(r pi).
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), r.numerator().get_mpz_t(), mpz_class(2 * r.denominator()).get_mpz_t());
    Rational t = r - Rational(mpq_class(2 * whole));
    if (t > Rational(1)) t = Rational(2) - t;
    if (t.is_zero()) return BigReal(1, prec);
    if (t == Rational(1, 3)) return BigReal(Rational(1, 2), prec);
    if (t == Rational(1, 2)) return BigReal(0, prec);
    if (t == Rational(2, 3)) return BigReal(Rational(-1, 2), prec);
    if (t == Rational(1)) return BigReal(-1, prec);
    // Keep the trigonometric argument small so the result is relatively accurate near zeros.
    const Precision w = prec.plus(16);
    const BigReal pw = pi(w);
    if (t <= Rational(1, 4)) return cos(BigReal(t, w) * pw).rounded(prec);
    if (t <= Rational(3, 4)) return sin(BigReal(Rational(1, 2) - t, w) * pw).rounded(prec);
    return (-cos(BigReal(Rational(1) - t, w) * pw)).rounded(prec);
}

BigReal theta2_sum(const PiRationalAngle& z, const EvalPoint& point, Precision prec) {
    const long guard = guard_bits(quadratic_terms(point.decay_rate(), prec.bits));
    return cancellation_controlled(prec, guard, [&](Precision w) {
               const BigReal q = point.nome(w);
               const BigReal q2 = q * q;
               const BigReal one_minus_q2 = 1 - q2;
               const BigReal prefactor = 2 * nth_root_of_nome(point, 4, w);
               // term n carries q^(n(n+1)); step holds q^(2(n+1)).
               BigReal t(1, w);
               BigReal step = q2;
               Accumulation acc{BigReal(w), BigReal(w)};
               for (long n = 0;; ++n) {
                   const BigReal term = t * cos_pi_rational(Rational(2 * n + 1) * z.r, w);
                   acc.sum += term;
                   acc.magnitude += abs(term);
                   t *= step;
                   step *= q2;
                   if (tail_negligible(t / one_minus_q2, acc.sum, w)) break;
               }
               acc.sum *= prefactor;
               acc.magnitude *= prefactor;
               return acc;
           })
        .rounded(prec);
}

BigReal theta4_sum(const PiRationalAngle& z, const EvalPoint& point, Precision prec) {
    const long guard = guard_bits(quadratic_terms(point.decay_rate(), prec.bits));
    return cancellation_controlled(prec, guard, [&](Precision w) {
               const BigReal q = point.nome(w);
               const BigReal q2 = q * q;
               const BigReal one_minus_q2 = 1 - q2;
               // t holds q^(n^2); step holds q^(2n+1).
               BigReal t = q;
               BigReal step = q * q2;
               Accumulation acc{BigReal(1, w), BigReal(1, w)};
               for (long n = 1;; ++n) {
                   BigReal term = 2 * t * cos_pi_rational(Rational(2 * n) * z.r, w);
                   acc.magnitude += abs(term);
                   if (parity_sign(n) > 0)
                       acc.sum += term;
                   else
                       acc.sum -= term;
                   t *= step;
                   step *= q2;
                   if (tail_negligible(2 * t / one_minus_q2, acc.sum, w)) break;
               }
               return acc;
           })
        .rounded(prec);
}

BigReal theta2_product(const PiRationalAngle& z, const EvalPoint& point, Precision prec) {
    const Precision w = prec.plus(guard_bits(geometric_terms(2.0 * point.decay_rate(), prec.bits)));
    const BigReal cz = cos_pi_rational(z.r, w);
    if (cz.is_zero()) return BigReal(prec);
    const BigReal c2z = cos_pi_rational(Rational(2) * z.r, w);
    const BigReal q = point.nome(w);
    const BigReal q2 = q * q;
    const BigReal one_minus_q2 = 1 - q2;
    BigReal prod = 2 * nth_root_of_nome(point, 4, w) * cz;
    BigReal u = q2;
    for (long n = 1;; ++n) {
        prod *= (1 - u) * (1 + 2 * u * c2z + u * u);
        u *= q2;
        // |log(1 - u)| + |log(1 + 2u cos 2z + u^2)| <= 2u + 6u for the remaining factors.
        if (product_tail_negligible(8 * u / one_minus_q2, w)) break;
    }
    return prod.rounded(prec);
}

BigReal theta2_transformed(const PiRationalAngle& z, const GoldenNumber& s, Precision prec) {
    if (s.sign() <= 0) throw ParameterOutOfDomain("transformation parameter must be positive: s = " + s.to_string());
    if (cos_pi_rational(z.r, Precision{64}).is_zero()) return BigReal(prec);
    mpz_class centre;
    {
        const Rational shifted = z.r + Rational(1, 2);
        mpz_fdiv_q(centre.get_mpz_t(), shifted.numerator().get_mpz_t(), shifted.denominator().get_mpz_t());
    }
    const long n0 = centre.get_si();
    const double s_estimate = to_real(s, Precision{64}).to_double();
    const long guard = guard_bits(2.0 * std::sqrt(prec.bits * std::log(2.0) * s_estimate / std::numbers::pi) + 2.0);
    return cancellation_controlled(prec, guard, [&](Precision w) {
               const BigReal sw = to_real(s, w);
               const BigReal k = pi(w) / sw;
               Accumulation acc{BigReal(w), BigReal(w)};
               for (long ring = 0;; ++ring) {
                   for (long n : {n0 + ring, n0 - ring}) {
                       if (ring == 0 && n != n0 + ring) continue;
                       const Rational d = Rational(n) - z.r;
                       const BigReal term = exp(-(k * BigReal(d * d, w)));
                       acc.magnitude += term;
                       if (parity_sign(n) > 0)
                           acc.sum += term;
                       else
                           acc.sum -= term;
                       if (ring == 0) break;
                   }
                   // Indices beyond this ring sit at distance >= ring + 1/2 from z/pi.
                   const BigReal d_min = BigReal(Rational(2 * ring + 1, 2), w);
                   const BigReal tail = 2 * exp(-(k * d_min * d_min)) / (1 - exp(-(2 * k * d_min)));
                   if (tail_negligible(tail, acc.sum, w)) break;
               }
               const BigReal scale = 1 / sqrt(sw);
               acc.sum *= scale;
               acc.magnitude *= scale;
               return acc;
           })
        .rounded(prec);
}

BigReal f_numeric(const EvalPoint& point, Precision prec) {
    const long guard = guard_bits(2.0 * quadratic_terms(1.5 * point.decay_rate(), prec.bits));
    return cancellation_controlled(prec, guard, [&](Precision w) {
               const BigReal q = point.nome(w);
               const BigReal one_minus_q = 1 - q;
               Accumulation acc{BigReal(1, w), BigReal(1, w)};
               for (long m = 1;; ++m) {
                   const BigReal pair = pow(q, static_cast<unsigned long>(m * (3 * m - 1) / 2)) +
                                        pow(q, static_cast<unsigned long>(m * (3 * m + 1) / 2));
                   acc.magnitude += pair;
                   if (parity_sign(m) > 0)
                       acc.sum += pair;
                   else
                       acc.sum -= pair;
                   const long next = m + 1;
                   const BigReal tail = 2 * pow(q, static_cast<unsigned long>(next * (3 * next - 1) / 2)) / one_minus_q;
                   if (tail_negligible(tail, acc.sum, w)) break;
               }
               return acc;
           })
        .rounded(prec);
}

BigReal cf_R(const EvalPoint& point, Precision prec, ContinuedFractionOptions options) {
    const long cap = options.depth_cap.value_or(10 * prec.bits);
    if (cap < 1) throw std::invalid_argument("depth cap must be positive");
    // Differences of successive convergents shrink like q^(n^2/2).
    const Precision w = prec.plus(guard_bits(std::sqrt(2.0) * quadratic_terms(point.decay_rate(), prec.bits)));
    const BigReal q = point.nome(w);
    // 1 + q/(1 + q^2/(1 + ...)) has convergents h_n / k_n with
    // h_n = h_{n-1} + q^n h_{n-2}, k_n likewise, h_{-1} = 1, h_0 = 1, k_{-1} = 0, k_0 = 1.
    BigReal h_prev(1, w);
    BigReal h(1, w);
    BigReal k_prev(0, w);
    BigReal k(1, w);
    BigReal a = q;
    BigReal value = k / h;  // reciprocal of the convergent
    long confirm_at = 0;  // 0: not armed
    for (long n = 1; n <= cap; ++n) {
        BigReal h_next = h + a * h_prev;
        BigReal k_next = k + a * k_prev;
        h_prev = std::move(h);
        h = std::move(h_next);
        k_prev = std::move(k);
        k = std::move(k_next);
        a *= q;
        if (n % 16 == 0) {
            const BigReal scale = h;
            h /= scale;
            h_prev /= scale;
            k /= scale;
            k_prev /= scale;
        }
        BigReal next = k / h;
        const bool small_step = abs(next - value) <= times_pow2(next, -w.bits);
        value = std::move(next);
        if (!small_step) {
            confirm_at = 0;
            continue;
        }
        // Even and odd convergents bracket the limit; require the test to hold
        // again two steps later before stopping.
        if (confirm_at == 0) {
            confirm_at = n + 2;
        } else if (n >= confirm_at) {
            return (nth_root_of_nome(point, 5, w) * value).rounded(prec);
        }
    }
    throw NonConvergence("continued fraction did not converge within depth " + std::to_string(cap));
}

BigReal product_R(const EvalPoint& point, Precision prec) {
    const Precision w = prec.plus(guard_bits(4.0 * geometric_terms(5.0 * point.decay_rate(), prec.bits)));
    const BigReal q = point.nome(w);
    const BigReal q2 = q * q;
    const BigReal q3 = q2 * q;
    const BigReal q5 = q3 * q2;
    const BigReal one_minus_q5 = 1 - q5;
    BigReal prod(1, w);
    BigReal base = q;  // q^(5n-4)
    for (long n = 1;; ++n) {
        const BigReal e2 = base * q;   // q^(5n-3)
        const BigReal e3 = e2 * q;     // q^(5n-2)
        const BigReal e4 = base * q3;  // q^(5n-1)
        prod *= ((1 - e4) * (1 - base)) / ((1 - e3) * (1 - e2));
        base *= q5;
        // Four factors per index, each |log| <= 2 q^(5n-4) once q^(5n-4) <= 1/2.
        if (product_tail_negligible(8 * base / one_minus_q5, w)) break;
    }
    return (nth_root_of_nome(point, 5, w) * prod).rounded(prec);
}

BigReal theta_quotient_R(const EvalPoint& point, Precision prec) {
    const Precision w = prec.plus(kBaseGuardBits);
    const BigReal num = rr_bilateral_sum(point, 3, w);
    const BigReal den = rr_bilateral_sum(point, 1, w);
    return (nth_root_of_nome(point, 5, w) * num / den).rounded(prec);
}

BigReal golden_factor_product(const EvalPoint& point, const GoldenNumber& c, unsigned root, int power,
                              Precision prec) {
    require_positive_root(root);
    const double rate = point.decay_rate() / root;
    const Precision w = prec.plus(guard_bits(geometric_terms(rate, prec.bits)));
    const BigReal cw = to_real(c, w);
    const BigReal y1 = nth_root_of_nome(point, static_cast<long>(root), w);
    const BigReal one_minus_y1 = 1 - y1;
    const BigReal bound_scale = 2 * std::abs(power) * (abs(cw) + 1);
    BigReal prod(1, w);
    BigReal y = y1;
    for (long n = 1;; ++n) {
        const BigReal factor = 1 + cw * y + y * y;
        if (factor.sign() <= 0) throw ParameterOutOfDomain("product factor is not positive");
        const BigReal powered = pow(factor, static_cast<unsigned long>(std::abs(power)));
        if (power >= 0)
            prod *= powered;
        else
            prod /= powered;
        y *= y1;
        // |log(1 + u)| <= 2|u| with |u| <= (|c| + 1) y for the remaining factors.
        if (product_tail_negligible(bound_scale * y / one_minus_y1, w)) break;
    }
    return prod.rounded(prec);
}

BigReal evaluate_series(const GoldenSeries& s, const BigReal& x) {
    const Precision w = x.precision();
    BigReal sum(w);
    for (const auto& [e, c] : s.terms()) {
        const BigReal xe = e >= 0 ? pow(x, static_cast<unsigned long>(e)) : 1 / pow(x, static_cast<unsigned long>(-e));
        sum += to_real(c, w) * xe;
    }
    return sum;
}

}  // namespace rrcf
