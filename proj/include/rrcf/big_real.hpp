#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "rrcf/rational.hpp"

namespace rrcf {

/// Binary working precision.
struct Precision {
    long bits = 64;

    /// ceil(digits * log2 10) plus a small boundary guard.
    static Precision from_digits(int digits);

    [[nodiscard]] Precision plus(long extra) const { return Precision{bits + extra}; }
    friend bool operator==(Precision, Precision) = default;
};

/// MPFR-backed real. Every value carries its own precision; binary operations
/// produce a result at the larger operand precision, rounded to nearest.
class BigReal {
public:
    explicit BigReal(Precision p = {});
    BigReal(long v, Precision p);
    BigReal(const Rational& v, Precision p);
    /// Decimal text, rounded once to the requested precision.
    static BigReal parse(std::string_view text, Precision p);

    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    [[nodiscard]] Precision precision() const { return Precision{static_cast<long>(mpfr_get_prec(v_))}; }
    [[nodiscard]] BigReal rounded(Precision p) const;

    [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    [[nodiscard]] long exponent2() const;

    /// Exactly `digits` significant decimal digits; positional notation for
    /// moderate magnitudes, scientific otherwise. Zero renders as "0.000…".
    [[nodiscard]] std::string to_string(int digits) const;
    /// Always scientific, e.g. "1.25e-52"; zero renders as "0".
    [[nodiscard]] std::string to_scientific(int digits) const;

    [[nodiscard]] mpfr_srcptr get() const { return v_; }
    [[nodiscard]] mpfr_ptr get() { return v_; }

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator*=(long k);
    BigReal& operator/=(long k);

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator*(BigReal a, long k) { return a *= k; }
    friend BigReal operator*(long k, BigReal a) { return a *= k; }
    friend BigReal operator/(BigReal a, long k) { return a /= k; }
    friend BigReal operator+(const BigReal& a, long k);
    friend BigReal operator-(const BigReal& a, long k);
    friend BigReal operator-(long k, const BigReal& a);
    friend BigReal operator+(long k, const BigReal& a) { return a + k; }
    friend BigReal operator/(long k, const BigReal& a);
    friend BigReal operator-(const BigReal& a);

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

private:
    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal pow(const BigReal& x, unsigned long n);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pi(Precision p);

/// 10^-k at precision p.
BigReal pow10_neg(long k, Precision p);

}  // namespace rrcf
