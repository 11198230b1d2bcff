#pragma once

#include <string>
#include <string_view>

#include "rrcf/big_real.hpp"
#include "rrcf/rational.hpp"

namespace rrcf {

/// Exact element a + b*sqrt(5) of the field Q(sqrt 5).
class GoldenNumber {
public:
    GoldenNumber() = default;
    GoldenNumber(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
    GoldenNumber(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    /// Parses the rendering produced by to_string(), e.g. "1/2 - 1/2*sqrt5",
    /// "3*sqrt5", "-sqrt5", "0.25". Terms may repeat and are summed.
    static GoldenNumber parse(std::string_view text);

    [[nodiscard]] const Rational& rational_part() const { return a_; }
    [[nodiscard]] const Rational& sqrt5_part() const { return b_; }

    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

    /// Field norm a^2 - 5 b^2.
    [[nodiscard]] Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

    /// Exact sign of the real value.
    [[nodiscard]] int sign() const;

    [[nodiscard]] GoldenNumber conjugate() const { return {a_, -b_}; }
    [[nodiscard]] GoldenNumber inverse() const;

    /// "a/b + c/d*sqrt5"; a vanishing part is omitted, zero renders as "0".
    [[nodiscard]] std::string to_string() const;

    GoldenNumber& operator+=(const GoldenNumber& o);
    GoldenNumber& operator-=(const GoldenNumber& o);
    GoldenNumber& operator*=(const GoldenNumber& o);
    GoldenNumber& operator/=(const GoldenNumber& o) { return *this *= o.inverse(); }

    friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
    friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
    friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
    friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
    friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a_, -x.b_}; }

    friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;

private:
    Rational a_;
    Rational b_;
};

GoldenNumber pow(GoldenNumber x, unsigned n);

/// Exact comparison of real values.
int compare(const GoldenNumber& x, const GoldenNumber& y);

/// alpha = (1 - sqrt5)/2
GoldenNumber alpha();
/// beta = (1 + sqrt5)/2, the golden ratio
GoldenNumber beta();

/// Real value with |result - x| <= 2^-bits * max(1, |x|).
/// Opposite-sign parts are evaluated through the norm to avoid cancellation.
BigReal to_real(const GoldenNumber& x, Precision prec);

}  // namespace rrcf
