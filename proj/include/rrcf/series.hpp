#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrcf/golden.hpp"

namespace rrcf {

/// Truncated Laurent series in x = q^(1/10) with coefficients in Q(sqrt 5),
/// known modulo x^(order+1).
///
/// Storage is dense from the valuation to the order. The leading stored
/// coefficient is always nonzero; a series that vanishes up to its order has
/// no stored coefficients and valuation order+1.
///
/// Order propagation (va, oa and vb, ob are the operand valuations and orders):
///   a + b        order min(oa, ob)
///   a * b        order min(oa + vb, ob + va)
///   inverse(a)   order oa - 2 va          (relative precision is preserved)
///   sqrt(a)      order va/2 + (oa - va)
///   a(x^k)       order k (oa + 1) - 1
class GoldenSeries {
public:
    /// The zero series known to the given order.
    explicit GoldenSeries(long order);
    /// Coefficients for x^valuation, x^(valuation+1), ... truncated at order.
    GoldenSeries(long valuation, std::vector<GoldenNumber> coeffs, long order);

    static GoldenSeries constant(const GoldenNumber& c, long order) { return monomial(c, 0, order); }
    static GoldenSeries monomial(const GoldenNumber& c, long exponent, long order);
    static GoldenSeries from_terms(const std::vector<std::pair<long, GoldenNumber>>& terms, long order);

    [[nodiscard]] long valuation() const { return valuation_; }
    [[nodiscard]] long order() const { return order_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^e; zero below the valuation. Throws for e > order.
    [[nodiscard]] GoldenNumber coefficient(long e) const;
    [[nodiscard]] const GoldenNumber& leading_coefficient() const;

    /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
    [[nodiscard]] std::vector<std::pair<long, GoldenNumber>> terms() const;

    /// Drops information above the new order (which may not exceed the current one).
    [[nodiscard]] GoldenSeries truncated(long order) const;
    /// Multiplies by x^k.
    [[nodiscard]] GoldenSeries shifted(long k) const;

    GoldenSeries& operator+=(const GoldenSeries& o);
    GoldenSeries& operator-=(const GoldenSeries& o);
    GoldenSeries& operator*=(const GoldenNumber& c);

    friend GoldenSeries operator+(GoldenSeries a, const GoldenSeries& b) { return a += b; }
    friend GoldenSeries operator-(GoldenSeries a, const GoldenSeries& b) { return a -= b; }
    friend GoldenSeries operator*(const GoldenSeries& a, const GoldenSeries& b);
    friend GoldenSeries operator*(GoldenSeries a, const GoldenNumber& c) { return a *= c; }
    friend GoldenSeries operator*(const GoldenNumber& c, GoldenSeries a) { return a *= c; }
    friend GoldenSeries operator-(const GoldenSeries& a);

    /// Equal valuation, order and coefficients.
    friend bool operator==(const GoldenSeries&, const GoldenSeries&) = default;

private:
    void normalize();

    long valuation_;
    long order_;
    std::vector<GoldenNumber> coeffs_;
};

/// Multiplicative inverse; throws SeriesError for a series that is zero to its order.
GoldenSeries inverse(const GoldenSeries& s);

/// Square root of a series with even valuation and leading coefficient 1.
GoldenSeries sqrt(const GoldenSeries& s);

GoldenSeries pow(const GoldenSeries& s, unsigned n);

/// x -> x^k, i.e. exponent e maps to k*e.
GoldenSeries substitute_power(const GoldenSeries& s, long k);

/// Smallest exponent in [min valuation, up_to] where a and b differ, if any.
/// Both series must be known at least to up_to.
std::optional<long> first_mismatch(const GoldenSeries& a, const GoldenSeries& b, long up_to);

/// Sparse polynomial with constant term 1, used as an infinite-product factor.
struct ProductFactor {
    std::vector<std::pair<long, GoldenNumber>> terms;  // includes the (0, 1) term
    int power = 1;                                     // negative powers divide
};

/// prod_{n>=1} of the factors returned for each n. Every nonconstant exponent
/// of a factor for index n must be at least min_step * n, so only finitely
/// many n touch exponents <= order.
struct ProductSpec {
    std::function<std::vector<ProductFactor>(long n)> factors;
    long min_step = 1;
};

/// Exact truncated product with valuation 0. Throws SeriesError when a
/// factor's constant term is not 1.
GoldenSeries infinite_product(const ProductSpec& spec, long order);

/// Human-readable "x^e: coefficient" lines, one per nonzero term.
std::string render_terms(const GoldenSeries& s);
/// JSON array of [exponent, "coefficient"] pairs.
std::string render_terms_json(const GoldenSeries& s);

}  // namespace rrcf
