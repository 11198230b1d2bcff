#include "rrcf/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

size_t span_size(long from, long to) { return to >= from ? static_cast<size_t>(to - from + 1) : 0; }

// acc += x * y without building a GoldenNumber temporary per term.
void fused_multiply_add(mpq_class& acc_a, mpq_class& acc_b, const GoldenNumber& x, const GoldenNumber& y,
                        mpq_class& tmp) {
    const mpq_class& xa = x.rational_part().raw();
    const mpq_class& xb = x.sqrt5_part().raw();
    const mpq_class& ya = y.rational_part().raw();
    const mpq_class& yb = y.sqrt5_part().raw();
    const bool x_rational = sgn(xb) == 0;
    const bool y_rational = sgn(yb) == 0;
    if (sgn(xa) != 0 && sgn(ya) != 0) {
        mpq_mul(tmp.get_mpq_t(), xa.get_mpq_t(), ya.get_mpq_t());
        acc_a += tmp;
    }
    if (x_rational && y_rational) return;
    if (!x_rational && !y_rational) {
        mpq_mul(tmp.get_mpq_t(), xb.get_mpq_t(), yb.get_mpq_t());
        acc_a += 5 * tmp;
    }
    if (!y_rational && sgn(xa) != 0) {
        mpq_mul(tmp.get_mpq_t(), xa.get_mpq_t(), yb.get_mpq_t());
        acc_b += tmp;
    }
    if (!x_rational && sgn(ya) != 0) {
        mpq_mul(tmp.get_mpq_t(), xb.get_mpq_t(), ya.get_mpq_t());
        acc_b += tmp;
    }
}

GoldenNumber from_parts(const mpq_class& a, const mpq_class& b) { return {Rational(a), Rational(b)}; }

// sum_{i=lo}^{hi} x[i] * y[n-i]
GoldenNumber convolution_term(const std::vector<GoldenNumber>& x, const std::vector<GoldenNumber>& y, size_t n,
                              size_t lo, size_t hi) {
    mpq_class acc_a;
    mpq_class acc_b;
    mpq_class tmp;
    for (size_t i = lo; i <= hi; ++i) {
        if (x[i].is_zero() || y[n - i].is_zero()) continue;
        fused_multiply_add(acc_a, acc_b, x[i], y[n - i], tmp);
    }
    return from_parts(acc_a, acc_b);
}

void check_factor(const ProductFactor& f) {
    bool has_unit_constant = false;
    for (const auto& [e, c] : f.terms) {
        if (e < 0) throw SeriesError("product factor has a negative exponent");
        if (e == 0) {
            if (c != GoldenNumber(1) || has_unit_constant) throw SeriesError("product factor constant term is not 1");
            has_unit_constant = true;
        }
    }
    if (!has_unit_constant) throw SeriesError("product factor constant term is not 1");
}

}  // namespace

GoldenSeries::GoldenSeries(long order) : valuation_(order + 1), order_(order) {}

GoldenSeries::GoldenSeries(long valuation, std::vector<GoldenNumber> coeffs, long order)
    : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(span_size(valuation_, order_));
    normalize();
}

GoldenSeries GoldenSeries::monomial(const GoldenNumber& c, long exponent, long order) {
    return GoldenSeries(exponent, {c}, order);
}

GoldenSeries GoldenSeries::from_terms(const std::vector<std::pair<long, GoldenNumber>>& terms, long order) {
    if (terms.empty()) return GoldenSeries(order);
    long lo = terms.front().first;
    for (const auto& t : terms) lo = std::min(lo, t.first);
    std::vector<GoldenNumber> c(span_size(lo, order));
    for (const auto& [e, v] : terms)
        if (e <= order) c[static_cast<size_t>(e - lo)] += v;
    return GoldenSeries(lo, std::move(c), order);
}

void GoldenSeries::normalize() {
    const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const GoldenNumber& c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        valuation_ = order_ + 1;
        return;
    }
    valuation_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
}

GoldenNumber GoldenSeries::coefficient(long e) const {
    if (e > order_) throw std::out_of_range("coefficient above series order");
    if (e < valuation_) return {};
    return coeffs_[static_cast<size_t>(e - valuation_)];
}

const GoldenNumber& GoldenSeries::leading_coefficient() const {
    if (is_zero()) throw SeriesError("zero series has no leading coefficient");
    return coeffs_.front();
}

std::vector<std::pair<long, GoldenNumber>> GoldenSeries::terms() const {
    std::vector<std::pair<long, GoldenNumber>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.emplace_back(valuation_ + static_cast<long>(i), coeffs_[i]);
    return out;
}

GoldenSeries GoldenSeries::truncated(long order) const {
    if (order > order_) throw std::invalid_argument("cannot extend a series beyond its known order");
    if (is_zero()) return GoldenSeries(order);
    std::vector<GoldenNumber> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(span_size(valuation_, order)));
    return GoldenSeries(valuation_, std::move(c), order);
}

GoldenSeries GoldenSeries::shifted(long k) const {
    GoldenSeries r = *this;
    r.valuation_ += k;
    r.order_ += k;
    return r;
}

GoldenSeries& GoldenSeries::operator+=(const GoldenSeries& o) {
    const long order = std::min(order_, o.order_);
    const long val = std::min(valuation_, o.valuation_);
    std::vector<GoldenNumber> c(span_size(val, order));
    for (long e = val; e <= order; ++e) {
        auto& slot = c[static_cast<size_t>(e - val)];
        if (e >= valuation_ && !is_zero()) slot += coeffs_[static_cast<size_t>(e - valuation_)];
        if (e >= o.valuation_ && !o.is_zero()) slot += o.coeffs_[static_cast<size_t>(e - o.valuation_)];
    }
    *this = GoldenSeries(val, std::move(c), order);
    return *this;
}

GoldenSeries& GoldenSeries::operator-=(const GoldenSeries& o) { return *this += -o; }

GoldenSeries& GoldenSeries::operator*=(const GoldenNumber& c) {
    for (auto& v : coeffs_) v *= c;
    normalize();
    return *this;
}

GoldenSeries operator-(const GoldenSeries& a) {
    GoldenSeries r = a;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

GoldenSeries operator*(const GoldenSeries& a, const GoldenSeries& b) {
    const long order = std::min(a.order_ + b.valuation_, b.order_ + a.valuation_);
    if (a.is_zero() || b.is_zero()) return GoldenSeries(order);
    const long val = a.valuation_ + b.valuation_;
    const size_t n = span_size(val, order);
    std::vector<GoldenNumber> c(n);
    for (size_t k = 0; k < n; ++k) {
        const size_t hi = std::min(k, a.coeffs_.size() - 1);
        const size_t lo = k >= b.coeffs_.size() ? k - (b.coeffs_.size() - 1) : 0;
        if (lo <= hi) c[k] = convolution_term(a.coeffs_, b.coeffs_, k, lo, hi);
    }
    return GoldenSeries(val, std::move(c), order);
}

GoldenSeries inverse(const GoldenSeries& s) {
    if (s.is_zero()) throw SeriesError("inverse of a zero series");
    const long v = s.valuation();
    const long order = s.order() - 2 * v;
    const size_t n = span_size(v, s.order());
    std::vector<GoldenNumber> u(n);
    for (size_t i = 0; i < n; ++i) u[i] = s.coefficient(v + static_cast<long>(i));
    const GoldenNumber r0 = u[0].inverse();
    std::vector<GoldenNumber> r(n);
    r[0] = r0;
    for (size_t k = 1; k < n; ++k) r[k] = -(r0 * convolution_term(u, r, k, 1, k));
    return GoldenSeries(-v, std::move(r), order);
}

GoldenSeries sqrt(const GoldenSeries& s) {
    if (s.is_zero()) throw SeriesError("square root of a zero series");
    const long v = s.valuation();
    if (v % 2 != 0) throw SeriesError("square root of a series with odd valuation");
    if (s.leading_coefficient() != GoldenNumber(1))
        throw SeriesError("square root needs leading coefficient 1");
    const size_t n = span_size(v, s.order());
    std::vector<GoldenNumber> u(n);
    for (size_t i = 0; i < n; ++i) u[i] = s.coefficient(v + static_cast<long>(i));
    std::vector<GoldenNumber> r(n);
    r[0] = GoldenNumber(1);
    const GoldenNumber half(Rational(1, 2));
    for (size_t k = 1; k < n; ++k) {
        GoldenNumber cross = k >= 2 ? convolution_term(r, r, k, 1, k - 1) : GoldenNumber();
        r[k] = (u[k] - cross) * half;
    }
    return GoldenSeries(v / 2, std::move(r), v / 2 + (s.order() - v));
}

GoldenSeries pow(const GoldenSeries& s, unsigned n) {
    GoldenSeries r = GoldenSeries::constant(GoldenNumber(1), s.order() - s.valuation());
    if (n == 0) return r;
    r = s;
    for (unsigned i = 1; i < n; ++i) r = r * s;
    return r;
}

GoldenSeries substitute_power(const GoldenSeries& s, long k) {
    if (k < 1) throw std::invalid_argument("substitution power must be positive");
    const long order = k * (s.order() + 1) - 1;
    if (s.is_zero()) return GoldenSeries(order);
    std::vector<std::pair<long, GoldenNumber>> t;
    for (auto& [e, c] : s.terms()) t.emplace_back(k * e, c);
    return GoldenSeries::from_terms(t, order);
}

std::optional<long> first_mismatch(const GoldenSeries& a, const GoldenSeries& b, long up_to) {
    if (a.order() < up_to || b.order() < up_to) throw std::invalid_argument("series not known to the comparison order");
    for (long e = std::min(a.valuation(), b.valuation()); e <= up_to; ++e)
        if (a.coefficient(e) != b.coefficient(e)) return e;
    return std::nullopt;
}

GoldenSeries infinite_product(const ProductSpec& spec, long order) {
    if (spec.min_step < 1) throw std::invalid_argument("product min_step must be positive");
    if (order < 0) return GoldenSeries(order);
    std::vector<GoldenNumber> c(static_cast<size_t>(order + 1));
    c[0] = GoldenNumber(1);
    mpq_class acc_a;
    mpq_class acc_b;
    mpq_class tmp;
    for (long n = 1; spec.min_step * n <= order; ++n) {
        for (const ProductFactor& f : spec.factors(n)) {
            check_factor(f);
            const int reps = f.power < 0 ? -f.power : f.power;
            for (int rep = 0; rep < reps; ++rep) {
                if (f.power > 0) {
                    // In-place multiply, descending so c[k - e] still holds the old value.
                    for (long k = order; k >= 1; --k) {
                        acc_a = c[static_cast<size_t>(k)].rational_part().raw();
                        acc_b = c[static_cast<size_t>(k)].sqrt5_part().raw();
                        bool touched = false;
                        for (const auto& [e, g] : f.terms) {
                            if (e == 0 || e > k || c[static_cast<size_t>(k - e)].is_zero()) continue;
                            fused_multiply_add(acc_a, acc_b, g, c[static_cast<size_t>(k - e)], tmp);
                            touched = true;
                        }
                        if (touched) c[static_cast<size_t>(k)] = from_parts(acc_a, acc_b);
                    }
                } else {
                    // In-place division, ascending so c[k - e] already holds the quotient.
                    for (long k = 1; k <= order; ++k) {
                        acc_a = 0;
                        acc_b = 0;
                        bool touched = false;
                        for (const auto& [e, g] : f.terms) {
                            if (e == 0 || e > k || c[static_cast<size_t>(k - e)].is_zero()) continue;
                            fused_multiply_add(acc_a, acc_b, g, c[static_cast<size_t>(k - e)], tmp);
                            touched = true;
                        }
                        if (touched) c[static_cast<size_t>(k)] -= from_parts(acc_a, acc_b);
                    }
                }
            }
        }
    }
    return GoldenSeries(0, std::move(c), order);
}

std::string render_terms(const GoldenSeries& s) {
    std::ostringstream out;
    for (const auto& [e, c] : s.terms()) out << "x^" << e << ": " << c.to_string() << '\n';
    return out.str();
}

std::string render_terms_json(const GoldenSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : s.terms()) arr.push_back({e, c.to_string()});
    return arr.dump();
}

}  // namespace rrcf
