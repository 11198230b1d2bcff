#include "rrcf/big_real.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

constexpr long kBoundaryGuardBits = 8;
constexpr int kMaxPositionalExponent = 20;

mpfr_prec_t max_prec(const BigReal& a, const BigReal& b) {
    return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

struct MpfrStr {
    char* p;
    ~MpfrStr() { mpfr_free_str(p); }
};

}  // namespace

Precision Precision::from_digits(int digits) {
    if (digits < 1) throw std::invalid_argument("digit count must be positive");
    const auto bits = static_cast<long>(std::ceil(digits * std::log2(10.0)));
    return Precision{bits + kBoundaryGuardBits};
}

BigReal::BigReal(Precision p) {
    if (p.bits < MPFR_PREC_MIN || p.bits > MPFR_PREC_MAX) throw std::invalid_argument("precision out of range");
    mpfr_init2(v_, p.bits);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long v, Precision p) : BigReal(p) { mpfr_set_si(v_, v, MPFR_RNDN); }

BigReal::BigReal(const Rational& v, Precision p) : BigReal(p) { mpfr_set_q(v_, v.raw().get_mpq_t(), MPFR_RNDN); }

BigReal BigReal::parse(std::string_view text, Precision p) {
    BigReal r(p);
    const std::string s(text);
    if (s.empty()) throw ParseError("empty real");
    char* end = nullptr;
    mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (end == s.c_str() || *end != '\0') throw ParseError("malformed real: '" + s + "'");
    return r;
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::rounded(Precision p) const {
    BigReal r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long BigReal::exponent2() const {
    if (!mpfr_regular_p(v_)) return mpfr_get_emin();
    return mpfr_get_exp(v_);
}

std::string BigReal::to_string(int digits) const {
    if (digits < 1) throw std::invalid_argument("digit count must be positive");
    if (!is_finite()) throw std::domain_error("non-finite value");
    if (is_zero()) return digits == 1 ? "0" : "0." + std::string(static_cast<size_t>(digits - 1), '0');
    mpfr_exp_t e = 0;
    MpfrStr raw{mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN)};
    std::string d(raw.p);
    std::string sign;
    if (d.front() == '-') {
        sign = "-";
        d.erase(0, 1);
    }
    const long ex = e;
    if (ex > 0 && ex <= digits) {
        std::string out = sign + d.substr(0, static_cast<size_t>(ex));
        if (static_cast<size_t>(ex) < d.size()) out += "." + d.substr(static_cast<size_t>(ex));
        return out;
    }
    if (ex <= 0 && ex > -kMaxPositionalExponent)
        return sign + "0." + std::string(static_cast<size_t>(-ex), '0') + d;
    std::string out = sign + d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    return out + "e" + std::to_string(ex - 1);
}

std::string BigReal::to_scientific(int digits) const {
    if (digits < 1) throw std::invalid_argument("digit count must be positive");
    if (!is_finite()) throw std::domain_error("non-finite value");
    if (is_zero()) return "0";
    mpfr_exp_t e = 0;
    MpfrStr raw{mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN)};
    std::string d(raw.p);
    std::string sign;
    if (d.front() == '-') {
        sign = "-";
        d.erase(0, 1);
    }
    std::string out = sign + d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    return out + "e" + std::to_string(static_cast<long>(e) - 1);
}

BigReal& BigReal::operator+=(const BigReal& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(long k) {
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(long k) {
    if (k == 0) throw DivisionByZero();
    mpfr_div_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(Precision{max_prec(a, b)});
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(Precision{max_prec(a, b)});
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(Precision{max_prec(a, b)});
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw DivisionByZero();
    BigReal r(Precision{max_prec(a, b)});
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, long k) {
    BigReal r(a.precision());
    mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, long k) {
    BigReal r(a.precision());
    mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

BigReal operator-(long k, const BigReal& a) {
    BigReal r(a.precision());
    mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(long k, const BigReal& a) {
    BigReal r(a.precision());
    mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative value");
    BigReal r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal exp(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw std::domain_error("logarithm of a non-positive value");
    BigReal r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal cos(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal sin(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_sin(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, unsigned long n) {
    BigReal r(x.precision());
    mpfr_pow_ui(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r(Precision{max_prec(x, y)});
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

BigReal pi(Precision p) {
    BigReal r(p);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigReal pow10_neg(long k, Precision p) {
    BigReal r(p);
    mpfr_set_si(r.get(), 10, MPFR_RNDN);
    mpfr_pow_si(r.get(), r.get(), -k, MPFR_RNDN);
    return r;
}

}  // namespace rrcf
