#include "rrcf/golden.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

constexpr std::string_view kSqrt5 = "sqrt5";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// One unsigned term: "r", "r*sqrt5" or "sqrt5".
GoldenNumber parse_term(std::string_view term) {
    term = trim(term);
    if (term.empty()) throw ParseError("empty term in golden number");
    if (term.size() >= kSqrt5.size() && term.substr(term.size() - kSqrt5.size()) == kSqrt5) {
        auto coeff = trim(term.substr(0, term.size() - kSqrt5.size()));
        if (coeff.empty()) return {Rational(0), Rational(1)};
        if (coeff.back() != '*') throw ParseError("expected '*' before sqrt5 in '" + std::string(term) + "'");
        coeff.remove_suffix(1);
        return {Rational(0), Rational::parse(coeff)};
    }
    return {Rational::parse(term), Rational(0)};
}

std::string sqrt5_term(const Rational& b) {
    if (b == Rational(1)) return std::string(kSqrt5);
    return b.to_string() + "*" + std::string(kSqrt5);
}

}  // namespace

GoldenNumber GoldenNumber::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty golden number");
    GoldenNumber total;
    size_t i = 0;
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        // Leading sign of the first term, or the operator between terms.
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
        }
        // A sign may directly follow a binary operator: "1/2 + -1/2*sqrt5".
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (!first && i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
        }
        size_t j = i;
        while (j < text.size()) {
            const char c = text[j];
            if ((c == '+' || c == '-') && !(j > i && (text[j - 1] == 'e' || text[j - 1] == 'E'))) break;
            ++j;
        }
        GoldenNumber term = parse_term(text.substr(i, j - i));
        total += sign > 0 ? term : -term;
        i = j;
        first = false;
    }
    return total;
}

int GoldenNumber::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    return a_ * a_ > Rational(5) * b_ * b_ ? sa : sb;
}

GoldenNumber GoldenNumber::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const Rational n = norm();
    return {a_ / n, -b_ / n};
}

std::string GoldenNumber::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    if (a_.is_zero()) {
        if (b_ == Rational(-1)) return "-" + std::string(kSqrt5);
        return sqrt5_term(b_);
    }
    return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + sqrt5_term(abs(b_));
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

GoldenNumber pow(GoldenNumber x, unsigned n) {
    GoldenNumber r(1);
    while (n > 0) {
        if (n & 1U) r *= x;
        n >>= 1U;
        if (n > 0) x *= x;
    }
    return r;
}

int compare(const GoldenNumber& x, const GoldenNumber& y) { return (x - y).sign(); }

GoldenNumber alpha() { return {Rational(1, 2), Rational(-1, 2)}; }

GoldenNumber beta() { return {Rational(1, 2), Rational(1, 2)}; }

BigReal to_real(const GoldenNumber& x, Precision prec) {
    if (prec.bits < 8) throw std::invalid_argument("precision below 8 bits");
    const Precision work = prec.plus(16);
    const Rational& a = x.rational_part();
    const Rational& b = x.sqrt5_part();
    if (b.is_zero()) return BigReal(a, prec);
    const BigReal root5 = sqrt(BigReal(5, work));
    if (a.is_zero() || a.sign() == b.sign()) return (BigReal(a, work) + BigReal(b, work) * root5).rounded(prec);
    // a + b*sqrt5 = norm / (a - b*sqrt5), and the denominator has no cancellation.
    const BigReal den = BigReal(a, work) - BigReal(b, work) * root5;
    return (BigReal(x.norm(), work) / den).rounded(prec);
}

}  // namespace rrcf
