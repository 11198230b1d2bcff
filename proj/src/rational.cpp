#include "rrcf/rational.hpp"

#include <cctype>
#include <string>

#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    if (!all_digits(body)) throw ParseError("malformed integer: '" + std::string(s) + "'");
    mpz_class z;
    z.set_str(std::string(body), 10);
    if (s.front() == '-') z = -z;
    return z;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// Decimal literal: [sign] digits [. digits] [e [sign] digits]
mpq_class parse_decimal(std::string_view s) {
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
        const mpz_class e = parse_integer(body.substr(epos + 1));
        if (!e.fits_slong_p() || abs(e) > 100000) throw ParseError("decimal exponent too large");
        exponent = e.get_si();
        body = body.substr(0, epos);
    }
    std::string digits;
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto ip = body.substr(0, dot);
        const auto fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw ParseError("malformed decimal: '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(body)) throw ParseError("malformed number: '" + std::string(s) + "'");
        digits = std::string(body);
    }
    mpz_class mant(digits.empty() ? "0" : digits, 10);
    if (negative) mant = -mant;
    mpq_class q;
    if (exponent >= 0) {
        q = mpq_class(mant * pow10(static_cast<unsigned long>(exponent)));
    } else {
        q = mpq_class(mant, pow10(static_cast<unsigned long>(-exponent)));
        q.canonicalize();
    }
    return q;
}

}  // namespace

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw DivisionByZero();
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class n = parse_integer(text.substr(0, slash));
        mpz_class d = parse_integer(text.substr(slash + 1));
        if (d == 0) throw DivisionByZero();
        return Rational(mpq_class(n, d));
    }
    return Rational(parse_decimal(text));
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace rrcf
