#include "rrcf/eval_point.hpp"

#include "rrcf/errors.hpp"

namespace rrcf {

namespace {

constexpr Precision kCheckPrecision{128};

}  // namespace

Rational nome_limit() { return Rational(9, 10); }

EvalPoint EvalPoint::from_nome(const GoldenNumber& q) {
    if (q.sign() <= 0 || compare(q, GoldenNumber(nome_limit())) > 0)
        throw NomeOutOfRange("nome out of range: q = " + q.to_string() + " is outside (0, 9/10]");
    return {Kind::nome, q};
}

EvalPoint EvalPoint::from_exponent(const GoldenNumber& s) {
    if (s.sign() <= 0) throw ParameterOutOfDomain("nome exponent must be positive: s = " + s.to_string());
    const EvalPoint p{Kind::exponent, s};
    // s is exact, so the comparison is decided well inside 128 bits unless q
    // sits within 2^-120 of the limit.
    if (p.nome(kCheckPrecision) > BigReal(nome_limit(), kCheckPrecision))
        throw NomeOutOfRange("nome out of range: e^(-pi*" + s.to_string() + ") exceeds 9/10");
    return p;
}

EvalPoint EvalPoint::from_theorem_parameter(const GoldenNumber& a) {
    if (a.sign() <= 0) throw ParameterOutOfDomain("parameter must be positive: a = " + a.to_string());
    return from_exponent(GoldenNumber(2) * a);
}

BigReal EvalPoint::nome(Precision p) const {
    if (kind_ == Kind::nome) return to_real(value_, p);
    const Precision w = p.plus(16);
    return exp(-(pi(w) * to_real(value_, w))).rounded(p);
}

BigReal EvalPoint::log_nome(Precision p) const {
    const Precision w = p.plus(16);
    if (kind_ == Kind::nome) return log(to_real(value_, w)).rounded(p);
    return (-(pi(w) * to_real(value_, w))).rounded(p);
}

double EvalPoint::decay_rate() const { return -log_nome(Precision{64}).to_double(); }

EvalPoint EvalPoint::power(unsigned k) const {
    if (k == 0) throw ParameterOutOfDomain("nome power must be positive");
    if (kind_ == Kind::nome) return from_nome(pow(value_, k));
    return from_exponent(GoldenNumber(static_cast<long>(k)) * value_);
}

std::string EvalPoint::to_string() const {
    return (kind_ == Kind::nome ? "q=" : "s=") + value_.to_string();
}

}  // namespace rrcf
