#pragma once

#include <string>

#include "rrcf/big_real.hpp"
#include "rrcf/golden.hpp"

namespace rrcf {

/// Largest admissible nome. Series and products still converge up to 1, but
/// their tails grow without bound as q -> 1.
Rational nome_limit();

/// A real nome q in (0, nome_limit()], given either directly or through
/// s > 0 with q = e^(-pi s) (tau = i s, q = e^(i pi tau)).
class EvalPoint {
public:
    enum class Kind { nome, exponent };

    /// Throws NomeOutOfRange unless 0 < q <= nome_limit().
    static EvalPoint from_nome(const GoldenNumber& q);
    /// q = e^(-pi s). Throws ParameterOutOfDomain for s <= 0 and NomeOutOfRange
    /// when the nome exceeds the limit.
    static EvalPoint from_exponent(const GoldenNumber& s);
    /// q = e^(-2 pi a), the nome of R(e^(-2 pi a)) in the complementary relations.
    static EvalPoint from_theorem_parameter(const GoldenNumber& a);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const GoldenNumber& value() const { return value_; }

    [[nodiscard]] BigReal nome(Precision p) const;
    /// log q (negative).
    [[nodiscard]] BigReal log_nome(Precision p) const;
    /// Rough double estimate of -log q, for sizing loops.
    [[nodiscard]] double decay_rate() const;

    /// The point q^k.
    [[nodiscard]] EvalPoint power(unsigned k) const;

    /// "q=3/10" or "s=2".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

private:
    EvalPoint(Kind k, GoldenNumber v) : kind_(k), value_(std::move(v)) {}

    Kind kind_;
    GoldenNumber value_;
};

}  // namespace rrcf
