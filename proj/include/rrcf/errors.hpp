#pragma once

#include <stdexcept>
#include <string>

namespace rrcf {

/// Raised on inversion of an exact zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed textual input (numbers, identity ids, config files).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Power-series precondition failures: zero series, odd valuation,
/// non-unit leading or constant coefficient.
class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Nome outside (0, q_max].
class NomeOutOfRange : public std::domain_error {
public:
    explicit NomeOutOfRange(const std::string& what = "nome out of range")
        : std::domain_error(what) {}
};

/// A verifier or numeric operation received parameters outside its domain.
class ParameterOutOfDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The continued fraction hit its depth cap before the stopping test passed.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedMode : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OrderTooSmall : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace rrcf
