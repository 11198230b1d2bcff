#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rrcf/big_real.hpp"
#include "rrcf/eval_point.hpp"
#include "rrcf/golden.hpp"
#include "rrcf/series.hpp"

namespace rrcf {

/// Closed catalog of checked identities, in report order.
enum class IdentityId {
    eq1,
    eq6,
    eq7,
    eq8,
    eq9,
    eq10,
    eq11,
    eq12,
    eq13,
    eq14,
    cos_ratio,
    jacobi_z0,
    feq1,
    feq5,
    thm1,
    thm2,
    consistency_9x10,
};

enum class Mode { formal, numeric };

const std::vector<IdentityId>& all_identities();
std::string_view to_string(IdentityId id);
std::string_view to_string(Mode mode);
/// Throws ParseError for names outside the catalog.
IdentityId parse_identity_id(std::string_view name);
Mode parse_mode(std::string_view name);

bool supports(IdentityId id, Mode mode);

/// Default x-order for formal checks (q-order 40).
inline constexpr long kDefaultFormalOrder = 400;
/// Formal checks below this order are rejected.
inline constexpr long kMinFormalOrder = 20;
inline constexpr int kDefaultDigits = 50;

/// Parameters of one check. Unset fields fall back to per-identity defaults.
///   q, s, a   the nome, given directly, as q = e^(-pi s), or as q = e^(-2 pi a)
///   z         angle z = r*pi, as r
struct CheckParams {
    std::optional<GoldenNumber> q;
    std::optional<GoldenNumber> s;
    std::optional<GoldenNumber> a;
    std::optional<Rational> z;
    std::optional<long> order;
    std::optional<int> digits;
    /// Overrides the default tolerance 10^-(digits-5) with 10^-tolerance_digits.
    std::optional<int> tolerance_digits;

    friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

struct CheckSpec {
    IdentityId id;
    Mode mode;
    CheckParams params;
};

struct VerificationReport {
    IdentityId id = IdentityId::eq1;
    Mode mode = Mode::formal;
    CheckParams params;  // resolved, defaults filled in
    /// Formal: first mismatching x-exponent, if any.
    std::optional<long> mismatch;
    /// Numeric: max |view - first view| as decimal text.
    std::string residual;
    bool pass = false;
    double elapsed_ms = 0.0;
    /// Set when the check could not run (domain errors inside a suite).
    std::string error;

    [[nodiscard]] long order_or_digits() const;
};

/// Every series view of a formal identity, each known at least to `order`.
/// The identity holds to that order iff all views agree coefficient-wise.
std::vector<std::pair<std::string, GoldenSeries>> formal_views(IdentityId id, long order);

/// Every numeric view at the given parameters and precision. Throws
/// ParameterOutOfDomain / NomeOutOfRange for parameters outside the domain.
std::vector<std::pair<std::string, BigReal>> numeric_views(IdentityId id, const CheckParams& params, Precision prec);

/// Fills in per-identity defaults for the given mode.
CheckParams resolve_params(IdentityId id, Mode mode, const CheckParams& given);

/// Exact comparison of all series views to `order`.
/// Throws UnsupportedMode or OrderTooSmall.
VerificationReport verify_formal(IdentityId id, long order = kDefaultFormalOrder);

/// Numeric comparison at the requested digits with tolerance 10^-(digits-5).
VerificationReport verify_numeric(IdentityId id, const CheckParams& params = {});

/// Dispatches on spec.mode.
VerificationReport verify(const CheckSpec& spec);

struct SuiteConfig {
    std::vector<CheckSpec> checks;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    bool pass = true;
};

/// Runs every check, capturing per-check errors as failing reports. Reports
/// come back ordered by identity then mode, keeping config order within.
SuiteResult run_suite(const SuiteConfig& config);

/// Full catalog: formal checks plus the default numeric sweeps.
SuiteConfig default_suite();

/// JSON list of {id, mode, params}. Throws ParseError.
SuiteConfig parse_suite_config(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const CheckParams& p);
CheckParams params_from_json(const nlohmann::json& j);

/// "PASS eq9 formal order=200 residual=none"
std::string to_text_line(const VerificationReport& r);

}  // namespace rrcf
