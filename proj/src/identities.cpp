#include "rrcf/identities.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <stdexcept>

#include "rrcf/errors.hpp"
#include "rrcf/numeric.hpp"
#include "rrcf/q_series.hpp"

namespace rrcf {

namespace {

struct CatalogEntry {
    IdentityId id;
    std::string_view name;
    bool formal;
};

constexpr std::array<CatalogEntry, 17> kCatalog{{
    {IdentityId::eq1, "eq1", true},
    {IdentityId::eq6, "eq6", false},
    {IdentityId::eq7, "eq7", false},
    {IdentityId::eq8, "eq8", false},
    {IdentityId::eq9, "eq9", true},
    {IdentityId::eq10, "eq10", true},
    {IdentityId::eq11, "eq11", true},
    {IdentityId::eq12, "eq12", true},
    {IdentityId::eq13, "eq13", true},
    {IdentityId::eq14, "eq14", true},
    {IdentityId::cos_ratio, "cos-ratio", false},
    {IdentityId::jacobi_z0, "jacobi-z0", false},
    {IdentityId::feq1, "feq1", false},
    {IdentityId::feq5, "feq5", false},
    {IdentityId::thm1, "thm1", false},
    {IdentityId::thm2, "thm2", false},
    {IdentityId::consistency_9x10, "consistency-9x10", true},
}};

const CatalogEntry& entry(IdentityId id) { return kCatalog.at(static_cast<size_t>(id)); }

// Extra working order so every view is still known to the requested order
// after the valuation shifts of sqrt, inverse and fifth powers.
constexpr long kFormalMargin = 8;

constexpr int kResidualDigits = 3;

// ---------------------------------------------------------------- formal ---

struct FormalBasis {
    GoldenSeries product;  // rr_product, valuation 0
    GoldenSeries t;        // R(q) = x^2 * product
    GoldenSeries sqrt_t;
    GoldenSeries inv_sqrt_t;
    GoldenSeries eta_ratio_sqrt;  // sqrt(f(-q) / f(-q^5))

    explicit FormalBasis(long w)
        : product(rr_product(w)),
          t(product.shifted(2)),
          sqrt_t(sqrt(t)),
          inv_sqrt_t(inverse(sqrt_t)),
          eta_ratio_sqrt(sqrt(euler_product(w) * inverse(euler_product_q5(w)))) {}
};

GoldenSeries one_minus(const GoldenNumber& c, const GoldenSeries& s) {
    return GoldenSeries::constant(GoldenNumber(1), s.order()) - c * s;
}

// 1/sqrt(t) - c sqrt(t)   and   x^-1 sqrt(f/f5) prod 1/(1 + c q^(n/5) + q^(2n/5))
std::pair<GoldenSeries, GoldenSeries> first_pair_sides(const FormalBasis& b, const GoldenNumber& c, long w) {
    GoldenSeries lhs = b.inv_sqrt_t - c * b.sqrt_t;
    GoldenSeries rhs = (b.eta_ratio_sqrt * golden_factor_product(c, 2, -1, w)).shifted(-1);
    return {std::move(lhs), std::move(rhs)};
}

// (1/sqrt t)^5 - (c sqrt t)^5   and   x^-5 sqrt(f/f5) prod 1/(1 + c q^n + q^(2n))^5
std::pair<GoldenSeries, GoldenSeries> fifth_pair_sides(const FormalBasis& b, const GoldenNumber& c, long w) {
    GoldenSeries lhs = pow(b.inv_sqrt_t, 5) - pow(c, 5) * pow(b.sqrt_t, 5);
    GoldenSeries rhs = (b.eta_ratio_sqrt * golden_factor_product(c, 10, -5, w)).shifted(-5);
    return {std::move(lhs), std::move(rhs)};
}

using SeriesViews = std::vector<std::pair<std::string, GoldenSeries>>;

SeriesViews build_formal_views(IdentityId id, long w) {
    const GoldenNumber a = alpha();
    const GoldenNumber b = beta();
    switch (id) {
        case IdentityId::eq1: {
            // Cross-multiplied: numerator sum = product * denominator sum.
            const GoldenSeries product = rr_product(w);
            return {{"numerator", rr_theta_sum(RrSum::numerator, w)},
                    {"product*denominator", product * rr_theta_sum(RrSum::denominator, w)}};
        }
        case IdentityId::eq9:
        case IdentityId::eq10: {
            const FormalBasis basis(w);
            auto [lhs, rhs] = first_pair_sides(basis, id == IdentityId::eq9 ? a : b, w);
            return {{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
        }
        case IdentityId::eq11:
        case IdentityId::eq12: {
            const FormalBasis basis(w);
            auto [lhs, rhs] = fifth_pair_sides(basis, id == IdentityId::eq11 ? a : b, w);
            return {{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
        }
        case IdentityId::eq13: {
            const GoldenSeries r2 = substitute_power(rr_series(w), 2);
            GoldenSeries lhs = one_minus(b, r2) * inverse(one_minus(a, r2));
            GoldenSeries rhs = golden_factor_product(a, 4, 1, w) * golden_factor_product(b, 4, -1, w);
            return {{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
        }
        case IdentityId::eq14: {
            const GoldenSeries r2_5 = pow(substitute_power(rr_series(w), 2), 5);
            GoldenSeries lhs = one_minus(pow(b, 5), r2_5) * inverse(one_minus(pow(a, 5), r2_5));
            GoldenSeries rhs = golden_factor_product(a, 20, 5, w) * golden_factor_product(b, 20, -5, w);
            return {{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
        }
        case IdentityId::consistency_9x10: {
            const FormalBasis basis(w);
            auto [lhs9, rhs9] = first_pair_sides(basis, a, w);
            auto [lhs10, rhs10] = first_pair_sides(basis, b, w);
            const GoldenSeries one = GoldenSeries::constant(GoldenNumber(1), w);
            // (1 + a y + y^2)(1 + b y + y^2) = (1 - y^5)/(1 - y) with y = q^(n/5).
            ProductSpec collapsed{[](long n) {
                                      return std::vector<ProductFactor>{
                                          {{{0, GoldenNumber(1)}, {2 * n, GoldenNumber(-1)}}, 1},
                                          {{{0, GoldenNumber(1)}, {10 * n, GoldenNumber(-1)}}, -1}};
                                  },
                                  2};
            GoldenSeries closed = (basis.eta_ratio_sqrt * basis.eta_ratio_sqrt * infinite_product(collapsed, w)).shifted(-2);
            return {{"lhs9*lhs10", lhs9 * lhs10},
                    {"1/t-1-t", inverse(basis.t) - one - basis.t},
                    {"rhs9*rhs10", rhs9 * rhs10},
                    {"collapsed-rhs", std::move(closed)}};
        }
        default:
            throw UnsupportedMode(std::string(to_string(id)) + " has no formal mode");
    }
}

// --------------------------------------------------------------- numeric ---

GoldenNumber default_nome() { return GoldenNumber(Rational(3, 10)); }

EvalPoint resolve_point(const CheckParams& p) {
    if (p.q) return EvalPoint::from_nome(*p.q);
    if (p.s) return EvalPoint::from_exponent(*p.s);
    if (p.a) return EvalPoint::from_theorem_parameter(*p.a);
    return EvalPoint::from_nome(default_nome());
}

const GoldenNumber& require_s(IdentityId id, const CheckParams& p) {
    if (!p.s) throw ParameterOutOfDomain(std::string(to_string(id)) + " needs the parameter s");
    if (p.s->sign() <= 0) throw ParameterOutOfDomain("s must be positive: s = " + p.s->to_string());
    return *p.s;
}

const GoldenNumber& require_a(IdentityId id, const CheckParams& p) {
    if (!p.a) throw ParameterOutOfDomain(std::string(to_string(id)) + " needs the parameter a");
    if (p.a->sign() <= 0) throw ParameterOutOfDomain("a must be positive: a = " + p.a->to_string());
    return *p.a;
}

BigReal golden(const GoldenNumber& g, Precision p) { return to_real(g, p); }

// Views of the first pair (c = alpha or beta) at nome q, with t = R(q) from the continued fraction.
std::pair<BigReal, BigReal> first_pair_numeric(const EvalPoint& q, const GoldenNumber& c, const BigReal& t,
                                               Precision p) {
    const BigReal rt = sqrt(t);
    const BigReal lhs = 1 / rt - golden(c, p) * rt;
    const BigReal eta = sqrt(f_numeric(q, p) / f_numeric(q.power(5), p));
    const BigReal rhs = exp(-q.log_nome(p) / 10) * eta * golden_factor_product(q, c, 5, -1, p);
    return {lhs, rhs};
}

std::pair<BigReal, BigReal> fifth_pair_numeric(const EvalPoint& q, const GoldenNumber& c, const BigReal& t,
                                               Precision p) {
    const BigReal rt5 = pow(sqrt(t), 5);
    const BigReal lhs = 1 / rt5 - golden(pow(c, 5), p) * rt5;
    const BigReal eta = sqrt(f_numeric(q, p) / f_numeric(q.power(5), p));
    const BigReal rhs = exp(-q.log_nome(p) / 2) * eta * golden_factor_product(q, c, 1, -5, p);
    return {lhs, rhs};
}

using RealViews = std::vector<std::pair<std::string, BigReal>>;

}  // namespace

// ----------------------------------------------------------------- catalog ---

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& e : kCatalog) v.push_back(e.id);
        return v;
    }();
    return ids;
}

std::string_view to_string(IdentityId id) { return entry(id).name; }

std::string_view to_string(Mode mode) { return mode == Mode::formal ? "formal" : "numeric"; }

IdentityId parse_identity_id(std::string_view name) {
    for (const auto& e : kCatalog)
        if (e.name == name) return e.id;
    throw ParseError("unknown identity id: '" + std::string(name) + "'");
}

Mode parse_mode(std::string_view name) {
    if (name == "formal") return Mode::formal;
    if (name == "numeric") return Mode::numeric;
    throw ParseError("unknown mode: '" + std::string(name) + "'");
}

bool supports(IdentityId id, Mode mode) { return mode == Mode::numeric || entry(id).formal; }

long VerificationReport::order_or_digits() const {
    return mode == Mode::formal ? params.order.value_or(kDefaultFormalOrder) : params.digits.value_or(kDefaultDigits);
}

std::vector<std::pair<std::string, GoldenSeries>> formal_views(IdentityId id, long order) {
    if (!supports(id, Mode::formal)) throw UnsupportedMode(std::string(to_string(id)) + " has no formal mode");
    if (order < kMinFormalOrder)
        throw OrderTooSmall("formal order " + std::to_string(order) + " is below the minimum " +
                            std::to_string(kMinFormalOrder));
    auto views = build_formal_views(id, order + kFormalMargin);
    for (auto& [name, s] : views) {
        if (s.order() < order)
            throw std::logic_error("view " + name + " of " + std::string(to_string(id)) + " lost order");
        s = s.truncated(order);
    }
    return views;
}

CheckParams resolve_params(IdentityId id, Mode mode, const CheckParams& given) {
    CheckParams p = given;
    if (mode == Mode::formal) {
        if (!p.order) p.order = kDefaultFormalOrder;
        return p;
    }
    if (!p.digits) p.digits = kDefaultDigits;
    const bool has_point = p.q || p.s || p.a;
    switch (id) {
        case IdentityId::eq6:
            if (!p.z) p.z = Rational(1, 10);
            if (!has_point) p.s = GoldenNumber(1);
            break;
        case IdentityId::eq8:
            if (!p.z) p.z = Rational(1, 10);
            if (!has_point) p.q = default_nome();
            break;
        case IdentityId::eq7:
        case IdentityId::jacobi_z0:
        case IdentityId::feq1:
        case IdentityId::feq5:
            if (!has_point) p.s = GoldenNumber(1);
            break;
        case IdentityId::thm1:
            if (!has_point) p.a = GoldenNumber(1);
            break;
        case IdentityId::thm2:
            if (!has_point) p.a = GoldenNumber(Rational(0), Rational(1, 5));  // 1/sqrt5, the symmetric point
            break;
        case IdentityId::cos_ratio:
            break;
        default:
            if (!has_point) p.q = default_nome();
            break;
    }
    return p;
}

std::vector<std::pair<std::string, BigReal>> numeric_views(IdentityId id, const CheckParams& params, Precision p) {
    const GoldenNumber al = alpha();
    const GoldenNumber be = beta();
    switch (id) {
        case IdentityId::eq1: {
            const EvalPoint q = resolve_point(params);
            return {{"theta-quotient", theta_quotient_R(q, p)}, {"product", product_R(q, p)}};
        }
        case IdentityId::eq6: {
            const GoldenNumber& s = require_s(id, params);
            const PiRationalAngle z{params.z.value_or(Rational(1, 10))};
            return {{"sum", theta2_sum(z, EvalPoint::from_exponent(s), p)}, {"transformed", theta2_transformed(z, s, p)}};
        }
        case IdentityId::eq7: {
            // R(e^(-2 pi / s)) = theta2(3pi/10; e^(-pi s/5)) / theta2(pi/10; e^(-pi s/5))
            const GoldenNumber& s = require_s(id, params);
            const EvalPoint r_point = EvalPoint::from_exponent(GoldenNumber(2) / s);
            const EvalPoint theta_point = EvalPoint::from_exponent(s / GoldenNumber(5));
            return {{"R", cf_R(r_point, p)},
                    {"theta-ratio", theta2_sum({Rational(3, 10)}, theta_point, p) /
                                        theta2_sum({Rational(1, 10)}, theta_point, p)}};
        }
        case IdentityId::eq8: {
            const EvalPoint q = resolve_point(params);
            const PiRationalAngle z{params.z.value_or(Rational(1, 10))};
            return {{"sum", theta2_sum(z, q, p)}, {"product", theta2_product(z, q, p)}};
        }
        case IdentityId::eq9:
        case IdentityId::eq10: {
            const EvalPoint q = resolve_point(params);
            auto [lhs, rhs] = first_pair_numeric(q, id == IdentityId::eq9 ? al : be, cf_R(q, p), p);
            return {{"lhs", lhs}, {"rhs", rhs}};
        }
        case IdentityId::eq11:
        case IdentityId::eq12: {
            const EvalPoint q = resolve_point(params);
            auto [lhs, rhs] = fifth_pair_numeric(q, id == IdentityId::eq11 ? al : be, cf_R(q, p), p);
            return {{"lhs", lhs}, {"rhs", rhs}};
        }
        case IdentityId::eq13: {
            const EvalPoint q2 = resolve_point(params).power(2);
            const BigReal r = cf_R(q2, p);
            const BigReal lhs = (1 - golden(be, p) * r) / (1 - golden(al, p) * r);
            const BigReal rhs = golden_factor_product(q2, al, 5, 1, p) * golden_factor_product(q2, be, 5, -1, p);
            return {{"lhs", lhs}, {"rhs", rhs}};
        }
        case IdentityId::eq14: {
            const EvalPoint q2 = resolve_point(params).power(2);
            const BigReal r5 = pow(cf_R(q2, p), 5);
            const BigReal lhs = (1 - golden(pow(be, 5), p) * r5) / (1 - golden(pow(al, 5), p) * r5);
            const BigReal rhs = golden_factor_product(q2, al, 1, 5, p) * golden_factor_product(q2, be, 1, -5, p);
            return {{"lhs", lhs}, {"rhs", rhs}};
        }
        case IdentityId::cos_ratio:
            return {{"cos-ratio", cos_pi_rational(Rational(3, 10), p) / cos_pi_rational(Rational(1, 10), p)},
                    {"-alpha", golden(-al, p)}};
        case IdentityId::jacobi_z0: {
            // theta2(0; e^(-pi/s)) = sqrt(s) theta4(0; e^(-pi s))
            const GoldenNumber& s = require_s(id, params);
            const PiRationalAngle zero{Rational(0)};
            return {{"theta2", theta2_sum(zero, EvalPoint::from_exponent(s.inverse()), p)},
                    {"sqrt(s)*theta4", sqrt(golden(s, p)) * theta4_sum(zero, EvalPoint::from_exponent(s), p)}};
        }
        case IdentityId::feq1: {
            // R(e^(-2pi/s)) = (-alpha)(1 - beta R(e^(-2pi s))) / (1 - alpha R(e^(-2pi s)))
            const GoldenNumber& s = require_s(id, params);
            const BigReal lhs = cf_R(EvalPoint::from_exponent(GoldenNumber(2) / s), p);
            const BigReal r = cf_R(EvalPoint::from_exponent(GoldenNumber(2) * s), p);
            const BigReal rhs = golden(-al, p) * (1 - golden(be, p) * r) / (1 - golden(al, p) * r);
            return {{"lhs", lhs}, {"rhs", rhs}};
        }
        case IdentityId::feq5: {
            // R^5(e^(-2pi/s)) = (-alpha)^5 (1 - beta^5 R^5(e^(-2pi s/5))) / (1 - alpha^5 R^5(e^(-2pi s/5)))
            const GoldenNumber& s = require_s(id, params);
            const BigReal lhs = pow(cf_R(EvalPoint::from_exponent(GoldenNumber(2) / s), p), 5);
            const BigReal r5 = pow(cf_R(EvalPoint::from_exponent(GoldenNumber(Rational(2, 5)) * s), p), 5);
            const BigReal rhs =
                golden(pow(-al, 5), p) * (1 - golden(pow(be, 5), p) * r5) / (1 - golden(pow(al, 5), p) * r5);
            return {{"lhs", lhs}, {"rhs", rhs}};
        }
        case IdentityId::thm1: {
            // a b = 1: (beta + R(e^(-2pi a)))(beta + R(e^(-2pi b))) = (5 + sqrt5)/2
            const GoldenNumber& a = require_a(id, params);
            const EvalPoint pa = EvalPoint::from_theorem_parameter(a);
            const EvalPoint pb = EvalPoint::from_theorem_parameter(a.inverse());
            const BigReal g = golden(be, p);
            return {{"lhs", (g + cf_R(pa, p)) * (g + cf_R(pb, p))},
                    {"rhs", golden(GoldenNumber(Rational(5, 2), Rational(1, 2)), p)}};
        }
        case IdentityId::thm2: {
            // a b = 1/5: (beta^5 + R^5(e^(-2pi a)))(beta^5 + R^5(e^(-2pi b))) = 5 sqrt5 beta^5
            const GoldenNumber& a = require_a(id, params);
            const EvalPoint pa = EvalPoint::from_theorem_parameter(a);
            const EvalPoint pb = EvalPoint::from_theorem_parameter((GoldenNumber(5) * a).inverse());
            const BigReal g5 = golden(pow(be, 5), p);
            return {{"lhs", (g5 + pow(cf_R(pa, p), 5)) * (g5 + pow(cf_R(pb, p), 5))},
                    {"rhs", golden(GoldenNumber(Rational(0), Rational(5)) * pow(be, 5), p)}};
        }
        case IdentityId::consistency_9x10: {
            const EvalPoint q = resolve_point(params);
            const BigReal t = cf_R(q, p);
            auto [lhs9, rhs9] = first_pair_numeric(q, al, t, p);
            auto [lhs10, rhs10] = first_pair_numeric(q, be, t, p);
            return {{"lhs9*lhs10", lhs9 * lhs10}, {"1/t-1-t", 1 / t - 1 - t}, {"rhs9*rhs10", rhs9 * rhs10}};
        }
    }
    throw std::logic_error("unhandled identity");
}

VerificationReport verify_formal(IdentityId id, long order) {
    const auto start = std::chrono::steady_clock::now();
    const auto views = formal_views(id, order);
    VerificationReport r;
    r.id = id;
    r.mode = Mode::formal;
    r.params.order = order;
    for (size_t i = 1; i < views.size() && !r.mismatch; ++i)
        r.mismatch = first_mismatch(views.front().second, views[i].second, order);
    r.pass = !r.mismatch;
    r.residual = r.mismatch ? std::to_string(*r.mismatch) : "none";
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerificationReport verify_numeric(IdentityId id, const CheckParams& given) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = id;
    r.mode = Mode::numeric;
    r.params = resolve_params(id, Mode::numeric, given);
    const int digits = *r.params.digits;
    if (digits < 10) throw ParameterOutOfDomain("numeric checks need at least 10 digits");
    const Precision prec = Precision::from_digits(digits);
    const auto views = numeric_views(id, r.params, prec);
    BigReal residual(prec);
    for (size_t i = 1; i < views.size(); ++i) {
        BigReal d = abs(views[i].second - views.front().second);
        if (d > residual) residual = std::move(d);
    }
    const int tol_digits = r.params.tolerance_digits.value_or(digits - 5);
    r.pass = residual <= pow10_neg(tol_digits, prec);
    r.residual = residual.to_scientific(kResidualDigits);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerificationReport verify(const CheckSpec& spec) {
    if (!supports(spec.id, spec.mode))
        throw UnsupportedMode(std::string(to_string(spec.id)) + " has no " + std::string(to_string(spec.mode)) + " mode");
    if (spec.mode == Mode::formal) {
        VerificationReport r = verify_formal(spec.id, spec.params.order.value_or(kDefaultFormalOrder));
        return r;
    }
    return verify_numeric(spec.id, spec.params);
}

}  // namespace rrcf
