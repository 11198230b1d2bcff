#include <doctest.h>

#include <set>

#include "rrcf/errors.hpp"
#include "rrcf/identities.hpp"
#include "rrcf/numeric.hpp"
#include "rrcf/q_series.hpp"
#include "support.hpp"

using namespace rrcf;

namespace {

GoldenNumber frac(long n, long d) { return GoldenNumber(Rational(n, d)); }

// Observed coefficient growth between x-order 200 and 400 stays below 2e5
// (eq14); evaluated at q = 0.1 this leaves truncation errors up to ~2e3 times
// the geometric tail q^(order/10 + 1)/(1 - q). 1e4 bounds every id.
constexpr long kCoherenceConstant = 10000;

}  // namespace

TEST_CASE("catalog") {
    CHECK(all_identities().size() == 17);
    for (IdentityId id : all_identities()) {
        CHECK(parse_identity_id(to_string(id)) == id);
        CHECK(supports(id, Mode::numeric));
    }
    CHECK(to_string(IdentityId::consistency_9x10) == "consistency-9x10");
    CHECK(to_string(IdentityId::jacobi_z0) == "jacobi-z0");
    CHECK(to_string(IdentityId::cos_ratio) == "cos-ratio");
    CHECK(supports(IdentityId::eq13, Mode::formal));
    CHECK_FALSE(supports(IdentityId::thm1, Mode::formal));
    CHECK_THROWS_AS(parse_identity_id("eq2"), ParseError);
    CHECK_THROWS_AS(parse_mode("symbolic"), ParseError);
}

TEST_CASE("formal checks") {
    const VerificationReport eq1 = verify_formal(IdentityId::eq1, 400);
    CHECK(eq1.pass);
    CHECK_FALSE(eq1.mismatch.has_value());
    CHECK(eq1.order_or_digits() == 400);
    for (IdentityId id : {IdentityId::eq9, IdentityId::eq10, IdentityId::eq11, IdentityId::eq12, IdentityId::eq13,
                          IdentityId::eq14, IdentityId::consistency_9x10}) {
        const VerificationReport r = verify_formal(id, 200);
        CHECK_MESSAGE(r.pass, to_string(id));
        CHECK(r.residual == "none");
    }
    CHECK_THROWS_AS(verify_formal(IdentityId::thm1, 200), UnsupportedMode);
    CHECK_THROWS_AS(verify_formal(IdentityId::eq9, 5), OrderTooSmall);
}

TEST_CASE("formal views are independent builds that a wrong identity would fail") {
    // swapping alpha for beta on one side must break eq9 at a low exponent
    const auto views = formal_views(IdentityId::eq9, 60);
    const auto other = formal_views(IdentityId::eq10, 60);
    const auto m = first_mismatch(views[0].second, other[1].second, 60);
    REQUIRE(m.has_value());
    CHECK(*m < 10);
    // every view reaches the requested order
    for (IdentityId id : all_identities()) {
        if (!supports(id, Mode::formal)) continue;
        for (const auto& [name, s] : formal_views(id, 100)) CHECK(s.order() >= 100);
    }
}

TEST_CASE("numeric checks from the examples") {
    const VerificationReport t1 = verify_numeric(IdentityId::thm1, {.a = GoldenNumber(1), .digits = 50});
    CHECK(t1.pass);
    const Precision p = Precision::from_digits(50);
    const BigReal r = cf_R(EvalPoint::from_theorem_parameter(GoldenNumber(1)), p);
    const BigReal lhs = (to_real(beta(), p) + r) * (to_real(beta(), p) + r);
    CHECK(abs(lhs - to_real(GoldenNumber(Rational(5, 2), Rational(1, 2)), p)) < pow10_neg(45, p));

    CHECK(verify_numeric(IdentityId::thm2, {.digits = 50}).pass);  // default a = b = 1/sqrt 5
    CHECK(verify_numeric(IdentityId::thm2, {}).params.a == GoldenNumber(0, Rational(1, 5)));
    const VerificationReport c = verify_numeric(IdentityId::cos_ratio, {.digits = 50});
    CHECK(c.pass);
    CHECK(BigReal::parse(c.residual, p) < pow10_neg(45, p));
    for (IdentityId id : all_identities()) CHECK_MESSAGE(verify_numeric(id).pass, to_string(id));
}

TEST_CASE("numeric domain errors") {
    CHECK_THROWS_AS(verify_numeric(IdentityId::thm1, {.a = GoldenNumber(-1)}), ParameterOutOfDomain);
    CHECK_THROWS_AS(verify_numeric(IdentityId::thm1, {.a = GoldenNumber(0)}), ParameterOutOfDomain);
    // a = 0.01: e^(-2 pi a) is about 0.939
    CHECK_THROWS_AS(verify_numeric(IdentityId::thm1, {.a = frac(1, 100)}), NomeOutOfRange);
    // b = 100 is fine but then a = 1/100 is not, whichever is given
    CHECK_THROWS_AS(verify_numeric(IdentityId::thm1, {.a = GoldenNumber(100)}), NomeOutOfRange);
    CHECK_THROWS_AS(verify_numeric(IdentityId::thm2, {.a = GoldenNumber(-2)}), ParameterOutOfDomain);
    CHECK_THROWS_AS(verify_numeric(IdentityId::eq9, {.q = frac(3, 2)}), NomeOutOfRange);
    CHECK_THROWS_AS(verify_numeric(IdentityId::eq9, {.digits = 5}), ParameterOutOfDomain);
}

TEST_CASE("forced tolerance failure") {
    const VerificationReport r =
        verify_numeric(IdentityId::thm1, {.a = GoldenNumber(2), .digits = 20, .tolerance_digits = 60});
    CHECK_FALSE(r.pass);
    CHECK(r.error.empty());
}

TEST_CASE("functional equation and complementary relation agree on matched parameters") {
    // feq1 at s pairs with thm1 at a = 1/s, feq5 at s with thm2 at a = 1/s (b = s/5)
    for (const GoldenNumber& s : {frac(1, 3), frac(1, 2), GoldenNumber(1), GoldenNumber(2), GoldenNumber(5)}) {
        const GoldenNumber a = s.inverse();
        CHECK(verify_numeric(IdentityId::feq1, {.s = s}).pass == verify_numeric(IdentityId::thm1, {.a = a}).pass);
        CHECK(verify_numeric(IdentityId::feq5, {.s = s}).pass == verify_numeric(IdentityId::thm2, {.a = a}).pass);
    }
    CHECK_THROWS_AS(verify_numeric(IdentityId::feq1, {.s = GoldenNumber(100)}), NomeOutOfRange);
    CHECK_THROWS_AS(verify_numeric(IdentityId::thm1, {.a = frac(1, 100)}), NomeOutOfRange);
}

TEST_CASE("formal and numeric checks describe the same functions") {
    const long order = 200;
    const Precision p(300);
    const BigReal q(Rational(1, 10), p);
    const BigReal x = pow(q, BigReal(Rational(1, 10), p));
    const BigReal tail = kCoherenceConstant * pow(q, static_cast<unsigned long>(order / 10 + 1)) / (1 - q);
    const CheckParams at{.q = frac(1, 10)};

    // eq1 views are cross-multiplied; compare through R = x^2 * product
    const auto views = formal_views(IdentityId::eq1, order);
    const auto nv = numeric_views(IdentityId::eq1, at, p);
    const BigReal x2 = x * x;
    CHECK(abs(x2 * evaluate_series(rr_product(order), x) - nv[1].second) < tail);
    CHECK(abs(x2 * evaluate_series(views[0].second.truncated(order), x) /
                  evaluate_series(rr_theta_sum(RrSum::denominator, order), x) -
              nv[0].second) < tail);

    for (IdentityId id : {IdentityId::eq9, IdentityId::eq10, IdentityId::eq11, IdentityId::eq12, IdentityId::eq13,
                          IdentityId::eq14, IdentityId::consistency_9x10}) {
        const auto fv = formal_views(id, order);
        const auto numeric = numeric_views(id, at, p);
        REQUIRE(numeric.size() <= fv.size());
        for (size_t i = 0; i < numeric.size(); ++i) {
            CHECK(fv[i].first == numeric[i].first);
            const BigReal v = evaluate_series(fv[i].second.truncated(order), x);
            CHECK_MESSAGE(abs(v - numeric[i].second) < tail, to_string(id) << " view " << fv[i].first);
        }
    }
}

TEST_CASE("suite") {
    const SuiteResult empty = run_suite({});
    CHECK(empty.pass);
    CHECK(empty.reports.empty());

    SuiteConfig forced;
    forced.checks.push_back({IdentityId::cos_ratio, Mode::numeric, {}});
    forced.checks.push_back(
        {IdentityId::thm1, Mode::numeric, {.a = GoldenNumber(2), .digits = 20, .tolerance_digits = 60}});
    const SuiteResult f = run_suite(forced);
    CHECK_FALSE(f.pass);
    REQUIRE(f.reports.size() == 2);
    CHECK(f.reports[0].pass);
    CHECK_FALSE(f.reports[1].pass);

    // domain errors are captured per check, the rest still run
    SuiteConfig mixed;
    mixed.checks.push_back({IdentityId::thm1, Mode::numeric, {.a = GoldenNumber(-1)}});
    mixed.checks.push_back({IdentityId::eq9, Mode::formal, {.order = 60}});
    const SuiteResult m = run_suite(mixed);
    CHECK_FALSE(m.pass);
    CHECK(m.reports[0].id == IdentityId::eq9);
    CHECK(m.reports[0].pass);
    CHECK_FALSE(m.reports[1].error.empty());

    const SuiteResult all = run_suite(default_suite());
    CHECK(all.pass);
    std::set<IdentityId> ids;
    for (const auto& r : all.reports) ids.insert(r.id);
    CHECK(ids.size() == 17);
    // deterministic ordering, independent of thread count
    SuiteConfig one = default_suite();
    one.threads = 1;
    const SuiteResult serial = run_suite(one);
    REQUIRE(serial.reports.size() == all.reports.size());
    for (size_t i = 0; i < all.reports.size(); ++i) CHECK(to_text_line(serial.reports[i]) == to_text_line(all.reports[i]));
}

TEST_CASE("suite configuration and report JSON") {
    const auto j = nlohmann::json::parse(R"([
        {"id": "eq9"},
        {"id": "thm1", "mode": "numeric", "params": {"a": "1/2", "digits": 40}},
        {"id": "eq8", "params": {"q": 0.3, "z": "3/10"}}
    ])");
    const SuiteConfig c = parse_suite_config(j);
    REQUIRE(c.checks.size() == 3);
    CHECK(c.checks[0].mode == Mode::formal);
    CHECK(c.checks[1].params.a == frac(1, 2));
    CHECK(c.checks[2].mode == Mode::numeric);
    CHECK(c.checks[2].params.q == frac(3, 10));
    CHECK_THROWS_AS(parse_suite_config(nlohmann::json::parse(R"({"id": "eq9"})")), ParseError);
    CHECK_THROWS_AS(parse_suite_config(nlohmann::json::parse(R"([{"id": "eq99"}])")), ParseError);
    CHECK_THROWS_AS(parse_suite_config(nlohmann::json::parse(R"([{"id": "eq9", "params": {"w": 1}}])")), ParseError);

    for (const auto& r : run_suite(c).reports) {
        const nlohmann::json out = to_json(r);
        for (const char* key : {"id", "mode", "params", "residual", "pass", "elapsed_ms", "order_or_digits"})
            CHECK(out.contains(key));
        const VerificationReport back = report_from_json(nlohmann::json::parse(out.dump()));
        CHECK(back.id == r.id);
        CHECK(back.mode == r.mode);
        CHECK(back.params == r.params);
        CHECK(back.pass == r.pass);
        CHECK(to_text_line(back) == to_text_line(r));
    }
}
