#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "rrcf/errors.hpp"
#include "rrcf/identities.hpp"

namespace rrcf {

namespace {

constexpr long kDefaultSuiteOrder = 200;

GoldenNumber parse_golden_field(const nlohmann::json& v, const char* key) {
    if (v.is_string()) return GoldenNumber::parse(v.get<std::string>());
    if (v.is_number_integer()) return GoldenNumber(Rational(v.get<long>()));
    // Floating JSON numbers go through their shortest decimal rendering.
    if (v.is_number()) return GoldenNumber::parse(v.dump());
    throw ParseError(std::string("parameter '") + key + "' must be a string or number");
}

Rational parse_rational_field(const nlohmann::json& v, const char* key) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number()) return Rational::parse(v.dump());
    throw ParseError(std::string("parameter '") + key + "' must be a string or number");
}

long parse_integer_field(const nlohmann::json& v, const char* key) {
    if (!v.is_number_integer()) throw ParseError(std::string("parameter '") + key + "' must be an integer");
    return v.get<long>();
}

VerificationReport failed_report(const CheckSpec& spec, const std::string& error) {
    VerificationReport r;
    r.id = spec.id;
    r.mode = spec.mode;
    r.params = spec.params;
    r.pass = false;
    r.residual = "";
    r.error = error;
    return r;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
    const size_t n = config.checks.size();
    std::vector<VerificationReport> reports(n);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < n; i = next++) {
            const CheckSpec& spec = config.checks[i];
            try {
                reports[i] = verify(spec);
            } catch (const std::exception& e) {
                reports[i] = failed_report(spec, e.what());
            }
        }
    };
    unsigned threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(n, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
        return std::pair(a.id, a.mode) < std::pair(b.id, b.mode);
    });
    SuiteResult result;
    result.pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    result.reports = std::move(reports);
    return result;
}

SuiteConfig default_suite() {
    SuiteConfig c;
    auto formal = [&](IdentityId id, long order) { c.checks.push_back({id, Mode::formal, CheckParams{.order = order}}); };
    auto numeric = [&](IdentityId id, CheckParams p) { c.checks.push_back({id, Mode::numeric, std::move(p)}); };
    const auto nome = [](long num, long den) { return GoldenNumber(Rational(num, den)); };

    formal(IdentityId::eq1, kDefaultFormalOrder);
    for (IdentityId id : {IdentityId::eq9, IdentityId::eq10, IdentityId::eq11, IdentityId::eq12, IdentityId::eq13,
                          IdentityId::eq14, IdentityId::consistency_9x10})
        formal(id, kDefaultSuiteOrder);

    for (long num : {1L, 3L, 5L, 7L, 9L}) numeric(IdentityId::eq1, {.q = nome(num, 10)});
    for (const auto& s : {nome(1, 2), nome(1, 1), nome(2, 1)}) {
        numeric(IdentityId::eq6, {.s = s, .z = Rational(1, 10)});
        numeric(IdentityId::eq6, {.s = s, .z = Rational(3, 10)});
        numeric(IdentityId::eq7, {.s = s});
        numeric(IdentityId::jacobi_z0, {.s = s});
        numeric(IdentityId::feq1, {.s = s});
    }
    for (const auto& z : {Rational(1, 10), Rational(3, 10), Rational(1, 5)})
        for (long num : {1L, 3L, 7L}) numeric(IdentityId::eq8, {.q = nome(num, 10), .z = z});
    for (IdentityId id : {IdentityId::eq9, IdentityId::eq10, IdentityId::eq11, IdentityId::eq12, IdentityId::eq13,
                          IdentityId::eq14, IdentityId::consistency_9x10})
        for (long num : {1L, 5L}) numeric(id, {.q = nome(num, 10)});
    numeric(IdentityId::cos_ratio, {});
    for (const auto& s : {nome(1, 2), nome(1, 1), nome(5, 1)}) numeric(IdentityId::feq5, {.s = s});
    for (const auto& a : {nome(1, 3), nome(1, 2), nome(1, 1), nome(2, 1), nome(3, 1)})
        numeric(IdentityId::thm1, {.a = a});
    for (const auto& a : {GoldenNumber(Rational(0), Rational(1, 5)), nome(1, 5), nome(1, 1), nome(2, 1)})
        numeric(IdentityId::thm2, {.a = a});
    return c;
}

SuiteConfig parse_suite_config(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("suite config must be a JSON list");
    SuiteConfig c;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("id")) throw ParseError("suite entry needs an 'id'");
        const IdentityId id = parse_identity_id(item.at("id").get<std::string>());
        Mode mode = supports(id, Mode::formal) ? Mode::formal : Mode::numeric;
        if (item.contains("mode")) mode = parse_mode(item.at("mode").get<std::string>());
        CheckParams p;
        if (item.contains("params")) p = params_from_json(item.at("params"));
        c.checks.push_back({id, mode, std::move(p)});
    }
    return c;
}

nlohmann::json params_to_json(const CheckParams& p) {
    nlohmann::json j = nlohmann::json::object();
    if (p.q) j["q"] = p.q->to_string();
    if (p.s) j["s"] = p.s->to_string();
    if (p.a) j["a"] = p.a->to_string();
    if (p.z) j["z"] = p.z->to_string();
    if (p.order) j["order"] = *p.order;
    if (p.digits) j["digits"] = *p.digits;
    if (p.tolerance_digits) j["tolerance_digits"] = *p.tolerance_digits;
    return j;
}

CheckParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("params must be a JSON object");
    CheckParams p;
    for (const auto& [key, v] : j.items()) {
        if (key == "q")
            p.q = parse_golden_field(v, "q");
        else if (key == "s")
            p.s = parse_golden_field(v, "s");
        else if (key == "a")
            p.a = parse_golden_field(v, "a");
        else if (key == "z")
            p.z = parse_rational_field(v, "z");
        else if (key == "order")
            p.order = parse_integer_field(v, "order");
        else if (key == "digits")
            p.digits = static_cast<int>(parse_integer_field(v, "digits"));
        else if (key == "tolerance_digits")
            p.tolerance_digits = static_cast<int>(parse_integer_field(v, "tolerance_digits"));
        else
            throw ParseError("unknown parameter '" + key + "'");
    }
    return p;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["id"] = std::string(to_string(r.id));
    j["mode"] = std::string(to_string(r.mode));
    j["params"] = params_to_json(r.params);
    if (r.mode == Mode::formal)
        j["residual"] = r.mismatch ? nlohmann::json(*r.mismatch) : nlohmann::json(nullptr);
    else
        j["residual"] = r.residual.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.residual);
    j["pass"] = r.pass;
    j["elapsed_ms"] = r.elapsed_ms;
    j["order_or_digits"] = r.order_or_digits();
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
    try {
        VerificationReport r;
        r.id = parse_identity_id(j.at("id").get<std::string>());
        r.mode = parse_mode(j.at("mode").get<std::string>());
        r.params = params_from_json(j.at("params"));
        const auto& res = j.at("residual");
        if (r.mode == Mode::formal) {
            if (!res.is_null()) r.mismatch = res.get<long>();
            r.residual = r.mismatch ? std::to_string(*r.mismatch) : "none";
        } else if (!res.is_null()) {
            r.residual = res.get<std::string>();
        }
        r.pass = j.at("pass").get<bool>();
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        if (j.contains("error")) r.error = j.at("error").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string to_text_line(const VerificationReport& r) {
    std::ostringstream out;
    out << (r.pass ? "PASS " : "FAIL ") << to_string(r.id) << ' ' << to_string(r.mode);
    const CheckParams& p = r.params;
    if (r.mode == Mode::formal) {
        out << " order=" << r.order_or_digits();
    } else {
        if (p.q) out << " q=" << p.q->to_string();
        if (p.s) out << " s=" << p.s->to_string();
        if (p.a) out << " a=" << p.a->to_string();
        if (p.z) out << " z=" << p.z->to_string() << "*pi";
        out << " digits=" << r.order_or_digits();
        out << " tolerance=1e-" << p.tolerance_digits.value_or(static_cast<int>(r.order_or_digits()) - 5);
    }
    if (!r.error.empty())
        out << " error: " << r.error;
    else
        out << " residual=" << (r.mode == Mode::formal && !r.mismatch ? "none" : r.residual);
    return out.str();
}

}  // namespace rrcf
