#include "rrcf/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrcf/errors.hpp"
#include "rrcf/identities.hpp"
#include "rrcf/numeric.hpp"
#include "rrcf/q_series.hpp"

namespace rrcf::cli {

namespace {

constexpr int kDefaultEvalDigits = 30;

struct PointFlags {
    std::string q;
    std::string s;
    std::string a;

    [[nodiscard]] bool any() const { return !q.empty() || !s.empty() || !a.empty(); }

    [[nodiscard]] EvalPoint resolve() const {
        if (!q.empty()) return EvalPoint::from_nome(GoldenNumber::parse(q));
        if (!s.empty()) return EvalPoint::from_exponent(GoldenNumber::parse(s));
        if (!a.empty()) return EvalPoint::from_theorem_parameter(GoldenNumber::parse(a));
        throw ParameterOutOfDomain("an evaluation point is required: --q, --s or --a");
    }
};

void add_point_flags(CLI::App* cmd, PointFlags& p) {
    auto* q = cmd->add_option("--q", p.q, "nome q in (0, 9/10]");
    auto* s = cmd->add_option("--s", p.s, "nome exponent s > 0, q = e^(-pi s)");
    auto* a = cmd->add_option("--a", p.a, "theorem parameter a > 0, q = e^(-2 pi a)");
    q->excludes(s)->excludes(a);
    s->excludes(a);
}

struct EvalArgs {
    std::string function;
    PointFlags point;
    std::string z;
    std::string r;
    std::string method;
    int digits = kDefaultEvalDigits;
};

struct SeriesArgs {
    std::string name;
    long order = 0;
    bool json = false;
};

struct VerifyArgs {
    std::string id;
    bool formal = false;
    bool numeric = false;
    std::optional<long> order;
    PointFlags point;
    std::string z;
    std::optional<int> digits;
    std::optional<int> tolerance_digits;
    bool json = false;
};

struct SuiteArgs {
    std::string config;
    bool json = false;
    unsigned threads = 0;
};

int cmd_eval(const EvalArgs& args, std::ostream& out) {
    if (args.digits < 1) throw ParameterOutOfDomain("--digits must be positive");
    const Precision prec = Precision::from_digits(args.digits);
    const auto& f = args.function;
    BigReal value(prec);
    if (f == "cos") {
        if (args.r.empty()) throw ParameterOutOfDomain("cos needs --r (the angle is r*pi)");
        value = cos_pi_rational(Rational::parse(args.r), prec);
    } else if (f == "R") {
        const EvalPoint p = args.point.resolve();
        const std::string method = args.method.empty() ? "cf" : args.method;
        if (method == "cf")
            value = cf_R(p, prec);
        else if (method == "product")
            value = product_R(p, prec);
        else if (method == "theta")
            value = theta_quotient_R(p, prec);
        else
            throw ParseError("unknown method for R: '" + method + "' (cf|theta|product)");
    } else if (f == "theta2" || f == "theta4") {
        const PiRationalAngle z{args.z.empty() ? Rational(0) : Rational::parse(args.z)};
        const std::string method = args.method.empty() ? "sum" : args.method;
        if (f == "theta4") {
            if (method != "sum") throw ParseError("theta4 supports only --method sum");
            value = theta4_sum(z, args.point.resolve(), prec);
        } else if (method == "sum") {
            value = theta2_sum(z, args.point.resolve(), prec);
        } else if (method == "product") {
            value = theta2_product(z, args.point.resolve(), prec);
        } else if (method == "transformed") {
            if (args.point.s.empty()) throw ParameterOutOfDomain("theta2 --method transformed needs --s");
            value = theta2_transformed(z, GoldenNumber::parse(args.point.s), prec);
        } else {
            throw ParseError("unknown method for theta2: '" + method + "' (sum|product|transformed)");
        }
    } else if (f == "f") {
        value = f_numeric(args.point.resolve(), prec);
    } else {
        throw ParseError("unknown function '" + f + "' (R|theta2|theta4|f|cos)");
    }
    out << value.to_string(args.digits) << '\n';
    return kExitOk;
}

// Series named on the command line, known from its leading exponent up to
// `relative_order` further x-exponents.
GoldenSeries named_series(const std::string& name, long relative_order) {
    // Every named series has valuation >= -5, so this working order covers
    // valuation + relative_order.
    const long work = std::max(relative_order, kMinFormalOrder) + 10;
    GoldenSeries s(work);
    if (name == "R") {
        s = rr_series(work);
    } else if (name == "f") {
        s = euler_product(work);
    } else if (name == "f5") {
        s = euler_product_q5(work);
    } else if (name == "eq1num") {
        s = rr_theta_sum(RrSum::numerator, work);
    } else if (name == "eq1den") {
        s = rr_theta_sum(RrSum::denominator, work);
    } else if (name == "eq1prod") {
        s = rr_product(work);
    } else {
        const bool lhs = name.size() > 3 && name.ends_with("lhs");
        const bool rhs = name.size() > 3 && name.ends_with("rhs");
        if (!lhs && !rhs) throw ParseError("unknown series '" + name + "'");
        const IdentityId id = parse_identity_id(name.substr(0, name.size() - 3));
        if (!supports(id, Mode::formal)) throw ParseError("unknown series '" + name + "'");
        s = formal_views(id, work).at(lhs ? 0 : 1).second;
    }
    return s.truncated(s.valuation() + relative_order);
}

int cmd_series(const SeriesArgs& args, std::ostream& out) {
    if (args.order < 0) throw ParameterOutOfDomain("--order must be non-negative");
    const GoldenSeries s = named_series(args.name, args.order);
    if (args.json)
        out << render_terms_json(s) << '\n';
    else
        out << render_terms(s);
    return kExitOk;
}

CheckParams params_from_flags(const VerifyArgs& args) {
    CheckParams p;
    if (!args.point.q.empty()) p.q = GoldenNumber::parse(args.point.q);
    if (!args.point.s.empty()) p.s = GoldenNumber::parse(args.point.s);
    if (!args.point.a.empty()) p.a = GoldenNumber::parse(args.point.a);
    if (!args.z.empty()) p.z = Rational::parse(args.z);
    p.order = args.order;
    p.digits = args.digits;
    p.tolerance_digits = args.tolerance_digits;
    return p;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    const IdentityId id = parse_identity_id(args.id);
    Mode mode = supports(id, Mode::formal) ? Mode::formal : Mode::numeric;
    if (args.formal) mode = Mode::formal;
    if (args.numeric) mode = Mode::numeric;
    if (!supports(id, mode))
        throw UnsupportedMode(args.id + " has no " + std::string(to_string(mode)) + " mode");
    const VerificationReport r = verify({id, mode, params_from_flags(args)});
    if (args.json)
        out << to_json(r).dump() << '\n';
    else
        out << to_text_line(r) << '\n';
    return r.pass ? kExitOk : kExitFailure;
}

int cmd_suite(const SuiteArgs& args, std::ostream& out) {
    SuiteConfig config;
    if (args.config.empty()) {
        config = default_suite();
    } else {
        std::ifstream in(args.config);
        if (!in) throw ParseError("cannot read config file '" + args.config + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("config is not valid JSON: ") + e.what());
        }
        config = parse_suite_config(j);
    }
    config.threads = args.threads;
    const SuiteResult result = run_suite(config);
    if (args.json) {
        nlohmann::json j;
        j["pass"] = result.pass;
        j["reports"] = nlohmann::json::array();
        for (const auto& r : result.reports) j["reports"].push_back(to_json(r));
        out << j.dump(2) << '\n';
    } else {
        size_t failed = 0;
        for (const auto& r : result.reports) {
            out << to_text_line(r) << '\n';
            if (!r.pass) ++failed;
        }
        out << (result.pass ? "SUITE PASS" : "SUITE FAIL") << " (" << result.reports.size() - failed << " of "
            << result.reports.size() << " passed)\n";
    }
    return result.pass ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rogers-Ramanujan continued fraction: exact series and high-precision checks", "rrcf"};
    app.require_subcommand(1, 1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate a function at one point");
    eval->add_option("function", eval_args.function, "R | theta2 | theta4 | f | cos")->required();
    add_point_flags(eval, eval_args.point);
    eval->add_option("--z", eval_args.z, "theta angle as a multiple of pi, e.g. 1/10");
    eval->add_option("--r", eval_args.r, "cos argument as a multiple of pi");
    eval->add_option("--method", eval_args.method, "R: cf|theta|product; theta2: sum|product|transformed");
    eval->add_option("--digits", eval_args.digits, "significant decimal digits");

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "print an exact q-expansion in x = q^(1/10)");
    series->add_option("name", series_args.name, "R | f | f5 | eq1num | eq1den | eq1prod | <id>lhs | <id>rhs")
        ->required();
    series->add_option("--order", series_args.order, "x-exponents past the leading term")->required();
    series->add_flag("--json", series_args.json, "JSON array of [exponent, coefficient] pairs");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check one identity");
    verify_cmd->add_option("id", verify_args.id, "identity id")->required();
    auto* formal_flag = verify_cmd->add_flag("--formal", verify_args.formal, "exact series comparison");
    auto* numeric_flag = verify_cmd->add_flag("--numeric", verify_args.numeric, "high-precision comparison");
    formal_flag->excludes(numeric_flag);
    verify_cmd->add_option("--order", verify_args.order, "x-order for formal checks");
    add_point_flags(verify_cmd, verify_args.point);
    verify_cmd->add_option("--z", verify_args.z, "angle as a multiple of pi");
    verify_cmd->add_option("--digits", verify_args.digits, "working digits for numeric checks");
    verify_cmd->add_option("--tolerance-digits", verify_args.tolerance_digits, "tolerance 10^-k (default digits-5)");
    verify_cmd->add_flag("--json", verify_args.json, "emit the report as JSON");

    SuiteArgs suite_args;
    auto* suite = app.add_subcommand("suite", "run a list of checks (default: full catalog)");
    suite->add_option("--config", suite_args.config, "JSON list of {id, mode, params}");
    suite->add_flag("--json", suite_args.json, "emit reports as JSON");
    suite->add_option("--threads", suite_args.threads, "worker threads (0 = hardware concurrency)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_args, out);
        if (series->parsed()) return cmd_series(series_args, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
        return cmd_suite(suite_args, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace rrcf::cli
