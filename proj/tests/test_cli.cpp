#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rrcf/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run rrcf_run(std::vector<std::string> args) {
    args.insert(args.begin(), "rrcf");
    std::ostringstream out;
    std::ostringstream err;
    const int code = rrcf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("eval") {
    const Run cf = rrcf_run({"eval", "R", "--q", "0.3", "--digits", "30", "--method", "cf"});
    const Run prod = rrcf_run({"eval", "R", "--q", "0.3", "--digits", "30", "--method", "product"});
    CHECK(cf.code == 0);
    CHECK(cf.out == prod.out);
    CHECK(cf.out.size() == 33);  // "0." + 30 digits + newline

    const Run bad = rrcf_run({"eval", "R", "--q", "1.5"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("nome out of range") != std::string::npos);
    CHECK(lines(bad.err).size() == 1);

    CHECK(rrcf_run({"eval", "cos", "--r", "1/2", "--digits", "10"}).out == "0.000000000\n");
    CHECK(rrcf_run({"eval", "R", "--a", "1", "--digits", "20"}).out == "0.28407904384041229603\n");
    CHECK(rrcf_run({"eval", "theta2", "--z", "1/10", "--s", "1", "--method", "transformed"}).out ==
          rrcf_run({"eval", "theta2", "--z", "1/10", "--s", "1"}).out);
    CHECK(rrcf_run({"eval", "R", "--q", "0.3", "--method", "magic"}).code == 2);
    CHECK(rrcf_run({"eval", "zeta", "--q", "0.3"}).code == 2);
    CHECK(rrcf_run({"eval", "R"}).code == 2);
    CHECK(rrcf_run({"eval", "R", "--q", "0.3", "--s", "1"}).code == 2);
    CHECK(rrcf_run({"eval", "R", "--s", "-1"}).code == 2);
}

TEST_CASE("series") {
    const Run f = rrcf_run({"series", "f", "--order", "120"});
    CHECK(f.code == 0);
    CHECK(f.out == "x^0: 1\nx^10: -1\nx^20: -1\nx^50: 1\nx^70: 1\nx^120: -1\n");
    CHECK(rrcf_run({"series", "R", "--order", "0"}).out == "x^2: 1\n");
    CHECK(rrcf_run({"series", "f", "--order", "-1"}).code == 2);
    CHECK(rrcf_run({"series", "nope", "--order", "5"}).code == 2);
    CHECK(rrcf_run({"series", "thm1lhs", "--order", "5"}).code == 2);

    const Run j = rrcf_run({"series", "R", "--order", "30", "--json"});
    const auto arr = nlohmann::json::parse(j.out);
    CHECK(arr == nlohmann::json::parse(R"([[2,"1"],[12,"-1"],[22,"1"]])"));

    // left sides of the product expansions start at x^-1 and x^-5; order counts from there
    const Run lhs9 = rrcf_run({"series", "eq9lhs", "--order", "0"});
    CHECK(lhs9.out == "x^-1: 1\n");
    const Run lhs11 = rrcf_run({"series", "eq11lhs", "--order", "40", "--json"});
    const auto t = nlohmann::json::parse(lhs11.out);
    CHECK(t[0][0] == -5);
    CHECK(t.back()[0].get<long>() <= 35);
    for (const char* name : {"eq1num", "eq1den", "eq10rhs", "eq12rhs", "eq13lhs", "eq14rhs"})
        CHECK(rrcf_run({"series", name, "--order", "50"}).code == 0);
    CHECK(rrcf_run({"series", "eq12lhs", "--order", "60"}).out == rrcf_run({"series", "eq12rhs", "--order", "60"}).out);
}

TEST_CASE("verify") {
    const Run t = rrcf_run({"verify", "thm1", "--a", "2", "--digits", "50"});
    CHECK(t.code == 0);
    CHECK(t.out.rfind("PASS thm1 numeric", 0) == 0);
    const auto pos = t.out.find("residual=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(t.out.substr(pos + 9)) < 1e-45);

    CHECK(rrcf_run({"verify", "eq9", "--formal", "--order", "200"}).out == "PASS eq9 formal order=200 residual=none\n");
    CHECK(rrcf_run({"verify", "thm1", "--a", "-1"}).code == 2);
    CHECK(rrcf_run({"verify", "thm1", "--formal"}).code == 2);
    CHECK(rrcf_run({"verify", "eq2"}).code == 2);
    CHECK(rrcf_run({"verify", "eq9", "--formal", "--numeric"}).code == 2);
    CHECK(rrcf_run({"verify", "eq9", "--order", "3"}).code == 2);

    const Run fail = rrcf_run({"verify", "thm1", "--a", "2", "--digits", "20", "--tolerance-digits", "60"});
    CHECK(fail.code == 1);
    CHECK(fail.out.rfind("FAIL", 0) == 0);

    const Run j = rrcf_run({"verify", "eq8", "--numeric", "--q", "0.7", "--z", "1/5", "--json"});
    CHECK(j.code == 0);
    const auto report = nlohmann::json::parse(j.out);
    CHECK(report["id"] == "eq8");
    CHECK(report["mode"] == "numeric");
    CHECK(report["pass"] == true);
    CHECK(report["params"]["q"] == "7/10");
    CHECK(report["order_or_digits"] == 50);
    CHECK(report["residual"].is_string());
    CHECK(report["elapsed_ms"].is_number());

    const auto formal = nlohmann::json::parse(rrcf_run({"verify", "eq13", "--order", "100", "--json"}).out);
    CHECK(formal["residual"].is_null());
    CHECK(formal["order_or_digits"] == 100);
}

TEST_CASE("suite") {
    const Run a = rrcf_run({"suite"});
    const Run b = rrcf_run({"suite", "--threads", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("elapsed") == std::string::npos);
    CHECK(lines(a.out).back().rfind("SUITE PASS", 0) == 0);

    const std::string path = "rrcf_cli_test_config.json";
    {
        std::ofstream cfg(path);
        cfg << R"([{"id": "cos-ratio"}, {"id": "thm1", "params": {"a": 2, "digits": 20, "tolerance_digits": 60}}])";
    }
    const Run forced = rrcf_run({"suite", "--config", path, "--json"});
    CHECK(forced.code == 1);
    const auto j = nlohmann::json::parse(forced.out);
    CHECK(j["pass"] == false);
    CHECK(j["reports"].size() == 2);
    {
        std::ofstream cfg(path);
        cfg << "[]";
    }
    const Run empty = rrcf_run({"suite", "--config", path});
    CHECK(empty.code == 0);
    {
        std::ofstream cfg(path);
        cfg << "{not json";
    }
    CHECK(rrcf_run({"suite", "--config", path}).code == 2);
    std::remove(path.c_str());
    CHECK(rrcf_run({"suite", "--config", "/nonexistent/config.json"}).code == 2);
}

TEST_CASE("usage") {
    CHECK(rrcf_run({}).code == 2);
    CHECK(rrcf_run({"frobnicate"}).code == 2);
    const Run help = rrcf_run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}
