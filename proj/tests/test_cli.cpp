#include <doctest.h>

#include "wallis/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace wallis;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "wallis");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    const Run r = run(std::move(args));
    REQUIRE(r.code == kExitOk);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("closed-form subcommands")
{
    const json s = run_json({"sphere", "--n", "3", "--alpha", "1,1,1", "--normalized"});
    CHECK(s["command"] == "sphere");
    CHECK(s["result"]["value"].get<double>() == 1.0 / 105.0);
    CHECK(s["result"]["sign"] == 1);
    CHECK(std::exp(s["result"]["log_magnitude"].get<double>()) == doctest::Approx(1.0 / 105.0).epsilon(1e-15));

    const json b = run_json({"ball", "--n", "3", "--beta", "0,0,0"});
    CHECK(b["result"]["value"].get<double>() == doctest::Approx(4.188790204786391).epsilon(1e-16));

    const json neg = run_json({"sphere", "--n", "3", "--beta", "-0.2,0,0"});
    CHECK(neg["result"]["value"].get<double>() > 20.9);
}

TEST_CASE("printed numbers round-trip")
{
    const Run r = run({"sphere", "--n", "5", "--beta", "0.3,1.7,0,2.25,0.5"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    const double v = j["result"]["value"].get<double>();
    const double lm = j["result"]["log_magnitude"].get<double>();
    CHECK(std::log(v) == doctest::Approx(lm).epsilon(1e-15));
    CHECK(json::parse(j.dump())["result"]["value"].get<double>() == v);
}

TEST_CASE("domain and usage errors exit with 2")
{
    const Run bad = run({"sphere", "--n", "3", "--beta", "-0.6,0,0"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("beta") != std::string::npos);
    CHECK(bad.err.find('\n') == bad.err.size() - 1);

    CHECK(run({"sphere", "--n", "2", "--beta", "0,0"}).code == kExitUsage);
    CHECK(run({"sphere", "--n", "3", "--beta", "0,0"}).code == kExitUsage);
    CHECK(run({"sphere", "--n", "3"}).code == kExitUsage);
    CHECK(run({"sphere", "--n", "3", "--beta", "0,0,0", "--alpha", "1,1,1"}).code == kExitUsage);
    CHECK(run({"ball", "--n", "3", "--alpha", "1,-1,1"}).code == kExitUsage);
    CHECK(run({"nosuch"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"series", "--kind", "cot", "--n", "3", "--alpha", "1,0,0"}).code == kExitUsage);
    CHECK(run({"asymptotic", "--n", "3", "--beta", "0,1,1", "--growing", "1"}).code == kExitUsage);
    CHECK(run({"asymptotic", "--n", "3", "--beta", "1,1,1", "--growing", "4"}).code == kExitUsage);
    CHECK(run({"fourier", "--n", "3", "--alpha", "1,0,0"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("asymptotic subcommand reports the ratio")
{
    const json j = run_json({"asymptotic", "--n", "3", "--beta", "100,100,100", "--growing", "1,2,3"});
    const double ratio = j["ratio"].get<double>();
    CHECK(std::fabs(ratio - 1.0) < 0.01);
    CHECK(ratio == doctest::Approx(j["exact"]["value"].get<double>() / j["result"]["value"].get<double>())
                       .epsilon(1e-12));
    const json ball = run_json({"asymptotic", "--n", "3", "--beta", "200,200,200", "--growing", "1,2,3",
                                "--domain", "ball"});
    CHECK(std::fabs(ball["ratio"].get<double>() - 1.0) < 0.005);
}

TEST_CASE("fourier subcommand")
{
    const json z = run_json({"fourier", "--n", "3", "--alpha", "0,0,0", "--xi", "0,0,0"});
    CHECK(z["result"]["re"].get<double>() == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
    CHECK(z["result"]["im"].is_number_integer());
    CHECK(z["result"]["im"] == 0);

    const json lead = run_json({"fourier", "--n", "3", "--alpha", "3,0,0", "--leading-only"});
    CHECK(lead["result"]["rendering"] == "(2π)^(3/2) * 3!! * (-iξ1) * Ψ[5/2](ξ)");
    CHECK(lead["result"]["imaginary_power"] == 1);
    CHECK(lead["result"]["psi_order"].get<double>() == 2.5);
}

TEST_CASE("series subcommand")
{
    const json tan = run_json({"series", "--kind", "tan", "--n", "3", "--alpha", "1,2,0"});
    CHECK(tan["result"].is_number_integer());
    CHECK(tan["result"] == 0);
    CHECK(tan["diagnostics"]["terms_used"] == 0);

    const json coth = run_json({"series", "--kind", "coth", "--n", "3", "--alpha", "2,0,0", "--normalized",
                                "--tol", "1e-13"});
    CHECK(coth["diagnostics"]["remainder_bound"].get<double>() <= 1e-13);
    CHECK(coth["diagnostics"]["terms_used"].get<int>() > 0);
    CHECK(coth["result"].get<double>() > 1.0);

    const json sec3 = run_json({"series", "--kind", "sec3", "--n", "3", "--beta", "0.5,0.5,0", "--domain", "ball"});
    CHECK(sec3["params"]["domain"] == "ball");
}

TEST_CASE("verify subcommand")
{
    const Run ok = run({"verify", "--suite", "series", "--seed", "42", "--samples", "20000"});
    CHECK(ok.code == kExitOk);
    const json j = json::parse(ok.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["params"]["seed"] == 42);
    for (const auto& row : j["result"]) {
        CHECK(row.contains("z"));
        CHECK(row["pass"] == true);
    }
    const Run again = run({"verify", "--suite", "series", "--seed", "42", "--samples", "20000"});
    CHECK(again.out == ok.out);

    CHECK(run({"verify", "--seed", "12x"}).code == kExitUsage);
    CHECK(run({"verify", "--seed", "-3"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "bogus"}).code == kExitUsage);

    ::setenv("WALLIS_SEED", "7", 1);
    const json env = run_json({"verify", "--suite", "series", "--samples", "5000"});
    CHECK(env["params"]["seed"] == 7);
    ::setenv("WALLIS_SEED", "seven", 1);
    CHECK(run({"verify", "--suite", "series", "--samples", "5000"}).code == kExitUsage);
    ::unsetenv("WALLIS_SEED");
}

TEST_CASE("pretty output")
{
    const Run r = run({"--pretty", "ball", "--n", "3", "--beta", "0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("command: ball") != std::string::npos);
    CHECK(r.out.find("value: 4.188790204786391") != std::string::npos);
    const Run after = run({"ball", "--n", "3", "--beta", "0,0,0", "--pretty"});
    CHECK(after.out == r.out);
}
