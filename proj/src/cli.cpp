#include "wallis/cli.hpp"

#include "wallis/asymptotics.hpp"
#include "wallis/closed_form.hpp"
#include "wallis/error.hpp"
#include "wallis/fourier_sphere.hpp"
#include "wallis/multi_index.hpp"
#include "wallis/series_integrals.hpp"
#include "wallis/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>

namespace wallis {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 42;

ordered_json number(double v)
{
    if (v == 0.0) {
        return 0;
    }
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

ordered_json log_signed_json(const LogSigned& v)
{
    ordered_json j;
    j["sign"] = v.sign();
    j["log_magnitude"] = number(v.log_mag());
    return j;
}

ordered_json closed_form_json(const ClosedFormValue& v)
{
    ordered_json j;
    j["value"] = v.also_float ? number(*v.also_float) : ordered_json(nullptr);
    j["sign"] = v.value.sign();
    j["log_magnitude"] = number(v.value.log_mag());
    return j;
}

ordered_json complex_json(std::complex<double> z)
{
    ordered_json j;
    j["re"] = number(z.real());
    j["im"] = number(z.imag());
    return j;
}

ordered_json vector_json(const std::vector<double>& v)
{
    ordered_json j = ordered_json::array();
    for (double x : v) {
        j.push_back(number(x));
    }
    return j;
}

void check_length(std::size_t got, std::size_t n, const char* flag)
{
    if (got != n) {
        throw DomainError(std::string(flag) + " has " + std::to_string(got) + " entries but --n is " +
                          std::to_string(n));
    }
}

std::uint64_t parse_seed(const std::string& text, const char* source)
{
    std::uint64_t seed = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, seed);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw DomainError(std::string("invalid seed from ") + source + ": '" + text +
                          "' (expected an unsigned 64-bit integer)");
    }
    return seed;
}

void print_pretty(std::ostream& out, const ordered_json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = j.is_object() ? it.key() : "-";
        if (it->is_structured() && !(it->is_array() && !it->empty() && !it->front().is_structured())) {
            out << pad << key << (j.is_object() ? ":\n" : "\n");
            print_pretty(out, *it, indent + 1);
        } else if (it->is_string()) {
            out << pad << key << ": " << it->get<std::string>() << '\n';
        } else {
            out << pad << key << ": " << it->dump() << '\n';
        }
    }
}

struct Options {
    std::size_t n = 0;
    std::vector<double> beta;
    std::vector<long> alpha;
    std::vector<double> xi;
    std::vector<std::size_t> growing;
    std::string domain = "sphere";
    std::string kind;
    std::string suite = "all";
    std::string seed;
    std::uint64_t samples = 200000;
    double tol = 1e-12;
    bool normalized = false;
    bool leading_only = false;
    bool pretty = false;
};

ordered_json run_closed_form(const Options& o, Domain domain)
{
    ordered_json params;
    params["n"] = o.n;
    params["normalized"] = o.normalized;
    ClosedFormValue v;
    if (!o.alpha.empty()) {
        check_length(o.alpha.size(), o.n, "--alpha");
        params["alpha"] = o.alpha;
        const IntMultiIndex alpha(o.alpha);
        v = domain == Domain::sphere ? sphere_integral_int(alpha, o.normalized)
                                     : ball_integral_int(alpha, o.normalized);
    } else {
        check_length(o.beta.size(), o.n, "--beta");
        params["beta"] = vector_json(o.beta);
        const RealMultiIndex beta(o.beta);
        v = domain == Domain::sphere ? sphere_integral_real(beta) : ball_integral_real(beta);
        if (o.normalized) {
            v = ClosedFormValue::from(v.value /
                                      (domain == Domain::sphere ? sphere_area(o.n) : ball_volume(o.n)));
        }
    }
    ordered_json j;
    j["command"] = to_string(domain);
    j["params"] = params;
    j["result"] = closed_form_json(v);
    return j;
}

ordered_json run_asymptotic(const Options& o)
{
    check_length(o.beta.size(), o.n, "--beta");
    std::vector<std::size_t> positions;
    for (std::size_t g : o.growing) {
        if (g == 0 || g > o.n) {
            throw DomainError("--growing position " + std::to_string(g) + " outside 1.." +
                              std::to_string(o.n));
        }
        positions.push_back(g - 1);
    }
    const Domain domain = parse_domain(o.domain);
    const AsymptoticRequest req(RealMultiIndex(o.beta), positions);
    const ClosedFormValue approx =
        domain == Domain::sphere ? sphere_asymptotic(req) : ball_asymptotic(req);
    const ClosedFormValue exact = domain == Domain::sphere ? sphere_integral_real(req.idx())
                                                           : ball_integral_real(req.idx());
    ordered_json params;
    params["n"] = o.n;
    params["beta"] = vector_json(o.beta);
    params["growing"] = o.growing;
    params["domain"] = to_string(domain);
    ordered_json j;
    j["command"] = "asymptotic";
    j["params"] = params;
    j["result"] = closed_form_json(approx);
    j["exact"] = closed_form_json(exact);
    j["ratio"] = number(std::exp(exact.value.log_mag() - approx.value.log_mag()));
    return j;
}

ordered_json run_fourier(const Options& o)
{
    check_length(o.alpha.size(), o.n, "--alpha");
    const IntMultiIndex alpha(o.alpha);
    ordered_json params;
    params["n"] = o.n;
    params["alpha"] = o.alpha;
    ordered_json j;
    j["command"] = "fourier";
    if (o.leading_only) {
        const LeadingTerm lt = leading_term(alpha);
        params["leading_only"] = true;
        j["params"] = params;
        ordered_json r;
        r["rendering"] = lt.render();
        r["core"] = lt.core.str();
        r["scalar_part"] = log_signed_json(lt.scalar_part);
        r["imaginary_power"] = lt.imaginary_power;
        r["xi_monomial"] = std::vector<long>(lt.xi_monomial.alpha().begin(), lt.xi_monomial.alpha().end());
        r["psi_order"] = number(lt.psi_order);
        j["result"] = r;
        return j;
    }
    if (o.xi.empty()) {
        throw DomainError("--xi is required unless --leading-only is given");
    }
    check_length(o.xi.size(), o.n, "--xi");
    params["xi"] = vector_json(o.xi);
    j["params"] = params;
    j["result"] = complex_json(transform_exact(alpha, o.xi));
    return j;
}

ordered_json run_series(const Options& o)
{
    const SeriesSpec spec(parse_series_kind(o.kind));
    const Domain domain = parse_domain(o.domain);
    ordered_json params;
    params["kind"] = to_string(spec.kind());
    params["n"] = o.n;
    SeriesResult r;
    if (!o.alpha.empty()) {
        check_length(o.alpha.size(), o.n, "--alpha");
        params["alpha"] = o.alpha;
        r = series_integral(spec, IntMultiIndex(o.alpha), domain, o.normalized, o.tol);
    } else {
        check_length(o.beta.size(), o.n, "--beta");
        params["beta"] = vector_json(o.beta);
        r = series_integral(spec, RealMultiIndex(o.beta), domain, o.normalized, o.tol);
    }
    params["domain"] = to_string(domain);
    params["normalized"] = o.normalized;
    params["tol"] = o.tol;
    ordered_json j;
    j["command"] = "series";
    j["params"] = params;
    j["result"] = number(r.value);
    ordered_json diag;
    diag["terms_used"] = r.terms_used;
    diag["remainder_bound"] = number(r.remainder_bound);
    j["diagnostics"] = diag;
    return j;
}

ordered_json run_verify(const Options& o, bool& all_pass)
{
    std::uint64_t seed = kDefaultSeed;
    if (!o.seed.empty()) {
        seed = parse_seed(o.seed, "--seed");
    } else if (const char* env = std::getenv("WALLIS_SEED"); env != nullptr) {
        seed = parse_seed(env, "WALLIS_SEED");
    }
    const auto cases = run_verification(o.suite, seed, o.samples);
    ordered_json params;
    params["suite"] = o.suite;
    params["seed"] = seed;
    params["samples"] = o.samples;
    ordered_json table = ordered_json::array();
    all_pass = true;
    for (const auto& c : cases) {
        ordered_json row;
        row["suite"] = c.suite;
        row["case"] = c.name;
        row["method"] = c.method;
        row["expected"] = number(c.expected);
        row["estimate"] = number(c.estimate);
        row["std_error"] = number(c.std_error);
        row["z"] = number(c.z);
        row["pass"] = c.pass;
        table.push_back(row);
        all_pass = all_pass && c.pass;
    }
    ordered_json j;
    j["command"] = "verify";
    j["params"] = params;
    j["result"] = table;
    j["all_pass"] = all_pass;
    return j;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monomial integrals over the unit sphere and ball, their asymptotics, "
                 "Fourier transforms and series integrals"};
    app.name(args.empty() ? "wallis" : args.front());
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_flag("--pretty", o.pretty, "Indented key: value output instead of JSON");

    const auto add_n = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "Dimension (n >= 3)")->required();
    };
    const auto add_exponents = [&](CLI::App* sub, const char* alpha_help) {
        auto* b = sub->add_option("--beta", o.beta, "Real exponents b1,b2,...")->delimiter(',');
        auto* a = sub->add_option("--alpha", o.alpha, alpha_help)->delimiter(',');
        b->excludes(a);
        a->excludes(b);
        return std::pair{a, b};
    };

    std::vector<std::pair<CLI::App*, std::pair<CLI::Option*, CLI::Option*>>> exponent_subs;

    auto* sphere = app.add_subcommand("sphere", "Integral of x^(2 beta) over the unit sphere");
    auto* ball = app.add_subcommand("ball", "Integral of x^(2 beta) over the unit ball");
    for (auto* sub : {sphere, ball}) {
        add_n(sub);
        exponent_subs.push_back({sub, add_exponents(sub, "Integer half-exponents a1,a2,... (x^(2 alpha))")});
        sub->add_flag("--normalized", o.normalized, "Divide by the measure of the domain");
    }

    auto* asym = app.add_subcommand("asymptotic", "Leading asymptotic for growing exponents");
    add_n(asym);
    asym->add_option("--beta", o.beta, "Real exponents b1,b2,...")->delimiter(',')->required();
    asym->add_option("--growing", o.growing, "1-based positions of the growing exponents")
        ->delimiter(',')
        ->required();
    asym->add_option("--domain", o.domain, "sphere or ball");

    auto* fourier = app.add_subcommand("fourier", "Fourier transform of x^alpha on the sphere");
    add_n(fourier);
    fourier->add_option("--alpha", o.alpha, "Integer exponents a1,a2,...")->delimiter(',')->required();
    fourier->add_option("--xi", o.xi, "Frequency x1,x2,...")->delimiter(',');
    fourier->add_flag("--leading-only", o.leading_only, "Print the structured leading term");

    auto* series = app.add_subcommand("series", "Integral of a series function of a monomial");
    series->add_option("--kind", o.kind, "coth, sin-recip, tan, tan3, sec or sec3")->required();
    add_n(series);
    exponent_subs.push_back({series, add_exponents(series, "Integer exponents a1,a2,... (x^alpha)")});
    series->add_option("--domain", o.domain, "sphere or ball");
    series->add_option("--tol", o.tol, "Absolute tolerance on the certified remainder");
    series->add_flag("--normalized", o.normalized, "Divide by the measure of the domain");

    auto* verify = app.add_subcommand("verify", "Compare closed forms against numerical oracles");
    verify->add_option("--suite", o.suite, "closed-form, fourier, series or all");
    verify->add_option("--seed", o.seed, "Unsigned 64-bit RNG seed (default 42, or WALLIS_SEED)");
    verify->add_option("--samples", o.samples, "Monte Carlo samples per case");

    std::vector<std::string> argv_store(args.begin(), args.end());
    if (argv_store.empty()) {
        argv_store.emplace_back("wallis");
    }
    std::vector<char*> argv;
    for (auto& s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        for (const auto& [sub, opts] : exponent_subs) {
            if (sub->parsed() && opts.first->count() == 0 && opts.second->count() == 0) {
                throw DomainError("exactly one of --beta or --alpha is required");
            }
        }
        ordered_json result;
        int code = kExitOk;
        if (sphere->parsed()) {
            result = run_closed_form(o, Domain::sphere);
        } else if (ball->parsed()) {
            result = run_closed_form(o, Domain::ball);
        } else if (asym->parsed()) {
            result = run_asymptotic(o);
        } else if (fourier->parsed()) {
            result = run_fourier(o);
        } else if (series->parsed()) {
            result = run_series(o);
        } else {
            bool all_pass = false;
            result = run_verify(o, all_pass);
            code = all_pass ? kExitOk : kExitTolerance;
        }
        if (o.pretty) {
            print_pretty(out, result, 0);
        } else {
            out << result.dump() << '\n';
        }
        return code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitTolerance;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitTolerance;
    }
}

} // namespace wallis
