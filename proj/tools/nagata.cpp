// Command-line front end: factor, compare, selftest.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nagata/applications.hpp"
#include "nagata/selftest.hpp"

namespace {

using nagata::Error;
using json = nlohmann::ordered_json;

enum Exit { ok = 0, usage = 1, domain = 2, internal = 3 };

struct Flags {
    bool json = false;
    bool verbose = false;
};

std::string ms(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v << " ms";
    return os.str();
}

json report_json(const nagata::FactorReport& r) {
    json j;
    j["version"] = "1";
    j["input"] = r.input;
    j["ring"] = std::string(nagata::ring_name(r.ring));
    j["route"] = std::string(nagata::route_name(r.route));
    j["unit"] = r.unit;
    j["factors"] = json::array();
    for (const auto& f : r.factors) {
        j["factors"].push_back({{"expr", f.expr},
                                {"multiplicity", f.multiplicity},
                                {"certificate", {{"case", f.certificate_case}, {"detail", f.certificate_detail}}}});
    }
    return j;
}

/// Runs fn, printing errors; returns the exit code.
template <class Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return ok;
    } catch (const nagata::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const nagata::OracleViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    } catch (const nagata::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain;
    } catch (const nagata::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return internal;
    }
}

/// One expression from argv, or every nonblank stdin line.
template <class Fn>
int for_each_input(const std::string& expr, bool given, Fn&& fn) {
    if (given) return guarded([&] { fn(expr, false); });
    int code = ok;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        code = std::max(code, guarded([&] { fn(line, true); }));
    }
    return code;
}

void print_factor(const std::string& input, bool batch, nagata::Route route, const Flags& flags) {
    const auto r = nagata::factor_report(input, route);
    if (flags.json) {
        std::cout << report_json(r).dump(batch ? -1 : 2) << "\n";
        return;
    }
    std::cout << r.rendering << "\n";
    if (flags.verbose) {
        std::cout << "  ring " << nagata::ring_name(r.ring) << ", route " << nagata::route_name(r.route) << "\n";
        for (const auto& f : r.factors) {
            std::cout << "  " << f.expr << ": " << f.certificate_case << " (" << f.certificate_detail << "), replay "
                      << (f.replayed ? "ok" : "failed") << "\n";
        }
        std::cout << "  elapsed " << ms(r.elapsed_ms) << "\n";
    }
}

std::string certificate_counts(const nagata::DescentResult<nagata::PolyZ>& r) {
    std::size_t gen = 0, loc = 0;
    for (const auto& c : r.certificates) (c.kind == nagata::CertificateCase::generator ? gen : loc)++;
    return "(generator " + std::to_string(gen) + ", localization " + std::to_string(loc) + ")";
}

void print_compare(const std::string& input, bool batch, const Flags& flags) {
    const nagata::Element e = nagata::parse_expr(input);
    nagata::PolyZ f;
    if (const auto* n = std::get_if<nagata::Integer>(&e)) {
        f = nagata::PolyZ::constant(*n);
    } else if (const auto* p = std::get_if<nagata::PolyZ>(&e)) {
        f = *p;
    } else {
        throw nagata::DomainError("compare requires an element of Z[X]");
    }
    const auto r = nagata::compare_routes(f);
    const std::string direct = nagata::render_factorization(r.direct);
    const std::string laurent = nagata::render_factorization(r.laurent.factorization);
    const std::string fracfield = nagata::render_factorization(r.fracfield.factorization);
    if (flags.json) {
        json j;
        j["version"] = "1";
        j["input"] = input;
        j["ring"] = std::string(nagata::ring_name(nagata::ring_of(e)));
        j["routes"] = json::array();
        j["routes"].push_back({{"route", "direct"}, {"factorization", direct}, {"certificates", 0}});
        j["routes"].push_back({{"route", "laurent"}, {"factorization", laurent},
                               {"certificates", r.laurent.certificates.size()}});
        j["routes"].push_back({{"route", "fracfield"}, {"factorization", fracfield},
                               {"certificates", r.fracfield.certificates.size()}});
        j["agree"] = true;
        if (flags.verbose) {
            j["timings_ms"] = {{"direct", r.timings.direct_ms}, {"laurent", r.timings.laurent_ms},
                               {"fracfield", r.timings.fracfield_ms}};
        }
        std::cout << j.dump(batch ? -1 : 2) << "\n";
        return;
    }
    std::cout << nagata::to_string(f) << "\n";
    std::cout << "direct:    " << direct << "\n";
    std::cout << "laurent:   " << laurent << "  " << certificate_counts(r.laurent) << "\n";
    std::cout << "fracfield: " << fracfield << "  " << certificate_counts(r.fracfield) << "\n";
    std::cout << "all routes agree\n";
    if (flags.verbose) {
        std::cout << "timings: direct " << ms(r.timings.direct_ms) << ", laurent " << ms(r.timings.laurent_ms)
                  << ", fracfield " << ms(r.timings.fracfield_ms) << "\n";
    }
}

int run_selftest(std::uint64_t seed, std::size_t trials, const Flags& flags) {
    nagata::SelftestOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    const auto results = nagata::run_selftest(opt);
    std::size_t failed = 0;
    json j = json::array();
    for (const auto& r : results) {
        if (!r.passed()) ++failed;
        if (flags.json) {
            json s{{"suite", r.name}, {"trials", r.trials}, {"failures", r.failures}};
            if (!r.passed()) s["first_failure"] = r.first_failure;
            j.push_back(s);
        } else if (r.passed()) {
            std::cout << "PASS " << r.name << " (" << r.trials << " trials)\n";
        } else {
            std::cout << "FAIL " << r.name << " (" << r.failures << " of " << r.trials
                      << " trials failed): " << r.first_failure << "\n";
        }
    }
    if (flags.json) {
        std::cout << json{{"seed", seed}, {"trials", trials}, {"suites", j}, {"passed", failed == 0}}.dump(2) << "\n";
    } else if (failed == 0) {
        std::cout << "all suites pass\n";
    } else {
        std::cout << failed << " suites failed\n";
    }
    return failed == 0 ? ok : internal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Factorization in Z, Z[X], Z[T,T^-1] and Z[X][Y] with certified primality"};
    app.require_subcommand(1);
    Flags flags;
    app.add_flag("--json", flags.json, "Machine-readable output");
    app.add_flag("--verbose", flags.verbose, "Print certificate replays and timings");

    std::string factor_expr;
    std::string route = "auto";
    auto* factor = app.add_subcommand("factor", "Factor an expression (stdin, one per line, when omitted)");
    factor->add_option("expr", factor_expr, "Expression");
    factor->add_option("--route", route, "direct, laurent, fracfield or auto")
        ->check(CLI::IsMember({"direct", "laurent", "fracfield", "auto"}));
    factor->fallthrough();

    std::string compare_expr;
    auto* compare = app.add_subcommand("compare", "Run all Z[X] routes and check they agree");
    compare->add_option("expr", compare_expr, "Expression");
    compare->fallthrough();

    std::uint64_t seed = 42;
    std::size_t trials = 100;
    auto* selftest = app.add_subcommand("selftest", "Run the randomized property suites");
    selftest->add_option("--seed", seed, "Random seed");
    selftest->add_option("--trials", trials, "Trials per suite")->check(CLI::PositiveNumber);
    selftest->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    if (factor->parsed()) {
        const nagata::Route r = nagata::parse_route(route);
        return for_each_input(factor_expr, factor->count("expr") > 0,
                              [&](const std::string& s, bool batch) { print_factor(s, batch, r, flags); });
    }
    if (compare->parsed()) {
        return for_each_input(compare_expr, compare->count("expr") > 0,
                              [&](const std::string& s, bool batch) { print_compare(s, batch, flags); });
    }
    return run_selftest(seed, trials, flags);
}
