// Command-line front end: argument parsing and exit-code mapping only; the
// commands themselves live in the library (ajtorus/cli.hpp).

#include <iostream>

#include <CLI11.hpp>

#include "ajtorus/cli.hpp"

int main(int argc, char** argv) {
    using namespace ajt;

    CLI::App app{"Colored Jones recurrences and the AJ conjecture for sums of torus knots"};
    app.require_subcommand(1);

    std::string knot;
    long n_max = 8;
    std::string format = "text";
    int scan_degree = 0;
    std::string window;
    bool strict = true;
    std::vector<int> criteria;
    std::string golden;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* jones = app.add_subcommand("jones", "Colored Jones polynomials with degree checks");
    jones->add_option("knot", knot, "U, T(p,q) or T(p,q)#T(a,b)")->required();
    jones->add_option("--n-max", n_max, "Largest n")->capture_default_str();
    add_format(jones);

    auto* ap = app.add_subcommand("apoly", "A-polynomial, factored and expanded");
    ap->add_option("knot", knot, "U, T(p,q) or T(p,q)#T(a,b)")->required();
    add_format(ap);

    auto* verify = app.add_subcommand("verify", "Full verification of a connected sum");
    verify->add_option("knot", knot, "T(p,q)#T(a,b)")->required();
    verify->add_option("--n-max", n_max, "Annihilation checked for n = 1..n-max")->capture_default_str();
    verify->add_option("--scan-degree", scan_degree, "Also scan for annihilators of this L-degree");
    verify->add_option("--m-window", window, "M-exponent window lo:hi for the scan");
    verify->add_flag("--strict-denominators,!--lenient-denominators", strict,
                     "Fail (default) or skip n where a coefficient denominator vanishes");
    add_format(verify);

    auto* scan = app.add_subcommand("scan", "Search for annihilators with bounded support");
    scan->add_option("knot", knot, "U, T(p,q) or T(p,q)#T(a,b)")->required();
    scan->add_option("--scan-degree", scan_degree, "L-degree bound")->required();
    scan->add_option("--m-window", window, "M-exponent window lo:hi (default: the candidate's support)");
    add_format(scan);

    auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
    self->add_option("--criteria", criteria, "Only these criteria (1-9)")->check(CLI::Range(1, 9));
    self->add_option("--golden", golden, "Directory of verify reports to compare byte for byte");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Format fmt = format == "json" ? Format::Json : Format::Text;
    const CommandResult res = run_command([&]() -> CommandResult {
        std::optional<std::pair<int, int>> win;
        if (!window.empty()) win = parse_window(window);
        if (jones->parsed()) return cmd_jones(knot, n_max, fmt);
        if (ap->parsed()) return cmd_apoly(knot, fmt);
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.n_max = n_max;
            opt.strict_denominators = strict;
            if (scan_degree > 0) opt.scan_degree = scan_degree;
            opt.m_window = win;
            return cmd_verify(knot, opt, fmt);
        }
        if (scan->parsed()) return cmd_scan(knot, scan_degree, win, fmt);
        return cmd_selftest({criteria.begin(), criteria.end()},
                            golden.empty() ? std::nullopt : std::optional<std::string>(golden));
    });
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
