// Command-line driver: runs the verification suite and emits the structure
// tables. Exit codes: 0 all selected checks pass, 1 a check failed, 2 bad
// configuration.
#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "ars/suite.hpp"

namespace {

ars::Rational parse_rational(const std::string& text) {
    ars::Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: " + text);
    q.canonicalize();
    return q;
}

ars::ConventionChoice parse_convention(const std::string& text) {
    ars::ConventionChoice choice;
    if (text == "default") return choice;
    if (text == "search") {
        choice.search = true;
        return choice;
    }
    // Encoded: "<flip|noflip>,<inv|flipinv>,<second|first>"
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw std::invalid_argument("convention must be default, search, or "
                                    "<flip|noflip>,<inv|flipinv>,<second|first>");
    if (parts[0] == "flip") choice.convention.transpose_plus = true;
    else if (parts[0] == "noflip") choice.convention.transpose_plus = false;
    else throw std::invalid_argument("bad convention field: " + parts[0]);
    if (parts[1] == "inv") choice.convention.minus_uses_inverse = true;
    else if (parts[1] == "flipinv") choice.convention.minus_uses_inverse = false;
    else throw std::invalid_argument("bad convention field: " + parts[1]);
    if (parts[2] == "second") choice.convention.star_leg = ars::StarLeg::Second;
    else if (parts[2] == "first") choice.convention.star_leg = ars::StarLeg::First;
    else throw std::invalid_argument("bad convention field: " + parts[2]);
    return choice;
}

struct CommonOpts {
    std::string mode = "symbolic";
    std::string r0, s0;
    int degree = 3;
    std::uint64_t seed = 1;
    std::string convention = "default";
    std::string output = "markdown";
    bool timing = false;
    bool all = false;
    std::vector<std::string> checks;
};

ars::SuiteConfig build_config(const CommonOpts& opts) {
    ars::SuiteConfig cfg;
    if (opts.mode == "symbolic") cfg.mode = ars::SuiteMode::Symbolic;
    else if (opts.mode == "specialized") cfg.mode = ars::SuiteMode::Specialized;
    else throw std::invalid_argument("mode must be symbolic or specialized");
    if (!opts.r0.empty()) cfg.r0 = parse_rational(opts.r0);
    if (!opts.s0.empty()) cfg.s0 = parse_rational(opts.s0);
    cfg.degree_bound = opts.degree;
    cfg.seed = opts.seed;
    cfg.convention = parse_convention(opts.convention);
    if (opts.output == "markdown") cfg.output = ars::OutputFormat::Markdown;
    else if (opts.output == "json") cfg.output = ars::OutputFormat::Json;
    else throw std::invalid_argument("output must be markdown or json");
    cfg.timing = opts.timing;
    if (!opts.all)
        for (const std::string& c : opts.checks) cfg.checks.insert(c);
    cfg.validate();
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--mode", opts.mode, "symbolic|specialized")->capture_default_str();
    cmd->add_option("--r", opts.r0, "specialization value of r (rational, e.g. 5/2)");
    cmd->add_option("--s", opts.s0, "specialization value of s (rational)");
    cmd->add_option("--degree", opts.degree, "degree bound for the spanning checks")
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "seed for the randomized samples")
        ->capture_default_str();
    cmd->add_option("--convention", opts.convention,
                    "default|search|<flip|noflip>,<inv|flipinv>,<second|first>")
        ->capture_default_str();
    cmd->add_option("--output", opts.output, "markdown|json")->capture_default_str();
    cmd->add_flag("--timing", opts.timing, "include per-check timings in the report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic workbench for the two-parameter cross-product quantum algebra"};
    app.require_subcommand(1);

    CommonOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify, verify_opts);
    verify->add_flag("--all", verify_opts.all, "run every check");
    verify->add_option("--check", verify_opts.checks, "check name (repeatable)");

    CommonOpts tables_opts;
    CLI::App* tables = app.add_subcommand("tables", "emit the structure tables");
    add_common(tables, tables_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (!verify_opts.all && verify_opts.checks.empty())
                throw std::invalid_argument("select checks with --all or --check <name>");
            const ars::SuiteConfig cfg = build_config(verify_opts);
            const ars::SuiteReport report = ars::run_suite(cfg);
            std::cout << (cfg.output == ars::OutputFormat::Json ? ars::render_json(report)
                                                                : ars::render_markdown(report));
            return report.verdict ? 0 : 1;
        }
        const ars::SuiteConfig cfg = build_config(tables_opts);
        std::cout << (cfg.output == ars::OutputFormat::Json ? ars::report_tables_json(cfg)
                                                            : ars::report_tables(cfg));
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
}
