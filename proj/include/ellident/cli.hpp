#ifndef ELLIDENT_CLI_HPP
#define ELLIDENT_CLI_HPP

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ellident/report.hpp"
#include "ellident/suite.hpp"

// Command-line front end. Exit codes: 0 all cases pass, 1 any case fails,
// 2 usage error, 3 I/O error.

namespace ellident {

struct CliConfig {
    std::vector<std::string> suite_filters;
    std::vector<cplx> tau_set;  // empty -> default set
    std::optional<double> tol_override;
    std::optional<int> radius_override;
    bool json = false;
    std::optional<std::string> out_path;

    SuiteConfig suite_config() const {
        SuiteConfig cfg;
        if (!tau_set.empty()) cfg.tau_set = tau_set;
        cfg.tol_override = tol_override;
        cfg.radius_override = radius_override;
        return cfg;
    }
};

struct CliParseResult {
    CliConfig config;
    bool exit_now = false;
    int exit_code = 0;
    std::string output;  // help text or error message
};

// Complex literal grammar: `a`, `bi`, `a+bi`, `a-bi` with decimal floats
// (exponents allowed, so the split scan skips signs right after e/E).
inline cplx parse_complex_literal(const std::string& token) {
    auto fail = [&]() -> cplx {
        throw std::invalid_argument("malformed complex literal '" + token + "'");
    };
    if (token.empty()) return fail();
    auto to_double = [&](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            return fail().real();
        }
        if (used != s.size()) fail();
        return v;
    };
    if (token.back() == 'i') {
        std::string body = token.substr(0, token.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t k = 1; k < body.size(); ++k) {
            if ((body[k] == '+' || body[k] == '-') &&
                !(body[k - 1] == 'e' || body[k - 1] == 'E'))
                split = k;  // last top-level sign separates re from im
        }
        if (split == std::string::npos) return cplx{0.0, to_double(body)};
        return cplx{to_double(body.substr(0, split)), to_double(body.substr(split))};
    }
    return cplx{to_double(token), 0.0};
}

inline CliParseResult parse_args(const std::vector<std::string>& args) {
    CliParseResult res;
    CLI::App app{"verify: run the special-function identity catalog", "verify"};
    std::vector<std::string> tau_tokens;
    std::string format = "text";
    app.add_option("--suite", res.config.suite_filters,
                   "run only cases whose id starts with PREFIX (repeatable)");
    app.add_option("--tau", tau_tokens,
                   "lattice parameter as a+bi with Im > 0 (repeatable; replaces the default set)");
    app.add_option("--tol", res.config.tol_override, "relative tolerance override for every case");
    app.add_option("--radius", res.config.radius_override, "lattice truncation radius override");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", res.config.out_path, "write the report to PATH instead of stdout");
    try {
        // CLI11 wants argv-style reversed order.
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        res.exit_now = true;
        res.exit_code = 0;
        res.output = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_now = true;
        res.exit_code = 2;
        res.output = std::string("error: ") + e.what() + "\n";
        return res;
    }
    try {
        for (const std::string& t : tau_tokens) {
            cplx tau = parse_complex_literal(t);
            if (!(tau.imag() > 0.0))
                throw std::invalid_argument("tau '" + t + "' rejected: Im(tau) must be positive");
            res.config.tau_set.push_back(tau);
        }
        if (res.config.tol_override && !(*res.config.tol_override > 0.0))
            throw std::invalid_argument("--tol must be positive");
        if (res.config.radius_override && *res.config.radius_override < 4)
            throw std::invalid_argument("--radius must be >= 4");
    } catch (const std::invalid_argument& e) {
        res.exit_now = true;
        res.exit_code = 2;
        res.output = std::string("error: ") + e.what() + "\n";
        return res;
    }
    res.config.json = (format == "json");
    return res;
}

// Serializes the report per the config and returns the process exit code.
inline int emit_report(const VerificationReport& rep, const CliConfig& config,
                       std::ostream& console = std::cout) {
    auto write = [&](std::ostream& os) {
        if (config.json)
            emit_json(rep, os);
        else
            emit_text(rep, os);
    };
    if (config.out_path) {
        std::ofstream out(*config.out_path);
        if (!out) {
            console << "error: cannot open '" << *config.out_path << "' for writing\n";
            return 3;
        }
        write(out);
        out.flush();
        if (!out) {
            console << "error: write to '" << *config.out_path << "' failed\n";
            return 3;
        }
    } else {
        write(console);
    }
    return rep.all_passed() ? 0 : 1;
}

}  // namespace ellident

#endif
