#ifndef ELLIDENT_REPORT_HPP
#define ELLIDENT_REPORT_HPP

#include <cstdio>
#include <iomanip>
#include <ostream>

#include "ellident/suite.hpp"

// Report serialization. The JSON document is emitted by hand with a fixed key
// order and floats printed with 17 significant digits, so that identical runs
// produce byte-identical output.

namespace ellident {

namespace detail {

inline std::string json_number(double v) {
    if (!std::isfinite(v)) return "1e308";  // JSON has no inf/nan
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += "\"";
    return out;
}

}  // namespace detail

inline void emit_json(const VerificationReport& rep, std::ostream& os) {
    using detail::json_number;
    using detail::json_string;
    os << "{\n";
    os << "  \"suite\": " << json_string(rep.suite_name) << ",\n";
    os << "  \"config\": {\n";
    os << "    \"tau_set\": [";
    for (std::size_t i = 0; i < rep.config.tau_set.size(); ++i) {
        if (i) os << ", ";
        os << "{\"re\": " << json_number(rep.config.tau_set[i].real())
           << ", \"im\": " << json_number(rep.config.tau_set[i].imag()) << "}";
    }
    os << "],\n";
    os << "    \"tol_override\": "
       << (rep.config.tol_override ? json_number(*rep.config.tol_override) : "null") << ",\n";
    TruncationPolicy pol = rep.config.policy();
    os << "    \"lattice_radius\": " << pol.lattice_radius << ",\n";
    os << "    \"series_tol\": " << json_number(pol.series_tol) << ",\n";
    os << "    \"max_terms\": " << pol.max_terms << "\n";
    os << "  },\n";
    os << "  \"cases\": [\n";
    for (std::size_t i = 0; i < rep.cases.size(); ++i) {
        const CaseResult& r = rep.cases[i];
        os << "    {\"id\": " << json_string(r.id) << ", \"citation\": " << json_string(r.citation)
           << ", \"max_rel_err\": " << json_number(r.max_rel_err)
           << ", \"worst_point\": {\"re\": " << json_number(r.worst_point.real())
           << ", \"im\": " << json_number(r.worst_point.imag()) << "}"
           << ", \"pass\": " << (r.pass ? "true" : "false") << "}";
        os << (i + 1 < rep.cases.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"summary\": {\"total\": " << rep.total << ", \"passed\": " << rep.passed
       << ", \"failed\": " << rep.failed << "}\n";
    os << "}\n";
}

inline void emit_text(const VerificationReport& rep, std::ostream& os) {
    os << "suite: " << rep.suite_name << "\n";
    os << "tau set:";
    for (cplx t : rep.config.tau_set) os << " " << format_cplx(t);
    os << "\n\n";
    os << std::left << std::setw(18) << "case" << std::setw(13) << "max rel err"
       << std::setw(7) << "pass" << "citation" << "\n";
    os << std::string(100, '-') << "\n";
    for (const CaseResult& r : rep.cases) {
        std::string cite = r.citation.size() > 58 ? r.citation.substr(0, 55) + "..." : r.citation;
        char err[24];
        std::snprintf(err, sizeof(err), "%.3e", r.max_rel_err);
        os << std::left << std::setw(18) << r.id << std::setw(13) << err << std::setw(7)
           << (r.pass ? "PASS" : "FAIL") << cite << "\n";
        if (!r.error_text.empty()) os << "    error: " << r.error_text << "\n";
    }
    os << std::string(100, '-') << "\n";
    os << rep.passed << "/" << rep.total << " passed";
    if (rep.failed) os << ", " << rep.failed << " failed";
    os << "\n";
}

}  // namespace ellident

#endif
