#ifndef ELLIDENT_SUITE_HPP
#define ELLIDENT_SUITE_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "ellident/core.hpp"

// The executable identity catalog: case and report types plus the runner.
// Case construction lives in catalog.hpp.

namespace ellident {

struct SuiteConfig {
    std::vector<cplx> tau_set = default_tau_set();
    std::optional<double> tol_override;
    std::optional<int> radius_override;
    GammaEvalConfig gamma;

    static std::vector<cplx> default_tau_set() {
        return {cplx{0.0, 1.0}, cplx{0.0, 1.2}, cplx{0.0, 2.0}, cplx{0.3, 1.1}, cplx{-0.4, 0.9}};
    }

    TruncationPolicy policy() const {
        TruncationPolicy p;
        if (radius_override) p.lattice_radius = *radius_override;
        return p;
    }
};

// One parameter assignment for a case evaluation. Which fields matter is
// case-specific; `mode` distinguishes sub-forms (e.g. the z -> 0 limit
// binding of a product identity).
struct ParamBinding {
    std::string label;
    cplx tau{0.0, 1.2};
    int n = 0;
    int mode = 0;
    cplx a{0.0, 0.0};
    cplx omega1{0.5, 0.0};
};

using CaseEvaluator = std::function<cplx(cplx z, const ParamBinding&, const SuiteConfig&)>;

struct IdentityCase {
    std::string id;
    std::string citation;       // anchor + formula text, mirrored in the fixture file
    std::string erratum_note;   // set when the printed source form needed correction
    double tolerance = 1e-10;   // relative
    bool per_tau = true;        // expand the grid over config.tau_set
    std::vector<ParamBinding> grid;
    std::vector<cplx> sample_points;  // z samples; scalar cases use a single dummy point
    CaseEvaluator lhs, rhs;
    std::function<bool(cplx z, const ParamBinding&)> excluded;  // optional

    void validate() const {
        if (id.empty()) throw std::invalid_argument("IdentityCase: empty id");
        if (citation.empty()) throw std::invalid_argument("IdentityCase: empty citation for " + id);
        if (grid.empty()) throw std::invalid_argument("IdentityCase: empty param grid for " + id);
        if (!(tolerance >= 1e-12 && tolerance <= 1e-6))
            throw std::invalid_argument("IdentityCase: tolerance out of [1e-12, 1e-6] for " + id);
        if (!lhs || !rhs) throw std::invalid_argument("IdentityCase: missing evaluator for " + id);
    }
};

struct CaseResult {
    std::string id;
    std::string citation;
    double max_rel_err = 0.0;
    cplx worst_point{0.0, 0.0};
    bool pass = false;
    double wall_seconds = 0.0;
    std::string error_text;  // non-empty when an evaluator raised
};

struct VerificationReport {
    std::string suite_name;
    SuiteConfig config;
    std::vector<CaseResult> cases;
    int total = 0, passed = 0, failed = 0;

    bool all_passed() const { return failed == 0 && total == static_cast<int>(cases.size()); }
};

inline std::string format_cplx(cplx v) {
    std::ostringstream os;
    os << v.real();
    if (v.imag() >= 0) os << "+";
    os << v.imag() << "i";
    return os.str();
}

namespace detail {

inline std::vector<ParamBinding> expand_grid(const IdentityCase& c, const SuiteConfig& cfg) {
    if (!c.per_tau) return c.grid;
    std::vector<ParamBinding> out;
    out.reserve(c.grid.size() * cfg.tau_set.size());
    for (cplx tau : cfg.tau_set)
        for (ParamBinding b : c.grid) {
            b.tau = tau;
            b.label = b.label.empty() ? "tau=" + format_cplx(tau)
                                      : b.label + ",tau=" + format_cplx(tau);
            out.push_back(std::move(b));
        }
    return out;
}

}  // namespace detail

// Evaluates one case over its (possibly tau-expanded) grid. Evaluator errors
// are captured into the result as failures with diagnostic text; the runner
// never propagates them.
inline CaseResult run_case(const IdentityCase& c, const SuiteConfig& config) {
    c.validate();
    auto t0 = std::chrono::steady_clock::now();
    CaseResult res;
    res.id = c.id;
    res.citation = c.citation;
    const double tol = config.tol_override.value_or(c.tolerance);
    int evaluated = 0;
    for (const ParamBinding& b : detail::expand_grid(c, config)) {
        std::vector<cplx> pts = c.sample_points.empty() ? std::vector<cplx>{cplx{0.0, 0.0}}
                                                        : c.sample_points;
        try {
            for (cplx z : pts) {
                if (c.excluded && c.excluded(z, b)) continue;
                cplx L = c.lhs(z, b, config);
                cplx R = c.rhs(z, b, config);
                double err = std::abs(L - R) / std::max({std::abs(L), std::abs(R), 1e-300});
                if (!std::isfinite(err)) {
                    err = 1e300;
                    if (res.error_text.empty())
                        res.error_text = "non-finite evaluation at " + b.label;
                }
                ++evaluated;
                if (err > res.max_rel_err) {
                    res.max_rel_err = err;
                    res.worst_point = z;
                }
            }
        } catch (const std::exception& e) {
            if (res.error_text.empty())
                res.error_text = std::string(e.what()) + " [" + b.label + "]";
            res.max_rel_err = std::max(res.max_rel_err, 1e300);
        }
    }
    if (evaluated == 0 && res.error_text.empty())
        res.error_text = "all sample points excluded";
    res.pass = res.error_text.empty() && evaluated > 0 && res.max_rel_err <= tol;
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// Runs the matching cases in parallel (each case internally sequential) and
// assembles results in catalog order.
inline VerificationReport run_suite_cases(const std::vector<IdentityCase>& catalog,
                                          const std::vector<std::string>& id_prefixes,
                                          const SuiteConfig& config) {
    std::vector<const IdentityCase*> selected;
    for (const IdentityCase& c : catalog) {
        if (id_prefixes.empty()) {
            selected.push_back(&c);
            continue;
        }
        for (const std::string& p : id_prefixes)
            if (c.id.rfind(p, 0) == 0) {
                selected.push_back(&c);
                break;
            }
    }
    VerificationReport rep;
    rep.suite_name = "identity-catalog";
    rep.config = config;
    rep.cases.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
            rep.cases[i] = run_case(*selected[i], config);
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned n_threads = std::min<std::size_t>(hw, selected.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    rep.total = static_cast<int>(rep.cases.size());
    for (const CaseResult& r : rep.cases) (r.pass ? rep.passed : rep.failed)++;
    return rep;
}

}  // namespace ellident

#endif
