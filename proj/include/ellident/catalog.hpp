#ifndef ELLIDENT_CATALOG_HPP
#define ELLIDENT_CATALOG_HPP

#include <map>
#include <memory>
#include <mutex>

#include "ellident/eisenstein.hpp"
#include "ellident/gammatrig.hpp"
#include "ellident/lemma.hpp"
#include "ellident/suite.hpp"
#include "ellident/theta.hpp"
#include "ellident/weierstrass.hpp"

// The full identity catalog. Each case carries its citation anchor (mirrored
// verbatim in data/identity_anchors.txt), a deterministic parameter grid and
// sample set, and a relative-error tolerance.

namespace ellident {
namespace catalog_detail {

using K = ThetaKind;

inline const std::vector<cplx>& trig_grid() {
    static const std::vector<cplx> g = {
        {0.37, 0.21}, {-0.83, 0.14}, {1.42, 0.33},  {2.19, -0.27}, {0.11, 0.42},
        {-1.57, 0.23}, {0.66, -0.36}, {3.04, 0.18}, {-0.29, -0.19}, {1.83, 0.24}};
    return g;
}

inline const std::vector<cplx>& theta_grid() {
    static const std::vector<cplx> g = {
        {0.31, 0.12}, {-0.44, 0.21}, {0.87, -0.14}, {1.23, 0.08}, {-1.02, -0.17},
        {0.15, 0.26}, {2.11, 0.19},  {-0.63, 0.05}, {1.72, -0.23}, {0.52, 0.31}};
    return g;
}

inline const std::vector<cplx>& weier_grid() {
    static const std::vector<cplx> g = {
        {0.31, 0.17}, {-0.27, 0.22}, {0.41, -0.13}, {-0.38, -0.19}, {0.13, 0.29},
        {0.23, -0.31}, {-0.17, -0.08}, {0.37, 0.07}, {-0.09, 0.33}, {0.43, 0.21}};
    return g;
}

// Contexts are immutable and expensive enough to share per (tau, omega1, radius).
inline const WeierstrassContext& ctx_for(cplx tau, cplx omega1, const SuiteConfig& cfg) {
    struct Key {
        std::uint64_t a, b, c, d;
        int r;
        bool operator<(const Key& o) const {
            return std::tie(a, b, c, d, r) < std::tie(o.a, o.b, o.c, o.d, o.r);
        }
    };
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<WeierstrassContext>> cache;
    TruncationPolicy pol = cfg.policy();
    Key k{std::bit_cast<std::uint64_t>(tau.real()), std::bit_cast<std::uint64_t>(tau.imag()),
          std::bit_cast<std::uint64_t>(omega1.real()), std::bit_cast<std::uint64_t>(omega1.imag()),
          pol.lattice_radius};
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(k);
    if (it == cache.end()) {
        LatticeParams lat{omega1, omega1 * tau};
        it = cache.emplace(k, std::make_unique<WeierstrassContext>(lat, pol)).first;
    }
    return *it->second;
}

// Newton solutions of P(z) = a, shared between evaluators and exclusions.
inline cplx alpha_for(cplx tau, cplx a, const SuiteConfig& cfg) {
    struct Key {
        std::uint64_t t1, t2, a1, a2;
        bool operator<(const Key& o) const {
            return std::tie(t1, t2, a1, a2) < std::tie(o.t1, o.t2, o.a1, o.a2);
        }
    };
    static std::mutex mu;
    static std::map<Key, cplx> cache;
    Key k{std::bit_cast<std::uint64_t>(tau.real()), std::bit_cast<std::uint64_t>(tau.imag()),
          std::bit_cast<std::uint64_t>(a.real()), std::bit_cast<std::uint64_t>(a.imag())};
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    cplx alpha = wp_solve(ctx_for(tau, cplx{0.5, 0.0}, SuiteConfig{}), a);
    std::lock_guard<std::mutex> g(mu);
    cache[k] = alpha;
    return alpha;
}

inline cplx th(K kind, cplx z, cplx tau, const SuiteConfig& cfg) {
    return theta(kind, z, tau, cfg.policy());
}

inline cplx th0(K kind, cplx tau, const SuiteConfig& cfg) {
    return theta(kind, cplx{0.0, 0.0}, tau, cfg.policy());
}

inline cplx th1p(cplx tau, const SuiteConfig& cfg) {
    return theta_z_derivative(K::T1, 1, cplx{0.0, 0.0}, tau, cfg.policy());
}

inline double dist_lat(cplx z, cplx tau) { return detail::dist_to_unit_lattice(z, tau); }

inline cplx csc2(cplx w) {
    cplx s = std::sin(w);
    return 1.0 / (s * s);
}

// P'' by one Richardson-extrapolated central difference of P'.
inline cplx wp_second(cplx z, const WeierstrassContext& ctx) {
    const double s = 1e-3;
    auto D = [&](double step) {
        return (wp_prime(z + step, ctx) - wp_prime(z - step, ctx)) / (2.0 * step);
    };
    return (4.0 * D(0.5 * s) - D(s)) / 3.0;
}

inline std::vector<ParamBinding> n_bindings(std::initializer_list<int> ns) {
    std::vector<ParamBinding> out;
    for (int n : ns) {
        ParamBinding b;
        b.n = n;
        b.label = "n=" + std::to_string(n);
        out.push_back(b);
    }
    return out;
}

}  // namespace catalog_detail

inline std::vector<IdentityCase> build_catalog() {
    using namespace catalog_detail;
    std::vector<IdentityCase> cases;
    auto add = [&](IdentityCase c) {
        c.validate();
        cases.push_back(std::move(c));
    };

    // ---- gamma family ----
    {
        IdentityCase c;
        c.id = "EQ3";
        c.citation = "Eq. (3): Gamma(z) Gamma(z+1/2) = 2^(1-2z) sqrt(pi) Gamma(2z)";
        c.tolerance = 1e-10;
        c.per_tau = false;
        c.grid = {ParamBinding{"dup"}};
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding&, const SuiteConfig& cfg) {
            return gamma_fn(z, cfg.gamma) * gamma_fn(z + 0.5, cfg.gamma);
        };
        c.rhs = [](cplx z, const ParamBinding&, const SuiteConfig& cfg) {
            return std::exp((1.0 - 2.0 * z) * std::log(2.0)) * std::sqrt(pi) *
                   gamma_fn(2.0 * z, cfg.gamma);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ4";
        c.citation = "Eq. (4): Gamma(1-z) Gamma(z) = pi / sin(pi z)";
        c.tolerance = 1e-11;
        c.per_tau = false;
        c.grid = {ParamBinding{"reflection"}};
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding&, const SuiteConfig& cfg) {
            return gamma_fn(1.0 - z, cfg.gamma) * gamma_fn(z, cfg.gamma);
        };
        c.rhs = [](cplx z, const ParamBinding&, const SuiteConfig&) {
            return pi / std::sin(pi * z);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ5";
        c.citation =
            "Eq. (5): prod_{k=0}^{n-1} Gamma(z+k/n) = (2 pi)^((n-1)/2) n^(1/2) e^(-n z ln n) "
            "Gamma(n z)";
        c.tolerance = 1e-10;
        c.per_tau = false;
        c.grid = n_bindings({2, 3, 4, 5});
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx p{1.0, 0.0};
            for (int k = 0; k < b.n; ++k)
                p *= gamma_fn(z + static_cast<double>(k) / b.n, cfg.gamma);
            return p;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            return std::pow(2.0 * pi, (n - 1.0) / 2.0) * std::sqrt(n) *
                   std::exp(-n * z * std::log(n)) * gamma_fn(n * z, cfg.gamma);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "PSI_NTUPLE";
        c.citation =
            "psi n-tuple: sum_{k=0}^{n-1} psi(z+k/n) = n psi(n z) - n ln n; Gauss identity "
            "sum_{k=1}^{n} psi(k/n) = -n (gamma + ln n)";
        c.tolerance = 1e-10;
        c.per_tau = false;
        for (int n : {2, 3, 5}) {
            ParamBinding b;
            b.n = n;
            b.label = "n=" + std::to_string(n);
            c.grid.push_back(b);
        }
        for (int n : {3, 5}) {
            ParamBinding b;
            b.n = n;
            b.mode = 1;
            b.label = "gauss,n=" + std::to_string(n);
            c.grid.push_back(b);
        }
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx s{0.0, 0.0};
            if (b.mode == 1) {
                for (int k = 1; k <= b.n; ++k)
                    s += digamma(cplx{static_cast<double>(k) / b.n, 0.0}, cfg.gamma);
                return s;
            }
            for (int k = 0; k < b.n; ++k) s += digamma(z + static_cast<double>(k) / b.n, cfg.gamma);
            return s;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            if (b.mode == 1) return cplx{-n * (euler_gamma + std::log(n)), 0.0};
            return n * digamma(n * z, cfg.gamma) - n * std::log(n);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "PSIP_NTUPLE";
        c.citation = "trigamma n-tuple: sum_{k=0}^{n-1} psi'(z+k/n) = n^2 psi'(n z)";
        c.tolerance = 1e-10;
        c.per_tau = false;
        c.grid = n_bindings({2, 3, 5});
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx s{0.0, 0.0};
            for (int k = 0; k < b.n; ++k) s += trigamma(z + static_cast<double>(k) / b.n, cfg.gamma);
            return s;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return static_cast<double>(b.n) * static_cast<double>(b.n) *
                   trigamma(static_cast<double>(b.n) * z, cfg.gamma);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "TRIGAMMA_REFLECTION";
        c.citation = "trigamma reflection: psi'(z) + psi'(1-z) = pi^2 / sin^2(pi z)";
        c.erratum_note =
            "the printed reflection shows -pi^2/cos(pi z); differentiating psi(z)-psi(1-z) = "
            "-pi cot(pi z) gives pi^2/sin^2(pi z), which is what this case checks";
        c.tolerance = 1e-11;
        c.per_tau = false;
        c.grid = {ParamBinding{"reflection"}};
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding&, const SuiteConfig& cfg) {
            return trigamma(z, cfg.gamma) + trigamma(1.0 - z, cfg.gamma);
        };
        c.rhs = [](cplx z, const ParamBinding&, const SuiteConfig&) {
            return pi * pi * csc2(pi * z);
        };
        add(c);
    }

    // ---- trig family ----
    {
        IdentityCase c;
        c.id = "EQ6";
        c.citation = "Eq. (6): sum_{k=0}^{n-1} 1/sin^2(z + pi k/n) = n^2 / sin^2(n z)";
        c.tolerance = 1e-10;
        c.per_tau = false;
        c.grid = n_bindings({2, 3, 4, 6});
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            cplx s{0.0, 0.0};
            for (int k = 0; k < b.n; ++k) s += csc2(z + pi * k / static_cast<double>(b.n));
            return s;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            double n = b.n;
            return n * n * csc2(n * z);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ7";
        c.citation = "Eq. (7): sum_{k=0}^{n-1} cot(z + pi k/n) = n cot(n z)";
        c.erratum_note =
            "printed right-hand side omits the factor n, contradicting the integral of Eq. (6) "
            "and the sentence preceding it; implemented as n cot(n z)";
        c.tolerance = 1e-10;
        c.per_tau = false;
        c.grid = n_bindings({2, 3, 4, 6});
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            cplx s{0.0, 0.0};
            for (int k = 0; k < b.n; ++k) {
                cplx w = z + pi * k / static_cast<double>(b.n);
                s += std::cos(w) / std::sin(w);
            }
            return s;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            double n = b.n;
            return n * std::cos(n * z) / std::sin(n * z);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ8";
        c.citation = "Eq. (8): prod_{k=0}^{n-1} sin(z + k pi/n) = C_1(n) sin(n z)";
        c.tolerance = 1e-10;
        c.per_tau = false;
        c.grid = n_bindings({2, 3, 4, 6});
        c.sample_points = trig_grid();
        auto ratio = [](cplx z, int n) {
            cplx p{1.0, 0.0};
            for (int k = 0; k < n; ++k) p *= std::sin(z + pi * k / static_cast<double>(n));
            return p / std::sin(static_cast<double>(n) * z);
        };
        c.lhs = [ratio](cplx z, const ParamBinding& b, const SuiteConfig&) {
            return ratio(z, b.n);
        };
        c.rhs = [ratio](cplx, const ParamBinding& b, const SuiteConfig&) {
            return ratio(cplx{0.23, 0.11}, b.n);  // constancy against a reference point
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ9";
        c.citation =
            "Eq. (9): prod_{k=0}^{n-1} sin(z + k pi/n) = 2^(1-n) sin(n z); Euler relation "
            "prod_{k=1}^{n-1} sin(k pi/n) = n / 2^(n-1)";
        c.tolerance = 1e-11;
        c.per_tau = false;
        c.grid = n_bindings({2, 3, 4, 6});
        for (int n : {2, 3, 4, 6}) {
            ParamBinding b;
            b.n = n;
            b.mode = 1;
            b.label = "euler,n=" + std::to_string(n);
            c.grid.push_back(b);
        }
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            cplx p{1.0, 0.0};
            if (b.mode == 1) {
                for (int k = 1; k < b.n; ++k) p *= std::sin(cplx{pi * k / static_cast<double>(b.n), 0.0});
                return p;
            }
            for (int k = 0; k < b.n; ++k) p *= std::sin(z + pi * k / static_cast<double>(b.n));
            return p;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            double n = b.n;
            if (b.mode == 1) return cplx{n * std::pow(2.0, 1.0 - n), 0.0};
            return std::pow(2.0, 1.0 - n) * std::sin(n * z);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ10";
        c.citation =
            "Eq. (10): prod_{k=0}^{n-1} sin^2(z + k pi/n) = n^2 2^(2-2n) / sum_{k=0}^{n-1} "
            "sin^(-2)(z + k pi/n)";
        c.tolerance = 1e-10;
        c.per_tau = false;
        c.grid = n_bindings({2, 3, 4, 6});
        c.sample_points = trig_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            cplx p{1.0, 0.0};
            for (int k = 0; k < b.n; ++k) {
                cplx s = std::sin(z + pi * k / static_cast<double>(b.n));
                p *= s * s;
            }
            return p;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            double n = b.n;
            cplx s{0.0, 0.0};
            for (int k = 0; k < b.n; ++k) s += csc2(z + pi * k / n);
            return n * n * std::pow(2.0, 2.0 - 2.0 * n) / s;
        };
        add(c);
    }

    // ---- theta core ----
    {
        IdentityCase c;
        c.id = "EQ12";
        c.citation =
            "Eq. (12): theta1(z + (m + n tau) pi | tau) = (-1)^(m+n) q^(-n^2) e^(-2 i n z) "
            "theta1(z | tau)";
        c.tolerance = 1e-10;
        for (auto [m, n] : std::initializer_list<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {-1, 2}}) {
            ParamBinding b;
            b.mode = m;
            b.n = n;
            b.label = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
            c.grid.push_back(b);
        }
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx shift = (static_cast<double>(b.mode) + static_cast<double>(b.n) * b.tau) * pi;
            return th(K::T1, z + shift, b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            double sign = ((b.mode + b.n) % 2 == 0) ? 1.0 : -1.0;
            return sign * std::exp(-iu * pi * b.tau * n * n - 2.0 * iu * n * z) *
                   th(K::T1, z, b.tau, cfg);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ15";
        c.citation = "Eq. (15): delta_2(tau) = -pi^2 theta1'''(0|tau) / (3 theta1'(0|tau))";
        c.tolerance = 1e-10;
        c.grid = {ParamBinding{}};
        c.lhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            return lattice_sum_delta(1, b.tau, cfg.policy());
        };
        c.rhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            return delta2_from_theta(b.tau, cfg.policy());
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ21";
        c.citation = "Eq. (21): theta1'(0,q) = 2 q^(1/4) prod_{j>=1} (1 - q^(2j))^3";
        c.tolerance = 1e-11;
        c.grid = {ParamBinding{}};
        c.lhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            return theta1_prime0_product(b.tau, cfg.policy());
        };
        c.rhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) { return th1p(b.tau, cfg); };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ24";
        c.citation = "Eq. (24): theta1'(0,q) = theta2(0,q) theta3(0,q) theta4(0,q)";
        c.tolerance = 1e-11;
        c.grid = {ParamBinding{}};
        c.lhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) { return th1p(b.tau, cfg); };
        c.rhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            return th0(K::T2, b.tau, cfg) * th0(K::T3, b.tau, cfg) * th0(K::T4, b.tau, cfg);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ45";
        c.citation = "Eq. (45): theta1(z | 1 + tau) = i^(1/2) theta1(z | tau), principal branch "
                     "e^(i pi/4)";
        c.tolerance = 1e-9;
        c.grid = {ParamBinding{}};
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return th(K::T1, z, b.tau + 1.0, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return std::exp(iu * pi / 4.0) * th(K::T1, z, b.tau, cfg);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ46";
        c.citation =
            "Eq. (46): theta1(z | -1/tau) = -i (-i tau)^(1/2) exp(i tau z^2 / pi) theta1(tau z | tau)";
        c.tolerance = 1e-9;
        c.grid = {ParamBinding{}};
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return th(K::T1, z, -1.0 / b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return -iu * std::sqrt(-iu * b.tau) * std::exp(iu * b.tau * z * z / pi) *
                   th(K::T1, b.tau * z, b.tau, cfg);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ47";
        c.citation =
            "Eq. (47): theta1(pi z | tau) = i e^(pi i (tau/4 - z)) (x;q)(q/x;q)(q;q), x = "
            "e^(2 pi i z), q = e^(2 pi i tau)";
        c.tolerance = 1e-10;
        c.grid = {ParamBinding{}};
        c.sample_points = {cplx{0.23, 0.0},  cplx{0.4, 0.1},   cplx{-0.31, 0.07},
                           cplx{0.11, -0.09}, cplx{0.47, 0.21}, cplx{-0.19, -0.13}};
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return th(K::T1, pi * z, b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return triple_product_theta1(z, b.tau, cfg.policy());
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ48";
        c.citation =
            "Eq. (48): theta3(pi z, q) = prod_{n>=1} (1 - q^n)(1 + q^(n-1/2) x)(1 + q^(n-1/2)/x), "
            "q = e^(2 pi i tau)";
        c.tolerance = 1e-10;
        c.grid = {ParamBinding{}};
        c.sample_points = {cplx{0.0, 0.0},  cplx{0.31, 0.0},  cplx{0.5, 0.0},
                           cplx{0.4, 0.1},  cplx{-0.27, 0.11}, cplx{0.17, -0.08}};
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return th(K::T3, pi * z, b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return triple_product_theta3(z, b.tau, cfg.policy());
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ40";
        c.citation = "Eq. (40): theta1(z + pi tau/2 | tau) = i e^(-i z) e^(-i pi tau/4) theta4(z | tau)";
        c.erratum_note =
            "printed constant is -i; expanding the defining series gives +i, which is what the "
            "case asserts";
        c.tolerance = 1e-10;
        c.grid = {ParamBinding{}};
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return th(K::T1, z + pi * b.tau * 0.5, b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return iu * std::exp(-iu * z - iu * pi * b.tau / 4.0) * th(K::T4, z, b.tau, cfg);
        };
        add(c);
    }

    // ---- eisenstein ----
    {
        IdentityCase c;
        c.id = "EQ23";
        c.citation =
            "Eq. (23): sum_{k=0}^{n} C(n,k) d_k d_(n-k) = (2n+9)/(3n+6) d_(n+2), d_k = (2k+3) k! "
            "delta_(2k+4)";
        c.tolerance = 1e-8;
        c.grid = n_bindings({4, 5, 6});
        c.lhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx d4 = lattice_sum_delta(2, b.tau, cfg.policy());
            cplx d6 = lattice_sum_delta(3, b.tau, cfg.policy());
            return delta_from_recursion(b.n, d4, d6)[b.n - 4];
        };
        c.rhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            return lattice_sum_delta(b.n, b.tau, cfg.policy());
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "DELTA2_TRIPLE";
        c.citation = "half-shift sum rule: 3 delta_2(tau) = alpha_2(tau) + beta_2(tau) + gamma_2(tau)";
        c.tolerance = 1e-9;
        c.grid = {ParamBinding{}};
        c.lhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            return half_shift_sum(HalfShift::alpha, 1, b.tau, cfg.policy()) +
                   half_shift_sum(HalfShift::beta, 1, b.tau, cfg.policy()) +
                   half_shift_sum(HalfShift::gamma, 1, b.tau, cfg.policy());
        };
        c.rhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            return 3.0 * lattice_sum_delta(1, b.tau, cfg.policy());
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ44_ORDER";
        c.citation =
            "Eq. (44) and the Eisenstein relation: the swapped-order delta_2 sum equals "
            "delta_2(tau) - 2 pi i/tau, and delta_2(-1/tau) = tau^2 times the swapped-order sum";
        c.tolerance = 1e-8;
        {
            ParamBinding b0;
            b0.mode = 0;
            b0.label = "eisenstein-relation";
            ParamBinding b1;
            b1.mode = 1;
            b1.label = "modular";
            c.grid = {b0, b1};
        }
        c.lhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            if (b.mode == 0) return delta2_swapped_order(b.tau, cfg.policy());
            return lattice_sum_delta(1, -1.0 / b.tau, cfg.policy());
        };
        c.rhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            if (b.mode == 0)
                return lattice_sum_delta(1, b.tau, cfg.policy()) - 2.0 * pi * iu / b.tau;
            return b.tau * b.tau * delta2_swapped_order(b.tau, cfg.policy());
        };
        add(c);
    }

    // ---- weierstrass ----
    auto weier_excl = [](cplx z, const ParamBinding& b) { return dist_lat(z, b.tau) < 0.05; };
    {
        IdentityCase c;
        c.id = "EQ19";
        c.citation =
            "Eq. (19): sigma(z,tau) = exp(z^2 delta_2(tau)/2) theta1(pi z|tau) / (pi theta1'(0|tau))";
        c.tolerance = 1e-8;
        c.grid = {ParamBinding{}};
        c.sample_points = weier_grid();
        c.excluded = weier_excl;
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return sigma(z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx d2 = lattice_sum_delta(1, b.tau, cfg.policy());
            return std::exp(0.5 * z * z * d2) * th(K::T1, pi * z, b.tau, cfg) / (pi * th1p(b.tau, cfg));
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ20";
        c.citation =
            "Eq. (20): sigma(z|Lambda) = 2 omega_1 exp(eta_1 z^2/(2 omega_1)) theta1(pi z/(2 "
            "omega_1), q) / (pi theta1'(0,q)), eta_1 = -pi^2 theta1'''(0,q)/(12 omega_1 theta1'(0,q))";
        c.tolerance = 1e-8;
        for (cplx w1 : {cplx{0.5, 0.0}, cplx{1.0, 0.0}, 0.7 * std::exp(cplx{0.0, 0.2})}) {
            ParamBinding b;
            b.omega1 = w1;
            b.label = "omega1=" + format_cplx(w1);
            c.grid.push_back(b);
        }
        c.sample_points = weier_grid();
        c.excluded = [](cplx z, const ParamBinding& b) { return dist_lat(z, b.tau) < 0.05; };
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx zl = z * 2.0 * b.omega1;  // sample in lattice coordinates
            return sigma(zl, ctx_for(b.tau, b.omega1, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx zl = z * 2.0 * b.omega1;
            cplx t1p = th1p(b.tau, cfg);
            cplx t1ppp = theta_z_derivative(K::T1, 3, cplx{0.0, 0.0}, b.tau, cfg.policy());
            cplx eta1 = -pi * pi * t1ppp / (12.0 * b.omega1 * t1p);
            return 2.0 * b.omega1 * std::exp(eta1 * zl * zl / (2.0 * b.omega1)) *
                   th(K::T1, pi * zl / (2.0 * b.omega1), b.tau, cfg) / (pi * t1p);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ22";
        c.citation = "Eq. (22): d^2 P(z,tau)/dz^2 = 6 P^2(z,tau) - 30 delta_4";
        c.tolerance = 1e-8;
        c.grid = {ParamBinding{}};
        c.sample_points = weier_grid();
        c.excluded = weier_excl;
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return wp_second(z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            const auto& ctx = ctx_for(b.tau, cplx{0.5, 0.0}, cfg);
            cplx p = wp(z, ctx);
            return 6.0 * p * p - 30.0 * ctx.delta4();
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ25";
        c.citation =
            "Eq. (25): P(z|Lambda) - e_1 = (pi theta3(0,q) theta4(0,q)/(2 omega_1))^2 "
            "theta2^2(pi z/(2 omega_1), q) / theta1^2(pi z/(2 omega_1), q)";
        c.tolerance = 1e-8;
        c.grid = {ParamBinding{}};
        c.sample_points = weier_grid();
        c.excluded = weier_excl;
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            const auto& ctx = ctx_for(b.tau, cplx{0.5, 0.0}, cfg);
            return wp(z, ctx) - ctx.e1();
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx pref = pi * th0(K::T3, b.tau, cfg) * th0(K::T4, b.tau, cfg);
            cplx t2 = th(K::T2, pi * z, b.tau, cfg), t1 = th(K::T1, pi * z, b.tau, cfg);
            return pref * pref * (t2 * t2) / (t1 * t1);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "THM2";
        c.citation =
            "Eqs. (26)-(27): P(z|Lambda) - a = C theta1(pi z - pi alpha_1, q) theta1(pi z - pi "
            "alpha_2, q) / theta1^2(pi z, q), C = pi^2 theta1'^2(0,q) / (theta1(pi alpha_1, q) "
            "theta1(pi alpha_2, q))";
        c.tolerance = 1e-7;
        for (cplx a : {cplx{0.0, 0.0}, cplx{2.0, 1.0}, cplx{-1.5, 0.0}}) {
            ParamBinding b;
            b.a = a;
            b.label = "a=" + format_cplx(a);
            c.grid.push_back(b);
        }
        c.sample_points = weier_grid();
        c.excluded = [](cplx z, const ParamBinding& b) {
            if (dist_lat(z, b.tau) < 0.05) return true;
            cplx alpha = alpha_for(b.tau, b.a, SuiteConfig{});
            return dist_lat(z - alpha, b.tau) < 0.04 || dist_lat(z + alpha, b.tau) < 0.04;
        };
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return wp(z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg)) - b.a;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx alpha = alpha_for(b.tau, b.a, cfg);
            cplx t1p = th1p(b.tau, cfg);
            cplx ta = th(K::T1, pi * alpha, b.tau, cfg);
            cplx C = pi * pi * t1p * t1p / (ta * th(K::T1, -pi * alpha, b.tau, cfg));
            cplx t1z = th(K::T1, pi * z, b.tau, cfg);
            return C * th(K::T1, pi * (z - alpha), b.tau, cfg) *
                   th(K::T1, pi * (z + alpha), b.tau, cfg) / (t1z * t1z);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "COR1";
        c.citation =
            "Corollary 1 / Eq. (28): P(z|Lambda) = -pi^2 theta1'^2(0,q)/theta1^2(pi alpha_1, q) "
            "theta1(pi z - pi alpha_1, q) theta1(pi z + pi alpha_1, q) / theta1^2(pi z, q)";
        c.tolerance = 1e-7;
        c.grid = {ParamBinding{}};
        c.sample_points = weier_grid();
        c.excluded = [](cplx z, const ParamBinding& b) {
            if (dist_lat(z, b.tau) < 0.05) return true;
            cplx alpha = alpha_for(b.tau, cplx{0.0, 0.0}, SuiteConfig{});
            return dist_lat(z - alpha, b.tau) < 0.04 || dist_lat(z + alpha, b.tau) < 0.04;
        };
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return wp(z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx alpha = alpha_for(b.tau, cplx{0.0, 0.0}, cfg);
            cplx t1p = th1p(b.tau, cfg);
            cplx ta = th(K::T1, pi * alpha, b.tau, cfg);
            cplx t1z = th(K::T1, pi * z, b.tau, cfg);
            return -pi * pi * t1p * t1p / (ta * ta) * th(K::T1, pi * (z - alpha), b.tau, cfg) *
                   th(K::T1, pi * (z + alpha), b.tau, cfg) / (t1z * t1z);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "REMARK2_LIMIT";
        c.citation = "Remark 2 degeneration: P(z) -> pi^2/sin^2(pi z) - pi^2/3 as tau -> i inf";
        c.tolerance = 1e-6;
        c.per_tau = false;
        {
            ParamBinding b;
            b.tau = cplx{0.0, 8.0};
            b.label = "tau=8i";
            c.grid = {b};
        }
        c.sample_points = {cplx{0.2, 0.0}, cplx{0.3, 0.1}};
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return wp(z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding&, const SuiteConfig&) {
            return pi * pi * csc2(pi * z) - pi * pi / 3.0;
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ29";
        c.citation = "Eq. (29): sigma(2z, tau) = -P_z(z, tau) sigma^4(z, tau)";
        c.tolerance = 1e-9;
        c.grid = {ParamBinding{}};
        c.sample_points = weier_grid();
        c.excluded = [](cplx z, const ParamBinding& b) {
            return dist_lat(z, b.tau) < 0.05 || dist_lat(2.0 * z, b.tau) < 0.06;
        };
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return sigma(2.0 * z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            const auto& ctx = ctx_for(b.tau, cplx{0.5, 0.0}, cfg);
            cplx s = sigma(z, ctx);
            return -wp_prime(z, ctx) * s * s * s * s;
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ30";
        c.citation =
            "Eq. (30): sigma(z + 1/2, tau) = sigma(1/2, tau)/theta2(0|tau) exp(zeta(1/2, tau) z "
            "+ delta_2(tau) z^2/2) theta2(pi z|tau)";
        c.tolerance = 1e-8;
        c.grid = {ParamBinding{}};
        c.sample_points = weier_grid();
        c.excluded = [](cplx z, const ParamBinding& b) {
            return dist_lat(z + 0.5, b.tau) < 0.05;
        };
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return sigma(z + 0.5, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            const auto& ctx = ctx_for(b.tau, cplx{0.5, 0.0}, cfg);
            cplx pref = sigma(cplx{0.5, 0.0}, ctx) / th0(K::T2, b.tau, cfg);
            cplx zeta_half = weier_zeta(cplx{0.5, 0.0}, ctx);
            return pref * std::exp(zeta_half * z + 0.5 * ctx.delta2() * z * z) *
                   th(K::T2, pi * z, b.tau, cfg);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ31";
        c.citation =
            "Eq. (31): sigma(2z, tau) = 2/(pi theta2^2(0) theta3^2(0) theta4^2(0)) exp(2 delta_2 "
            "z^2) theta1(pi z) theta2(pi z) theta3(pi z) theta4(pi z)";
        c.tolerance = 1e-8;
        c.grid = {ParamBinding{}};
        c.sample_points = weier_grid();
        c.excluded = [](cplx z, const ParamBinding& b) {
            return dist_lat(2.0 * z, b.tau) < 0.06;
        };
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return sigma(2.0 * z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx t2 = th0(K::T2, b.tau, cfg), t3 = th0(K::T3, b.tau, cfg), t4 = th0(K::T4, b.tau, cfg);
            cplx d2 = lattice_sum_delta(1, b.tau, cfg.policy());
            return 2.0 / (pi * t2 * t2 * t3 * t3 * t4 * t4) * std::exp(2.0 * d2 * z * z) *
                   th(K::T1, pi * z, b.tau, cfg) * th(K::T2, pi * z, b.tau, cfg) *
                   th(K::T3, pi * z, b.tau, cfg) * th(K::T4, pi * z, b.tau, cfg);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ32";
        c.citation =
            "Eq. (32): theta1(2z|tau) = 2/(theta2(0|tau) theta3(0|tau) theta4(0|tau)) "
            "theta1(z|tau) theta2(z|tau) theta3(z|tau) theta4(z|tau)";
        c.tolerance = 1e-10;
        c.grid = {ParamBinding{}};
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return th(K::T1, 2.0 * z, b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return 2.0 / (th0(K::T2, b.tau, cfg) * th0(K::T3, b.tau, cfg) * th0(K::T4, b.tau, cfg)) *
                   th(K::T1, z, b.tau, cfg) * th(K::T2, z, b.tau, cfg) *
                   th(K::T3, z, b.tau, cfg) * th(K::T4, z, b.tau, cfg);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ33";
        c.citation =
            "Eq. (33): P_z(z) = -2 pi^3/[theta2(0) theta3(0) theta4(0)]^2 theta1^(-3)(pi z|tau) "
            "theta2(pi z) theta3(pi z) theta4(pi z)";
        c.tolerance = 1e-8;
        c.grid = {ParamBinding{}};
        c.sample_points = weier_grid();
        c.excluded = weier_excl;
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return wp_prime(z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            cplx t234 = th0(K::T2, b.tau, cfg) * th0(K::T3, b.tau, cfg) * th0(K::T4, b.tau, cfg);
            cplx t1 = th(K::T1, pi * z, b.tau, cfg);
            return -2.0 * pi * pi * pi / (t234 * t234) *
                   th(K::T2, pi * z, b.tau, cfg) * th(K::T3, pi * z, b.tau, cfg) *
                   th(K::T4, pi * z, b.tau, cfg) / (t1 * t1 * t1);
        };
        add(c);
    }

    // ---- n-tuple theorems ----
    {
        IdentityCase c;
        c.id = "EQ34";
        c.citation =
            "Eq. (34): theta1(n z | n tau) = n theta1'(0|n tau) / (theta1'(0|tau) prod_{k=1}^{n-1} "
            "theta1(k pi/n | tau)) prod_{k=0}^{n-1} theta1(z + k pi/n | tau)";
        c.tolerance = 1e-9;
        c.grid = n_bindings({2, 3, 4});
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            return th(K::T1, static_cast<double>(b.n) * z, static_cast<double>(b.n) * b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            cplx denom = th1p(b.tau, cfg);
            for (int k = 1; k < b.n; ++k) denom *= th(K::T1, cplx{pi * k / n, 0.0}, b.tau, cfg);
            cplx num = n * th1p(n * b.tau, cfg);
            for (int k = 0; k < b.n; ++k) num *= th(K::T1, z + pi * k / n, b.tau, cfg);
            return num / denom;
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ34_LIMIT";
        c.citation =
            "tau -> i inf limit: e^(-i pi tau/4) theta1(z|tau) -> 2 sin(z); the scaled Eq. (34) "
            "degenerates to the sine n-tuple product of Eqs. (8)-(9)";
        c.tolerance = 1e-6;
        c.per_tau = false;
        for (int n : {2, 3}) {
            for (int mode : {0, 1}) {
                ParamBinding b;
                b.n = n;
                b.mode = mode;
                b.tau = cplx{0.0, 8.0};
                b.label = (mode == 0 ? "lhs-scaled,n=" : "product-scaled,n=") + std::to_string(n);
                c.grid.push_back(b);
            }
        }
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            if (b.mode == 0)
                return std::exp(-iu * pi * (n * b.tau) / 4.0) *
                       th(K::T1, n * z, n * b.tau, cfg);
            cplx p{1.0, 0.0};
            for (int k = 0; k < b.n; ++k)
                p *= std::exp(-iu * pi * b.tau / 4.0) * th(K::T1, z + pi * k / n, b.tau, cfg);
            return p;
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig&) {
            return 2.0 * std::sin(static_cast<double>(b.n) * z);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "THM3_ODD";
        c.citation =
            "Eqs. (35)-(36): theta1((2l+1) z | tau) = C prod_{k=-l}^{l} prod_{j=-l}^{l} theta1(z + "
            "k pi/(2l+1) + j pi tau/(2l+1) | tau), C^(-1) = 1/(2l+1) prod' theta1(k pi/(2l+1) + "
            "j pi tau/(2l+1) | tau)";
        c.tolerance = 1e-9;
        for (int l : {1, 2}) {
            ParamBinding b;
            b.n = l;
            b.label = "l=" + std::to_string(l);
            c.grid.push_back(b);
        }
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = 2.0 * b.n + 1.0;
            return th(K::T1, n * z, b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            const int l = b.n;
            const double n = 2.0 * l + 1.0;
            cplx cinv{1.0 / n, 0.0};
            cplx prod{1.0, 0.0};
            for (int k = -l; k <= l; ++k)
                for (int j = -l; j <= l; ++j) {
                    cplx shift = (pi * k + pi * b.tau * static_cast<double>(j)) / n;
                    prod *= th(K::T1, z + shift, b.tau, cfg);
                    if (k != 0 || j != 0) cinv *= th(K::T1, shift, b.tau, cfg);
                }
            return prod / cinv;
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "THM3_EVEN";
        c.citation =
            "Eqs. (37)-(38): theta1(2l z, tau) = C~ prod_{m=-(l-1)}^{l} theta4(z + m pi/(2l)) "
            "prod_{k=-(l-1)}^{l} prod_{j=-(l-1)}^{l-1} theta1(z + k pi/(2l) + j pi tau/(2l) | tau)";
        c.tolerance = 1e-9;
        for (int l : {1, 2}) {
            ParamBinding b;
            b.n = l;
            b.label = "l=" + std::to_string(l);
            c.grid.push_back(b);
        }
        c.sample_points = theta_grid();
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = 2.0 * b.n;
            return th(K::T1, n * z, b.tau, cfg);
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            const int l = b.n;
            const double n = 2.0 * l;
            cplx cinv{1.0 / n, 0.0};
            cplx prod{1.0, 0.0};
            for (int m = -(l - 1); m <= l; ++m) {
                prod *= th(K::T4, z + pi * m / n, b.tau, cfg);
                cinv *= th(K::T4, cplx{pi * m / n, 0.0}, b.tau, cfg);
            }
            for (int k = -(l - 1); k <= l; ++k)
                for (int j = -(l - 1); j <= l - 1; ++j) {
                    cplx shift = (pi * k + pi * b.tau * static_cast<double>(j)) / n;
                    prod *= th(K::T1, z + shift, b.tau, cfg);
                    if (k != 0 || j != 0) cinv *= th(K::T1, shift, b.tau, cfg);
                }
            return prod / cinv;
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "THM3_EVEN_C1";
        c.citation =
            "Theorem 3 even-n derivation step: the ratio of theta1(2l z|tau) to the fully "
            "symmetrized theta1 product is C exp(2 i l z); the fitted linear coefficient is 2 i l";
        c.tolerance = 1e-7;
        for (int l : {1, 2}) {
            ParamBinding b;
            b.n = l;
            b.label = "l=" + std::to_string(l);
            c.grid.push_back(b);
        }
        c.lhs = [](cplx, const ParamBinding& b, const SuiteConfig& cfg) {
            const int l = b.n;
            const double n = 2.0 * l;
            cplx tau = b.tau;
            FunctionHandle f{[=, &cfg](cplx z) { return th(K::T1, n * z, tau, cfg); }, nullptr, "lhs"};
            FunctionHandle g{[=, &cfg](cplx z) {
                                 cplx prod{1.0, 0.0};
                                 for (int k = -(l - 1); k <= l; ++k)
                                     for (int j = -(l - 1); j <= l; ++j)
                                         prod *= th(K::T1,
                                                    z + (pi * k + pi * tau * static_cast<double>(j)) / n,
                                                    tau, cfg);
                                 return prod;
                             },
                             nullptr, "sym-product"};
            // Loop around the middle of one spacing cell of the factor zeros.
            cplx center = (pi / (2.0 * n)) * (1.0 + tau);
            cplx half = 0.3 * (pi / n) * cplx{1.0, tau.imag()};
            Region reg{center - half, center + half};
            auto fit = fit_log_polynomial(f, g, reg, 1, 96);
            return fit.coefficients[1];
        };
        c.rhs = [](cplx, const ParamBinding& b, const SuiteConfig&) {
            return 2.0 * iu * static_cast<double>(b.n);
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ41";
        c.citation =
            "Eq. (41): P_z(n z, n tau) = 1/(n^3 prod_{k=1}^{n-1} P_z(k/n, tau)) prod_{k=0}^{n-1} "
            "P_z(z + k/n, tau)";
        c.erratum_note =
            "printed constant shows P_z(k pi/n, tau); the pi is inconsistent with the k/n shifts "
            "and with Eqs. (42)-(43), so shifts k/n are used throughout. For even n the constant "
            "divides by P_z(1/2, tau) = 0 (a half-period) and the two sides have different "
            "divisors, e.g. the left side vanishes at z = 1/(2n) while the right side does not; "
            "the n=2 binding therefore cannot pass and is reported as a failure";
        c.tolerance = 1e-8;
        c.grid = n_bindings({2, 3});
        c.sample_points = weier_grid();
        c.excluded = [](cplx z, const ParamBinding& b) {
            // both sides' poles satisfy n z in Z + (n tau) Z
            double n = b.n;
            return dist_lat(n * z, static_cast<double>(b.n) * b.tau) < 0.06 * n;
        };
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            return wp_prime(n * z, ctx_for(n * b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            const auto& ctx = ctx_for(b.tau, cplx{0.5, 0.0}, cfg);
            cplx cinv{n * n * n, 0.0};
            for (int k = 1; k < b.n; ++k) cinv *= wp_prime(cplx{k / n, 0.0}, ctx);
            cplx prod{1.0, 0.0};
            for (int k = 0; k < b.n; ++k) prod *= wp_prime(z + k / n, ctx);
            return prod / cinv;
        };
        add(c);
    }
    {
        IdentityCase c;
        c.id = "EQ42_43";
        c.citation =
            "Eqs. (42)-(43): P_z(n z | tau) = C prod_{k=0}^{n-1} prod_{j=0}^{n-1} P_z(z + k/n + "
            "j tau/n, tau), C^(-1) = n^3 prod' P_z(k/n + j tau/n, tau)";
        c.erratum_note =
            "for even n the constant divides by P_z at half-periods, which vanish; as with "
            "Eq. (41) the n=2 binding is structurally degenerate and reported as a failure";
        c.tolerance = 1e-8;
        c.grid = n_bindings({2, 3});
        c.sample_points = weier_grid();
        c.excluded = [](cplx z, const ParamBinding& b) {
            double n = b.n;
            return dist_lat(n * z, b.tau) < 0.06 * n;
        };
        c.lhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            return wp_prime(n * z, ctx_for(b.tau, cplx{0.5, 0.0}, cfg));
        };
        c.rhs = [](cplx z, const ParamBinding& b, const SuiteConfig& cfg) {
            double n = b.n;
            const auto& ctx = ctx_for(b.tau, cplx{0.5, 0.0}, cfg);
            cplx cinv{n * n * n, 0.0};
            cplx prod{1.0, 0.0};
            for (int k = 0; k < b.n; ++k)
                for (int j = 0; j < b.n; ++j) {
                    cplx shift = (static_cast<double>(k) + static_cast<double>(j) * b.tau) / n;
                    prod *= wp_prime(z + shift, ctx);
                    if (k != 0 || j != 0) cinv *= wp_prime(shift, ctx);
                }
            return prod / cinv;
        };
        add(c);
    }

    // Unique-id sanity before handing the catalog out.
    for (std::size_t i = 0; i < cases.size(); ++i)
        for (std::size_t j = i + 1; j < cases.size(); ++j)
            if (cases[i].id == cases[j].id)
                throw std::logic_error("build_catalog: duplicate case id " + cases[i].id);
    return cases;
}

inline VerificationReport run_suite(const std::vector<std::string>& id_prefixes,
                                    const SuiteConfig& config) {
    return run_suite_cases(build_catalog(), id_prefixes, config);
}

}  // namespace ellident

#endif
