#ifndef ELLIDENT_WEIERSTRASS_HPP
#define ELLIDENT_WEIERSTRASS_HPP

#include <vector>

#include "ellident/core.hpp"
#include "ellident/eisenstein.hpp"

// Weierstrass sigma, zeta, P and P' from the first-principles lattice
// definitions. Everything is computed on the normalized lattice {m + n tau}
// (omega1 = 1/2) and rescaled: sigma by 2 omega1, zeta by 1/(2 omega1), P by
// its square, P' by its cube.
//
// The truncated centered-square sums alone converge like O(radius^-2), far
// too slowly for the target tolerances. The exact tail of each sum is a power
// series in z whose coefficients are differences between full Eisenstein
// values delta_{2j} and the finite partial power sums over the same square,
// so adding that series (cut at order J) pushes the truncation error to
// ~(|z|/radius)^{2J}. Both pieces are cached per context.

namespace ellident {

class WeierstrassContext {
public:
    explicit WeierstrassContext(LatticeParams lattice, TruncationPolicy policy = {})
        : lattice_(lattice), policy_(policy), tau_(lattice.tau()) {
        lattice_.validate();
        policy_.validate();
        build_tables();
        e1_ = wp_core(cplx{0.5, 0.0}) / scale2();
        e2_ = wp_core(0.5 * tau_) / scale2();
        e3_ = wp_core(0.5 * (1.0 + tau_)) / scale2();
        double mag = std::abs(e1_) + std::abs(e2_) + std::abs(e3_);
        if (!(std::abs(e1_ + e2_ + e3_) <= 1e-10 * std::max(1.0, mag)))
            throw numeric_error("WeierstrassContext: e1+e2+e3 failed to vanish");
    }

    const LatticeParams& lattice() const { return lattice_; }
    const TruncationPolicy& policy() const { return policy_; }
    cplx tau() const { return tau_; }
    cplx e1() const { return e1_; }
    cplx e2() const { return e2_; }
    cplx e3() const { return e3_; }
    cplx delta2() const { return delta2_; }
    cplx delta4() const { return delta_[2]; }
    cplx delta6() const { return delta_[3]; }

    cplx scale() const { return 2.0 * lattice_.omega1; }
    cplx scale2() const { return scale() * scale(); }

    // --- normalized-lattice evaluators (lattice m + n tau) ---

    cplx sigma_core(cplx z) const {
        if (z == cplx{0.0, 0.0}) return z;
        const int R = policy_.lattice_radius;
        cplx lnratio{0.0, 0.0};
        for (int n = -R; n <= R; ++n)
            for (int m = -R; m <= R; ++m) {
                if (m == 0 && n == 0) continue;
                cplx r = z / (static_cast<double>(m) + static_cast<double>(n) * tau_);
                lnratio += detail::log1p_cplx(-r) + r + 0.5 * r * r;
            }
        for (int j = 2; j <= correction_order; ++j)
            lnratio += pow_int(z, 2 * j) * (partial_[j] - delta_[j]) / (2.0 * j);
        certify(z, std::abs(lnratio) + 1.0);
        return z * std::exp(lnratio);
    }

    cplx zeta_core(cplx z) const {
        pole_guard(z);
        const int R = policy_.lattice_radius;
        cplx acc = 1.0 / z + z * partial_[1];
        for (int n = -R; n <= R; ++n)
            for (int m = -R; m <= R; ++m) {
                if (m == 0 && n == 0) continue;
                acc += 1.0 / (z - (static_cast<double>(m) + static_cast<double>(n) * tau_));
            }
        for (int j = 2; j <= correction_order; ++j)
            acc -= pow_int(z, 2 * j - 1) * (delta_[j] - partial_[j]);
        certify(z, std::abs(acc));
        return acc;
    }

    cplx wp_core(cplx z) const {
        pole_guard(z);
        const int R = policy_.lattice_radius;
        cplx acc = 1.0 / (z * z) - partial_[1];
        for (int n = -R; n <= R; ++n)
            for (int m = -R; m <= R; ++m) {
                if (m == 0 && n == 0) continue;
                cplx d = z - (static_cast<double>(m) + static_cast<double>(n) * tau_);
                acc += 1.0 / (d * d);
            }
        for (int j = 2; j <= correction_order; ++j)
            acc += (2.0 * j - 1.0) * pow_int(z, 2 * j - 2) * (delta_[j] - partial_[j]);
        certify(z, std::abs(acc));
        return acc;
    }

    cplx wp_prime_core(cplx z) const {
        pole_guard(z);
        const int R = policy_.lattice_radius;
        cplx acc = -2.0 / (z * z * z);
        for (int n = -R; n <= R; ++n)
            for (int m = -R; m <= R; ++m) {
                if (m == 0 && n == 0) continue;
                cplx d = z - (static_cast<double>(m) + static_cast<double>(n) * tau_);
                acc += -2.0 / (d * d * d);
            }
        for (int j = 2; j <= correction_order; ++j)
            acc += (2.0 * j - 1.0) * (2.0 * j - 2.0) * pow_int(z, 2 * j - 3) *
                   (delta_[j] - partial_[j]);
        certify(z, std::abs(acc));
        return acc;
    }

    // Cheap low-radius P without tail correction, for seeding root searches.
    cplx wp_rough(cplx z) const {
        cplx acc = 1.0 / (z * z);
        for (int n = -6; n <= 6; ++n)
            for (int m = -6; m <= 6; ++m) {
                if (m == 0 && n == 0) continue;
                cplx w = static_cast<double>(m) + static_cast<double>(n) * tau_;
                cplx d = z - w;
                acc += 1.0 / (d * d) - 1.0 / (w * w);
            }
        return acc;
    }

private:
    static constexpr int correction_order = 12;  // corrections use delta_4 .. delta_24

    void build_tables() {
        const int R = policy_.lattice_radius;
        partial_.assign(correction_order + 1, cplx{0.0, 0.0});
        delta_.assign(correction_order + 1, cplx{0.0, 0.0});
        for (int n = -R; n <= R; ++n)
            for (int m = -R; m <= R; ++m) {
                if (m == 0 && n == 0) continue;
                cplx w = static_cast<double>(m) + static_cast<double>(n) * tau_;
                cplx iw2 = 1.0 / (w * w);
                cplx p = iw2;
                for (int j = 1; j <= correction_order; ++j) {
                    partial_[j] += p;
                    p *= iw2;
                }
            }
        for (int j = 2; j <= correction_order; ++j)
            delta_[j] = lattice_sum_delta(j, tau_, policy_);
        delta2_ = lattice_sum_delta(1, tau_, policy_);
        rho_min_ = std::numeric_limits<double>::infinity();
        for (int m = -(R + 1); m <= R + 1; ++m)
            for (int n : {-(R + 1), R + 1})
                rho_min_ = std::min({rho_min_, std::abs(m + n * tau_), std::abs(n + m * tau_)});
    }

    void pole_guard(cplx z) const {
        if (detail::dist_to_unit_lattice(z, tau_) < 1e-9)
            throw pole_error("weierstrass: z within 1e-9 of a lattice point");
    }

    // Truncation certificate: the first neglected correction term must be
    // negligible. Grows only when |z| approaches the truncation square.
    void certify(cplx z, double result_scale) const {
        double ratio = std::abs(z) / rho_min_;
        if (ratio >= 0.9)
            throw convergence_error("weierstrass: |z| too close to the truncation boundary");
        int J = correction_order + 1;
        double tail_bound = (2.0 * pi / tau_.imag()) * std::pow(rho_min_, 2.0 - 2.0 * J) /
                            (2.0 * J - 2.0);
        double est = (2.0 * J - 1.0) * std::pow(std::abs(z), 2.0 * J - 2.0) * tail_bound /
                     (1.0 - ratio * ratio);
        if (est > 1e-10 * std::max(1.0, result_scale))
            throw convergence_error("weierstrass: tail estimate exceeds tolerance at max radius");
    }

    static cplx pow_int(cplx z, int k) {
        cplx r{1.0, 0.0};
        for (int i = 0; i < k; ++i) r *= z;
        return r;
    }

    LatticeParams lattice_;
    TruncationPolicy policy_;
    cplx tau_;
    std::vector<cplx> partial_;  // P_{2j}(R) over the centered square
    std::vector<cplx> delta_;    // delta_{2j}(tau)
    cplx delta2_;
    cplx e1_, e2_, e3_;
    double rho_min_ = 0.0;
};

inline cplx sigma(cplx z, const WeierstrassContext& ctx) {
    return ctx.scale() * ctx.sigma_core(z / ctx.scale());
}

inline cplx weier_zeta(cplx z, const WeierstrassContext& ctx) {
    return ctx.zeta_core(z / ctx.scale()) / ctx.scale();
}

inline cplx wp(cplx z, const WeierstrassContext& ctx) {
    return ctx.wp_core(z / ctx.scale()) / ctx.scale2();
}

inline cplx wp_prime(cplx z, const WeierstrassContext& ctx) {
    return ctx.wp_prime_core(z / ctx.scale()) / (ctx.scale2() * ctx.scale());
}

struct HalfPeriodValues {
    cplx e1, e2, e3;
};

inline HalfPeriodValues half_period_values(const WeierstrassContext& ctx) {
    return {ctx.e1(), ctx.e2(), ctx.e3()};
}

// Solves P(z|Lambda) = a by Newton iteration with the analytic P', seeded
// from the minimum of |P - a| on a 32x32 grid over the fundamental
// parallelogram. Returns the root with argument in [0, pi); the partner root
// is its negative modulo the lattice.
inline cplx wp_solve(const WeierstrassContext& ctx, cplx a) {
    const cplx tau = ctx.tau();
    const cplx target = a * ctx.scale2();  // P_core(z/scale) = a * scale^2
    cplx best{0.0, 0.0};
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            cplx z = (i + 0.5) / 32.0 + ((j + 0.5) / 32.0) * tau;
            double err = std::abs(ctx.wp_rough(z) - target);
            if (err < best_err) {
                best_err = err;
                best = z;
            }
        }
    cplx z = best;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        cplx f = ctx.wp_core(z) - target;
        cplx df = ctx.wp_prime_core(z);
        cplx step = f / df;
        z -= step;
        if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) {
            converged = true;
            break;
        }
    }
    if (!converged && std::abs(ctx.wp_core(z) - target) > 1e-10 * std::max(1.0, std::abs(target)))
        throw numeric_error("wp_solve: Newton iteration did not converge");
    if (std::arg(z) < 0.0 || std::arg(z) >= pi) z = -z;
    return z * ctx.scale();
}

inline cplx wp_zero(const WeierstrassContext& ctx) { return wp_solve(ctx, cplx{0.0, 0.0}); }

}  // namespace ellident

#endif
