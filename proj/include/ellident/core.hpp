#ifndef ELLIDENT_CORE_HPP
#define ELLIDENT_CORE_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace ellident {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;
inline constexpr cplx iu{0.0, 1.0};

// Thrown when a truncated series/product fails to settle within its budget.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an evaluation point sits on (or numerically on) a pole.
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Catch-all for numerical-procedure failures: non-integer winding numbers,
// unstable Richardson extrapolation, branch-tracking steps that are too
// coarse, rank-deficient fits.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series/lattice truncation knobs threaded through every evaluator.
struct TruncationPolicy {
    int lattice_radius = 60;     // max |m|,|n| of the centered square
    double series_tol = 1e-14;   // next-term vs partial-sum stop ratio
    int max_terms = 256;

    void validate() const {
        if (lattice_radius < 4)
            throw std::invalid_argument("TruncationPolicy: lattice_radius must be >= 4");
        if (!(series_tol >= std::numeric_limits<double>::epsilon() * 16))
            throw std::invalid_argument("TruncationPolicy: series_tol below 16*epsilon");
        if (max_terms < 16)
            throw std::invalid_argument("TruncationPolicy: max_terms must be >= 16");
    }
};

// Period pair (2*omega1, 2*omega2). tau and the nome are always derived from
// the half-periods, never stored, so they cannot drift out of sync.
struct LatticeParams {
    cplx omega1{0.5, 0.0};
    cplx omega2{0.0, 0.5};

    static LatticeParams from_tau(cplx tau) { return LatticeParams{cplx{0.5, 0.0}, 0.5 * tau}; }

    cplx tau() const { return omega2 / omega1; }
    cplx nome() const { return std::exp(iu * pi * tau()); }

    void validate() const {
        if (!(tau().imag() > 0.0))
            throw std::domain_error("LatticeParams: Im(omega2/omega1) must be positive");
    }
};

struct GammaEvalConfig {
    double shift_threshold = 12.0;  // recurrence-shift target for Re z
    int series_terms = 64;          // budget for recurrence/series loops

    void validate() const {
        if (!(shift_threshold >= 8.0))
            throw std::invalid_argument("GammaEvalConfig: shift_threshold must be >= 8");
        if (series_terms < 50)
            throw std::invalid_argument("GammaEvalConfig: series_terms must be >= 50");
    }
};

namespace detail {

// log(1+w) without the precision loss of rounding 1+w first.
inline cplx log1p_cplx(cplx w) {
    cplx u = 1.0 + w;
    if (u == cplx{0.0, 0.0}) return std::log(u);
    if (std::abs(w) > 0.5) return std::log(u);
    // First-order fixup for the rounding of 1+w.
    return std::log(u) + (w - (u - 1.0)) / u;
}

inline bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Distance from z to the lattice {m + n*tau} in normalized coordinates.
inline double dist_to_unit_lattice(cplx z, cplx tau) {
    double t = z.imag() / tau.imag();
    double s = z.real() - t * tau.real();
    double best = std::numeric_limits<double>::infinity();
    for (double dn : {std::floor(t), std::floor(t) + 1.0})
        for (double dm : {std::floor(s), std::floor(s) + 1.0}) {
            cplx w = z - (dm + dn * tau);
            best = std::min(best, std::abs(w));
        }
    return best;
}

}  // namespace detail

}  // namespace ellident

#endif
