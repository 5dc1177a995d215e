#ifndef ELLIDENT_THETA_HPP
#define ELLIDENT_THETA_HPP

#include "ellident/core.hpp"

// The four Jacobi theta functions as q-series, their z-derivatives, the
// theta1'(0) infinite product, and triple-product evaluators.
//
// tau is the only public parameter. The series use the nome exp(i*pi*tau);
// the triple products use exp(2*pi*i*tau) internally. Every power of the
// nome is computed as exp(i*pi*tau*e) with the explicit exponent e, never as
// pow(q, e): fractional powers of q would silently pick the principal branch
// and break the tau -> tau+1 transformation constant.

namespace ellident {

enum class ThetaKind { T1, T2, T3, T4 };

namespace detail {

inline void require_upper_tau(cplx tau) {
    if (!(tau.imag() > 0.0))
        throw std::domain_error("theta: Im(tau) must be positive");
    if (tau.imag() < 0.05)
        throw std::domain_error("theta: Im(tau) < 0.05 rejected");
}

// theta_k(z + (m + n*tau)*pi) = sign * q^{-n^2} e^{-2 i n z} theta_k(z)
inline double quasiperiod_sign(ThetaKind kind, long m, long n) {
    switch (kind) {
        case ThetaKind::T1: return ((m + n) % 2 == 0) ? 1.0 : -1.0;
        case ThetaKind::T2: return (m % 2 == 0) ? 1.0 : -1.0;
        case ThetaKind::T3: return 1.0;
        case ThetaKind::T4: return (n % 2 == 0) ? 1.0 : -1.0;
    }
    return 1.0;
}

// Raw series, summed term-wise; `order` differentiates each term in z.
inline cplx theta_series(ThetaKind kind, int order, cplx z, cplx tau,
                         const TruncationPolicy& pol) {
    const cplx ipt = iu * pi * tau;
    const double log_absq = -pi * tau.imag();  // log |nome|
    const double y = std::abs(z.imag());
    const double half_shift = order * pi / 2.0;  // d/dz sin(az) = a sin(az + pi/2)

    cplx sum{0.0, 0.0};
    double scale = 0.0;
    int quiet = 0;
    for (int n = 0;; ++n) {
        if (n >= pol.max_terms)
            throw convergence_error("theta: series did not settle within max_terms");
        cplx term;
        double bound;
        if (kind == ThetaKind::T1 || kind == ThetaKind::T2) {
            const double a = 2.0 * n + 1.0;
            const double e = (n + 0.5) * (n + 0.5);
            bound = 2.0 * std::exp(log_absq * e + a * y + order * std::log(a));
            cplx qpow = std::exp(ipt * e);
            cplx trig = (kind == ThetaKind::T1) ? std::sin(a * z + half_shift)
                                                : std::cos(a * z + half_shift);
            term = 2.0 * qpow * std::pow(a, order) * trig;
            if (kind == ThetaKind::T1 && (n % 2 == 1)) term = -term;
        } else {
            if (n == 0) {
                term = (order == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
                bound = 1.0;
            } else {
                const double a = 2.0 * n;
                const double e = static_cast<double>(n) * n;
                bound = 2.0 * std::exp(log_absq * e + a * y + order * std::log(a));
                cplx qpow = std::exp(ipt * e);
                term = 2.0 * qpow * std::pow(a, order) * std::cos(a * z + half_shift);
                if (kind == ThetaKind::T4 && (n % 2 == 1)) term = -term;
            }
        }
        sum += term;
        scale = std::max(scale, bound);
        if (n > 0 && bound < pol.series_tol * std::max(std::abs(sum), 1e-4 * scale)) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return sum;
}

}  // namespace detail

inline cplx theta(ThetaKind kind, cplx z, cplx tau, const TruncationPolicy& pol = {}) {
    pol.validate();
    detail::require_upper_tau(tau);
    // Reduce z modulo the quasi-period lattice: the raw series overflows for
    // large |Im z|, and the multiplier is explicit.
    long n_sh = std::lround(z.imag() / (pi * tau.imag()));
    cplx zr = z - static_cast<double>(n_sh) * pi * tau;
    long m_sh = std::lround(zr.real() / pi);
    zr -= static_cast<double>(m_sh) * pi;
    cplx value = detail::theta_series(kind, 0, zr, tau, pol);
    if (n_sh == 0 && m_sh == 0) return value;
    const double n = static_cast<double>(n_sh);
    cplx mult = detail::quasiperiod_sign(kind, m_sh, n_sh) *
                std::exp(-iu * pi * tau * (n * n) - 2.0 * iu * n * zr);
    return mult * value;
}

// Term-wise z-derivative of the series. No argument reduction is applied, so
// keep |Im z| moderate (all catalog uses evaluate at or near z = 0).
inline cplx theta_z_derivative(ThetaKind kind, int order, cplx z, cplx tau,
                               const TruncationPolicy& pol = {}) {
    pol.validate();
    detail::require_upper_tau(tau);
    if (order < 0 || order > 8)
        throw std::invalid_argument("theta_z_derivative: order must be in [0, 8]");
    return detail::theta_series(kind, order, z, tau, pol);
}

// theta1'(0|tau) = 2 q^{1/4} prod_{j>=1} (1 - q^{2j})^3, nome q = e^{i pi tau}.
inline cplx theta1_prime0_product(cplx tau, const TruncationPolicy& pol = {}) {
    pol.validate();
    detail::require_upper_tau(tau);
    const cplx q2 = std::exp(2.0 * iu * pi * tau);  // q^2
    cplx prod{1.0, 0.0};
    cplx q2j = q2;
    for (int j = 1;; ++j) {
        if (j > pol.max_terms)
            throw convergence_error("theta1_prime0_product: product did not settle");
        cplx f = 1.0 - q2j;
        prod *= f * f * f;
        if (std::abs(q2j) < pol.series_tol) break;
        q2j *= q2;
    }
    return 2.0 * std::exp(iu * pi * tau / 4.0) * prod;
}

// Right-hand side of the triple product for theta1:
//   theta1(pi z|tau) = i e^{pi i (tau/4 - z)} (x;q)(q/x;q)(q;q)
// with x = e^{2 pi i z} and q = e^{2 pi i tau} (NOT the module-wide nome).
inline cplx triple_product_theta1(cplx z, cplx tau, const TruncationPolicy& pol = {}) {
    pol.validate();
    detail::require_upper_tau(tau);
    const cplx Q = std::exp(2.0 * iu * pi * tau);
    const cplx X = std::exp(2.0 * iu * pi * z);
    const double xmag = std::max({std::abs(X), 1.0 / std::abs(X), 1.0});
    cplx prod = 1.0 - X;  // j = 0 factor of (x;q)
    cplx Qj = Q;
    for (int j = 1;; ++j) {
        if (j > pol.max_terms)
            throw convergence_error("triple_product_theta1: product did not settle");
        prod *= (1.0 - X * Qj) * (1.0 - Qj / X) * (1.0 - Qj);
        if (std::abs(Qj) * xmag < pol.series_tol) break;
        Qj *= Q;
    }
    return iu * std::exp(pi * iu * (tau / 4.0 - z)) * prod;
}

// theta3(pi z|tau) = prod_{n>=1} (1-q^n)(1 + q^{n-1/2} x)(1 + q^{n-1/2}/x),
// q = e^{2 pi i tau}; the half-integer powers are exp(i pi tau (2n-1)).
inline cplx triple_product_theta3(cplx z, cplx tau, const TruncationPolicy& pol = {}) {
    pol.validate();
    detail::require_upper_tau(tau);
    const cplx Q = std::exp(2.0 * iu * pi * tau);
    const cplx X = std::exp(2.0 * iu * pi * z);
    const double xmag = std::max({std::abs(X), 1.0 / std::abs(X), 1.0});
    cplx prod{1.0, 0.0};
    cplx Qn = Q;
    cplx H = std::exp(iu * pi * tau);  // q^{n-1/2} at n = 1
    for (int n = 1;; ++n) {
        if (n > pol.max_terms)
            throw convergence_error("triple_product_theta3: product did not settle");
        prod *= (1.0 - Qn) * (1.0 + H * X) * (1.0 + H / X);
        if (std::abs(H) * xmag < pol.series_tol && std::abs(Qn) < pol.series_tol) break;
        Qn *= Q;
        H *= Q;
    }
    return prod;
}

}  // namespace ellident

#endif
