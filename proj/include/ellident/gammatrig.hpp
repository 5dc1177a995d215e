#ifndef ELLIDENT_GAMMATRIG_HPP
#define ELLIDENT_GAMMATRIG_HPP

#include <array>

#include "ellident/core.hpp"

// Gamma, digamma and trigamma on the complex plane via recurrence shifting
// into the region where the Stirling-type asymptotic series converges fast.
// One code path covers the whole tested domain (|z| <= 50 off the poles) with
// an error budget certifiable from the Bernoulli tail.

namespace ellident {

namespace detail {

// B_2, B_4, ..., B_24
inline constexpr std::array<double, 12> bernoulli2k = {
    1.0 / 6.0,       -1.0 / 30.0,      1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,  7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0};

inline void check_not_pole(cplx z, double guard) {
    double rz = std::round(z.real());
    if (rz <= 0.0 && std::abs(z - cplx{rz, 0.0}) < guard)
        throw pole_error("gammatrig: argument within " + std::to_string(guard) +
                         " of the pole at " + std::to_string(static_cast<long>(rz)));
}

// ln Gamma(w) for Re w >= shift_threshold, Stirling series with 12 Bernoulli terms.
inline cplx log_gamma_asymptotic(cplx w) {
    cplx result = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi);
    cplx w2 = w * w;
    cplx invp = 1.0 / w;  // w^{-(2k-1)}
    for (std::size_t k = 1; k <= bernoulli2k.size(); ++k) {
        result += bernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * invp;
        invp /= w2;
    }
    return result;
}

}  // namespace detail

inline cplx gamma_fn(cplx z, const GammaEvalConfig& cfg = {}) {
    cfg.validate();
    detail::check_not_pole(z, 1e-12);
    int shift = 0;
    while (z.real() + shift < cfg.shift_threshold) {
        ++shift;
        if (shift > cfg.series_terms)
            throw convergence_error("gamma_fn: recurrence budget exhausted");
    }
    cplx lg = detail::log_gamma_asymptotic(z + static_cast<double>(shift));
    cplx denom{1.0, 0.0};
    for (int k = 0; k < shift; ++k) denom *= z + static_cast<double>(k);
    return std::exp(lg) / denom;
}

inline cplx digamma(cplx z, const GammaEvalConfig& cfg = {}) {
    cfg.validate();
    detail::check_not_pole(z, 1e-12);
    cplx acc{0.0, 0.0};
    int shift = 0;
    while (z.real() + shift < cfg.shift_threshold) {
        acc -= 1.0 / (z + static_cast<double>(shift));
        ++shift;
        if (shift > cfg.series_terms)
            throw convergence_error("digamma: recurrence budget exhausted");
    }
    cplx w = z + static_cast<double>(shift);
    cplx result = std::log(w) - 0.5 / w;
    cplx w2 = w * w;
    cplx invp = 1.0 / w2;  // w^{-2k}
    for (std::size_t k = 1; k <= detail::bernoulli2k.size(); ++k) {
        result -= detail::bernoulli2k[k - 1] / (2.0 * k) * invp;
        invp /= w2;
    }
    return result + acc;
}

inline cplx trigamma(cplx z, const GammaEvalConfig& cfg = {}) {
    cfg.validate();
    detail::check_not_pole(z, 1e-12);
    cplx acc{0.0, 0.0};
    int shift = 0;
    while (z.real() + shift < cfg.shift_threshold) {
        cplx d = z + static_cast<double>(shift);
        acc += 1.0 / (d * d);
        ++shift;
        if (shift > cfg.series_terms)
            throw convergence_error("trigamma: recurrence budget exhausted");
    }
    cplx w = z + static_cast<double>(shift);
    cplx w2 = w * w;
    cplx result = 1.0 / w + 0.5 / w2;
    cplx invp = 1.0 / (w * w2);  // w^{-(2k+1)}
    for (std::size_t k = 1; k <= detail::bernoulli2k.size(); ++k) {
        result += detail::bernoulli2k[k - 1] * invp;
        invp /= w2;
    }
    return result + acc;
}

}  // namespace ellident

#endif
