#ifndef ELLIDENT_LEMMA_HPP
#define ELLIDENT_LEMMA_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "ellident/core.hpp"

// Numerical zero/pole bookkeeping for pairs of meromorphic functions:
// locate zeros and poles in a rectangle by winding-number quadrature of f'/f,
// match two zero/pole multisets, compare n-th logarithmic derivatives, fit
// the residual exponential-polynomial factor of a ratio, and probe the decay
// of ln(f)/(z-a)^{n+1} contour integrals over growing rectangles.

namespace ellident {

struct FunctionHandle {
    std::function<cplx(cplx)> evaluate;
    std::function<cplx(cplx)> derivative;  // optional; must match evaluate if set
    std::string label;
};

struct Region {
    cplx lower_left, upper_right;

    void validate() const {
        if (!(lower_left.real() < upper_right.real() && lower_left.imag() < upper_right.imag()))
            throw std::invalid_argument("Region: lower_left must be strictly south-west of upper_right");
    }
    double width() const { return upper_right.real() - lower_left.real(); }
    double height() const { return upper_right.imag() - lower_left.imag(); }
    cplx center() const { return 0.5 * (lower_left + upper_right); }
};

// order > 0: zero of that order; order < 0: pole.
struct ZeroPoleRecord {
    cplx location;
    int order;
};

struct MatchReport {
    struct Pair {
        ZeroPoleRecord left, right;
        double distance;
    };
    std::vector<Pair> matched_pairs;
    std::vector<ZeroPoleRecord> unmatched_left, unmatched_right;
    bool success = false;
};

namespace detail {

inline constexpr std::array<double, 6> gl12_nodes = {
    0.1252334085114689, 0.3678314989981802, 0.5873179542866175,
    0.7699026741943047, 0.9041172563704749, 0.9815606342467192};
inline constexpr std::array<double, 6> gl12_weights = {
    0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
    0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

template <typename F>
cplx gauss12(F&& g, cplx a, cplx b) {
    cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < gl12_nodes.size(); ++i) {
        acc += gl12_weights[i] * (g(mid + gl12_nodes[i] * half) + g(mid - gl12_nodes[i] * half));
    }
    return acc * half;
}

// Adaptive bisection on one straight edge. Sets ok=false when the two-level
// estimates refuse to agree, which in practice means a singularity sits on or
// numerically on the edge.
template <typename F>
cplx integrate_edge(F&& g, cplx a, cplx b, double tol, int depth, bool& ok) {
    cplx whole = gauss12(g, a, b);
    cplx mid = 0.5 * (a + b);
    cplx split = gauss12(g, a, mid) + gauss12(g, mid, b);
    if (!finite(whole) || !finite(split)) {
        ok = false;
        return split;
    }
    if (std::abs(whole - split) <= tol) return split;
    if (depth <= 0) {
        ok = false;
        return split;
    }
    return integrate_edge(g, a, mid, 0.5 * tol, depth - 1, ok) +
           integrate_edge(g, mid, b, 0.5 * tol, depth - 1, ok);
}

struct LogDeriv {
    const FunctionHandle* f;
    double h;
    cplx operator()(cplx z) const {
        cplx fv = f->evaluate(z);
        if (f->derivative) return f->derivative(z) / fv;
        cplx d1 = (f->evaluate(z + h) - f->evaluate(z - h)) / (2.0 * h);
        cplx d2 = (f->evaluate(z + 0.5 * h) - f->evaluate(z - 0.5 * h)) / h;
        return ((4.0 * d2 - d1) / 3.0) / fv;
    }
};

// Winding number of f around the rectangle [lo, hi]; nullopt = did not settle.
inline std::optional<double> winding(const FunctionHandle& f, cplx lo, cplx hi, double h) {
    LogDeriv ld{&f, h};
    std::array<cplx, 5> c = {lo, cplx{hi.real(), lo.imag()}, hi, cplx{lo.real(), hi.imag()}, lo};
    cplx total{0.0, 0.0};
    for (int e = 0; e < 4; ++e) {
        bool ok = true;
        total += integrate_edge(ld, c[e], c[e + 1], 2e-5, 13, ok);
        if (!ok) return std::nullopt;
    }
    cplx w = total / (2.0 * pi * iu);
    double rounded = std::round(w.real());
    if (std::abs(w - cplx{rounded, 0.0}) >= 0.2) return std::nullopt;
    return rounded;  // exact integer value; callers compare windings exactly
}

// Raw (unrounded) winding estimate, for integrality diagnostics.
inline std::optional<cplx> winding_raw(const FunctionHandle& f, cplx lo, cplx hi, double h) {
    LogDeriv ld{&f, h};
    std::array<cplx, 5> c = {lo, cplx{hi.real(), lo.imag()}, hi, cplx{lo.real(), hi.imag()}, lo};
    cplx total{0.0, 0.0};
    for (int e = 0; e < 4; ++e) {
        bool ok = true;
        total += integrate_edge(ld, c[e], c[e + 1], 2e-5, 13, ok);
        if (!ok) return std::nullopt;
    }
    return total / (2.0 * pi * iu);
}

inline void validate_derivative(const FunctionHandle& f, const std::vector<cplx>& probes) {
    if (!f.derivative) return;
    for (cplx z : probes) {
        cplx fv = f.evaluate(z);
        if (!finite(fv)) continue;
        double h = 1e-6 * (1.0 + std::abs(z));
        cplx num = (f.evaluate(z + h) - f.evaluate(z - h)) / (2.0 * h);
        cplx num2 = (f.evaluate(z + 0.5 * h) - f.evaluate(z - 0.5 * h)) / h;
        cplx est = (4.0 * num2 - num) / 3.0;
        cplx an = f.derivative(z);
        if (!finite(est) || !finite(an)) continue;
        double scale = std::max({std::abs(an), std::abs(est), 1e-8 * std::abs(fv), 1e-12});
        if (std::abs(an - est) > 1e-6 * scale)
            throw std::invalid_argument("FunctionHandle '" + f.label +
                                        "': derivative disagrees with central differences");
        return;  // one clean probe is enough
    }
}

inline const std::array<cplx, 4> grid_jitters = {cplx{0.0137, 0.0082}, cplx{0.0261, 0.0173},
                                                 cplx{-0.0189, 0.0097}, cplx{0.0083, -0.0147}};

struct Locator {
    const FunctionHandle& f;
    double tol;
    double h;
    std::vector<ZeroPoleRecord> records;

    void subdivide(cplx lo, cplx hi, double w_parent) {
        double diam = std::max(hi.real() - lo.real(), hi.imag() - lo.imag());
        if (diam < tol) {
            records.push_back({0.5 * (lo + hi), static_cast<int>(std::lround(w_parent))});
            return;
        }
        for (cplx off : grid_jitters) {
            cplx mid = 0.5 * (lo + hi) + cplx{off.real() * (hi.real() - lo.real()),
                                              off.imag() * (hi.imag() - lo.imag())};
            std::array<std::pair<cplx, cplx>, 4> kids = {
                std::pair<cplx, cplx>{lo, mid},
                {cplx{mid.real(), lo.imag()}, cplx{hi.real(), mid.imag()}},
                {cplx{lo.real(), mid.imag()}, cplx{mid.real(), hi.imag()}},
                {mid, hi}};
            std::vector<std::pair<int, double>> found;  // kid index, winding
            double sum = 0.0, abs_sum = 0.0;
            bool settled = true;
            for (int k = 0; k < 4; ++k) {
                auto w = winding(f, kids[k].first, kids[k].second, h);
                if (!w) {
                    settled = false;
                    break;
                }
                if (*w != 0.0) found.push_back({k, *w});
                sum += *w;
                abs_sum += std::abs(*w);
                if (sum == w_parent && abs_sum == std::abs(w_parent)) break;
            }
            if (!settled || sum != w_parent) continue;  // retry with next split offset
            for (auto [k, w] : found) subdivide(kids[k].first, kids[k].second, w);
            return;
        }
        throw numeric_error("locate_zeros_poles: subdivision failed to settle near " +
                            std::to_string(lo.real()) + "+" + std::to_string(lo.imag()) + "i");
    }
};

}  // namespace detail

// Partitions the region into cells (interior grid lines jittered by a fixed
// irrational offset), computes the winding number of f on each cell boundary,
// and subdivides nonzero cells until their diameter drops below tol. Each
// surviving cell becomes one record with order = rounded winding.
inline std::vector<ZeroPoleRecord> locate_zeros_poles(const FunctionHandle& f,
                                                      const Region& region, double cell_size,
                                                      double tol) {
    region.validate();
    if (!(cell_size > 0.0) || !(tol > 0.0))
        throw std::invalid_argument("locate_zeros_poles: cell_size and tol must be positive");
    detail::validate_derivative(
        f, {region.center(), region.center() + cplx{0.21 * region.width(), 0.13 * region.height()},
            region.center() - cplx{0.17 * region.width(), 0.23 * region.height()}});

    const double h = 1e-5 * cell_size;
    const int nx = std::max(1, static_cast<int>(std::ceil(region.width() / (0.95 * cell_size))));
    const int ny = std::max(1, static_cast<int>(std::ceil(region.height() / (0.95 * cell_size))));
    const double sx = region.width() / nx, sy = region.height() / ny;

    std::string last_error = "no cells";
    for (cplx jit : detail::grid_jitters) {
        // Interior boundaries shifted off the regular grid; outer boundary fixed.
        std::vector<double> xs{region.lower_left.real()}, ys{region.lower_left.imag()};
        for (int i = 1; i < nx; ++i) xs.push_back(region.lower_left.real() + i * sx + jit.real() * cell_size);
        xs.push_back(region.upper_right.real());
        for (int j = 1; j < ny; ++j) ys.push_back(region.lower_left.imag() + j * sy + jit.imag() * cell_size);
        ys.push_back(region.upper_right.imag());

        detail::Locator loc{f, tol, h, {}};
        bool failed = false;
        try {
            for (int j = 0; j < ny && !failed; ++j)
                for (int i = 0; i < nx; ++i) {
                    cplx lo{xs[i], ys[j]}, hi{xs[i + 1], ys[j + 1]};
                    auto w = detail::winding(f, lo, hi, h);
                    if (!w) {
                        failed = true;
                        break;
                    }
                    if (*w != 0.0) loc.subdivide(lo, hi, *w);
                }
        } catch (const numeric_error& e) {
            last_error = e.what();
            failed = true;
        }
        if (!failed) {
            std::sort(loc.records.begin(), loc.records.end(), [](const auto& a, const auto& b) {
                return std::tie(a.location.real(), a.location.imag()) <
                       std::tie(b.location.real(), b.location.imag());
            });
            return loc.records;
        }
    }
    throw numeric_error("locate_zeros_poles: winding quadrature failed to settle after jitter "
                        "retries (suspected zero/pole on a cell boundary): " + last_error);
}

// Greedy nearest-neighbor matching; orders must agree exactly. Tolerances in
// the catalog are far below inter-point spacing, so a greedy pass is exact.
inline MatchReport match_records(std::vector<ZeroPoleRecord> a, std::vector<ZeroPoleRecord> b,
                                 double tol) {
    MatchReport rep;
    struct Cand {
        double dist;
        std::size_t i, j;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (a[i].order == b[j].order)
                cands.push_back({std::abs(a[i].location - b[j].location), i, j});
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.dist < y.dist; });
    std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
    for (const Cand& c : cands) {
        if (used_a[c.i] || used_b[c.j] || c.dist >= tol) continue;
        used_a[c.i] = used_b[c.j] = true;
        rep.matched_pairs.push_back({a[c.i], b[c.j], c.dist});
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!used_a[i]) rep.unmatched_left.push_back(a[i]);
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!used_b[j]) rep.unmatched_right.push_back(b[j]);
    rep.success = rep.unmatched_left.empty() && rep.unmatched_right.empty();
    return rep;
}

// d^n/dz^n ln f at z. n = 1 returns f'/f directly; higher orders come from
// central-difference stencils on f'/f with one Richardson extrapolation step,
// cross-checked at two step sizes.
inline cplx log_derivative(const FunctionHandle& f, cplx z, int n, double h) {
    if (n < 1 || n > 4) throw std::invalid_argument("log_derivative: n must be in [1, 4]");
    if (!(h > 0.0)) throw std::invalid_argument("log_derivative: h must be positive");
    detail::LogDeriv ld{&f, 0.25 * h};
    if (n == 1) return ld(z);
    const int m = n - 1;
    auto stencil = [&](double s) -> cplx {
        switch (m) {
            case 1: return (ld(z + s) - ld(z - s)) / (2.0 * s);
            case 2: return (ld(z + s) - 2.0 * ld(z) + ld(z - s)) / (s * s);
            default:
                return (ld(z + 2.0 * s) - 2.0 * ld(z + s) + 2.0 * ld(z - s) - ld(z - 2.0 * s)) /
                       (2.0 * s * s * s);
        }
    };
    auto richardson = [&](double s) { return (4.0 * stencil(0.5 * s) - stencil(s)) / 3.0; };
    cplx r1 = richardson(h), r2 = richardson(0.5 * h);
    if (std::abs(r1 - r2) > 1e-5 * std::max(std::abs(r2), 1e-10))
        throw numeric_error("log_derivative: Richardson extrapolation unstable (decrease h or "
                            "move away from zeros/poles)");
    return r2;
}

struct LogFitResult {
    std::vector<cplx> coefficients;  // c0, c1, ..., c_degree
    double residual;
};

// Samples ln(f/g) along a closed rectangular loop inset into the region, with
// path-ordered branch tracking, and least-squares fits a polynomial of the
// requested degree. The ratio must be zero- and pole-free on the loop.
inline LogFitResult fit_log_polynomial(const FunctionHandle& f, const FunctionHandle& g,
                                       const Region& region, int degree, int samples) {
    region.validate();
    if (degree < 0 || degree > 2) throw std::invalid_argument("fit_log_polynomial: degree must be <= 2");
    const double mx = 0.2 * region.width(), my = 0.2 * region.height();
    const cplx a = region.lower_left + cplx{mx, my};
    const cplx b = region.upper_right - cplx{mx, my};
    std::array<cplx, 4> corner = {a, cplx{b.real(), a.imag()}, b, cplx{a.real(), b.imag()}};

    int n_samples = std::max(samples, 8 * (degree + 1));
    for (; n_samples <= (1 << 14); n_samples *= 2) {
        std::vector<cplx> zs(n_samples), hs(n_samples);
        for (int k = 0; k < n_samples; ++k) {
            double t = 4.0 * k / n_samples;
            int e = static_cast<int>(t);
            zs[k] = corner[e] + (t - e) * (corner[(e + 1) % 4] - corner[e]);
        }
        bool coarse = false;
        cplx prev_ratio;
        for (int k = 0; k < n_samples; ++k) {
            cplx r = f.evaluate(zs[k]) / g.evaluate(zs[k]);
            if (!detail::finite(r) || r == cplx{0.0, 0.0})
                throw numeric_error("fit_log_polynomial: ratio vanished or blew up on the path");
            if (k == 0) {
                hs[0] = std::log(r);
            } else {
                cplx step = std::log(r / prev_ratio);
                if (std::abs(step.imag()) >= pi / 2.0) {
                    coarse = true;
                    break;
                }
                hs[k] = hs[k - 1] + step;
            }
            prev_ratio = r;
        }
        if (coarse) continue;  // double the sample count

        // Least squares in the centered variable for conditioning.
        cplx z0 = region.center();
        const int d = degree + 1;
        std::array<std::array<cplx, 4>, 3> ata{};
        std::array<cplx, 3> atb{};
        for (int k = 0; k < n_samples; ++k) {
            std::array<cplx, 3> row{cplx{1.0, 0.0}, zs[k] - z0, (zs[k] - z0) * (zs[k] - z0)};
            for (int r = 0; r < d; ++r) {
                for (int c = 0; c < d; ++c) ata[r][c] += std::conj(row[r]) * row[c];
                atb[r] += std::conj(row[r]) * hs[k];
            }
        }
        // Gaussian elimination with partial pivoting on the (d x d) system.
        for (int col = 0; col < d; ++col) {
            int piv = col;
            for (int r = col + 1; r < d; ++r)
                if (std::abs(ata[r][col]) > std::abs(ata[piv][col])) piv = r;
            if (std::abs(ata[piv][col]) < 1e-12)
                throw numeric_error("fit_log_polynomial: rank-deficient sample set");
            std::swap(ata[col], ata[piv]);
            std::swap(atb[col], atb[piv]);
            for (int r = 0; r < d; ++r) {
                if (r == col) continue;
                cplx fac = ata[r][col] / ata[col][col];
                for (int c = col; c < d; ++c) ata[r][c] -= fac * ata[col][c];
                atb[r] -= fac * atb[col];
            }
        }
        std::array<cplx, 3> w{};
        for (int r = 0; r < d; ++r) w[r] = atb[r] / ata[r][r];
        // Translate back from (z - z0) powers to plain powers of z.
        LogFitResult out;
        out.coefficients.assign(static_cast<std::size_t>(d), cplx{0.0, 0.0});
        out.coefficients[0] = w[0];
        if (degree >= 1) out.coefficients[1] = w[1];
        if (degree >= 2) {
            out.coefficients[2] = w[2];
            out.coefficients[1] -= 2.0 * w[2] * z0;
            out.coefficients[0] += w[2] * z0 * z0;
        }
        if (degree >= 1) out.coefficients[0] -= w[1] * z0;
        out.residual = 0.0;
        for (int k = 0; k < n_samples; ++k) {
            cplx p{0.0, 0.0};
            for (int r = d - 1; r >= 0; --r) p = p * zs[k] + out.coefficients[r];
            out.residual = std::max(out.residual, std::abs(hs[k] - p));
        }
        return out;
    }
    throw numeric_error("fit_log_polynomial: branch tracking needs steps >= pi/2 even at the "
                        "maximum sample count (path too coarse)");
}

// Integrates ln(f)/(z-a)^{n+1} over square contours centered at a with the
// given half-sizes, branch-tracking ln f along each contour. For pairs (f, n)
// satisfying the decay hypothesis the magnitudes shrink as the contours grow.
inline std::vector<cplx> contour_decay_probe(const FunctionHandle& f, cplx a, int n,
                                             const std::vector<double>& half_sizes) {
    if (n < 1) throw std::invalid_argument("contour_decay_probe: n must be >= 1");
    std::vector<cplx> out;
    out.reserve(half_sizes.size());
    for (std::size_t idx = 0; idx < half_sizes.size(); ++idx) {
        const double s = half_sizes[idx];
        if (!(s > 0.0)) throw std::invalid_argument("contour_decay_probe: half sizes must be positive");
        std::array<cplx, 5> c = {a + cplx{-s, -s}, a + cplx{s, -s}, a + cplx{s, s},
                                 a + cplx{-s, s}, a + cplx{-s, -s}};
        cplx prev_estimate{0.0, 0.0};
        bool have_prev = false;
        for (int m = 512; m <= (1 << 14); m *= 2) {
            // Composite Simpson over m intervals per edge, shared tracked log.
            bool coarse = false;
            cplx total{0.0, 0.0};
            cplx prev_val;
            cplx prev_log;
            bool first = true;
            for (int e = 0; e < 4 && !coarse; ++e) {
                std::vector<cplx> vals(m + 1);
                for (int k = 0; k <= m; ++k) {
                    cplx z = c[e] + (static_cast<double>(k) / m) * (c[e + 1] - c[e]);
                    cplx fv = f.evaluate(z);
                    if (fv == cplx{0.0, 0.0} || !detail::finite(fv))
                        throw numeric_error("contour_decay_probe: singular boundary sample");
                    cplx lg;
                    if (first) {
                        lg = std::log(fv);
                        first = false;
                    } else {
                        cplx step = std::log(fv / prev_val);
                        if (std::abs(step.imag()) >= pi / 2.0) {
                            coarse = true;
                            break;
                        }
                        lg = prev_log + step;
                    }
                    prev_val = fv;
                    prev_log = lg;
                    cplx dz = z - a;
                    cplx denom{1.0, 0.0};
                    for (int t = 0; t < n + 1; ++t) denom *= dz;
                    vals[k] = lg / denom;
                }
                if (coarse) break;
                cplx edge{0.0, 0.0};
                for (int k = 0; k + 2 <= m; k += 2) edge += vals[k] + 4.0 * vals[k + 1] + vals[k + 2];
                edge *= (c[e + 1] - c[e]) / (3.0 * m);
                total += edge;
            }
            if (coarse) continue;
            if (have_prev && std::abs(total - prev_estimate) <=
                                 1e-6 * std::max(1e-6, std::abs(total))) {
                out.push_back(total);
                break;
            }
            prev_estimate = total;
            have_prev = true;
            if (m == (1 << 14)) out.push_back(total);
        }
        if (out.size() != idx + 1)
            throw numeric_error("contour_decay_probe: branch tracking failed to settle");
    }
    return out;
}

}  // namespace ellident

#endif
