#pragma once

// Adaptive panel quadrature over horizontal complex lines, half-lines and
// planes.  Panel rule: 15-point Gauss-Kronrod with embedded Gauss-7 error
// estimate, bisection driven by a worst-panel heap.  Truncation of infinite
// ranges uses caller-supplied exponential decay hints with an empirically
// sampled amplitude.

#include <array>
#include <optional>
#include <queue>
#include <span>

#include "hypcm/common.hpp"
#include "hypcm/core.hpp"

namespace hypcm {

struct ContourSpec {
    int dim = 1;
    std::array<double, 2> im_offset{0.0, 0.0};
    std::array<std::optional<double>, 2> truncation{};  // half-width; empty = auto
    std::array<double, 2> decay_rate_hint{1.0, 1.0};    // 1/length units
    std::array<double, 2> center{0.0, 0.0};             // where the mass sits
    double truncation_cap = 1e4;

    static ContourSpec line(double offset, double decay_hint, double center = 0.0) {
        ContourSpec s;
        s.dim = 1;
        s.im_offset[0] = offset;
        s.decay_rate_hint[0] = decay_hint;
        s.center[0] = center;
        return s;
    }
    static ContourSpec plane(std::array<double, 2> offsets, std::array<double, 2> hints,
                             std::array<double, 2> centers = {0.0, 0.0}) {
        ContourSpec s;
        s.dim = 2;
        s.im_offset = offsets;
        s.decay_rate_hint = hints;
        s.center = centers;
        return s;
    }
};

struct IntegralResult {
    cplx value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
    std::array<double, 2> truncation_used{0.0, 0.0};
};

enum class PlaneRegion { FullPlane, WeylChamber, SymmetrizedHalf };

namespace quadrule {

// QUADPACK dqk15 abscissae/weights (positive half; last entry is the origin).
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelValue {
    cplx value;
    double error;
};

// One GK15 panel on [lo, hi]; throws NonFiniteSample on non-finite integrand.
template <class F>
PanelValue gk15(F&& f, double lo, double hi) {
    double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    cplx fc = f(c);
    if (!finite(fc)) throw NonFiniteSample("integrand not finite");
    cplx kron = wgk[7] * fc;
    cplx gauss = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        cplx fa = f(c - h * xgk[i]);
        cplx fb = f(c + h * xgk[i]);
        if (!finite(fa) || !finite(fb)) throw NonFiniteSample("integrand not finite");
        cplx s = fa + fb;
        kron += wgk[i] * s;
        if (i % 2 == 1) gauss += wg[i / 2] * s;
    }
    kron *= h;
    gauss *= h;
    double diff = std::abs(kron - gauss);
    // QUADPACK-style sharpening of the raw G-K difference
    double err = diff;
    if (diff > 0.0) err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(kron), 1e-300), 1.5));
    return {kron, std::max(err, std::abs(kron) * 5e-16)};
}

struct HeapPanel {
    double lo, hi;
    cplx value;
    double error;
    bool operator<(const HeapPanel& o) const { return error < o.error; }
};

// Adaptive bisection over a list of seed intervals.
template <class F>
IntegralResult adapt(F&& f, std::span<const std::array<double, 2>> seeds,
                     CheckTolerance tol, int max_evals) {
    std::priority_queue<HeapPanel> heap;
    cplx total = 0.0;
    double err = 0.0;
    int evals = 0, panels = 0;
    auto push = [&](double lo, double hi) {
        PanelValue pv = gk15(f, lo, hi);
        evals += 15;
        ++panels;
        total += pv.value;
        err += pv.error;
        heap.push(HeapPanel{lo, hi, pv.value, pv.error});
    };
    for (auto& s : seeds) push(s[0], s[1]);
    auto target = [&] { return std::max(tol.abs_tol, tol.rel_tol * std::abs(total)); };
    while (err > target() && evals + 30 <= max_evals && !heap.empty()) {
        HeapPanel worst = heap.top();
        heap.pop();
        total -= worst.value;
        err -= worst.error;
        double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {  // interval exhausted
            total += worst.value;
            err += worst.error;
            break;
        }
        push(worst.lo, mid);
        push(mid, worst.hi);
    }
    IntegralResult out;
    out.value = total;
    out.abs_error_estimate = err;
    out.panels = panels;
    out.converged = err <= target();
    return out;
}

}  // namespace quadrule

namespace detail {

// Solve C * exp(-rho*(T-center)) < tol_cut with C sampled conservatively.
template <class F>
double auto_halfwidth(F&& f, double center, double rho, double tol_cut, double cap) {
    rho = std::max(rho, 1e-12);
    double C = 0.0;
    for (double k : {0.0, 1.0, 2.0, 4.0, 8.0, 16.0}) {
        for (double sgn : {-1.0, 1.0}) {
            double t = center + sgn * k / rho;
            cplx v = f(t);
            if (finite(v)) C = std::max(C, std::abs(v) * std::exp(k));
            if (k == 0.0) break;
        }
    }
    if (C == 0.0) return 8.0 / rho;
    double T = std::log(std::max(C / std::max(tol_cut, 1e-300), 1.0)) / rho;
    return std::min(std::max(T, 8.0 / rho), cap);
}

inline std::vector<std::array<double, 2>> seed_intervals(double lo, double hi, int n) {
    std::vector<std::array<double, 2>> seeds;
    double h = (hi - lo) / n;
    for (int i = 0; i < n; ++i) seeds.push_back({lo + i * h, lo + (i + 1) * h});
    return seeds;
}

}  // namespace detail

// Integral of f over the full horizontal line (f takes the real coordinate;
// the imaginary offset in `spec` is bookkeeping for the caller).
template <class F>
IntegralResult integrate_line(F&& f, const ContourSpec& spec, CheckTolerance tol,
                              int max_evals = 20000) {
    double T;
    if (spec.truncation[0]) {
        T = *spec.truncation[0];
    } else {
        T = detail::auto_halfwidth(f, spec.center[0], spec.decay_rate_hint[0],
                                   tol.abs_tol / 10.0, spec.truncation_cap);
    }
    double lo = spec.center[0] - T, hi = spec.center[0] + T;
    int n0 = std::clamp(static_cast<int>((hi - lo) * spec.decay_rate_hint[0] / 4.0), 8, 64);
    auto seeds = detail::seed_intervals(lo, hi, n0);
    IntegralResult r = quadrule::adapt(f, seeds, tol, max_evals);
    r.truncation_used[0] = T;
    return r;
}

// Integral of f over (0, infty).  Below `crossover` the caller-supplied
// analytic small-argument expansion replaces f (the raw integrand is
// cancellation-prone there); past the truncation point the exponential tail
// is dropped per the decay hint.
template <class F, class G>
IntegralResult integrate_semiline(F&& f, G&& small_y_expansion, CheckTolerance tol,
                                  double crossover, double decay_hint,
                                  std::optional<double> truncation = {},
                                  int max_evals = 20000) {
    double T = truncation ? *truncation
                          : detail::auto_halfwidth(f, std::min(1.0 / std::max(decay_hint, 1e-12), 1e3),
                                                   decay_hint, tol.abs_tol / 10.0, 1e4);
    IntegralResult left;
    if (crossover > 0.0) {
        auto seeds = detail::seed_intervals(0.0, crossover, 2);
        left = quadrule::adapt(small_y_expansion, seeds, tol, max_evals / 4);
    }
    std::vector<std::array<double, 2>> seeds;
    // geometric seeds near the crossover, linear farther out
    double u = std::max(crossover, T * 1e-6);
    while (u < std::min(1.0 / std::max(decay_hint, 1e-12), T)) {
        double v = u * 2.0;
        seeds.push_back({u, std::min(v, T)});
        u = v;
    }
    if (u < T) {
        auto lin = detail::seed_intervals(u, T, std::clamp(static_cast<int>((T - u) * decay_hint / 4.0), 4, 48));
        seeds.insert(seeds.end(), lin.begin(), lin.end());
    }
    IntegralResult right = quadrule::adapt(f, seeds, tol, max_evals);
    IntegralResult out;
    out.value = left.value + right.value;
    out.abs_error_estimate = left.abs_error_estimate + right.abs_error_estimate;
    out.panels = left.panels + right.panels;
    out.converged = left.converged && right.converged;
    out.truncation_used[0] = T;
    return out;
}

// Iterated 2D integral.  Outer axis is the first argument of f.
template <class F2>
IntegralResult integrate_plane(F2&& f, const ContourSpec& spec, CheckTolerance tol,
                               PlaneRegion region = PlaneRegion::FullPlane,
                               int max_evals_per_axis = 20000) {
    std::array<double, 2> T;
    for (int ax : {0, 1}) {
        if (spec.truncation[ax]) {
            T[ax] = *spec.truncation[ax];
        } else {
            auto probe = [&](double t) {
                return ax == 0 ? f(t, spec.center[1]) : f(spec.center[0], t);
            };
            T[ax] = detail::auto_halfwidth(probe, spec.center[ax], spec.decay_rate_hint[ax],
                                           tol.abs_tol / 10.0, spec.truncation_cap);
        }
    }
    CheckTolerance inner_tol(tol.abs_tol / (8.0 * 2.0 * T[0]), tol.rel_tol / 8.0);
    double inner_err_budget = 2.0 * T[0] * inner_tol.abs_tol;

    double lo1 = spec.center[1] - T[1], hi1 = spec.center[1] + T[1];
    bool chamber = region == PlaneRegion::WeylChamber;
    int inner_panels = 0;
    bool inner_ok = true;
    auto outer_f = [&](double z1) -> cplx {
        double hi = chamber ? std::min(z1, hi1) : hi1;
        if (hi <= lo1) return 0.0;
        int n0 = std::clamp(static_cast<int>((hi - lo1) * spec.decay_rate_hint[1] / 4.0), 8, 64);
        auto seeds = detail::seed_intervals(lo1, hi, n0);
        auto g = [&](double z2) { return f(z1, z2); };
        IntegralResult r = quadrule::adapt(g, seeds, inner_tol, max_evals_per_axis);
        inner_panels += r.panels;
        inner_ok = inner_ok && r.converged;
        return r.value;
    };
    double lo0 = spec.center[0] - T[0], hi0 = spec.center[0] + T[0];
    int n0 = std::clamp(static_cast<int>((hi0 - lo0) * spec.decay_rate_hint[0] / 4.0), 8, 64);
    auto seeds = detail::seed_intervals(lo0, hi0, n0);
    IntegralResult r = quadrule::adapt(outer_f, seeds, tol, max_evals_per_axis);
    if (region == PlaneRegion::SymmetrizedHalf) {
        r.value *= 0.5;
        r.abs_error_estimate *= 0.5;
    }
    r.abs_error_estimate += inner_err_budget;
    r.converged = r.converged && inner_ok;
    r.panels += inner_panels;
    r.truncation_used = T;
    return r;
}

}  // namespace hypcm
