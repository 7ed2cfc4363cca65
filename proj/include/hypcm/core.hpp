#pragma once

// Parameter bookkeeping, holomorphy-domain predicates and elementary helper
// functions shared by every other module.

#include <array>
#include <optional>
#include <span>

#include "hypcm/common.hpp"

namespace hypcm {

// The period pair (a_+, a_-) together with the derived quantities
//   alpha = 2*pi/(a_+ a_-),  a = (a_+ + a_-)/2,  a_s = min, a_l = max.
struct HyperbolicParams {
    double a_plus;
    double a_minus;
    double alpha;
    double a;
    double a_s;
    double a_l;

    // exp(pi z / a_l) and sinh(pi z / a_l)
    cplx e_l(cplx z) const { return std::exp(pi * z / a_l); }
    cplx s_l(cplx z) const { return std::sinh(pi * z / a_l); }

    // K_delta = ln(a_{-delta}/a_delta) / (2 a_delta); delta = +1 or -1.
    double K_delta(int delta) const {
        double ad = delta > 0 ? a_plus : a_minus;
        double amd = delta > 0 ? a_minus : a_plus;
        return std::log(amd / ad) / (2.0 * ad);
    }
    // K_l: the K_delta of the shift that steps by i*a_s (so a_delta = a_l).
    double K_l() const { return std::log(a_s / a_l) / (2.0 * a_l); }
    // Sign delta with a_{-delta} = a_s. For equal periods the two shift
    // directions coincide (K_l = 0) and we fix delta = +.
    int delta_short_shift() const { return (a_minus <= a_plus) ? +1 : -1; }
};

inline HyperbolicParams make_params(double a_plus, double a_minus) {
    if (!(a_plus > 0.0) || !(a_minus > 0.0))
        throw NonPositivePeriod("periods must be positive");
    HyperbolicParams p;
    p.a_plus = a_plus;
    p.a_minus = a_minus;
    p.alpha = 2.0 * pi / (a_plus * a_minus);
    p.a = 0.5 * (a_plus + a_minus);
    p.a_s = std::min(a_plus, a_minus);
    p.a_l = std::max(a_plus, a_minus);
    return p;
}

// Coupling b confined to the strip 0 < Re b < 2a.
struct Coupling {
    cplx b;
    Coupling(const HyperbolicParams& p, cplx b_) : b(b_) {
        if (!(b_.real() > 0.0) || !(b_.real() < 2.0 * p.a))
            throw DomainViolation("coupling outside the strip 0 < Re b < 2a", "S_a");
    }
};

inline bool in_S_a(const HyperbolicParams& p, cplx b) {
    return b.real() > 0.0 && b.real() < 2.0 * p.a;
}

// ---- domains -------------------------------------------------------------

enum class Domain {
    D2,          // (b,x):   |Im(x1-x2)| < 2a - Re b
    cD2,         // (b,x,y): D2 and |Im(y1-y2)| < Re b
    D3,          // (b,x):   max |Im(xj-xk)| < 2a - Re b
    D3r,         // (b,x):   |Im x~_j| < a - Re b/2
    cD3,         // (b,x,y): D3r and max |Im(yj-yk)| < Re b
    A2,          // x: v1-v2 > -Re b
    A2n,         // x: n=1: |v1-v2| < a_s+Re b; else A2 and v1-v2 < n a_s + Re b
    A3,          // x: vj-vk > -Re b for j<k
    A3n,         // as A2n, all pairs
    HalfstripS,  // b: Re b < eps (within S_a)
};

struct DomainId {
    Domain kind;
    int n = 0;          // used by A2n / A3n
    double eps = 0.0;   // used by HalfstripS
    static DomainId simple(Domain k) { return DomainId{k, 0, 0.0}; }
    static DomainId An(Domain k, int n) { return DomainId{k, n, 0.0}; }
    static DomainId halfstrip(double eps) { return DomainId{Domain::HalfstripS, 0, eps}; }
};

namespace detail {

inline double im_diff_max(std::span<const cplx> v) {
    double m = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t k = j + 1; k < v.size(); ++k)
            m = std::max(m, std::abs(std::imag(v[j] - v[k])));
    return m;
}

inline bool a_n_member(std::span<const cplx> x, double re_b, double a_s, int n) {
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = j + 1; k < x.size(); ++k) {
            double d = std::imag(x[j] - x[k]);
            if (n == 1) {
                if (!(std::abs(d) < a_s + re_b)) return false;
            } else {
                if (!(d > -re_b)) return false;
                if (!(d < n * a_s + re_b)) return false;
            }
        }
    return true;
}

}  // namespace detail

// Strict-inequality membership test; boundary points are outside.
inline bool domain_check(DomainId id, const HyperbolicParams& p, cplx b,
                         std::span<const cplx> x, std::span<const cplx> y = {}) {
    auto need = [&](std::size_t nx, std::size_t ny) {
        if (x.size() != nx || (ny > 0 && y.size() != ny))
            throw DimensionMismatch("domain_check: wrong vector length");
    };
    double rb = b.real();
    switch (id.kind) {
        case Domain::D2:
            need(2, 0);
            return in_S_a(p, b) && detail::im_diff_max(x) < 2.0 * p.a - rb;
        case Domain::cD2:
            need(2, 2);
            return domain_check(DomainId::simple(Domain::D2), p, b, x) &&
                   std::abs(std::imag(y[0] - y[1])) < rb;
        case Domain::D3:
            need(3, 0);
            return in_S_a(p, b) && detail::im_diff_max(x) < 2.0 * p.a - rb;
        case Domain::D3r: {
            need(3, 0);
            if (!in_S_a(p, b)) return false;
            cplx c = (x[0] + x[1] + x[2]) / 3.0;
            for (auto& xj : x)
                if (!(std::abs(std::imag(xj - c)) < p.a - 0.5 * rb)) return false;
            return true;
        }
        case Domain::cD3:
            need(3, 3);
            return domain_check(DomainId::simple(Domain::D3r), p, b, x) &&
                   detail::im_diff_max(y) < rb;
        case Domain::A2:
            need(2, 0);
            return std::imag(x[0] - x[1]) > -rb;
        case Domain::A2n:
            need(2, 0);
            return detail::a_n_member(x, rb, p.a_s, id.n);
        case Domain::A3: {
            need(3, 0);
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = j + 1; k < 3; ++k)
                    if (!(std::imag(x[j] - x[k]) > -rb)) return false;
            return true;
        }
        case Domain::A3n:
            need(3, 0);
            return detail::a_n_member(x, rb, p.a_s, id.n);
        case Domain::HalfstripS:
            return in_S_a(p, b) && rb < id.eps;
    }
    return false;
}

// ---- elementary formula helpers -------------------------------------------

// d_3(y) = min_{j<k} (y_j - y_k)
inline double d3(std::span<const double> y) {
    if (y.size() != 3) throw DimensionMismatch("d3 expects three components");
    return std::min({y[0] - y[1], y[0] - y[2], y[1] - y[2]});
}

// m(d) = min(2a - d, d) on (0, 2a)
inline double m_of_d(const HyperbolicParams& p, double d) {
    return std::min(2.0 * p.a - d, d);
}

// p_{kl} = k a_+ + l a_-
inline double p_kl(const HyperbolicParams& p, int k, int l) {
    return k * p.a_plus + l * p.a_minus;
}

// Center-of-mass split: returns (X, x~) with sum(x~) = 0.
template <std::size_t N>
struct ComSplit {
    cplx center;
    std::array<cplx, N> tilde;
};

template <std::size_t N>
inline ComSplit<N> com_split(const std::array<cplx, N>& x) {
    cplx c = 0.0;
    for (auto& xj : x) c += xj;
    c /= static_cast<double>(N);
    ComSplit<N> out;
    out.center = c;
    for (std::size_t j = 0; j < N; ++j) out.tilde[j] = x[j] - c;
    // nudge the mean to zero exactly; keeps differences intact up to rounding
    cplx resid = 0.0;
    for (auto& t : out.tilde) resid += t;
    out.tilde[N - 1] -= resid;
    return out;
}

// ---- tolerances ------------------------------------------------------------

struct CheckTolerance {
    double abs_tol;
    double rel_tol;
    CheckTolerance(double abs_t, double rel_t) : abs_tol(abs_t), rel_tol(rel_t) {
        if (!(abs_t > 0.0) || !(rel_t > 0.0))
            throw std::invalid_argument("tolerances must be positive");
    }
    static CheckTolerance rel(double r) { return CheckTolerance(r, r); }
};

}  // namespace hypcm
