#pragma once

// The special-function core: principal-branch log-Gamma, the entire function
// E(z) with zeros on the ray i(a + k a_+ + l a_-), the hyperbolic gamma
// function G(z) = E(z)/E(-z), zero/pole catalogs with multiplicities, and the
// residue constant of G at z = -ia.
//
// E is evaluated from the integral for e(z) = log E(z) on Im z < a and
// continued upward with the shift equation
//   E(z + i a_{-d}/2) / E(z - i a_{-d}/2) = sqrt(2 pi) exp(i z K_d) / Gamma(i z / a_d + 1/2).

#include <optional>
#include <span>
#include <vector>

#include "hypcm/common.hpp"
#include "hypcm/core.hpp"
#include "hypcm/quad.hpp"

namespace hypcm {

// ---- principal-branch log-Gamma -------------------------------------------

namespace detail {

inline constexpr double lanczos_g = 4.7421875;  // 607/128
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

inline cplx log_gamma_right(cplx z) {
    // Re z >= 0.5
    cplx zm1 = z - 1.0;
    cplx s = lanczos_c[0];
    for (int k = 1; k < 15; ++k) s += lanczos_c[k] / (zm1 + static_cast<double>(k));
    cplx t = zm1 + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t + std::log(s);
}

}  // namespace detail

// Principal branch of log Gamma (continuous off the cut along the negative
// real axis, real on the positive reals).
inline cplx log_gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleOfGamma("log_gamma at a nonpositive integer");
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() >= 0.5) return detail::log_gamma_right(z);
    // reflection (Im z >= 0, Re z < 0.5), branch-corrected via 1 - e^{2 pi i z}
    return std::log(pi) + iu * pi * z - std::log(1.0 - std::exp(2.0 * pi * iu * z)) -
           iu * pi / 2.0 + std::log(2.0) - log_gamma(1.0 - z);
}

inline cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }
inline cplx rgamma_fn(cplx z) {  // 1/Gamma, zero at nonpositive integers
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) return 0.0;
    return std::exp(-log_gamma(z));
}

// ---- meromorphic value bookkeeping -----------------------------------------

struct MeroValue {
    enum class Kind { Finite, Zero, Pole };
    Kind kind = Kind::Finite;
    int order = 0;  // >= 1 for Zero/Pole
    cplx value{0.0, 0.0};
    double distance_to_singularity = std::numeric_limits<double>::infinity();

    static MeroValue finite(cplx v, double dist = std::numeric_limits<double>::infinity()) {
        return MeroValue{Kind::Finite, 0, v, dist};
    }
    static MeroValue zero(int order, double dist = 0.0) {
        return MeroValue{Kind::Zero, order, cplx{0.0, 0.0}, dist};
    }
    static MeroValue pole(int order, double dist = 0.0) {
        return MeroValue{Kind::Pole, order, cplx{0.0, 0.0}, dist};
    }
    bool is_finite() const { return kind != Kind::Pole; }
    // net order: zeros count positive, poles negative
    int net() const { return kind == Kind::Zero ? order : kind == Kind::Pole ? -order : 0; }

    static MeroValue from_net(int net, cplx v, double dist) {
        if (net > 0) return zero(net, dist);
        if (net < 0) return pole(-net, dist);
        return finite(v, dist);
    }
};

inline MeroValue operator*(const MeroValue& a, const MeroValue& b) {
    int net = a.net() + b.net();
    double dist = std::min(a.distance_to_singularity, b.distance_to_singularity);
    cplx v = a.value * b.value;
    if (net == 0 && (a.net() != 0 || b.net() != 0))
        v = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};  // 0*inf: kind known, value not
    return MeroValue::from_net(net, v, dist);
}

inline MeroValue operator/(const MeroValue& a, const MeroValue& b) {
    int net = a.net() - b.net();
    double dist = std::min(a.distance_to_singularity, b.distance_to_singularity);
    cplx v;
    if (b.net() != 0 || a.net() != 0) {
        if (net == 0)
            v = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
        else
            v = 0.0;
    } else {
        v = a.value / b.value;
    }
    return MeroValue::from_net(net, v, dist);
}

inline MeroValue operator*(cplx s, const MeroValue& a) {
    MeroValue r = a;
    r.value *= s;
    return r;
}

// ---- zero lattice -----------------------------------------------------------

struct LatticePoint {
    int k;
    int l;
    double p;   // k a_+ + l a_-
    int order;  // number of (m,n) with p_mn = p
};

namespace detail {

// continued-fraction rational reconstruction of x with denominator bound
inline std::optional<std::pair<long, long>> rational_approx(double x, long max_den,
                                                            double tol = 1e-12) {
    long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(x - static_cast<double>(p1) / q1) <= tol * std::max(1.0, std::abs(x)))
            return std::make_pair(p1, q1);
        if (frac == 0.0) break;
        double inv = 1.0 / frac;
        long an = static_cast<long>(std::floor(inv));
        frac = inv - std::floor(inv);
        long p2 = an * p1 + p0, q2 = an * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

// E1(x) for x >= 12, asymptotic series (relative error below the series'
// minimal term, which is ~sqrt(2 pi x) e^{-x})
inline double expint_e1_large(double x) {
    double term = 1.0, sum = 1.0;
    for (int n = 1; n <= 12; ++n) {
        double next = term * (-static_cast<double>(n) / x);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
    }
    return std::exp(-x) / x * sum;
}

}  // namespace detail

// ---- the hyperbolic gamma engine --------------------------------------------

class HypGamma {
  public:
    explicit HypGamma(const HyperbolicParams& p) : p_(p) {
        auto ratio = detail::rational_approx(p.a_plus / p.a_minus, 1000000);
        commensurate_ = ratio.has_value();
        if (commensurate_) {
            ratio_num_ = ratio->first;
            ratio_den_ = ratio->second;
        }
        build_rules();
    }

    const HyperbolicParams& params() const { return p_; }
    double snap_distance() const { return 1e-8 * p_.a_s; }
    bool commensurate() const { return commensurate_; }

    // ---- e(z) = log E(z) on Im z < a ----------------------------------

    // raw integrand of the e(z) representation (finite at y=0 only in exact
    // arithmetic; use the expansion below the crossover)
    cplx e_integrand(double y, cplx z) const {
        double shp = std::sinh(p_.a_plus * y), shm = std::sinh(p_.a_minus * y);
        cplx num = 1.0 - std::exp(-2.0 * iu * y * z);
        cplx br = num / (shp * shm) - 2.0 * iu * z / (p_.a_plus * p_.a_minus * y) -
                  z * z / (p_.a_plus * p_.a_minus) *
                      (std::exp(-2.0 * p_.a_plus * y) + std::exp(-2.0 * p_.a_minus * y));
        return br / (4.0 * y);
    }

    // 4-term Taylor form of the integrand, valid for y below ~1e-3 a_s
    cplx e_small_y_expansion(double y, cplx z) const {
        auto d = taylor_d(z);
        return (d[0] + y * (d[1] + y * (d[2] + y * d[3]))) / (4.0 * p_.a_plus * p_.a_minus);
    }

    // analytic tail of the integral past Y (algebraic part exact, the
    // exponential subtraction terms via E1; the oscillatory tail is below
    // 1e-19 once Y >= 21/(a - Im z))
    cplx e_tail_correction(double Y, cplx z) const {
        cplx t = -iu * z / (2.0 * p_.a_plus * p_.a_minus * Y);
        t -= z * z / (4.0 * p_.a_plus * p_.a_minus) *
             (detail::expint_e1_large(2.0 * p_.a_plus * Y) +
              detail::expint_e1_large(2.0 * p_.a_minus * Y));
        return t;
    }

    double e_truncation(cplx z) const {
        return std::max(21.0 / (p_.a - z.imag()), 8.0 / p_.a_s);
    }

    // e(z) with E(z)=exp(e(z)); requires Im z < a
    cplx log_E_strip(cplx z) const {
        if (!(z.imag() < p_.a)) throw OutOfHalfPlane("log_E_strip requires Im z < a");
        if (z.imag() <= p_.a - 0.5 * p_.a_s && std::abs(z.real()) <= 30.0 * p_.a)
            return e_fast(z);
        return e_adaptive(z);
    }

    // ---- E, G -----------------------------------------------------------

    // distance from z to the E-zero ray {i(a + p_kl)}
    double nearest_zero_distance(cplx z) const {
        double s = z.imag() - p_.a;
        double dp = nearest_lattice_gap(s);
        return std::hypot(z.real(), dp);
    }

    // multiplicity of the lattice value nearest to s = Im z - a (0 if none close)
    int lattice_order_near(double s) const {
        auto hit = nearest_lattice(s);
        if (!hit) return 0;
        return hit->order;
    }

    MeroValue E_entire(cplx z) const {
        double dist = nearest_zero_distance(z);
        if (dist <= snap_distance()) {
            int ord = lattice_order_near(z.imag() - p_.a);
            return MeroValue::zero(std::max(ord, 1), dist);
        }
        return MeroValue::finite(std::exp(log_E_entire(z)), dist);
    }

    // log E(z) away from zeros; ladders down into the strip with the shift
    // equation, choosing steps of size `step_large` ? a_l : canonical order.
    cplx log_E_entire(cplx z) const {
        cplx corr = 0.0;
        cplx w = z;
        double top = p_.a - 0.5 * p_.a_s;
        while (w.imag() > top) {
            int delta = (w.imag() - top > p_.a_l || p_.a_s == p_.a_l) ? delta_for_step_l()
                                                                      : delta_for_step_s();
            corr += ladder_log_factor(w, delta);
            w -= iu * step_of(delta);
        }
        return e_fast_or_adaptive(w) + corr;
    }

    // test hook: continuation with a forced sequence of shift signs
    cplx log_E_route(cplx z, std::span<const int> deltas) const {
        cplx corr = 0.0;
        cplx w = z;
        for (int d : deltas) {
            corr += ladder_log_factor(w, d);
            w -= iu * step_of(d);
        }
        if (!(w.imag() < p_.a)) throw OutOfHalfPlane("route does not reach the strip");
        return e_fast_or_adaptive(w) + corr;
    }

    MeroValue G(cplx z) const {
        double dz = nearest_zero_distance(z);   // zeros of G
        double dp = nearest_zero_distance(-z);  // poles of G
        double dist = std::min(dz, dp);
        if (dz <= snap_distance())
            return MeroValue::zero(std::max(lattice_order_near(z.imag() - p_.a), 1), dist);
        if (dp <= snap_distance())
            return MeroValue::pole(std::max(lattice_order_near(-z.imag() - p_.a), 1), dist);
        return MeroValue::finite(std::exp(log_E_entire(z) - log_E_entire(-z)), dist);
    }

    // log G(z); throws if z is within snap distance of a zero or pole
    cplx log_G(cplx z) const {
        if (std::min(nearest_zero_distance(z), nearest_zero_distance(-z)) <= snap_distance())
            throw DomainViolation("log_G at a zero/pole of G");
        return log_E_entire(z) - log_E_entire(-z);
    }

    // lim_{z->-ia} (-z - ia) G(z) = sqrt(a_+ a_-) / (2 pi i)
    cplx g_residue_minus_ia() const {
        return std::sqrt(p_.a_plus * p_.a_minus) / (2.0 * pi * iu);
    }

    std::vector<LatticePoint> zero_pole_catalog(double radius) const {
        if (!(radius >= 0.0)) throw std::invalid_argument("catalog radius must be >= 0");
        std::vector<LatticePoint> out;
        for (int k = 0; k * p_.a_plus <= radius + 1e-12 * p_.a_s; ++k)
            for (int l = 0; k * p_.a_plus + l * p_.a_minus <= radius + 1e-12 * p_.a_s; ++l)
                out.push_back(LatticePoint{k, l, p_kl(p_, k, l), pair_multiplicity(k, l)});
        std::sort(out.begin(), out.end(), [](const LatticePoint& x, const LatticePoint& y) {
            return x.p < y.p || (x.p == y.p && x.k < y.k);
        });
        return out;
    }

  private:
    // ---- lattice helpers -------------------------------------------------

    // min over (k,l) of |s - p_kl| (s <= 0 handled by the origin)
    double nearest_lattice_gap(double s) const {
        if (s <= 0.0) return -s;
        double best = s;  // (0,0)
        for (int k = 0; k * p_.a_plus <= s + p_.a_plus; ++k) {
            double rem = s - k * p_.a_plus;
            double l0 = std::floor(rem / p_.a_minus);
            for (double l : {l0, l0 + 1.0}) {
                if (l < 0.0) continue;
                best = std::min(best, std::abs(rem - l * p_.a_minus));
            }
        }
        return best;
    }

    struct LatticeHit {
        double p;
        int order;
    };
    std::optional<LatticeHit> nearest_lattice(double s) const {
        if (s < -0.5 * p_.a_s) return std::nullopt;
        double best = std::numeric_limits<double>::infinity();
        int bk = 0, bl = 0;
        for (int k = 0; k * p_.a_plus <= s + p_.a_plus; ++k) {
            double rem = s - k * p_.a_plus;
            double l0 = std::floor(rem / p_.a_minus);
            for (double l : {l0, l0 + 1.0, 0.0}) {
                if (l < 0.0) continue;
                double d = std::abs(rem - l * p_.a_minus);
                if (d < best) {
                    best = d;
                    bk = k;
                    bl = static_cast<int>(l);
                }
            }
        }
        if (!std::isfinite(best)) return std::nullopt;
        return LatticeHit{p_kl(p_, bk, bl), pair_multiplicity(bk, bl)};
    }

    int pair_multiplicity(int k, int l) const {
        if (!commensurate_) return 1;
        // p_kl = p_mn iff (m,n) = (k - t Q, l + t P), a_+/a_- = P/Q in lowest terms
        long P = ratio_num_, Q = ratio_den_;
        long t_hi = (Q > 0) ? (k / Q) : 0;
        long t_lo = (P > 0) ? -(l / P) : 0;
        return static_cast<int>(t_hi - t_lo + 1);
    }

    // ---- ladder ----------------------------------------------------------

    double step_of(int delta) const { return delta > 0 ? p_.a_minus : p_.a_plus; }
    int delta_for_step_l() const { return p_.a_minus >= p_.a_plus ? +1 : -1; }
    int delta_for_step_s() const { return p_.a_minus >= p_.a_plus ? -1 : +1; }

    // log of E(w)/E(w - i a_{-delta})
    cplx ladder_log_factor(cplx w, int delta) const {
        double ad = delta > 0 ? p_.a_plus : p_.a_minus;
        double amd = step_of(delta);
        cplx zeq = w - 0.5 * iu * amd;  // midpoint argument of the shift equation
        return 0.5 * std::log(2.0 * pi) - log_gamma(iu * zeq / ad + 0.5) +
               iu * zeq * p_.K_delta(delta);
    }

    // ---- fixed quadrature rules for e(z) ----------------------------------

    struct Node {
        double y, pre1, pre2r, pre3;  // weights folded in
    };
    struct RulePanel {
        double lo, hi;
        std::size_t node_begin, node_end;
    };
    struct Rule {
        double re_max;
        std::vector<Node> nodes;
        std::vector<RulePanel> panels;  // ascending
    };

    std::array<cplx, 4> taylor_d(cplx z) const {
        cplx w = 2.0 * iu * z;
        double ap = p_.a_plus, am = p_.a_minus;
        double s2 = (ap * ap + am * am) / 6.0;
        double s4 = std::pow(ap, 4) / 120.0 + ap * ap * am * am / 36.0 + std::pow(am, 4) / 120.0;
        double q2 = -s2, q4 = s2 * s2 - s4;
        cplx w2 = w * w, w3 = w2 * w, w4 = w3 * w, w5 = w4 * w, w6 = w5 * w;
        return {w3 / 6.0 + q2 * w - (ap + am) * w2 / 2.0,
                -w4 / 24.0 - q2 * w2 / 2.0 + (ap * ap + am * am) * w2 / 2.0,
                w5 / 120.0 + q2 * w3 / 6.0 + q4 * w - (std::pow(ap, 3) + std::pow(am, 3)) * w2 / 3.0,
                -w6 / 720.0 - q2 * w4 / 24.0 - q4 * w2 / 2.0 +
                    (std::pow(ap, 4) + std::pow(am, 4)) * w2 / 6.0};
    }

    cplx taylor_segment(cplx z, double yc) const {
        auto d = taylor_d(z);
        return (d[0] * yc + d[1] * yc * yc / 2.0 + d[2] * yc * yc * yc / 3.0 +
                d[3] * yc * yc * yc * yc / 4.0) /
               (4.0 * p_.a_plus * p_.a_minus);
    }

    void build_rules() {
        const double yc = 1e-3 * p_.a_s;
        const double y_end = 42.0 / p_.a_s;
        for (double rmax : {4.0 * p_.a, 12.0 * p_.a, 30.0 * p_.a}) {
            Rule rule;
            rule.re_max = rmax;
            // panel width capped by the e^{-2iyz} oscillation (~0.8 periods
            // per panel) and by the hyperbolic scale of the integrand
            double w_osc = 0.8 * pi / rmax;
            double w_smooth = 0.35 * std::min(1.0 / p_.a, 4.0 / p_.a_s);
            double width = std::min(w_osc, w_smooth);
            std::vector<std::array<double, 2>> panels;
            double y = yc;
            while (y < y_end) {  // geometric near 0, linear after
                double next = std::min(std::min(y * 1.9, y + width), y_end);
                panels.push_back({y, next});
                y = next;
            }
            for (auto& pa : panels) {
                RulePanel rp;
                rp.lo = pa[0];
                rp.hi = pa[1];
                rp.node_begin = rule.nodes.size();
                double c = 0.5 * (pa[0] + pa[1]), h = 0.5 * (pa[1] - pa[0]);
                for (int i = 0; i < 15; ++i) {
                    double t = (i < 7)    ? c - h * quadrule::xgk[i]
                               : (i < 14) ? c + h * quadrule::xgk[i - 7]
                                          : c;
                    double wq = (i == 14) ? quadrule::wgk[7] : quadrule::wgk[i % 7];
                    wq *= h;
                    Node n;
                    n.y = t;
                    double shp = std::sinh(p_.a_plus * t), shm = std::sinh(p_.a_minus * t);
                    n.pre1 = wq / (4.0 * t * shp * shm);
                    n.pre2r = wq / (2.0 * p_.a_plus * p_.a_minus * t * t);  // times (-i z)
                    n.pre3 = wq * (std::exp(-2.0 * p_.a_plus * t) + std::exp(-2.0 * p_.a_minus * t)) /
                             (4.0 * p_.a_plus * p_.a_minus * t);
                    rule.nodes.push_back(n);
                }
                rp.node_end = rule.nodes.size();
                rule.panels.push_back(rp);
            }
            rules_.push_back(std::move(rule));
        }
    }

    cplx e_fast(cplx z) const {
        const Rule* rule = &rules_.back();
        for (auto& r : rules_)
            if (std::abs(z.real()) <= r.re_max) {
                rule = &r;
                break;
            }
        const double yc = 1e-3 * p_.a_s;
        double y_break = e_truncation(z);
        cplx sum = taylor_segment(z, yc);
        cplx m2iz = -2.0 * iu * z;
        cplx miz = -iu * z;
        cplx zz = z * z;
        double Y = yc;
        for (const RulePanel& pa : rule->panels) {
            if (pa.lo >= y_break) break;  // whole panels only
            for (std::size_t i = pa.node_begin; i < pa.node_end; ++i) {
                const Node& n = rule->nodes[i];
                sum += (1.0 - std::exp(m2iz * n.y)) * n.pre1 + miz * n.pre2r - zz * n.pre3;
            }
            Y = pa.hi;
        }
        return sum + e_tail_correction(Y, z);
    }

    cplx e_adaptive(cplx z) const {
        const double yc = 1e-3 * p_.a_s;
        double Y = e_truncation(z);
        auto f = [&](double y) { return e_integrand(y, z); };
        auto fx = [&](double y) { return e_small_y_expansion(y, z); };
        IntegralResult r = integrate_semiline(f, fx, CheckTolerance(1e-14, 1e-13), yc,
                                              2.0 * (p_.a - std::max(z.imag(), 0.0)), Y, 200000);
        return r.value + e_tail_correction(Y, z);
    }

    cplx e_fast_or_adaptive(cplx z) const {
        if (z.imag() <= p_.a - 0.5 * p_.a_s && std::abs(z.real()) <= 30.0 * p_.a)
            return e_fast(z);
        return e_adaptive(z);
    }

    HyperbolicParams p_;
    bool commensurate_ = false;
    long ratio_num_ = 0, ratio_den_ = 1;
    std::vector<Rule> rules_;
};

}  // namespace hypcm
