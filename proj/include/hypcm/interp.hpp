#pragma once

// Piecewise Chebyshev interpolation of smooth complex-valued functions on a
// real interval.  The eigenfunction evaluators tabulate the 1D factors of
// their integrands once and replace repeated special-function calls in the
// quadrature inner loops with table lookups.

#include <vector>

#include "hypcm/common.hpp"

namespace hypcm {

class ChebTable {
  public:
    ChebTable() = default;

    // Build on [lo, hi] with panels no wider than `max_width`; `degree`+1
    // samples per panel.
    template <class F>
    ChebTable(F&& f, double lo, double hi, double max_width, int degree = 24)
        : lo_(lo), hi_(hi), deg_(degree) {
        int n_panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
        width_ = (hi - lo) / n_panels;
        coeffs_.resize(static_cast<std::size_t>(n_panels) * (deg_ + 1));
        std::vector<cplx> vals(deg_ + 1);
        std::vector<double> cosk(deg_ + 1);
        for (int k = 0; k <= deg_; ++k) cosk[k] = std::cos(pi * k / deg_);
        for (int p = 0; p < n_panels; ++p) {
            double a = lo + p * width_, b = a + width_;
            double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            for (int k = 0; k <= deg_; ++k) vals[k] = f(mid + half * cosk[k]);
            fit(&coeffs_[static_cast<std::size_t>(p) * (deg_ + 1)], vals);
        }
    }

    cplx operator()(double u) const {
        int p = static_cast<int>((u - lo_) / width_);
        p = std::clamp(p, 0, static_cast<int>(coeffs_.size() / (deg_ + 1)) - 1);
        double a = lo_ + p * width_;
        double t = 2.0 * (u - a) / width_ - 1.0;  // panel coordinate in [-1,1]
        const cplx* c = &coeffs_[static_cast<std::size_t>(p) * (deg_ + 1)];
        // Clenshaw
        cplx b1 = 0.0, b2 = 0.0;
        for (int k = deg_; k >= 1; --k) {
            cplx b0 = 2.0 * t * b1 - b2 + c[k];
            b2 = b1;
            b1 = b0;
        }
        return t * b1 - b2 + c[0];
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool covers(double u) const { return u >= lo_ && u <= hi_; }

  private:
    void fit(cplx* out, const std::vector<cplx>& vals) {
        // type-I Chebyshev coefficients from values at extrema nodes
        int n = deg_;
        for (int j = 0; j <= n; ++j) {
            cplx s = 0.5 * (vals[0] + (j % 2 == 0 ? vals[n] : -vals[n]));
            for (int k = 1; k < n; ++k) s += vals[k] * std::cos(pi * j * k / n);
            out[j] = s * (2.0 / n);
        }
        out[0] *= 0.5;
        out[n] *= 0.5;
    }

    double lo_ = 0.0, hi_ = 0.0, width_ = 1.0;
    int deg_ = 24;
    std::vector<cplx> coeffs_;
};

}  // namespace hypcm
