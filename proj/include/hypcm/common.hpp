#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hypcm {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr cplx iu{0.0, 1.0};

// ---- error taxonomy ----------------------------------------------------

struct NonPositivePeriod : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfHalfPlane : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleOfGamma : std::domain_error {
    using std::domain_error::domain_error;
};
struct DomainViolation : std::domain_error {
    explicit DomainViolation(const std::string& what, std::string domain = {})
        : std::domain_error(what), violated_domain(std::move(domain)) {}
    std::string violated_domain;
};
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonFiniteSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};
struct NearDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownCheck : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- small helpers -----------------------------------------------------

inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline double sqr(double x) { return x * x; }

// Relative deviation |a-b| / max(|a|,|b|,floor).
inline double rel_dev(cplx a, cplx b, double floor_scale = 1e-300) {
    double s = std::max({std::abs(a), std::abs(b), floor_scale});
    return std::abs(a - b) / s;
}

// Worker count: hardware limit capped by the HYPCM_THREADS env variable.
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYPCM_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = std::min<long>(n, v);
    }
    return n;
}

// Index-parallel map with deterministic (index-ordered) results.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mtx;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mtx);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w + 1 < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace hypcm
