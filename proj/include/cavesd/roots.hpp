// Bracketing bisection and golden-section search.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

namespace cavesd::roots {

inline constexpr double kBisectionTol = 1e-10;
inline constexpr int kBisectionMaxIter = 200;
inline constexpr double kGoldenTol = 1e-4;

// Root of f in [lo, hi] where f(lo) and f(hi) differ in sign (or one is 0).
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = kBisectionTol, int max_iter = kBisectionMaxIter) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw std::domain_error("bisect: no sign change in bracket");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Transition point of a predicate that is false at lo and true at hi.
inline double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi,
                               double tol = kBisectionTol, int max_iter = kBisectionMaxIter) {
    if (pred(lo) || !pred(hi)) throw std::domain_error("bisect_predicate: bracket does not straddle the transition");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (pred(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

// Doubles hi (capped at limit) until pred(hi) holds.
inline std::optional<double> expand_until(const std::function<bool(double)>& pred, double hi, double limit) {
    for (;;) {
        const double h = std::min(hi, limit);
        if (pred(h)) return h;
        if (h >= limit) return std::nullopt;
        hi *= 2.0;
    }
}

struct Minimum {
    double x;
    double value;
};

// Golden-section minimum of a unimodal f on [lo, hi].
inline Minimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                              double tol = kGoldenTol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    const double x = 0.5 * (lo + hi);
    return {x, f(x)};
}

}  // namespace cavesd::roots
