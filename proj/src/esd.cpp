#include "cavesd/esd.hpp"

#include "cavesd/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cavesd {

namespace {

void require_positive_kt(double kt) {
    if (!(kt > 0.0 && kt <= kMaxClosedFormKt)) {
        throw std::invalid_argument("kt must lie in (0, 150], got " + std::to_string(kt));
    }
}

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1], got " + std::to_string(p));
}

double lambda5_at(double p, double kt) { return closed_form_pt_eigenvalues(p, kt).lambda5(); }
double lambda7_at(double p, double kt) { return closed_form_pt_eigenvalues(p, kt).lambda7(); }

// Bracketed factor of the gGHZ negativity; its sign is the sign of N before clamping.
double gghz_bracket(double a, double kt) {
    const double b = std::sqrt(1.0 - a * a);
    const double e1 = std::exp(kt);
    const double g = 2.0 - 3.0 * e1 + e1 * e1;
    return std::sqrt(4.0 * a * a * e1 * e1 * e1 + b * b * g * g) - b * e1 * (e1 - 1.0);
}

// First kt where f turns positive, starting from a non-positive f(0).
std::optional<double> crossing_time(const std::function<double(double)>& f) {
    const auto hi = roots::expand_until([&](double kt) { return f(kt) > kRegionTol; }, 1.0, kMaxSearchKt);
    if (!hi) return std::nullopt;
    return roots::bisect(f, 0.0, *hi);
}

double mixture_negativity(double p) {
    return negativity(mixed_ghz_w(p), SystemLayout{Qubit::c1});
}

// a in [0, 1/sqrt(2)] with 2 a sqrt(1 - a^2) = n.
double amplitude_for_negativity(double n) {
    return std::sqrt(0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - n * n))));
}

}  // namespace

std::string_view to_string(RegionClass r) {
    switch (r) {
        case RegionClass::I: return "I";
        case RegionClass::II: return "II";
        case RegionClass::III: return "III";
        case RegionClass::IV: return "IV";
    }
    return "?";
}

std::string_view to_string(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::lambda5: return "lambda5";
        case BoundaryKind::lambda7: return "lambda7";
        case BoundaryKind::gghz: return "gghz";
    }
    return "?";
}

BoundaryKind boundary_kind_from_string(std::string_view s) {
    for (auto k : {BoundaryKind::lambda5, BoundaryKind::lambda7, BoundaryKind::gghz}) {
        if (to_string(k) == s) return k;
    }
    throw std::invalid_argument("unknown boundary kind '" + std::string(s) + "'");
}

double lambda5_boundary(double kt) {
    require_positive_kt(kt);
    const double e1 = std::exp(kt);
    const double e2 = e1 * e1;
    return 2.0 * e2 * (e1 - 1.0) / (3.0 - 9.0 * e1 + 7.0 * e2 + 2.0 * e2 * e1);
}

double lambda7_boundary(double kt) {
    require_positive_kt(kt);
    const double e1 = std::exp(kt);
    const double e2 = e1 * e1;
    const double e3 = e2 * e1;
    const double e4 = e2 * e2;
    const double d = 17.0 - 68.0 * e1 + 102.0 * e2 - 76.0 * e3 + 25.0 * e4;
    const double num = 9.0 - 18.0 * e1 + 17.0 * e2 - 3.0 * std::sqrt(d);
    const double den = 8.0 * e2 - 9.0 * std::exp(-2.0 * kt) * (1.0 - 4.0 * e1 + 4.0 * e2 - e3);
    const double p = num / den;
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("lambda7 boundary leaves [0, 1] at kt = " + std::to_string(kt));
    }
    return p;
}

double gghz_esd_boundary(double kt) {
    require_positive_kt(kt);
    // divide numerator and denominator by e^{3kt}
    const double u = -std::expm1(-kt);
    const double u3 = u * u * u;
    return std::sqrt(u3 / (u3 + 1.0));
}

double lambda5_boundary_bisection(double kt) {
    require_positive_kt(kt);
    // lambda5 vanishes identically at p = 0, so start just inside.
    return roots::bisect([kt](double p) { return lambda5_at(p, kt); }, 1e-8, 1.0);
}

double lambda7_boundary_bisection(double kt) {
    require_positive_kt(kt);
    auto f = [kt](double p) { return lambda7_at(p, kt); };
    // lambda7(1, kt) underflows to 0 for large kt; take the first probe below
    // 1 where lambda7 is clearly positive.
    for (double hi : {1.0, 0.99, 0.9, 0.75, 0.5, 0.3}) {
        if (f(hi) > kRegionTol * 1e-3) return roots::bisect(f, 0.0, hi);
    }
    throw std::domain_error("no lambda7 sign change at kt = " + std::to_string(kt));
}

double gghz_esd_boundary_bisection(double kt) {
    require_positive_kt(kt);
    return roots::bisect([kt](double a) { return gghz_bracket(a, kt); }, 0.0, 1.0);
}

double boundary_value(BoundaryKind kind, double kt) {
    switch (kind) {
        case BoundaryKind::lambda5: return lambda5_boundary(kt);
        case BoundaryKind::lambda7: return lambda7_boundary(kt);
        case BoundaryKind::gghz: return gghz_esd_boundary(kt);
    }
    throw std::invalid_argument("unknown boundary kind");
}

double boundary_value_bisection(BoundaryKind kind, double kt) {
    switch (kind) {
        case BoundaryKind::lambda5: return lambda5_boundary_bisection(kt);
        case BoundaryKind::lambda7: return lambda7_boundary_bisection(kt);
        case BoundaryKind::gghz: return gghz_esd_boundary_bisection(kt);
    }
    throw std::invalid_argument("unknown boundary kind");
}

BoundaryCurve sample_boundary(BoundaryKind kind, double kt_min, double kt_max, std::size_t steps) {
    if (!(kt_min > 0.0) || !(kt_max > kt_min) || steps < 2) {
        throw std::invalid_argument("boundary sampling needs 0 < kt_min < kt_max and steps >= 2");
    }
    BoundaryCurve curve{kind, {}};
    curve.samples.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double kt = i + 1 == steps ? kt_max
                                         : kt_min + (kt_max - kt_min) * static_cast<double>(i) /
                                                        static_cast<double>(steps - 1);
        curve.samples.emplace_back(kt, boundary_value(kind, kt));
    }
    return curve;
}

RegionClass classify_region(double p, double kt) {
    const auto s = closed_form_pt_eigenvalues(p, kt);
    const bool neg5 = s.lambda5() < -kRegionTol;
    const bool neg7 = s.lambda7() < -kRegionTol;
    if (neg5 && neg7) return RegionClass::I;
    if (neg5) return RegionClass::II;
    if (neg7) return RegionClass::III;
    return RegionClass::IV;
}

std::optional<double> esd_time(double p) {
    require_probability(p);
    if (p <= 0.0 || p >= 1.0) return std::nullopt;
    const auto t5 = crossing_time([p](double kt) { return lambda5_at(p, kt); });
    const auto t7 = crossing_time([p](double kt) { return lambda7_at(p, kt); });
    if (!t5 || !t7) return std::nullopt;
    const double t = std::max(*t5, *t7);
    for (double probe : {t + 0.01, t + 1.0}) {
        if (negativity_from_spectrum(closed_form_pt_eigenvalues(p, probe)) >= kZeroEntanglement) {
            throw std::logic_error("negativity revives after the sudden-death time at p = " + std::to_string(p));
        }
    }
    return t;
}

double esd_onset_threshold() { return lambda7_boundary(40.0); }

EsdPoint min_esd_point() {
    const auto m = roots::golden_section(
        [](double p) { return esd_time(p).value_or(std::numeric_limits<double>::infinity()); }, 0.25, 1.0);
    return {m.x, m.value};
}

NegativityMinimum min_initial_negativity() {
    const auto m = roots::golden_section(mixture_negativity, 0.0, 1.0);
    return {m.x, m.value};
}

std::optional<double> gghz_esd_time(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("a must lie in [0, 1], got " + std::to_string(a));
    const double b2 = 1.0 - a * a;
    if (a * a >= b2) return std::nullopt;
    const double u = std::cbrt(a * a / b2);
    return -std::log1p(-u);
}

EqualEntanglementRange equal_entanglement_range() {
    EqualEntanglementRange r{};
    const double cbrt2 = std::cbrt(2.0);
    r.p_c = 7.0 - std::sqrt(45.0);
    r.p_0 = 4.0 * cbrt2 / (3.0 + 4.0 * cbrt2);
    r.n_low = roots::golden_section(mixture_negativity, r.p_c, r.p_0).value;
    r.n_high = std::max(mixture_negativity(r.p_c), mixture_negativity(r.p_0));
    r.a_low = amplitude_for_negativity(r.n_low);
    r.a_high = amplitude_for_negativity(r.n_high);
    r.max_gghz_esd_kt = gghz_esd_time(r.a_high).value();
    return r;
}

SwapCheck swap_check(double p, double kt, double tol) {
    const auto amps = amplitudes(kt);
    const auto rho_r = reduce(global_output_state(p, amps), layouts::reservoirs);
    const auto rho_c = reduce(global_output_state(p, DecayAmplitudes{amps.chi, amps.xi}), layouts::cavities);
    const double dev = max_abs_diff(rho_r.matrix(), rho_c.matrix());
    return {dev < tol, dev};
}

double esb_time(double t_esd) {
    if (!(t_esd > 0.0)) throw std::invalid_argument("ESD time must be positive, got " + std::to_string(t_esd));
    return -std::log(-std::expm1(-t_esd));
}

std::optional<double> reservoir_birth_time(double p) {
    require_probability(p);
    auto entangled = [p](double kt) {
        const auto rho = reduce(global_output_state(p, kt), layouts::reservoirs);
        return hermitian_eigenvalues(partial_transpose(rho, SystemLayout{Qubit::r1})).back() < -kRegionTol;
    };
    constexpr double lo = 1e-9;
    if (entangled(lo)) return std::nullopt;
    const auto hi = roots::expand_until(entangled, 0.5, kMaxSearchKt);
    if (!hi) return std::nullopt;
    return roots::bisect_predicate(entangled, lo, *hi);
}

}  // namespace cavesd
