// Sudden-death boundaries, region classification, ESD/ESB times
// and the cavity <-> reservoir swap relation.

#pragma once

#include "cavesd/entanglement.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace cavesd {

inline constexpr double kRegionTol = 1e-12;
inline constexpr double kSwapTol = 1e-12;
// Latest kt probed when looking for a zero crossing.
inline constexpr double kMaxSearchKt = 100.0;

// Sign regions of (lambda5, lambda7):
//   I   both negative        II  only lambda5 negative
//   III only lambda7 negative IV  both non-negative (separable)
enum class RegionClass { I, II, III, IV };
std::string_view to_string(RegionClass r);

enum class BoundaryKind { lambda5, lambda7, gghz };
std::string_view to_string(BoundaryKind k);
BoundaryKind boundary_kind_from_string(std::string_view s);

struct BoundaryCurve {
    BoundaryKind kind{BoundaryKind::lambda5};
    std::vector<std::pair<double, double>> samples;  // (kt, p or a)
};

// p on the lambda5 = 0 curve at time kt > 0.
double lambda5_boundary(double kt);
// p on the lambda7 = 0 curve at time kt > 0; throws std::domain_error if
// the expression leaves [0, 1].
double lambda7_boundary(double kt);
// Generalized GHZ amplitude a on its ESD line at time kt > 0.
double gghz_esd_boundary(double kt);

// Independent routes to the same curves: bisection in the parameter on the
// sign of the closed-form eigenvalue / negativity.
double lambda5_boundary_bisection(double kt);
double lambda7_boundary_bisection(double kt);
double gghz_esd_boundary_bisection(double kt);

double boundary_value(BoundaryKind kind, double kt);
double boundary_value_bisection(BoundaryKind kind, double kt);
BoundaryCurve sample_boundary(BoundaryKind kind, double kt_min, double kt_max, std::size_t steps);

RegionClass classify_region(double p, double kt);

// First kt after which the cavity negativity stays zero; empty when the
// decay is asymptotic (p <= 1/4, p = 1).
std::optional<double> esd_time(double p);
// Smallest p admitting sudden death (the kt -> infinity limit of the lambda7 curve).
double esd_onset_threshold();

struct EsdPoint {
    double p;
    double kt;
};
EsdPoint min_esd_point();

struct NegativityMinimum {
    double p;
    double negativity;
};
NegativityMinimum min_initial_negativity();

// ESD time of the generalized GHZ state with amplitude a; empty for a >= 1/sqrt(2).
std::optional<double> gghz_esd_time(double a);

struct EqualEntanglementRange {
    double p_c;     // 7 - sqrt(45)
    double p_0;     // 4 * 2^{1/3} / (3 + 4 * 2^{1/3})
    double n_low;   // min of N(p) over [p_c, p_0]
    double n_high;  // max of N(p) over [p_c, p_0]
    double a_low;
    double a_high;
    double max_gghz_esd_kt;
};
// Amplitudes a <= 1/sqrt(2) whose gGHZ state has the same initial negativity
// 2ab as the mixture for some p in [p_c, p_0].
EqualEntanglementRange equal_entanglement_range();

struct SwapCheck {
    bool passed;
    double max_deviation;
};
// rho_{r1r2r3}(xi, chi) against rho_{c1c2c3}(chi, xi).
SwapCheck swap_check(double p, double kt, double tol = kSwapTol);

// kt_ESB = -ln(1 - exp(-kt_ESD)).
double esb_time(double t_esd);
// kt at which N_{r1|r2r3} becomes nonzero, located by bisection on the
// sign of the smallest partially transposed eigenvalue.
std::optional<double> reservoir_birth_time(double p);

}  // namespace cavesd
