// Negativity, concurrences, the closed-form partial
// transpose spectrum of the evolved GHZ/W mixture, the generalized GHZ
// negativity, and the monogamy chain.

#pragma once

#include "cavesd/qlinalg.hpp"
#include "cavesd/states.hpp"

#include <array>

namespace cavesd {

// Negativities below this count as zero when classifying.
inline constexpr double kZeroEntanglement = 1e-10;
// Largest kt the closed forms accept before exp(4 kt) overflows.
inline constexpr double kMaxClosedFormKt = 150.0;

// N = ||rho^{T_A}||_1 - 1, with values in (-1e-12, 0) reported as 0.
double negativity(const DensityMatrix& rho, const SystemLayout& part_a);

// Eigenvalues of rho_{c1c2c3}(t)^{T_c1}, lambdas[0..7] = lambda_1..lambda_8.
// lambda_5 and lambda_7 are the only ones that can go negative.
struct PtSpectrum {
    std::array<double, 8> lambdas{};
    double p{0.0};
    double kt{0.0};

    double lambda5() const { return lambdas[4]; }
    double lambda7() const { return lambdas[6]; }
};

PtSpectrum closed_form_pt_eigenvalues(double p, double kt);
double negativity_from_spectrum(const PtSpectrum& s);

// Numeric negativities of the evolved reduced states (the oracle path).
double cavity_negativity(double p, double kt);     // N_{c1|c2c3}
double reservoir_negativity(double p, double kt);  // N_{r1|r2r3}
double gghz_cavity_negativity(double a, double kt);

// For a global pure state: C^2 = 2 (1 - Tr rho_A^2), which equals
// 4 det(rho_A) when part_a is a single qubit.
double pure_bipartite_concurrence_sq(const PureState& state, const SystemLayout& part_a);

// Two-qubit concurrence max(0, s1 - s2 - s3 - s4), where s_i are the
// singular values of sqrt(rho) * sqrt(rho~), rho~ = (Y x Y) rho* (Y x Y).
// The s_i^2 are the eigenvalues of rho (Y x Y) rho* (Y x Y).
double wootters_concurrence(const DensityMatrix& rho);
double wootters_concurrence(const ComplexMatrix& rho4);

// Negativity of the reduced cavity state of the evolved generalized GHZ
// state. Uses F = 4a^2 e^{3kt} + b^2 (2 - 3e^{kt} + e^{2kt})^2.
double gghz_negativity_closed(double a, double kt);
// The same expression with the unsquared b^2 (2 - 3e^{kt} + e^{2kt}) term,
// kept for auditing; NaN where that F is negative.
double gghz_negativity_printed(double a, double kt);

// Concurrences (squared) of the qubit `q` against the rest of `state`
// minus `partner`, where everything outside {q, partner} is compressed onto
// its at most two-dimensional support and treated as one logic qubit.
// Throws std::domain_error if that support has dimension > 2.
double logic_qubit_concurrence_sq(const PureState& state, Qubit q, Qubit partner);

struct MonogamyChainRecord {
    double p{0.0};
    double kt{0.0};
    double c_init_sq{0.0};  // C^2_{c1|c2c3z}(0)
    double c_pair_sq{0.0};  // C^2_{c1r1|c2r2c3r3z}(t)
    double c_c1_sq{0.0};    // C^2_{c1|c2r2c3r3z}(t)
    double c_r1_sq{0.0};    // C^2_{r1|c2r2c3r3z}(t)
    double n_cav_sq{0.0};   // N^2_{c1|c2c3}(t)
    double n_res_sq{0.0};   // N^2_{r1|r2r3}(t)
    // C^2_{c1|c2c3} + C^2_{r1|r2r3} needs a convex-roof minimization and is
    // never computed; the chain is checked across it.
    bool mixed_concurrence_evaluated{false};

    double equality_deviation() const { return std::abs(c_init_sq - c_pair_sq); }
    double split_slack() const { return c_pair_sq - (c_c1_sq + c_r1_sq); }
    double negativity_slack() const { return (c_c1_sq + c_r1_sq) - (n_cav_sq + n_res_sq); }
};

MonogamyChainRecord monogamy_chain(double p, double kt);

}  // namespace cavesd
