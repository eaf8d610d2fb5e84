// The cavity/reservoir states: GHZ, W, their mixture, the
// generalized GHZ state, the purified input and the exact evolved states.
//
// Each cavity c_i exchanges its photon with an independent reservoir r_i:
//     |1>_c|0>_r  ->  xi(t)|1>_c|0>_r + chi(t)|0>_c|1>_r
// with xi = exp(-kt/2) and chi = sqrt(1 - exp(-kt)), kt the dimensionless
// time kappa*t. The vacuum |0>_c|0>_r is invariant.

#pragma once

#include "cavesd/qlinalg.hpp"

namespace cavesd {

struct DecayAmplitudes {
    double xi{1.0};
    double chi{0.0};
};

struct EvolutionPoint {
    double param{0.0};  // mix probability p, or gGHZ amplitude a
    double kt{0.0};
    double xi{1.0};
    double chi{0.0};
};

namespace layouts {
inline const SystemLayout cavities{Qubit::c1, Qubit::c2, Qubit::c3};
inline const SystemLayout reservoirs{Qubit::r1, Qubit::r2, Qubit::r3};
inline const SystemLayout cavity_reservoir{Qubit::c1, Qubit::r1, Qubit::c2, Qubit::r2, Qubit::c3, Qubit::r3};
inline const SystemLayout global_output{Qubit::c1, Qubit::r1, Qubit::c2, Qubit::r2, Qubit::c3, Qubit::r3, Qubit::z};
inline const SystemLayout purified_input{Qubit::c1, Qubit::c2, Qubit::c3, Qubit::z, Qubit::r1, Qubit::r2, Qubit::r3};
}  // namespace layouts

// Throws std::invalid_argument for kt < 0 or non-finite kt.
DecayAmplitudes amplitudes(double kt);
EvolutionPoint evolution_point(double param, double kt);

PureState ghz();
PureState w();
// a|000> + b|111>, b = sqrt(1 - a^2); a in [0, 1].
PureState generalized_ghz(double a);

// p|GHZ><GHZ| + (1-p)|W><W| on c1c2c3.
DensityMatrix mixed_ghz_w(double p);

// (sqrt(p)|GHZ>|0>_z + sqrt(1-p)|W>|1>_z) |000>_r on layouts::purified_input.
PureState purified_initial(double p);

// Evolved purification on layouts::global_output.
PureState global_output_state(double p, double kt);
PureState global_output_state(double p, DecayAmplitudes amps);

// a|000000> + b|phi_t>|phi_t>|phi_t> on layouts::cavity_reservoir.
PureState gghz_output_state(double a, double kt);
PureState gghz_output_state(double a, DecayAmplitudes amps);

// Partial trace of |psi><psi| onto `keep`, laid out in `keep` order.
DensityMatrix reduce(const PureState& psi, const SystemLayout& keep);

}  // namespace cavesd
