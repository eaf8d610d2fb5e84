#include "cavesd/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cavesd {

namespace {

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
    }
}

void require_amplitudes(DecayAmplitudes amps) {
    if (!(amps.xi >= 0.0 && amps.chi >= 0.0) || std::abs(amps.xi * amps.xi + amps.chi * amps.chi - 1.0) > 1e-14) {
        throw std::invalid_argument("decay amplitudes must satisfy xi^2 + chi^2 = 1");
    }
}

// Unnormalized amplitude vector over a layout; summed up then wrapped.
using Amps = std::vector<cplx>;

Amps kron(const Amps& a, const Amps& b) {
    Amps out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) out.push_back(x * y);
    }
    return out;
}

Amps kron(const Amps& a, const Amps& b, const Amps& c) { return kron(kron(a, b), c); }

void axpy(Amps& y, cplx alpha, const Amps& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

// Pair (c_i r_i) basis: |00>, |01>, |10>, |11>.
Amps pair_vacuum() { return {1.0, 0.0, 0.0, 0.0}; }
Amps pair_phi(DecayAmplitudes amps) { return {0.0, amps.chi, amps.xi, 0.0}; }

}  // namespace

DecayAmplitudes amplitudes(double kt) {
    if (!(kt >= 0.0) || !std::isfinite(kt)) {
        throw std::invalid_argument("kt must be finite and non-negative, got " + std::to_string(kt));
    }
    return {std::exp(-0.5 * kt), std::sqrt(-std::expm1(-kt))};
}

EvolutionPoint evolution_point(double param, double kt) {
    const auto amps = amplitudes(kt);
    return {param, kt, amps.xi, amps.chi};
}

PureState ghz() {
    std::vector<cplx> amps(8);
    amps[0b000] = amps[0b111] = 1.0 / std::sqrt(2.0);
    return PureState(layouts::cavities, std::move(amps));
}

PureState w() {
    std::vector<cplx> amps(8);
    amps[0b001] = amps[0b010] = amps[0b100] = 1.0 / std::sqrt(3.0);
    return PureState(layouts::cavities, std::move(amps));
}

PureState generalized_ghz(double a) {
    require_unit_interval(a, "a");
    std::vector<cplx> amps(8);
    amps[0b000] = a;
    amps[0b111] = std::sqrt(1.0 - a * a);
    return PureState(layouts::cavities, std::move(amps));
}

DensityMatrix mixed_ghz_w(double p) {
    require_unit_interval(p, "p");
    const auto gs = ghz();
    const auto ws = w();
    const auto& g = gs.amplitudes();
    const auto& v = ws.amplitudes();
    ComplexMatrix rho = ComplexMatrix::outer(g, g) * cplx{p} + ComplexMatrix::outer(v, v) * cplx{1.0 - p};
    return DensityMatrix(layouts::cavities, std::move(rho));
}

PureState purified_initial(double p) {
    require_unit_interval(p, "p");
    const Amps zero{1.0, 0.0};
    const Amps one{0.0, 1.0};
    Amps cz = kron(ghz().amplitudes(), zero);
    for (auto& x : cz) x *= std::sqrt(p);
    axpy(cz, std::sqrt(1.0 - p), kron(w().amplitudes(), one));
    const Amps vac = kron(zero, zero, zero);
    return PureState(layouts::purified_input, kron(cz, vac));
}

PureState global_output_state(double p, double kt) { return global_output_state(p, amplitudes(kt)); }

PureState global_output_state(double p, DecayAmplitudes amps) {
    require_unit_interval(p, "p");
    require_amplitudes(amps);
    const Amps vac = pair_vacuum();
    const Amps phi = pair_phi(amps);

    Amps ghz_branch = kron(vac, vac, vac);
    axpy(ghz_branch, 1.0, kron(phi, phi, phi));
    Amps w_branch = kron(vac, vac, phi);
    axpy(w_branch, 1.0, kron(vac, phi, vac));
    axpy(w_branch, 1.0, kron(phi, vac, vac));

    const Amps zero{1.0, 0.0};
    const Amps one{0.0, 1.0};
    Amps out = kron(ghz_branch, zero);
    for (auto& x : out) x *= std::sqrt(p / 2.0);
    axpy(out, std::sqrt((1.0 - p) / 3.0), kron(w_branch, one));
    return PureState(layouts::global_output, std::move(out));
}

PureState gghz_output_state(double a, double kt) { return gghz_output_state(a, amplitudes(kt)); }

PureState gghz_output_state(double a, DecayAmplitudes amps) {
    require_unit_interval(a, "a");
    require_amplitudes(amps);
    const Amps vac = pair_vacuum();
    const Amps phi = pair_phi(amps);
    Amps out = kron(vac, vac, vac);
    for (auto& x : out) x *= a;
    axpy(out, std::sqrt(1.0 - a * a), kron(phi, phi, phi));
    return PureState(layouts::cavity_reservoir, std::move(out));
}

DensityMatrix reduce(const PureState& psi, const SystemLayout& keep) { return reduce_pure(psi, keep); }

}  // namespace cavesd
