#include "cavesd/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cavesd {

namespace {

void require_domain(double param, double kt, const char* name) {
    if (!(param >= 0.0 && param <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(param));
    }
    if (!(kt >= 0.0 && kt <= kMaxClosedFormKt)) {
        throw std::invalid_argument("kt must lie in [0, 150], got " + std::to_string(kt));
    }
}

double clamp_negativity(double n) {
    if (n < 0.0) {
        if (n < -1e-12) throw std::logic_error("trace norm below trace: " + std::to_string(n));
        return 0.0;
    }
    return n;
}

ComplexMatrix sigma_yy() {
    ComplexMatrix yy(4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    return yy;
}

}  // namespace

double negativity(const DensityMatrix& rho, const SystemLayout& part_a) {
    return clamp_negativity(trace_norm(partial_transpose(rho, part_a)) - 1.0);
}

PtSpectrum closed_form_pt_eigenvalues(double p, double kt) {
    require_domain(p, kt, "p");
    const double e1 = std::exp(kt);
    const double e2 = e1 * e1;
    const double e3 = e2 * e1;
    const double e4 = e2 * e2;
    const double em1 = std::exp(-kt);
    const double em2 = std::exp(-2.0 * kt);
    const double em3 = std::exp(-3.0 * kt);
    const double decay = 1.0 - em1;  // 1 - e^{-kt}

    const double a1 = em1 * (2.0 - 2.0 * p + 3.0 * decay * p);
    const double a2 = 18.0 * e3 * p * (p - 2.0) + 36.0 * p * p - 108.0 * e1 * p * p + e4 * (p + 2.0) * (p + 2.0) +
                      3.0 * e2 * p * (8.0 + 31.0 * p);
    const double b1 = 3.0 * (p + decay * decay * decay * p + decay * (2.0 - 2.0 * p + em2 * p));
    const double b2 = 36.0 * (e4 + p * p - e3 * (p + 2.0) - e1 * p * (p + 2.0)) + e2 * (68.0 + 44.0 * p + 41.0 * p * p);

    // A2 and B2 are sums of squares up to rounding
    const double root_a2 = std::sqrt(std::max(a2, 0.0));
    const double root_b2 = std::sqrt(std::max(b2, 0.0));

    PtSpectrum s;
    s.p = p;
    s.kt = kt;
    s.lambdas[0] = 0.5 * em3 * p;
    s.lambdas[1] = 0.5 * em3 * (e1 - 1.0) * p;
    s.lambdas[2] = 0.5 * em3 * (e1 - 1.0) * (e1 - 1.0) * p;
    s.lambdas[3] = em1 / 6.0 * (4.0 - 4.0 * p + 3.0 * decay * decay * p);
    s.lambdas[4] = (a1 - em3 * root_a2) / 12.0;
    s.lambdas[5] = (a1 + em3 * root_a2) / 12.0;
    s.lambdas[6] = (b1 - em2 * root_b2) / 12.0;
    s.lambdas[7] = (b1 + em2 * root_b2) / 12.0;
    return s;
}

double negativity_from_spectrum(const PtSpectrum& s) {
    double total = 0.0;
    for (double l : s.lambdas) total += std::abs(l);
    return clamp_negativity(total - 1.0);
}

double cavity_negativity(double p, double kt) {
    return negativity(reduce(global_output_state(p, kt), layouts::cavities), SystemLayout{Qubit::c1});
}

double reservoir_negativity(double p, double kt) {
    return negativity(reduce(global_output_state(p, kt), layouts::reservoirs), SystemLayout{Qubit::r1});
}

double gghz_cavity_negativity(double a, double kt) {
    return negativity(reduce(gghz_output_state(a, kt), layouts::cavities), SystemLayout{Qubit::c1});
}

double pure_bipartite_concurrence_sq(const PureState& state, const SystemLayout& part_a) {
    if (part_a.size() == 0 || part_a.size() >= state.layout().size()) {
        throw std::invalid_argument("part_a must be a nonempty proper subset of " + state.layout().to_string());
    }
    const auto rho = reduce(state, part_a).matrix();
    double purity = 0.0;
    for (const auto& v : rho.data()) purity += std::norm(v);  // Tr rho^2 for Hermitian rho
    return std::max(0.0, 2.0 * (1.0 - purity));
}

double wootters_concurrence(const ComplexMatrix& rho4) {
    if (rho4.dim() != 4) throw std::invalid_argument("concurrence needs a two-qubit (4x4) state");
    const ComplexMatrix yy = sigma_yy();
    const ComplexMatrix root = psd_sqrt(rho4);
    const ComplexMatrix root_tilde = yy * root.conj() * yy;
    const auto s = singular_values(root * root_tilde);
    return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

double wootters_concurrence(const DensityMatrix& rho) {
    if (rho.layout().size() != 2) throw std::invalid_argument("concurrence needs a two-qubit state");
    return wootters_concurrence(rho.matrix());
}

double gghz_negativity_closed(double a, double kt) {
    require_domain(a, kt, "a");
    const double b = std::sqrt(1.0 - a * a);
    const double e1 = std::exp(kt);
    const double g = 2.0 - 3.0 * e1 + e1 * e1;
    const double f = 4.0 * a * a * e1 * e1 * e1 + b * b * g * g;
    return std::max(b * std::exp(-3.0 * kt) * (std::sqrt(f) - b * e1 * (e1 - 1.0)), 0.0);
}

double gghz_negativity_printed(double a, double kt) {
    require_domain(a, kt, "a");
    const double b = std::sqrt(1.0 - a * a);
    const double e1 = std::exp(kt);
    const double f = 4.0 * a * a * e1 * e1 * e1 + b * b * (2.0 - 3.0 * e1 + e1 * e1);
    if (f < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::max(b * std::exp(-3.0 * kt) * (std::sqrt(f) - b * e1 * (e1 - 1.0)), 0.0);
}

double logic_qubit_concurrence_sq(const PureState& state, Qubit q, Qubit partner) {
    std::vector<Qubit> order{q, partner};
    for (Qubit other : state.layout().qubits()) {
        if (other != q && other != partner) order.push_back(other);
    }
    const PureState psi = state.reordered(SystemLayout(order));
    const std::size_t rest = psi.dim() / 4;
    const auto& amps = psi.amplitudes();

    // Rows m_i (i = q bit, partner bit) span the support of the rest.
    // Modified Gram-Schmidt gives an orthonormal basis of that support.
    std::vector<std::vector<cplx>> basis;
    double scale = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        double n2 = 0.0;
        for (std::size_t t = 0; t < rest; ++t) n2 += std::norm(amps[i * rest + t]);
        scale = std::max(scale, std::sqrt(n2));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<cplx> v(amps.begin() + static_cast<std::ptrdiff_t>(i * rest),
                            amps.begin() + static_cast<std::ptrdiff_t>((i + 1) * rest));
        for (const auto& e : basis) {
            cplx overlap = 0.0;
            for (std::size_t t = 0; t < rest; ++t) overlap += std::conj(e[t]) * v[t];
            for (std::size_t t = 0; t < rest; ++t) v[t] -= overlap * e[t];
        }
        double n2 = 0.0;
        for (const auto& x : v) n2 += std::norm(x);
        const double n = std::sqrt(n2);
        if (n <= 1e-12 * scale) continue;
        for (auto& x : v) x /= n;
        basis.push_back(std::move(v));
    }
    if (basis.size() > 2) {
        throw std::domain_error("complement of the pair spans more than a qubit");
    }

    // Amplitudes of the compressed (q, partner, L) state.
    std::array<std::array<cplx, 2>, 4> comp{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            cplx s = 0.0;
            for (std::size_t t = 0; t < rest; ++t) s += std::conj(basis[k][t]) * amps[i * rest + t];
            comp[i][k] = s;
        }
    }
    // rho_{q L}: trace out the partner bit.
    ComplexMatrix rho(4);
    for (std::size_t qa = 0; qa < 2; ++qa) {
        for (std::size_t la = 0; la < 2; ++la) {
            for (std::size_t qb = 0; qb < 2; ++qb) {
                for (std::size_t lb = 0; lb < 2; ++lb) {
                    cplx s = 0.0;
                    for (std::size_t pb = 0; pb < 2; ++pb) {
                        s += comp[qa * 2 + pb][la] * std::conj(comp[qb * 2 + pb][lb]);
                    }
                    rho(qa * 2 + la, qb * 2 + lb) = s;
                }
            }
        }
    }
    const double c = wootters_concurrence(rho);
    return c * c;
}

MonogamyChainRecord monogamy_chain(double p, double kt) {
    require_domain(p, kt, "p");
    const PureState initial = purified_initial(p);
    const PureState evolved = global_output_state(p, kt);

    MonogamyChainRecord rec;
    rec.p = p;
    rec.kt = kt;
    rec.c_init_sq = pure_bipartite_concurrence_sq(
        initial, SystemLayout{Qubit::c1});
    rec.c_pair_sq = pure_bipartite_concurrence_sq(evolved, SystemLayout{Qubit::c1, Qubit::r1});
    rec.c_c1_sq = logic_qubit_concurrence_sq(evolved, Qubit::c1, Qubit::r1);
    rec.c_r1_sq = logic_qubit_concurrence_sq(evolved, Qubit::r1, Qubit::c1);
    const double n_cav = negativity(reduce(evolved, layouts::cavities), SystemLayout{Qubit::c1});
    const double n_res = negativity(reduce(evolved, layouts::reservoirs), SystemLayout{Qubit::r1});
    rec.n_cav_sq = n_cav * n_cav;
    rec.n_res_sq = n_res * n_res;
    return rec;
}

}  // namespace cavesd
