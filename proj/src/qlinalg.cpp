#include "cavesd/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cavesd {

namespace {

constexpr std::size_t kMaxSweeps = 100;

std::size_t shift_of(std::size_t pos, std::size_t n) { return n - 1 - pos; }

// Bit mask (in `layout`'s index space) of the qubits in `subset`.
std::size_t mask_of(const SystemLayout& layout, const SystemLayout& subset) {
    std::size_t mask = 0;
    for (Qubit q : subset.qubits()) {
        mask |= std::size_t{1} << shift_of(layout.position(q), layout.size());
    }
    return mask;
}

// Maps an index over `target` to the index over `source` addressing the same
// basis state. Both layouts must be permutations of each other.
std::vector<std::size_t> permutation_map(const SystemLayout& source, const SystemLayout& target) {
    if (source.size() != target.size()) {
        throw std::invalid_argument("layouts are not permutations of each other");
    }
    const std::size_t n = source.size();
    std::vector<std::size_t> src_shift(n);
    for (std::size_t k = 0; k < n; ++k) {
        src_shift[k] = shift_of(source.position(target.qubits()[k]), n);
    }
    std::vector<std::size_t> map(target.dim());
    for (std::size_t j = 0; j < map.size(); ++j) {
        std::size_t i = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if ((j >> shift_of(k, n)) & 1U) i |= std::size_t{1} << src_shift[k];
        }
        map[j] = i;
    }
    return map;
}

// Complement of `keep` in `layout`, preserving layout order.
SystemLayout complement(const SystemLayout& layout, const SystemLayout& keep) {
    std::vector<Qubit> rest;
    for (Qubit q : layout.qubits()) {
        if (!keep.contains(q)) rest.push_back(q);
    }
    return SystemLayout(std::move(rest));
}

void require_subset(const SystemLayout& layout, const SystemLayout& subset, bool allow_full) {
    if (subset.size() == 0) throw std::invalid_argument("empty subsystem");
    for (Qubit q : subset.qubits()) {
        if (!layout.contains(q)) {
            throw std::invalid_argument("qubit " + std::string(to_string(q)) +
                                        " is not in layout " + layout.to_string());
        }
    }
    if (!allow_full && subset.size() == layout.size()) {
        throw std::invalid_argument("subsystem must be a proper subset of " + layout.to_string());
    }
}

void require_hermitian(const ComplexMatrix& h) {
    if (!h.is_finite()) throw std::invalid_argument("matrix has non-finite entries");
    const double defect = h.hermitian_defect();
    if (defect > kHermitianTol) {
        throw std::invalid_argument("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
}

}  // namespace

// ------------------------------------------------------------------ layout

std::string_view to_string(Qubit q) {
    switch (q) {
        case Qubit::c1: return "c1";
        case Qubit::r1: return "r1";
        case Qubit::c2: return "c2";
        case Qubit::r2: return "r2";
        case Qubit::c3: return "c3";
        case Qubit::r3: return "r3";
        case Qubit::z: return "z";
    }
    return "?";
}

Qubit qubit_from_string(std::string_view s) {
    for (Qubit q : {Qubit::c1, Qubit::r1, Qubit::c2, Qubit::r2, Qubit::c3, Qubit::r3, Qubit::z}) {
        if (to_string(q) == s) return q;
    }
    throw std::invalid_argument("unknown qubit label '" + std::string(s) + "'");
}

SystemLayout::SystemLayout(std::initializer_list<Qubit> qubits)
    : SystemLayout(std::vector<Qubit>(qubits)) {}

SystemLayout::SystemLayout(std::vector<Qubit> qubits) : qubits_(std::move(qubits)) {
    if (qubits_.size() > kMaxQubits) throw std::invalid_argument("layout exceeds 7 qubits");
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        for (std::size_t j = i + 1; j < qubits_.size(); ++j) {
            if (qubits_[i] == qubits_[j]) {
                throw std::invalid_argument("duplicate qubit label " + std::string(cavesd::to_string(qubits_[i])));
            }
        }
    }
}

bool SystemLayout::contains(Qubit q) const noexcept {
    return std::find(qubits_.begin(), qubits_.end(), q) != qubits_.end();
}

std::size_t SystemLayout::position(Qubit q) const {
    auto it = std::find(qubits_.begin(), qubits_.end(), q);
    if (it == qubits_.end()) {
        throw std::invalid_argument("qubit " + std::string(cavesd::to_string(q)) + " not in layout " + to_string());
    }
    return static_cast<std::size_t>(it - qubits_.begin());
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
    std::vector<Qubit> all = qubits_;
    all.insert(all.end(), other.qubits_.begin(), other.qubits_.end());
    return SystemLayout(std::move(all));
}

std::string SystemLayout::to_string() const {
    std::string s;
    for (Qubit q : qubits_) s += cavesd::to_string(q);
    return s.empty() ? "<empty>" : s;
}

// ------------------------------------------------------------------ matrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim) throw std::invalid_argument("entry count does not match dim*dim");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> ket, std::span<const cplx> bra) {
    if (ket.size() != bra.size()) throw std::invalid_argument("outer: size mismatch");
    ComplexMatrix m(ket.size());
    for (std::size_t r = 0; r < ket.size(); ++r) {
        for (std::size_t c = 0; c < bra.size(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    }
    return m;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix m(*this);
    for (auto& v : m.data_) v = std::conj(v);
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

bool ComplexMatrix::is_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = a.dim();
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx v = a(r, k);
            if (v == cplx{}) continue;
            for (std::size_t c = 0; c < n; ++c) m(r, c) += v * b(k, c);
        }
    }
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

// ------------------------------------------------------------------ states

PureState::PureState(SystemLayout layout, std::vector<cplx> amplitudes)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
    if (amps_.size() != layout_.dim()) {
        throw std::invalid_argument("amplitude count does not match layout " + layout_.to_string());
    }
    double norm2 = 0.0;
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state has non-finite amplitudes");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTol) {
        throw std::invalid_argument("state is not normalized (norm " + std::to_string(std::sqrt(norm2)) + ")");
    }
}

PureState PureState::basis(SystemLayout layout, std::string_view bits) {
    if (bits.size() != layout.size()) throw std::invalid_argument("bit string length does not match layout");
    std::size_t index = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') throw std::invalid_argument("bit string must contain only 0/1");
        index = (index << 1U) | static_cast<std::size_t>(b == '1');
    }
    std::vector<cplx> amps(layout.dim());
    amps[index] = 1.0;
    return PureState(std::move(layout), std::move(amps));
}

PureState PureState::reordered(const SystemLayout& target) const {
    const auto map = permutation_map(layout_, target);
    std::vector<cplx> amps(map.size());
    for (std::size_t j = 0; j < map.size(); ++j) amps[j] = amps_[map[j]];
    return PureState(target, std::move(amps));
}

DensityMatrix::DensityMatrix(SystemLayout layout, ComplexMatrix rho)
    : layout_(std::move(layout)), rho_(std::move(rho)) {
    if (rho_.dim() != layout_.dim()) {
        throw std::invalid_argument("matrix dimension does not match layout " + layout_.to_string());
    }
    require_hermitian(rho_);
    if (std::abs(rho_.trace() - 1.0) > kTraceTol) throw std::invalid_argument("density matrix trace is not 1");
    const auto ev = hermitian_eigenvalues(rho_);
    if (ev.back() < -kPsdTol) throw std::invalid_argument("density matrix is not positive semidefinite");
}

DensityMatrix::DensityMatrix(SystemLayout layout, ComplexMatrix rho, Unchecked)
    : layout_(std::move(layout)), rho_(std::move(rho)) {}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const auto& a = psi.amplitudes();
    return DensityMatrix(psi.layout(), ComplexMatrix::outer(a, a), Unchecked{});
}

DensityMatrix DensityMatrix::reordered(const SystemLayout& target) const {
    const auto map = permutation_map(layout_, target);
    ComplexMatrix m(map.size());
    for (std::size_t r = 0; r < map.size(); ++r) {
        for (std::size_t c = 0; c < map.size(); ++c) m(r, c) = rho_(map[r], map[c]);
    }
    return DensityMatrix(target, std::move(m), Unchecked{});
}

// ------------------------------------------------------------------ operations

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix m(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra) {
        for (std::size_t ca = 0; ca < na; ++ca) {
            const cplx v = a(ra, ca);
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) m(ra * nb + rb, ca * nb + cb) = v * b(rb, cb);
            }
        }
    }
    return m;
}

PureState tensor_product(const PureState& a, const PureState& b) {
    SystemLayout layout = a.layout().concat(b.layout());
    std::vector<cplx> amps;
    amps.reserve(a.dim() * b.dim());
    for (const auto& x : a.amplitudes()) {
        for (const auto& y : b.amplitudes()) amps.push_back(x * y);
    }
    return PureState(std::move(layout), std::move(amps));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(a.layout().concat(b.layout()), kron(a.matrix(), b.matrix()), DensityMatrix::Unchecked{});
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SystemLayout& keep) {
    require_subset(rho.layout(), keep, true);
    const SystemLayout rest = complement(rho.layout(), keep);
    const auto map = permutation_map(rho.layout(), keep.concat(rest));
    const std::size_t dk = keep.dim();
    const std::size_t dr = rest.dim();
    ComplexMatrix out(dk);
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            cplx s = 0.0;
            for (std::size_t t = 0; t < dr; ++t) s += rho.matrix()(map[i * dr + t], map[j * dr + t]);
            out(i, j) = s;
        }
    }
    return DensityMatrix(keep, std::move(out), DensityMatrix::Unchecked{});
}

DensityMatrix reduce_pure(const PureState& psi, const SystemLayout& keep) {
    require_subset(psi.layout(), keep, true);
    const SystemLayout rest = complement(psi.layout(), keep);
    const auto map = permutation_map(psi.layout(), keep.concat(rest));
    const std::size_t dk = keep.dim();
    const std::size_t dr = rest.dim();
    const auto& a = psi.amplitudes();
    ComplexMatrix out(dk);
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = i; j < dk; ++j) {
            cplx s = 0.0;
            for (std::size_t t = 0; t < dr; ++t) s += a[map[i * dr + t]] * std::conj(a[map[j * dr + t]]);
            out(i, j) = s;
            out(j, i) = std::conj(s);
        }
    }
    return DensityMatrix(keep, std::move(out), DensityMatrix::Unchecked{});
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SystemLayout& layout,
                                const SystemLayout& subsystem) {
    if (m.dim() != layout.dim()) throw std::invalid_argument("matrix dimension does not match layout");
    require_subset(layout, subsystem, false);
    const std::size_t mask = mask_of(layout, subsystem);
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t r2 = (r & ~mask) | (c & mask);
            const std::size_t c2 = (c & ~mask) | (r & mask);
            out(r2, c2) = m(r, c);
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const SystemLayout& subsystem) {
    return partial_transpose(rho.matrix(), rho.layout(), subsystem);
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
    require_hermitian(h);
    const std::size_t n = h.dim();
    ComplexMatrix a = (h + h.adjoint()) * cplx{0.5};
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                if (p != q) s += std::norm(a(p, q));
            }
        }
        return std::sqrt(s);
    };

    std::size_t sweep = 0;
    while (off_norm() >= kJacobiOffTol * scale) {
        if (++sweep > kMaxSweeps) throw std::runtime_error("Jacobi eigensolver did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx hpq = a(p, q);
                const double mag = std::abs(hpq);
                if (mag == 0.0) continue;
                const cplx phase = hpq / mag;  // e^{i phi}
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q)
                const cplx jpp = c;
                const cplx jpq = s;
                const cplx jqp = -s * std::conj(phase);
                const cplx jqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    Eigensystem es{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
    }
    return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    return hermitian_eigensystem(h).values;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    if (!m.is_finite()) throw std::invalid_argument("matrix has non-finite entries");
    const std::size_t n = m.dim();
    // columns stored contiguously
    std::vector<std::vector<cplx>> col(n, std::vector<cplx>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) col[c][r] = m(r, c);
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    bool rotated = true;
    for (std::size_t sweep = 0; rotated; ++sweep) {
        if (sweep > kMaxSweeps) throw std::runtime_error("Jacobi SVD did not converge");
        rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double alpha = 0.0;
                double beta = 0.0;
                cplx gamma = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    alpha += std::norm(col[i][k]);
                    beta += std::norm(col[j][k]);
                    gamma += std::conj(col[i][k]) * col[j][k];
                }
                const double mag = std::abs(gamma);
                if (mag == 0.0 || mag <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const cplx phase = std::conj(gamma / mag);
                const double zeta = (beta - alpha) / (2.0 * mag);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx xi = col[i][k];
                    const cplx xj = col[j][k] * phase;
                    col[i][k] = c * xi - s * xj;
                    col[j][k] = s * xi + c * xj;
                }
            }
        }
    }
    std::vector<double> sv(n);
    for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (const auto& v : col[c]) s += std::norm(v);
        sv[c] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double trace_norm(const ComplexMatrix& m) {
    if (!m.is_finite()) throw std::invalid_argument("matrix has non-finite entries");
    if (m.hermitian_defect() <= kHermitianTol) {
        double s = 0.0;
        for (double ev : hermitian_eigenvalues(m)) s += std::abs(ev);
        return s;
    }
    const auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    const auto es = hermitian_eigensystem(m);
    if (!es.values.empty() && es.values.back() < -kPsdTol) {
        throw std::invalid_argument("psd_sqrt: matrix has a negative eigenvalue " + std::to_string(es.values.back()));
    }
    const double spectral = es.values.empty() ? 0.0 : std::max(std::abs(es.values.front()), std::abs(es.values.back()));
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, spectral);
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (es.values[k] <= floor) continue;
        const double root = std::sqrt(es.values[k]);
        for (std::size_t r = 0; r < n; ++r) {
            const cplx vr = es.vectors(r, k) * root;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(es.vectors(c, k));
        }
    }
    return out;
}

}  // namespace cavesd
