// Dense complex linear algebra for small qubit registers.
//
// Everything here works on at most 7 qubits (dimension 128). Matrices are
// stored row-major; basis indices are big-endian over the register layout,
// i.e. the first label in a SystemLayout is the most significant bit.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cavesd {

using cplx = std::complex<double>;

// Tolerances shared by the validating constructors and the eigensolver.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kJacobiOffTol = 1e-13;
inline constexpr std::size_t kMaxQubits = 7;

// ------------------------------------------------------------------ layout

enum class Qubit { c1, r1, c2, r2, c3, r3, z };

std::string_view to_string(Qubit q);
Qubit qubit_from_string(std::string_view s);

// Ordered register of distinct qubit labels.
class SystemLayout {
public:
    SystemLayout() = default;
    SystemLayout(std::initializer_list<Qubit> qubits);
    explicit SystemLayout(std::vector<Qubit> qubits);

    std::size_t size() const noexcept { return qubits_.size(); }
    std::size_t dim() const noexcept { return std::size_t{1} << qubits_.size(); }
    const std::vector<Qubit>& qubits() const noexcept { return qubits_; }

    bool contains(Qubit q) const noexcept;
    // Position of q in the register; throws std::invalid_argument if absent.
    std::size_t position(Qubit q) const;

    SystemLayout concat(const SystemLayout& other) const;
    std::string to_string() const;

    friend bool operator==(const SystemLayout&, const SystemLayout&) = default;

private:
    std::vector<Qubit> qubits_;
};

// ------------------------------------------------------------------ matrix

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix outer(std::span<const cplx> ket, std::span<const cplx> bra);

    std::size_t dim() const noexcept { return dim_; }
    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    const std::vector<cplx>& data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conj() const;
    cplx trace() const;
    double frobenius_norm() const;
    // max |A - A†| over all entries
    double hermitian_defect() const;
    bool is_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t dim_{0};
    std::vector<cplx> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// ------------------------------------------------------------------ states

// Unit-norm amplitude vector over a layout.
class PureState {
public:
    PureState(SystemLayout layout, std::vector<cplx> amplitudes);

    // |bits> in the given layout, e.g. basis(layout, "010").
    static PureState basis(SystemLayout layout, std::string_view bits);

    const SystemLayout& layout() const noexcept { return layout_; }
    const std::vector<cplx>& amplitudes() const noexcept { return amps_; }
    std::size_t dim() const noexcept { return amps_.size(); }

    // Same state expressed over a permutation of its layout.
    PureState reordered(const SystemLayout& target) const;

private:
    SystemLayout layout_;
    std::vector<cplx> amps_;
};

// Hermitian, PSD, unit-trace matrix over a layout.
class DensityMatrix {
public:
    // Validates Hermiticity, unit trace and positivity.
    DensityMatrix(SystemLayout layout, ComplexMatrix rho);

    static DensityMatrix from_pure(const PureState& psi);

    const SystemLayout& layout() const noexcept { return layout_; }
    const ComplexMatrix& matrix() const noexcept { return rho_; }
    std::size_t dim() const noexcept { return rho_.dim(); }

    DensityMatrix reordered(const SystemLayout& target) const;

private:
    struct Unchecked {};
    DensityMatrix(SystemLayout layout, ComplexMatrix rho, Unchecked);

    friend DensityMatrix partial_trace(const DensityMatrix&, const SystemLayout&);
    friend DensityMatrix tensor_product(const DensityMatrix&, const DensityMatrix&);
    friend DensityMatrix reduce_pure(const PureState&, const SystemLayout&);

    SystemLayout layout_;
    ComplexMatrix rho_;
};

// ------------------------------------------------------------------ operations

PureState tensor_product(const PureState& a, const PureState& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
// Plain Kronecker product of matrices.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace out everything not in `keep`; the result is laid out in `keep` order.
DensityMatrix partial_trace(const DensityMatrix& rho, const SystemLayout& keep);
// Partial trace of |psi><psi| computed from the amplitude matrix directly.
DensityMatrix reduce_pure(const PureState& psi, const SystemLayout& keep);

// Transpose the row/column indices of the qubits in `subsystem`.
ComplexMatrix partial_transpose(const DensityMatrix& rho, const SystemLayout& subsystem);
ComplexMatrix partial_transpose(const ComplexMatrix& m, const SystemLayout& layout,
                                const SystemLayout& subsystem);

struct Eigensystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

// Cyclic complex Jacobi; throws if the input is not Hermitian within kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

// Singular values (descending) by one-sided Jacobi on the columns.
std::vector<double> singular_values(const ComplexMatrix& m);

double trace_norm(const ComplexMatrix& m);

// Principal square root of a PSD matrix. Eigenvalues within the solver's
// resolution (64 eps ||M||) of zero are treated as zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace cavesd
