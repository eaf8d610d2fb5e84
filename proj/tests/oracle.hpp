// Test-only helpers: random states and an Eigen-backed second route for
// spectra, independent of the library's Jacobi solvers.
#pragma once

#include "cavesd/qlinalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using cavesd::cplx;

inline Eigen::MatrixXcd to_eigen(const cavesd::ComplexMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd e(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) e(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
    return e;
}

inline cavesd::ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
    cavesd::ComplexMatrix m(static_cast<std::size_t>(e.rows()));
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
        for (Eigen::Index c = 0; c < e.cols(); ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
    }
    return m;
}

// Descending eigenvalues via Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const cavesd::ComplexMatrix& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h), Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

inline std::vector<double> singular_values(const cavesd::ComplexMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double w = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) w = std::max(w, std::abs(a[i] - b[i]));
    return a.size() == b.size() ? w : 1e300;
}

struct Rng {
    std::mt19937_64 gen;
    std::normal_distribution<double> normal{0.0, 1.0};
    explicit Rng(unsigned long long seed) : gen(seed) {}

    cplx gaussian() { return {normal(gen), normal(gen)}; }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }

    std::vector<cplx> random_vector(std::size_t n) {
        std::vector<cplx> v(n);
        double norm2 = 0.0;
        for (auto& x : v) {
            x = gaussian();
            norm2 += std::norm(x);
        }
        for (auto& x : v) x /= std::sqrt(norm2);
        return v;
    }

    cavesd::PureState random_pure(const cavesd::SystemLayout& layout) {
        return cavesd::PureState(layout, random_vector(layout.dim()));
    }

    // G G^dagger / Tr, full rank with probability 1
    cavesd::ComplexMatrix random_density(std::size_t n, std::size_t rank = 0) {
        if (rank == 0) rank = n;
        Eigen::MatrixXcd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rank));
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = gaussian();
        }
        Eigen::MatrixXcd rho = g * g.adjoint();
        rho /= rho.trace();
        rho = 0.5 * (rho + rho.adjoint()).eval();
        return from_eigen(rho);
    }

    cavesd::ComplexMatrix random_hermitian(std::size_t n) {
        Eigen::MatrixXcd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = gaussian();
        }
        return from_eigen(0.5 * (g + g.adjoint()));
    }

    // Haar-ish unitary from the QR of a complex Gaussian matrix.
    cavesd::ComplexMatrix random_unitary(std::size_t n) {
        Eigen::MatrixXcd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = gaussian();
        }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        return from_eigen(qr.householderQ() * Eigen::MatrixXcd::Identity(g.rows(), g.cols()));
    }
};

}  // namespace oracle
