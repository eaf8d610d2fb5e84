#include "cavesd/qlinalg.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace cavesd;

namespace {

const SystemLayout kAB{Qubit::c1, Qubit::c2};

PureState bell() {
    const double s = 1.0 / std::sqrt(2.0);
    return PureState(kAB, {s, 0.0, 0.0, s});
}

DensityMatrix random_rho(oracle::Rng& rng, const SystemLayout& layout, std::size_t rank = 0) {
    return DensityMatrix(layout, rng.random_density(layout.dim(), rank));
}

}  // namespace

TEST_CASE("layout labels, positions and validation") {
    const SystemLayout l{Qubit::c1, Qubit::r1, Qubit::z};
    CHECK(l.size() == 3);
    CHECK(l.dim() == 8);
    CHECK(l.position(Qubit::z) == 2);
    CHECK(l.contains(Qubit::r1));
    CHECK_FALSE(l.contains(Qubit::c2));
    CHECK_THROWS_AS(l.position(Qubit::c3), std::invalid_argument);
    CHECK_THROWS_AS((SystemLayout{Qubit::c1, Qubit::c1}), std::invalid_argument);
    CHECK_THROWS_AS(l.concat(SystemLayout{Qubit::z}), std::invalid_argument);
    CHECK(qubit_from_string("r3") == Qubit::r3);
    CHECK_THROWS_AS(qubit_from_string("q9"), std::invalid_argument);
    CHECK(l.to_string() == "c1r1z");
}

TEST_CASE("pure state construction") {
    CHECK_THROWS_AS(PureState(kAB, {1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PureState(kAB, {1.0, 0.0}), std::invalid_argument);
    const auto b = PureState::basis(SystemLayout{Qubit::c1, Qubit::c2, Qubit::c3}, "010");
    CHECK(b.amplitudes()[2] == cplx{1.0});
    CHECK_THROWS_AS(PureState::basis(kAB, "0a"), std::invalid_argument);
    CHECK_THROWS_AS(PureState::basis(kAB, "010"), std::invalid_argument);
}

TEST_CASE("tensor product follows big-endian layout order") {
    const SystemLayout a{Qubit::c1};
    const SystemLayout b{Qubit::c2};
    const auto zero_zero = tensor_product(PureState::basis(a, "0"), PureState::basis(b, "0"));
    CHECK(zero_zero.layout() == kAB);
    CHECK(zero_zero.amplitudes() == std::vector<cplx>{1.0, 0.0, 0.0, 0.0});
    const auto zero_one = tensor_product(PureState::basis(a, "0"), PureState::basis(b, "1"));
    CHECK(zero_one.amplitudes() == std::vector<cplx>{0.0, 1.0, 0.0, 0.0});

    const auto half = ComplexMatrix::identity(2) * cplx{0.5};
    const auto mixed = tensor_product(DensityMatrix(a, half), DensityMatrix(b, half));
    CHECK(max_abs_diff(mixed.matrix(), ComplexMatrix::identity(4) * cplx{0.25}) == 0.0);
    CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("density matrix validation") {
    CHECK_THROWS_AS(DensityMatrix(kAB, ComplexMatrix::identity(4)), std::invalid_argument);  // trace 4
    const double d[4] = {1.5, -0.5, 0.0, 0.0};
    CHECK_THROWS_AS(DensityMatrix(kAB, ComplexMatrix::diagonal(d)), std::invalid_argument);  // not PSD
    auto m = ComplexMatrix::identity(4) * cplx{0.25};
    m(0, 1) = cplx{0.1};
    CHECK_THROWS_AS(DensityMatrix(kAB, m), std::invalid_argument);  // not Hermitian
    CHECK_THROWS_AS(DensityMatrix(SystemLayout{Qubit::c1}, ComplexMatrix::identity(4) * cplx{0.25}),
                    std::invalid_argument);
    auto bad = ComplexMatrix::identity(4) * cplx{0.25};
    bad(2, 2) = cplx{std::nan("")};
    CHECK_THROWS(DensityMatrix(kAB, bad));
}

TEST_CASE("partial trace of simple states") {
    const auto rho00 = DensityMatrix::from_pure(PureState::basis(kAB, "00"));
    const auto r = partial_trace(rho00, SystemLayout{Qubit::c1});
    CHECK(r.matrix()(0, 0) == cplx{1.0});
    CHECK(std::abs(r.matrix()(1, 1)) == 0.0);

    const SystemLayout abc{Qubit::c1, Qubit::c2, Qubit::c3};
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<cplx> ghz(8, 0.0);
    ghz[0] = ghz[7] = s;
    const auto g = partial_trace(DensityMatrix::from_pure(PureState(abc, ghz)), SystemLayout{Qubit::c1});
    CHECK(max_abs_diff(g.matrix(), ComplexMatrix::identity(2) * cplx{0.5}) < 1e-15);

    CHECK_THROWS_AS(partial_trace(rho00, SystemLayout{Qubit::z}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho00, SystemLayout{}), std::invalid_argument);
}

TEST_CASE("partial trace keeps the requested order, preserves trace and Hermiticity") {
    oracle::Rng rng(11);
    const SystemLayout l{Qubit::c1, Qubit::r1, Qubit::c2, Qubit::z};
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho = random_rho(rng, l);
        const auto ab = partial_trace(rho, SystemLayout{Qubit::c1, Qubit::c2});
        const auto ba = partial_trace(rho, SystemLayout{Qubit::c2, Qubit::c1});
        CHECK(std::abs(ab.matrix().trace() - 1.0) < 1e-12);
        CHECK(ab.matrix().hermitian_defect() < 1e-12);
        CHECK(max_abs_diff(ab.reordered(SystemLayout{Qubit::c2, Qubit::c1}).matrix(), ba.matrix()) < 1e-15);
        // tracing in two steps agrees with one step
        const auto step = partial_trace(partial_trace(rho, SystemLayout{Qubit::c1, Qubit::r1, Qubit::c2}),
                                        SystemLayout{Qubit::c1, Qubit::c2});
        CHECK(max_abs_diff(step.matrix(), ab.matrix()) < 1e-14);
    }
}

TEST_CASE("reduce_pure agrees with tracing the projector") {
    oracle::Rng rng(12);
    const SystemLayout l{Qubit::c1, Qubit::r1, Qubit::c2, Qubit::r2, Qubit::z};
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = rng.random_pure(l);
        const SystemLayout keep{Qubit::r2, Qubit::c1};
        CHECK(max_abs_diff(reduce_pure(psi, keep).matrix(), partial_trace(DensityMatrix::from_pure(psi), keep).matrix()) <
              1e-14);
    }
}

TEST_CASE("Schmidt symmetry: both marginals of a pure state share their nonzero spectrum") {
    oracle::Rng rng(13);
    const SystemLayout l{Qubit::c1, Qubit::c2, Qubit::c3, Qubit::r1, Qubit::r2};
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = rng.random_pure(l);
        auto a = hermitian_eigenvalues(reduce_pure(psi, SystemLayout{Qubit::c1, Qubit::c2}).matrix());
        const auto b = hermitian_eigenvalues(reduce_pure(psi, SystemLayout{Qubit::c3, Qubit::r1, Qubit::r2}).matrix());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-10);
        for (std::size_t k = a.size(); k < b.size(); ++k) CHECK(std::abs(b[k]) < 1e-10);
    }
}

TEST_CASE("partial transpose") {
    const auto rho00 = DensityMatrix::from_pure(PureState::basis(kAB, "00"));
    CHECK(max_abs_diff(partial_transpose(rho00, SystemLayout{Qubit::c1}), rho00.matrix()) == 0.0);

    const auto bell_pt = partial_transpose(DensityMatrix::from_pure(bell()), SystemLayout{Qubit::c2});
    const auto ev = hermitian_eigenvalues(bell_pt);
    CHECK(ev.back() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(trace_norm(bell_pt) == doctest::Approx(2.0).epsilon(1e-14));

    oracle::Rng rng(14);
    const SystemLayout l{Qubit::c1, Qubit::r1, Qubit::c2};
    const auto rho = random_rho(rng, l);
    const SystemLayout sub{Qubit::r1};
    const auto once = partial_transpose(rho, sub);
    CHECK(max_abs_diff(partial_transpose(once, l, sub), rho.matrix()) == 0.0);
    CHECK(std::abs(once.trace() - rho.matrix().trace()) < 1e-15);
    CHECK(once.hermitian_defect() < 1e-15);
    // transposing the complement gives the full transpose of the first, same spectrum
    const auto comp = partial_transpose(rho, SystemLayout{Qubit::c1, Qubit::c2});
    CHECK(oracle::max_diff(hermitian_eigenvalues(once), hermitian_eigenvalues(comp)) < 1e-12);

    CHECK_THROWS_AS(partial_transpose(rho, l), std::invalid_argument);
    CHECK_THROWS_AS(partial_transpose(rho, SystemLayout{}), std::invalid_argument);
    CHECK_THROWS_AS(partial_transpose(rho, SystemLayout{Qubit::z}), std::invalid_argument);
}

TEST_CASE("eigenvalues: small cases") {
    CHECK(hermitian_eigenvalues(ComplexMatrix::identity(2)) == std::vector<double>{1.0, 1.0});
    const double d[2] = {1.0 / 3.0, 2.0 / 3.0};
    const auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal(d));
    CHECK(ev[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(ev[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    ComplexMatrix m(2);
    m(0, 1) = cplx{1.0};
    CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("eigenvalues and eigenvectors match an independent solver") {
    oracle::Rng rng(15);
    for (std::size_t dim : {2U, 8U, 64U, 128U}) {
        const auto h = rng.random_hermitian(dim);
        const auto es = hermitian_eigensystem(h);
        const auto ref = oracle::eigenvalues(h);
        CHECK(oracle::max_diff(es.values, ref) < 1e-10);
        CHECK(std::is_sorted(es.values.rbegin(), es.values.rend()));
        double sum = 0.0;
        for (double v : es.values) sum += v;
        CHECK(std::abs(sum - h.trace().real()) < 1e-10);
        // H V = V diag(values), V unitary
        std::vector<double> vals = es.values;
        const auto recon = es.vectors * ComplexMatrix::diagonal(vals) * es.vectors.adjoint();
        CHECK(max_abs_diff(recon, h) < 1e-10);
        CHECK(max_abs_diff(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(dim)) < 1e-10);
    }
}

TEST_CASE("degenerate and rank-deficient spectra") {
    oracle::Rng rng(16);
    const auto rho = rng.random_density(32, 3);
    const auto ev = hermitian_eigenvalues(rho);
    CHECK(oracle::max_diff(ev, oracle::eigenvalues(rho)) < 1e-12);
    for (std::size_t k = 3; k < ev.size(); ++k) CHECK(std::abs(ev[k]) < 1e-12);
    const auto u = rng.random_unitary(16);
    std::vector<double> d(16, 0.25);
    d[0] = d[1] = 0.0;
    d[2] = 1.0;
    const auto h = u * ComplexMatrix::diagonal(d) * u.adjoint();
    CHECK(oracle::max_diff(hermitian_eigenvalues(h), oracle::eigenvalues(h)) < 1e-12);
}

TEST_CASE("singular values and trace norm match an independent SVD") {
    oracle::Rng rng(17);
    for (std::size_t dim : {2U, 4U, 16U, 64U}) {
        ComplexMatrix m(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = rng.gaussian();
        }
        const auto ref = oracle::singular_values(m);
        CHECK(oracle::max_diff(singular_values(m), ref) < 1e-10);
        double sum = 0.0;
        for (double s : ref) sum += s;
        CHECK(trace_norm(m) == doctest::Approx(sum).epsilon(1e-12));
    }
    const double d[2] = {1.0, -1.0};
    CHECK(trace_norm(ComplexMatrix::diagonal(d)) == doctest::Approx(2.0).epsilon(1e-15));
    for (int trial = 0; trial < 5; ++trial) CHECK(trace_norm(rng.random_density(16)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("psd square root") {
    CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) < 1e-15);
    const double d[2] = {4.0, 9.0};
    const double r[2] = {2.0, 3.0};
    CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal(d)), ComplexMatrix::diagonal(r)) < 1e-14);
    oracle::Rng rng(18);
    for (std::size_t rank : {16U, 2U}) {
        const auto rho = rng.random_density(16, rank);
        const auto s = psd_sqrt(rho);
        CHECK(max_abs_diff(s * s, rho) < 1e-10);
        CHECK(s.hermitian_defect() < 1e-12);
    }
    const double neg[2] = {1.0, -0.5};
    CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal(neg)), std::invalid_argument);
}

TEST_CASE("reordering round trips") {
    oracle::Rng rng(19);
    const SystemLayout l{Qubit::c1, Qubit::r1, Qubit::z};
    const SystemLayout t{Qubit::z, Qubit::c1, Qubit::r1};
    const auto psi = rng.random_pure(l);
    const auto back = psi.reordered(t).reordered(l);
    for (std::size_t i = 0; i < psi.dim(); ++i) CHECK(back.amplitudes()[i] == psi.amplitudes()[i]);
    const auto basis = PureState::basis(l, "100").reordered(t);
    CHECK(basis.amplitudes()[2] == cplx{1.0});
    CHECK_THROWS_AS(psi.reordered(SystemLayout{Qubit::c1, Qubit::r1}), std::invalid_argument);
    const auto rho = DensityMatrix::from_pure(psi);
    CHECK(max_abs_diff(rho.reordered(t).matrix(), DensityMatrix::from_pure(psi.reordered(t)).matrix()) < 1e-15);
}
