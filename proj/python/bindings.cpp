#include "cavesd/esd.hpp"
#include "cavesd/sweep.hpp"
#include "cavesd/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

namespace py = pybind11;

namespace {

py::array_t<std::complex<double>> to_numpy(const cavesd::ComplexMatrix& m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    py::array_t<std::complex<double>> out({n, n});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t r = 0; r < n; ++r) {
        for (py::ssize_t c = 0; c < n; ++c) view(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
    return out;
}

py::array_t<std::complex<double>> to_numpy(const cavesd::PureState& psi) {
    const auto& a = psi.amplitudes();
    return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(a.size()), a.data());
}

cavesd::ComplexMatrix from_numpy(const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw std::invalid_argument("expected a square matrix");
    const auto n = static_cast<std::size_t>(a.shape(0));
    return cavesd::ComplexMatrix(n, std::vector<std::complex<double>>(a.data(), a.data() + n * n));
}

cavesd::SystemLayout layout_from(const std::vector<std::string>& labels) {
    std::vector<cavesd::Qubit> qs;
    qs.reserve(labels.size());
    for (const auto& l : labels) qs.push_back(cavesd::qubit_from_string(l));
    return cavesd::SystemLayout(std::move(qs));
}

std::vector<std::string> labels_of(const cavesd::SystemLayout& layout) {
    std::vector<std::string> out;
    for (auto q : layout.qubits()) out.emplace_back(cavesd::to_string(q));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement dynamics of three cavities dissipating into independent reservoirs";

    // states: returned as (labels, numpy array)
    m.def("ghz", [] { return to_numpy(cavesd::ghz()); });
    m.def("w", [] { return to_numpy(cavesd::w()); });
    m.def("generalized_ghz", [](double a) { return to_numpy(cavesd::generalized_ghz(a)); }, py::arg("a"));
    m.def("mixed_ghz_w", [](double p) { return to_numpy(cavesd::mixed_ghz_w(p).matrix()); }, py::arg("p"));
    m.def("amplitudes", [](double kt) {
        const auto a = cavesd::amplitudes(kt);
        return py::make_tuple(a.xi, a.chi);
    }, py::arg("kt"));
    m.def("global_output_state", [](double p, double kt) {
        const auto psi = cavesd::global_output_state(p, kt);
        return py::make_tuple(labels_of(psi.layout()), to_numpy(psi));
    }, py::arg("p"), py::arg("kt"));
    m.def("gghz_output_state", [](double a, double kt) {
        const auto psi = cavesd::gghz_output_state(a, kt);
        return py::make_tuple(labels_of(psi.layout()), to_numpy(psi));
    }, py::arg("a"), py::arg("kt"));
    m.def("reduced_cavity_state", [](double p, double kt) {
        return to_numpy(cavesd::reduce(cavesd::global_output_state(p, kt), cavesd::layouts::cavities).matrix());
    }, py::arg("p"), py::arg("kt"));

    // linear algebra on user matrices
    m.def("negativity", [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& rho,
                           const std::vector<std::string>& layout, const std::vector<std::string>& part_a) {
        return cavesd::negativity(cavesd::DensityMatrix(layout_from(layout), from_numpy(rho)), layout_from(part_a));
    }, py::arg("rho"), py::arg("layout"), py::arg("part_a"));
    m.def("hermitian_eigenvalues", [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& h) {
        return cavesd::hermitian_eigenvalues(from_numpy(h));
    }, py::arg("h"));
    m.def("wootters_concurrence", [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& rho) {
        return cavesd::wootters_concurrence(from_numpy(rho));
    }, py::arg("rho"));

    // closed forms and oracles
    m.def("closed_form_pt_eigenvalues", [](double p, double kt) {
        const auto s = cavesd::closed_form_pt_eigenvalues(p, kt);
        return std::vector<double>(s.lambdas.begin(), s.lambdas.end());
    }, py::arg("p"), py::arg("kt"));
    m.def("closed_form_negativity", [](double p, double kt) {
        return cavesd::negativity_from_spectrum(cavesd::closed_form_pt_eigenvalues(p, kt));
    }, py::arg("p"), py::arg("kt"));
    m.def("cavity_negativity", &cavesd::cavity_negativity, py::arg("p"), py::arg("kt"));
    m.def("reservoir_negativity", &cavesd::reservoir_negativity, py::arg("p"), py::arg("kt"));
    m.def("gghz_negativity_closed", &cavesd::gghz_negativity_closed, py::arg("a"), py::arg("kt"));
    m.def("gghz_cavity_negativity", &cavesd::gghz_cavity_negativity, py::arg("a"), py::arg("kt"));

    m.def("monogamy_chain", [](double p, double kt) {
        const auto r = cavesd::monogamy_chain(p, kt);
        py::dict d;
        d["c_init_sq"] = r.c_init_sq;
        d["c_pair_sq"] = r.c_pair_sq;
        d["c_c1_sq"] = r.c_c1_sq;
        d["c_r1_sq"] = r.c_r1_sq;
        d["n_cav_sq"] = r.n_cav_sq;
        d["n_res_sq"] = r.n_res_sq;
        d["mixed_concurrence_evaluated"] = r.mixed_concurrence_evaluated;
        return d;
    }, py::arg("p"), py::arg("kt"));

    // boundaries and times
    m.def("lambda5_boundary", &cavesd::lambda5_boundary, py::arg("kt"));
    m.def("lambda7_boundary", &cavesd::lambda7_boundary, py::arg("kt"));
    m.def("gghz_esd_boundary", &cavesd::gghz_esd_boundary, py::arg("kt"));
    m.def("classify_region", [](double p, double kt) {
        return std::string(cavesd::to_string(cavesd::classify_region(p, kt)));
    }, py::arg("p"), py::arg("kt"));
    m.def("esd_time", &cavesd::esd_time, py::arg("p"));
    m.def("gghz_esd_time", &cavesd::gghz_esd_time, py::arg("a"));
    m.def("esb_time", &cavesd::esb_time, py::arg("t_esd"));
    m.def("reservoir_birth_time", &cavesd::reservoir_birth_time, py::arg("p"));
    m.def("min_esd_point", [] {
        const auto e = cavesd::min_esd_point();
        return py::make_tuple(e.p, e.kt);
    });
    m.def("min_initial_negativity", [] {
        const auto n = cavesd::min_initial_negativity();
        return py::make_tuple(n.p, n.negativity);
    });
    m.def("equal_entanglement_range", [] {
        const auto r = cavesd::equal_entanglement_range();
        return py::make_tuple(r.a_low, r.a_high, r.max_gghz_esd_kt);
    });
    m.def("swap_check", [](double p, double kt) {
        const auto s = cavesd::swap_check(p, kt);
        return py::make_tuple(s.passed, s.max_deviation);
    }, py::arg("p"), py::arg("kt"));

    // grids
    m.def("surface_csv", [](const std::string& family, double param_min, double param_max, std::size_t param_steps,
                            double kt_min, double kt_max, std::size_t kt_steps) {
        cavesd::SweepConfig c;
        c.family = cavesd::family_from_string(family);
        c.param_min = param_min;
        c.param_max = param_max;
        c.param_steps = param_steps;
        c.kt_min = kt_min;
        c.kt_max = kt_max;
        c.kt_steps = kt_steps;
        py::gil_scoped_release release;
        return cavesd::format_surface(cavesd::compute_surface(c), c);
    }, py::arg("family") = "mixed", py::arg("param_min") = 0.0, py::arg("param_max") = 1.0,
       py::arg("param_steps") = 11, py::arg("kt_min") = 0.0, py::arg("kt_max") = 3.0, py::arg("kt_steps") = 31);
    m.def("verify", [](const std::string& suite, std::optional<double> tolerance) {
        const auto which = cavesd::verify::suite_from_string(suite);
        cavesd::verify::SuiteReport report;
        {
            py::gil_scoped_release release;
            report = cavesd::verify::run_suite(which, tolerance);
        }
        return py::make_tuple(report.passed(), report.to_text());
    }, py::arg("suite"), py::arg("tolerance") = py::none());

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
}
