// Sweeps, boundaries, verification grids and landmark checks for the
// three-cavity GHZ/W dissipation model.
//
// Exit codes: 0 success, 1 verification or landmark failure, 2 usage error.

#include "cavesd/esd.hpp"
#include "cavesd/sweep.hpp"
#include "cavesd/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open output file " + path);
    out << text;
}

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement dynamics of three cavities leaking into independent reservoirs"};
    app.require_subcommand(1);

    // surface
    std::string family = "mixed";
    std::string format = "csv";
    std::string out_path;
    cavesd::SweepConfig sweep;
    auto* surface = app.add_subcommand("surface", "negativity grid over (param, kt)");
    surface->add_option("--family", family, "mixed (param p) or gghz (param a)")->check(CLI::IsMember({"mixed", "gghz"}));
    surface->add_option("--param-min", sweep.param_min);
    surface->add_option("--param-max", sweep.param_max);
    surface->add_option("--param-steps", sweep.param_steps);
    surface->add_option("--kt-min", sweep.kt_min);
    surface->add_option("--kt-max", sweep.kt_max);
    surface->add_option("--kt-steps", sweep.kt_steps);
    surface->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    surface->add_option("--out", out_path, "output file (default stdout)");
    surface->add_flag("--oracle", sweep.oracle, "recompute every cell numerically and compare");
    surface->add_option("--tolerance", sweep.tolerance, "closed form vs oracle tolerance");
    surface->add_option("--workers", sweep.workers, "worker threads (0 = all cores)");

    // boundary
    std::string kind = "lambda5";
    cavesd::BoundaryRequest boundary;
    auto* bound = app.add_subcommand("boundary", "sample an ESD boundary curve");
    bound->add_option("--kind", kind)->check(CLI::IsMember({"lambda5", "lambda7", "gghz"}));
    bound->add_option("--kt-min", boundary.kt_min);
    bound->add_option("--kt-max", boundary.kt_max);
    bound->add_option("--kt-steps", boundary.kt_steps);
    bound->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    bound->add_option("--out", out_path);
    bound->add_flag("--oracle", boundary.oracle, "add a bisection column");

    // verify
    std::string suite_name;
    std::optional<double> tolerance;
    unsigned workers = 0;
    auto* verify = app.add_subcommand("verify", "run an invariant grid");
    verify->add_option("suite", suite_name, "closedform | monogamy | swap | esb | regions | all")
        ->required()
        ->check(CLI::IsMember({"closedform", "monogamy", "swap", "esb", "regions", "all"}));
    verify->add_option("--tolerance", tolerance, "override every check's threshold");
    verify->add_option("--workers", workers);

    auto* landmarks = app.add_subcommand("landmarks", "reproduce the reported landmark values");

    // esd-time
    std::optional<double> esd_p;
    std::optional<double> esd_a;
    auto* esd = app.add_subcommand("esd-time", "sudden-death time for a mixture p or gGHZ amplitude a");
    auto* opt_p = esd->add_option("--p", esd_p);
    auto* opt_a = esd->add_option("--a", esd_a);
    opt_p->excludes(opt_a);
    opt_a->excludes(opt_p);

    // monogamy
    double mono_p = 0.0;
    double mono_kt = 0.0;
    double mono_tol = 1e-10;
    auto* mono = app.add_subcommand("monogamy", "evaluate the monogamy chain at one point");
    mono->add_option("--p", mono_p)->required();
    mono->add_option("--kt", mono_kt)->required();
    mono->add_option("--tolerance", mono_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (surface->parsed()) {
            sweep.family = cavesd::family_from_string(family);
            sweep.format = cavesd::format_from_string(format);
            sweep.output_path = out_path;
            const auto result = as_usage([&] { return cavesd::compute_surface(sweep); });
            emit(cavesd::format_surface(result, sweep), out_path);
            if (sweep.oracle) {
                std::cerr << "oracle max deviation " << cavesd::format_number(result.max_oracle_deviation)
                          << " (tolerance " << cavesd::format_number(sweep.tolerance) << ")\n";
                if (result.max_oracle_deviation > sweep.tolerance) {
                    std::cerr << "closed form disagrees with oracle at param=" << cavesd::format_number(result.worst->param)
                              << " kt=" << cavesd::format_number(result.worst->kt) << '\n';
                    return kExitFailure;
                }
            }
            return 0;
        }
        if (bound->parsed()) {
            boundary.kind = cavesd::boundary_kind_from_string(kind);
            boundary.format = cavesd::format_from_string(format);
            const auto result = as_usage([&] { return cavesd::compute_boundary(boundary); });
            emit(cavesd::format_boundary(result, boundary), out_path);
            return 0;
        }
        if (verify->parsed()) {
            if (tolerance && !(*tolerance > 0.0)) throw UsageError("--tolerance must be positive");
            bool ok = true;
            for (auto suite : cavesd::verify::all_suites()) {
                if (suite_name != "all" && cavesd::verify::to_string(suite) != suite_name) continue;
                const auto report = cavesd::verify::run_suite(suite, tolerance, workers);
                std::cout << report.to_text();
                ok = ok && report.passed();
            }
            std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
            return ok ? 0 : kExitFailure;
        }
        if (landmarks->parsed()) {
            const auto report = cavesd::verify::compute_landmarks();
            std::cout << report.to_text();
            return report.passed() ? 0 : kExitFailure;
        }
        if (esd->parsed()) {
            if (!esd_p && !esd_a) throw UsageError("esd-time needs --p or --a");
            const auto t = as_usage([&] { return esd_p ? cavesd::esd_time(*esd_p) : cavesd::gghz_esd_time(*esd_a); });
            if (esd_p) {
                std::cout << "p=" << cavesd::format_number(*esd_p);
            } else {
                std::cout << "a=" << cavesd::format_number(*esd_a);
            }
            if (t) {
                std::cout << " kt_esd=" << cavesd::format_number(*t) << " kt_esb=" << cavesd::format_number(cavesd::esb_time(*t))
                          << '\n';
            } else {
                std::cout << " no sudden death (asymptotic decay)\n";
            }
            return 0;
        }
        if (mono->parsed()) {
            const auto rec = as_usage([&] { return cavesd::monogamy_chain(mono_p, mono_kt); });
            using cavesd::format_number;
            std::cout << "p=" << format_number(rec.p) << " kt=" << format_number(rec.kt) << '\n'
                      << "C2_c1|c2c3z(0)          " << format_number(rec.c_init_sq) << '\n'
                      << "C2_c1r1|c2r2c3r3z(t)    " << format_number(rec.c_pair_sq) << '\n'
                      << "C2_c1|c2r2c3r3z(t)      " << format_number(rec.c_c1_sq) << '\n'
                      << "C2_r1|c2r2c3r3z(t)      " << format_number(rec.c_r1_sq) << '\n'
                      << "C2_c1|c2c3 + C2_r1|r2r3 not evaluated\n"
                      << "N2_c1|c2c3(t)           " << format_number(rec.n_cav_sq) << '\n'
                      << "N2_r1|r2r3(t)           " << format_number(rec.n_res_sq) << '\n';
            const bool ok = rec.equality_deviation() <= mono_tol && rec.split_slack() >= -mono_tol &&
                            rec.negativity_slack() >= -mono_tol;
            std::cout << "equality deviation " << format_number(rec.equality_deviation()) << ", split slack "
                      << format_number(rec.split_slack()) << ", negativity slack "
                      << format_number(rec.negativity_slack()) << '\n'
                      << (ok ? "chain holds\n" : "chain VIOLATED\n");
            return ok ? 0 : kExitFailure;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
