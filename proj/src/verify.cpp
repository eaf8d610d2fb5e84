#include "cavesd/verify.hpp"

#include "cavesd/esd.hpp"
#include "cavesd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cavesd::verify {

namespace {

std::string point(double p, double kt) { return "p=" + format_number(p) + " kt=" + format_number(kt); }

struct GridCell {
    double p;
    double kt;
};

std::vector<GridCell> grid(std::size_t np, double kt_max, std::size_t nkt) {
    std::vector<GridCell> cells;
    for (double p : linspace(0.0, 1.0, np)) {
        for (double kt : linspace(0.0, kt_max, nkt)) cells.push_back({p, kt});
    }
    return cells;
}

// Tracks the largest value seen and where it occurred.
struct Worst {
    double value{-std::numeric_limits<double>::infinity()};
    std::string where;

    void offer(double v, const std::string& at) {
        if (v > value) {
            value = v;
            where = at;
        }
    }
};

CheckResult upper_bound_check(std::string name, std::string metric, const Worst& w, double tol) {
    return {std::move(name), std::move(metric), w.value, tol, w.value <= tol, w.where};
}

SuiteReport closedform_suite(std::optional<double> tol, unsigned workers) {
    const auto cells = grid(25, 3.0, 25);
    std::vector<double> spectrum_dev(cells.size());
    std::vector<double> sign_dev(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t i) {
        const auto [p, kt] = cells[i];
        const auto closed = closed_form_pt_eigenvalues(p, kt);
        std::vector<double> expected(closed.lambdas.begin(), closed.lambdas.end());
        std::sort(expected.begin(), expected.end(), std::greater<>());
        const auto rho = reduce(global_output_state(p, kt), layouts::cavities);
        const auto numeric = hermitian_eigenvalues(partial_transpose(rho, SystemLayout{Qubit::c1}));
        double dev = 0.0;
        for (std::size_t k = 0; k < 8; ++k) dev = std::max(dev, std::abs(expected[k] - numeric[k]));
        spectrum_dev[i] = dev;
        double neg = 0.0;
        for (std::size_t k : {0U, 1U, 2U, 3U, 5U, 7U}) neg = std::max(neg, -closed.lambdas[k]);
        sign_dev[i] = neg;
    });
    Worst spectrum;
    Worst sign;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        spectrum.offer(spectrum_dev[i], point(cells[i].p, cells[i].kt));
        sign.offer(sign_dev[i], point(cells[i].p, cells[i].kt));
    }
    SuiteReport r{Suite::closedform, {}, {}};
    r.checks.push_back(upper_bound_check("closed-form spectrum vs numeric eigensolve",
                                         "max |lambda_closed - lambda_numeric|", spectrum, tol.value_or(1e-10)));
    r.checks.push_back(upper_bound_check("lambda 1,2,3,4,6,8 non-negative", "max(-lambda)", sign,
                                         tol.value_or(1e-12)));
    r.notes.push_back("grid: 25 x 25 over p in [0,1], kt in [0,3]");
    return r;
}

SuiteReport monogamy_suite(std::optional<double> tol, unsigned workers) {
    const auto cells = grid(25, 3.0, 25);
    std::vector<MonogamyChainRecord> recs(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t i) { recs[i] = monogamy_chain(cells[i].p, cells[i].kt); });
    Worst eq;
    Worst split;
    Worst tail;
    for (const auto& rec : recs) {
        const auto at = point(rec.p, rec.kt);
        eq.offer(rec.equality_deviation(), at);
        split.offer(-rec.split_slack(), at);
        tail.offer(-rec.negativity_slack(), at);
    }
    const double t = tol.value_or(1e-10);
    SuiteReport r{Suite::monogamy, {}, {}};
    r.checks.push_back(upper_bound_check("C2_c1|c2c3z(0) = C2_c1r1|c2r2c3r3z(t)", "max |difference|", eq, t));
    r.checks.push_back(upper_bound_check("C2_c1r1|rest >= C2_c1|rest + C2_r1|rest", "max violation (-slack)", split, t));
    r.checks.push_back(upper_bound_check("C2_c1|rest + C2_r1|rest >= N2_c1|c2c3 + N2_r1|r2r3",
                                         "max violation (-slack)", tail, t));
    r.notes.push_back("grid: 25 x 25 over p in [0,1], kt in [0,3]; rest = c2r2c3r3z as a logic qubit");
    r.notes.push_back("mixed-state term C2_c1|c2c3(t) + C2_r1|r2r3(t): not evaluated (convex roof)");
    return r;
}

SuiteReport swap_suite(std::optional<double> tol, unsigned workers) {
    const auto cells = grid(20, 3.0, 20);
    std::vector<double> dev(cells.size());
    parallel_for(cells.size(), workers,
                 [&](std::size_t i) { dev[i] = swap_check(cells[i].p, cells[i].kt).max_deviation; });
    Worst w;
    for (std::size_t i = 0; i < cells.size(); ++i) w.offer(dev[i], point(cells[i].p, cells[i].kt));
    SuiteReport r{Suite::swap, {}, {}};
    r.checks.push_back(upper_bound_check("rho_r(xi,chi) = rho_c(chi,xi)", "max entrywise deviation", w,
                                         tol.value_or(kSwapTol)));
    r.notes.push_back("grid: 20 x 20 over p in [0,1], kt in [0,3]");
    return r;
}

SuiteReport esb_suite(std::optional<double> tol, unsigned workers) {
    const auto ps = linspace(0.3, 0.95, 10);
    std::vector<double> dev(ps.size());
    std::vector<std::string> where(ps.size());
    parallel_for(ps.size(), workers, [&](std::size_t i) {
        const auto t_esd = esd_time(ps[i]);
        const auto birth = reservoir_birth_time(ps[i]);
        if (!t_esd || !birth) {
            dev[i] = std::numeric_limits<double>::infinity();
            where[i] = "p=" + format_number(ps[i]) + " (no ESD or no birth found)";
            return;
        }
        const double predicted = esb_time(*t_esd);
        dev[i] = std::abs(predicted - *birth);
        where[i] = "p=" + format_number(ps[i]) + " kt_esd=" + format_number(*t_esd) +
                   " kt_esb=" + format_number(predicted) + " birth=" + format_number(*birth);
    });
    Worst w;
    for (std::size_t i = 0; i < ps.size(); ++i) w.offer(dev[i], where[i]);
    SuiteReport r{Suite::esb, {}, {}};
    r.checks.push_back(upper_bound_check("kt_ESB = -ln(1 - exp(-kt_ESD)) vs reservoir birth",
                                         "max |kt_ESB - kt_birth|", w, tol.value_or(1e-3)));
    r.notes.push_back("p in {0.3, ..., 0.95}, 10 values");
    return r;
}

SuiteReport regions_suite(std::optional<double> tol, unsigned workers) {
    const auto cells = grid(40, 3.0, 40);
    std::vector<RegionClass> region(cells.size());
    std::vector<double> neg(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t i) {
        region[i] = classify_region(cells[i].p, cells[i].kt);
        neg[i] = cavity_negativity(cells[i].p, cells[i].kt);
    });
    const double t = tol.value_or(kZeroEntanglement);
    Worst separable;   // largest N inside IV
    Worst entangled;   // largest -N inside I-III, i.e. smallest N
    std::size_t counts[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto at = point(cells[i].p, cells[i].kt) + " region " + std::string(to_string(region[i]));
        ++counts[static_cast<int>(region[i])];
        if (region[i] == RegionClass::IV) {
            separable.offer(neg[i], at);
        } else {
            entangled.offer(-neg[i], at);
        }
    }
    SuiteReport r{Suite::regions, {}, {}};
    auto sep = upper_bound_check("region IV => N < tol", "max N in region IV", separable, t);
    sep.passed = counts[3] == 0 || separable.value < t;
    r.checks.push_back(sep);
    CheckResult ent{"regions I-III => N > tol", "min N in regions I-III", -entangled.value, t,
                    counts[0] + counts[1] + counts[2] == 0 || -entangled.value > t, entangled.where, true};
    r.checks.push_back(ent);
    std::ostringstream note;
    note << "grid: 40 x 40 over p in [0,1], kt in [0,3]; cells I=" << counts[0] << " II=" << counts[1]
         << " III=" << counts[2] << " IV=" << counts[3];
    r.notes.push_back(note.str());
    return r;
}

}  // namespace

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::closedform: return "closedform";
        case Suite::monogamy: return "monogamy";
        case Suite::swap: return "swap";
        case Suite::esb: return "esb";
        case Suite::regions: return "regions";
    }
    return "?";
}

Suite suite_from_string(std::string_view s) {
    for (Suite suite : all_suites()) {
        if (to_string(suite) == s) return suite;
    }
    throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites{Suite::closedform, Suite::monogamy, Suite::swap, Suite::esb,
                                           Suite::regions};
    return suites;
}

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << "suite " << to_string(suite) << '\n';
    for (const auto& c : checks) {
        out << (c.passed ? "  PASS  " : "  FAIL  ") << c.name << ": " << c.metric << " = " << format_number(c.value)
            << " (tolerance " << format_number(c.tolerance) << ")";
        if (!c.worst_point.empty()) out << " at " << c.worst_point;
        out << '\n';
    }
    for (const auto& n : notes) out << "  note  " << n << '\n';
    return out.str();
}

SuiteReport run_suite(Suite suite, std::optional<double> tolerance, unsigned workers) {
    if (tolerance && !(*tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    switch (suite) {
        case Suite::closedform: return closedform_suite(tolerance, workers);
        case Suite::monogamy: return monogamy_suite(tolerance, workers);
        case Suite::swap: return swap_suite(tolerance, workers);
        case Suite::esb: return esb_suite(tolerance, workers);
        case Suite::regions: return regions_suite(tolerance, workers);
    }
    throw std::invalid_argument("unknown suite");
}

bool LandmarkReport::passed() const {
    return std::all_of(landmarks.begin(), landmarks.end(), [](const Landmark& l) { return l.passed; });
}

std::string LandmarkReport::to_text() const {
    std::ostringstream out;
    for (const auto& l : landmarks) {
        out << (l.passed ? "PASS  " : "FAIL  ") << l.name << ": computed " << format_number(l.computed)
            << ", reference " << format_number(l.expected) << " +/- " << format_number(l.tolerance) << '\n';
    }
    out << "conventions: " << conventions << '\n';
    return out.str();
}

LandmarkReport compute_landmarks() {
    LandmarkReport rep;
    auto add = [&rep](std::string name, double computed, double expected, double tol) {
        rep.landmarks.push_back({std::move(name), computed, expected, tol, std::abs(computed - expected) <= tol});
    };
    add("ESD onset threshold p", esd_onset_threshold(), 0.25, 0.005);
    const auto esd = min_esd_point();
    add("minimum ESD point p", esd.p, 0.385, 0.005);
    add("minimum ESD point kt", esd.kt, 1.091, 0.005);
    const auto nmin = min_initial_negativity();
    add("minimum initial negativity p", nmin.p, 0.465, 0.005);
    add("minimum initial negativity N", nmin.negativity, 0.643, 0.002);
    add("W state negativity", negativity(DensityMatrix::from_pure(w()), SystemLayout{Qubit::c1}),
        2.0 * std::sqrt(2.0) / 3.0, 1e-12);
    add("GHZ state negativity", negativity(DensityMatrix::from_pure(ghz()), SystemLayout{Qubit::c1}), 1.0, 1e-12);
    const auto range = equal_entanglement_range();
    add("p_c", range.p_c, 0.292, 0.001);
    add("equal-entanglement amplitude a (low)", range.a_low, 0.319, 0.003);
    add("equal-entanglement amplitude a (high)", range.a_high, 0.363, 0.003);
    add("maximal gGHZ ESD time kt", range.max_gghz_esd_kt, 0.763, 0.005);
    rep.conventions =
        "xi = exp(-kt/2), chi = sqrt(1 - exp(-kt)); rho(0) = p|GHZ><GHZ| + (1-p)|W><W| (linear weights); "
        "negativity across c1|c2c3; a-range taken over all p in [p_c, p_0]";
    return rep;
}

}  // namespace cavesd::verify
