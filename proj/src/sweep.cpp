#include "cavesd/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cavesd {

using nlohmann::json;

namespace {

json conventions_meta() {
    return {
        {"amplitudes", "xi = exp(-kt/2), chi = sqrt(1 - exp(-kt))"},
        {"mixture", "p |GHZ><GHZ| + (1 - p) |W><W|"},
        {"ordering", "big-endian, first label most significant"},
        {"partition", "c1 | c2 c3"},
        {"zero_entanglement", kZeroEntanglement},
        {"region_tolerance", kRegionTol},
        {"gghz_negativity", "F = 4a^2 e^{3kt} + b^2 (2 - 3e^{kt} + e^{2kt})^2"},
    };
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::mixed ? "mixed" : "gghz"; }

Family family_from_string(std::string_view s) {
    if (s == "mixed") return Family::mixed;
    if (s == "gghz") return Family::gghz;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat format_from_string(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

void validate(const SweepConfig& c) {
    auto bad = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (!(c.param_min < c.param_max)) bad("param-min must be below param-max");
    if (c.param_min < 0.0 || c.param_max > 1.0) bad("parameter range must lie within [0, 1]");
    if (!(c.kt_min < c.kt_max)) bad("kt-min must be below kt-max");
    if (c.kt_min < 0.0 || c.kt_max > kMaxClosedFormKt) bad("kt range must lie within [0, 150]");
    if (c.param_steps < 2 || c.kt_steps < 2) bad("step counts must be at least 2");
    if (!(c.tolerance > 0.0)) bad("tolerance must be positive");
}

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
    if (steps < 2) throw std::invalid_argument("linspace needs at least 2 steps");
    std::vector<double> v(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    v.back() = hi;
    return v;
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body) {
    if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

SurfaceResult compute_surface(const SweepConfig& config) {
    validate(config);
    const auto params = linspace(config.param_min, config.param_max, config.param_steps);
    const auto kts = linspace(config.kt_min, config.kt_max, config.kt_steps);
    SurfaceResult result;
    result.rows.resize(params.size() * kts.size());
    parallel_for(result.rows.size(), config.workers, [&](std::size_t idx) {
        SurfaceRow row;
        row.param = params[idx / kts.size()];
        row.kt = kts[idx % kts.size()];
        if (config.family == Family::mixed) {
            row.negativity = negativity_from_spectrum(closed_form_pt_eigenvalues(row.param, row.kt));
            if (config.oracle) row.oracle = cavity_negativity(row.param, row.kt);
        } else {
            row.negativity = gghz_negativity_closed(row.param, row.kt);
            if (config.oracle) row.oracle = gghz_cavity_negativity(row.param, row.kt);
        }
        result.rows[idx] = row;
    });
    if (config.oracle) {
        for (const auto& row : result.rows) {
            const double dev = std::abs(row.negativity - *row.oracle);
            if (!result.worst || dev > result.max_oracle_deviation) {
                result.max_oracle_deviation = dev;
                result.worst = row;
            }
        }
    }
    return result;
}

std::string format_surface(const SurfaceResult& result, const SweepConfig& config) {
    if (config.format == OutputFormat::csv) {
        std::ostringstream out;
        out << "param,kt,negativity\n";
        for (const auto& r : result.rows) {
            out << format_number(r.param) << ',' << format_number(r.kt) << ',' << format_number(r.negativity) << '\n';
        }
        return out.str();
    }
    json meta = conventions_meta();
    meta["family"] = to_string(config.family);
    meta["param"] = config.family == Family::mixed ? "p" : "a";
    meta["negativity_source"] = "closed form";
    meta["param_steps"] = config.param_steps;
    meta["kt_steps"] = config.kt_steps;
    if (config.oracle) {
        meta["oracle_tolerance"] = config.tolerance;
        meta["oracle_max_deviation"] = result.max_oracle_deviation;
    }
    json rows = json::array();
    for (const auto& r : result.rows) {
        json row = {{"param", r.param}, {"kt", r.kt}, {"negativity", r.negativity}};
        if (r.oracle) row["oracle"] = *r.oracle;
        rows.push_back(std::move(row));
    }
    return json{{"meta", meta}, {"rows", rows}}.dump(2) + "\n";
}

BoundaryResult compute_boundary(const BoundaryRequest& request) {
    BoundaryResult result{sample_boundary(request.kind, request.kt_min, request.kt_max, request.kt_steps), {}};
    if (request.oracle) {
        result.oracle.reserve(result.curve.samples.size());
        for (const auto& [kt, value] : result.curve.samples) {
            result.oracle.push_back(boundary_value_bisection(request.kind, kt));
        }
    }
    return result;
}

std::string format_boundary(const BoundaryResult& result, const BoundaryRequest& request) {
    const auto& samples = result.curve.samples;
    if (request.format == OutputFormat::csv) {
        std::ostringstream out;
        out << (result.oracle.empty() ? "kt,param\n" : "kt,param,oracle\n");
        for (std::size_t i = 0; i < samples.size(); ++i) {
            out << format_number(samples[i].first) << ',' << format_number(samples[i].second);
            if (!result.oracle.empty()) out << ',' << format_number(result.oracle[i]);
            out << '\n';
        }
        return out.str();
    }
    json meta = conventions_meta();
    meta["kind"] = to_string(request.kind);
    meta["param"] = request.kind == BoundaryKind::gghz ? "a" : "p";
    json rows = json::array();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        json row = {{"kt", samples[i].first}, {"param", samples[i].second}};
        if (!result.oracle.empty()) row["oracle"] = result.oracle[i];
        rows.push_back(std::move(row));
    }
    return json{{"meta", meta}, {"rows", rows}}.dump(2) + "\n";
}

}  // namespace cavesd
