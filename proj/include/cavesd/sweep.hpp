// Negativity surfaces and boundary curves over parameter grids,
// and their CSV/JSON serialization.

#pragma once

#include "cavesd/esd.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cavesd {

enum class Family { mixed, gghz };
enum class OutputFormat { csv, json };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);
std::string_view to_string(OutputFormat f);
OutputFormat format_from_string(std::string_view s);

struct SweepConfig {
    Family family{Family::mixed};
    double param_min{0.0};
    double param_max{1.0};
    std::size_t param_steps{11};
    double kt_min{0.0};
    double kt_max{3.0};
    std::size_t kt_steps{31};
    OutputFormat format{OutputFormat::csv};
    std::string output_path;  // empty: stdout
    bool oracle{false};
    double tolerance{1e-10};
    unsigned workers{0};  // 0: hardware concurrency
};

// Throws std::invalid_argument when a range or step count is unusable.
void validate(const SweepConfig& config);

// steps >= 2 evenly spaced values with exact endpoints.
std::vector<double> linspace(double lo, double hi, std::size_t steps);

// Runs body(i) for i in [0, n) on `workers` threads. Each index is visited once;
// callers write into preallocated slots so the assembly order is fixed.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

struct SurfaceRow {
    double param{0.0};
    double kt{0.0};
    double negativity{0.0};
    std::optional<double> oracle;  // numeric negativity when requested
};

struct SurfaceResult {
    std::vector<SurfaceRow> rows;  // param-major, kt ascending
    double max_oracle_deviation{0.0};
    std::optional<SurfaceRow> worst;
};

SurfaceResult compute_surface(const SweepConfig& config);
std::string format_surface(const SurfaceResult& result, const SweepConfig& config);

struct BoundaryRequest {
    BoundaryKind kind{BoundaryKind::lambda5};
    double kt_min{0.05};
    double kt_max{4.0};
    std::size_t kt_steps{80};
    OutputFormat format{OutputFormat::csv};
    bool oracle{false};
};

struct BoundaryResult {
    BoundaryCurve curve;
    std::vector<double> oracle;  // bisection values, empty unless requested
};

BoundaryResult compute_boundary(const BoundaryRequest& request);
std::string format_boundary(const BoundaryResult& result, const BoundaryRequest& request);

// printf %.12g, with -0 printed as 0.
std::string format_number(double v);

}  // namespace cavesd
