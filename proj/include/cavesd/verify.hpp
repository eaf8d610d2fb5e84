// Invariant grids and landmark reproduction behind `verify`
// and `landmarks`.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cavesd::verify {

enum class Suite { closedform, monogamy, swap, esb, regions };

std::string_view to_string(Suite s);
Suite suite_from_string(std::string_view s);
const std::vector<Suite>& all_suites();

struct CheckResult {
    std::string name;
    std::string metric;   // what `value` measures
    double value{0.0};
    double tolerance{0.0};
    bool passed{false};
    std::string worst_point;  // e.g. "p=0.5 kt=1"
    bool lower_bound{false};  // value must exceed tolerance instead of staying below it
};

struct SuiteReport {
    Suite suite{Suite::closedform};
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool passed() const;
    std::string to_text() const;
};

// Runs one grid. `tolerance` replaces every check's default threshold.
SuiteReport run_suite(Suite suite, std::optional<double> tolerance = std::nullopt, unsigned workers = 0);

struct Landmark {
    std::string name;
    double computed{0.0};
    double expected{0.0};
    double tolerance{0.0};
    bool passed{false};
};

struct LandmarkReport {
    std::vector<Landmark> landmarks;
    std::string conventions;

    bool passed() const;
    std::string to_text() const;
};

LandmarkReport compute_landmarks();

}  // namespace cavesd::verify
