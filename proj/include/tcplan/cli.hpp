#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <tcplan/scenario.hpp>
#include <tcplan/verify.hpp>

namespace tcplan::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
    kNoApplicableRule = 3,
};

struct PlannedScenario {
    std::string planner_name;
    std::size_t rule_count = 0;
    std::size_t rule_index = 0;
    std::string rule_label;
    std::vector<double> times;
    std::vector<Vector> points;
};

/// Plans the scenario and samples the path at `scenario.samples` uniform times.
[[nodiscard]] PlannedScenario plan_scenario(const Scenario& scenario);

/// Header "t,x1,...,xd" then one row per sample, %.17g.
[[nodiscard]] std::string format_csv(const PlannedScenario& planned);
[[nodiscard]] std::string format_json(const PlannedScenario& planned);

/// Standard check suite for a space: endpoints, membership, cover, junctions,
/// plus geodesic and continuity checks on spheres and the discontinuity
/// witness where the planner has a dispatch boundary.
[[nodiscard]] std::vector<VerificationReport> verify_space(const SpaceSpec& space, std::uint64_t seed,
                                                           std::size_t n, const HarnessConfig& cfg = {});

/// Endpoints, membership, cover and junction checks on a named fixture.
[[nodiscard]] std::vector<VerificationReport> verify_fixture(const std::string& name, std::uint64_t seed,
                                                             std::size_t n, const HarnessConfig& cfg = {});

/// SVG drawing of a planar scenario; throws ScenarioError for other dimensions.
[[nodiscard]] std::string render_svg(const Scenario& scenario);

/// Entry point of the `tcplan` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tcplan::cli
