#pragma once

// Deliberately defective planners. The verification harness must reject each
// of them; they back the harness self-tests and `tcplan verify --fixture`.

#include <optional>
#include <string>
#include <vector>

#include <tcplan/planners.hpp>
#include <tcplan/transfer.hpp>
#include <tcplan/verify.hpp>

namespace tcplan::fixtures {

/// S^1 planner whose rule 1 lands 0.1 rad past the goal.
[[nodiscard]] MotionPlanner broken_rule_planner();

/// One straight segment per pair on the annulus, ignoring the obstacle.
[[nodiscard]] MotionPlanner straight_line_planner(const AnnulusSpec& spec);

/// S^1 planner with rule 1 only, so antipodal pairs are uncovered.
[[nodiscard]] MotionPlanner rule1_only_planner();

/// S^1 planner that jumps from start to goal at t = 1/2.
[[nodiscard]] MotionPlanner broken_junction_planner();

struct Fixture {
    std::string name;
    MotionPlanner planner;
    PairSampler sampler;
};

/// Names accepted by make_fixture.
[[nodiscard]] std::vector<std::string> names();

/// Throws InvalidArgument for an unknown name.
[[nodiscard]] Fixture make(const std::string& name);

}  // namespace tcplan::fixtures
