#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include <tcplan/planners.hpp>
#include <tcplan/transfer.hpp>
#include <tcplan/verify.hpp>

namespace tcplan {

/// Raised for malformed or inconsistent scenario input; the message names the
/// violated invariant.
class ScenarioError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

using SpaceSpec = std::variant<SphereSpec, AnnulusSpec, StarDomain>;

/// A planning request read from JSON:
///
///   {"space": {"type": "annulus", "l_O": 0.3, "l_R": 0.2, "rho": 1.0},
///    "start": [2, 0], "goal": [0, 2], "samples": 256}
///
/// Space variants:
///   {"type": "sphere", "m": 1}
///   {"type": "annulus", "l_O": ..., "l_R": ..., "rho": ... (optional, default 2 (l_O + l_R))}
///   {"type": "star", "shape": "disk", "center": [..], "radius": r, "star": [..]}
///   {"type": "star", "shape": "rectangle", "min": [..], "max": [..], "star": [..]}
struct Scenario {
    SpaceSpec space;
    Vector start;
    Vector goal;
    std::size_t samples = 256;
};

[[nodiscard]] SpaceSpec parse_space(const nlohmann::json& j);
[[nodiscard]] Scenario parse_scenario(const nlohmann::json& j);
/// Reads and validates a scenario file; throws ScenarioError.
[[nodiscard]] Scenario load_scenario(const std::string& path);

[[nodiscard]] std::size_t space_dim(const SpaceSpec& space);
[[nodiscard]] MotionPlanner build_planner(const SpaceSpec& space, const ToleranceConfig& tol = {});
[[nodiscard]] PairSampler space_pair_sampler(const SpaceSpec& space);
/// A pair on the dispatch boundary of the space's planner, if it has one.
[[nodiscard]] std::optional<VectorPair> boundary_hint(const SpaceSpec& space);

}  // namespace tcplan
