#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <tcplan/core.hpp>
#include <tcplan/planners.hpp>
#include <tcplan/transfer.hpp>

namespace tcplan {

using VectorPair = std::pair<Vector, Vector>;
using PairSampler = std::function<VectorPair(std::mt19937_64&)>;

/// A fixed, reproducible batch of (start, goal) pairs. `seed` is the seed the
/// pairs were drawn with (0 for deterministic grids) and is echoed in reports.
struct PairBatch {
    std::uint64_t seed = 0;
    std::vector<VectorPair> pairs;
};

[[nodiscard]] PairBatch draw_pairs(const PairSampler& sampler, std::size_t n, std::uint64_t seed);

/// All k*k pairs (e^{2 pi i/k}, e^{2 pi j/k}) on the unit circle.
[[nodiscard]] PairBatch angular_grid_pairs(std::size_t k);

[[nodiscard]] Vector random_unit_vector(std::size_t dim, std::mt19937_64& rng);

/// Uniform pairs on S^{2m-1} (uniform angles on S^1).
[[nodiscard]] PairSampler sphere_pair_sampler(const SphereSpec& spec);
/// Uniform pairs on S^{2m-1} conditioned on |a + b| > margin.
[[nodiscard]] PairSampler geodesic_pair_sampler(const SphereSpec& spec, double margin = 0.1);
/// Log-uniform radius times uniform angle, see sample_annulus_point.
[[nodiscard]] PairSampler annulus_pair_sampler(const AnnulusSpec& spec);
/// Independent draws from the domain's member sampler.
[[nodiscard]] PairSampler star_pair_sampler(const StarDomain& domain);

struct Witness {
    Vector start;
    Vector goal;
    double value = 0.0;
    std::string note;
};

struct VerificationReport {
    std::string check_name;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    std::vector<Witness> witnesses;

    [[nodiscard]] bool passed() const noexcept { return max_violation <= tolerance; }

    /// One line: "<PASS|FAIL> <name> samples=... max_violation=... tolerance=... seed=..."
    /// followed by one indented line per witness.
    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

[[nodiscard]] nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

/// Thresholds of the harness. Defaults are the acceptance values.
struct HarnessConfig {
    ToleranceConfig tol;
    double junction_h = 1e-8;
    double junction_tolerance = 1e-6;
    std::size_t geodesic_samples = 10000;
    double geodesic_tolerance = 1e-6;
    /// Empirical modulus bound for continuity_probe; a regression constant, not a theorem.
    double continuity_modulus = 100.0;
    std::size_t continuity_samples = 100;
    double witness_radius = 1e-3;
    double witness_min_gap = 0.5;
    std::size_t max_witnesses = 5;
};

/// Worst of |plan(a, b)(0) - a| and |plan(a, b)(1) - b|; tolerance eps_assert.
/// A pair no rule accepts counts as an infinite violation.
[[nodiscard]] VerificationReport check_endpoints(const MotionPlanner& planner, const PairBatch& batch,
                                                 const HarnessConfig& cfg = {});

/// Worst FreeSpace::violation over `samples_per_path` points of every planned
/// path; tolerance is the space's violation_tolerance.
[[nodiscard]] VerificationReport check_membership(const MotionPlanner& planner, const PairBatch& batch,
                                                  std::size_t samples_per_path, const HarnessConfig& cfg = {});

/// Number of pairs accepted by no rule domain; passes iff zero.
[[nodiscard]] VerificationReport check_cover(const MotionPlanner& planner, const PairBatch& batch,
                                             const HarnessConfig& cfg = {});

/// Worst |path(b - h) - path(b + h)| over every breakpoint b of every planned path.
[[nodiscard]] VerificationReport check_junctions(const MotionPlanner& planner, const PairBatch& batch,
                                                 const HarnessConfig& cfg = {});

/// Worst |polyline_length(s1(a, b), geodesic_samples) - arccos(a.b)|.
[[nodiscard]] VerificationReport check_geodesic(const SphereSpec& spec, const PairBatch& batch,
                                                const HarnessConfig& cfg = {});

/// Sup distance between the rule's paths at (a, b) and at a perturbed pair
/// (a', b') = (project(a + delta u), project(b + delta w)), divided by delta.
/// Passes while the ratio stays <= continuity_modulus. Perturbation
/// directions are drawn from a generator seeded with the batch seed.
[[nodiscard]] VerificationReport continuity_probe(const LocalRule& rule, const PairBatch& batch, double delta,
                                                  const PointMap& project, const HarnessConfig& cfg = {});

/// Searches a grid around `hint` for two admissible pairs within
/// witness_radius of each other that dispatch to different rules and whose
/// paths are at least witness_min_gap apart. Throws InvalidArgument for a
/// single-rule planner and WitnessNotFound if the search comes up empty.
[[nodiscard]] VerificationReport discontinuity_witness(const MotionPlanner& planner, const VectorPair& hint,
                                                       const HarnessConfig& cfg = {});

}  // namespace tcplan
