#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <tcplan/core.hpp>

namespace tcplan {

using Membership = std::function<bool(const Vector&)>;
using PairPredicate = std::function<bool(const Vector&, const Vector&)>;
using Section = std::function<Path(const Vector&, const Vector&)>;
using PointMap = std::function<Vector(const Vector&)>;
/// (x, t) -> H(x, t), t in [0, 1].
using Homotopy = std::function<Vector(const Vector&, double)>;
using PointSampler = std::function<Vector(std::mt19937_64&)>;

/// The configuration space a planner works in.
///
/// `violation` measures how far a point is from being admissible (0 for
/// members) and `violation_tolerance` is the slack allowed when checking
/// planned paths. `project` maps a nearby ambient point back into the space;
/// it is the identity for open subsets of R^d.
struct FreeSpace {
    std::string name;
    std::size_t dim = 0;
    Membership contains;
    std::function<double(const Vector&)> violation;
    double violation_tolerance = 0.0;
    PointMap project;

    /// Open subset of R^dim given only by its membership predicate:
    /// violation is a 0/1 indicator and projection is the identity.
    static FreeSpace open_set(std::string name, std::size_t dim, Membership contains);
};

/// One local planning rule: an open set of (start, goal) pairs and a
/// continuous section defined on it.
struct LocalRule {
    std::string label;
    PairPredicate domain;
    Section section;
};

struct PlanResult {
    Path path;
    /// 1-based index of the rule that produced the path.
    std::size_t rule_index;
};

/// An ordered list of local rules dispatched by least index.
class MotionPlanner {
  public:
    /// Throws InvalidArgument if `rules` is empty or any rule is incomplete.
    MotionPlanner(FreeSpace space, std::vector<LocalRule> rules);

    /// Path from the first rule whose domain holds at (a, b).
    /// Throws OutsideFreeSpace if a or b is not a member, NoApplicableRule if
    /// no domain accepts the pair.
    [[nodiscard]] PlanResult plan(const Vector& a, const Vector& b) const;

    /// Number of rules; for an optimal planner this is the topological complexity.
    [[nodiscard]] std::size_t rule_count() const noexcept { return rules_.size(); }
    [[nodiscard]] const std::vector<LocalRule>& rules() const noexcept { return rules_; }
    [[nodiscard]] const FreeSpace& space() const noexcept { return space_; }
    [[nodiscard]] const std::string& space_name() const noexcept { return space_.name; }

  private:
    FreeSpace space_;
    std::vector<LocalRule> rules_;
};

/// Star-shaped subset of R^d: every segment from a member to the star point
/// stays inside. The star property is trusted, then spot-checked on
/// `spot_checks` sampled members when a sampler is given.
class StarDomain {
  public:
    /// Throws InvalidArgument if the star point is not a member or a spot
    /// check finds a segment leaving the set.
    StarDomain(std::string name, Vector star_point, Membership membership, PointSampler member_sampler = {},
               std::size_t spot_checks = 1000, std::uint64_t seed = 7);

    /// Open disk |x - center| < radius.
    static StarDomain disk(const Vector& center, double radius, const Vector& star_point);
    /// Open box lo < x < hi (componentwise).
    static StarDomain box(const Vector& lo, const Vector& hi, const Vector& star_point);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const Vector& star_point() const noexcept { return star_point_; }
    [[nodiscard]] std::size_t dim() const noexcept { return star_point_.dim(); }
    [[nodiscard]] bool contains(const Vector& x) const { return x.dim() == dim() && membership_(x); }
    [[nodiscard]] const Membership& membership() const noexcept { return membership_; }
    [[nodiscard]] const PointSampler& member_sampler() const noexcept { return sampler_; }

  private:
    std::string name_;
    Vector star_point_;
    Membership membership_;
    PointSampler sampler_;
};

/// The odd-dimensional sphere S^{2m-1} in R^{2m}.
class SphereSpec {
  public:
    /// Throws InvalidArgument for m < 1.
    explicit SphereSpec(int m);
    /// Builds the spec from the sphere dimension d; throws OddDimension when
    /// d is even, since the ambient dimension d + 1 would be odd.
    static SphereSpec from_sphere_dimension(int d);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return static_cast<std::size_t>(2 * m_); }
    [[nodiscard]] int sphere_dim() const noexcept { return 2 * m_ - 1; }

  private:
    int m_;
};

/// Single-rule planner from a contraction H (H(x, 0) = x, H(x, 1) = x0):
/// s(x1, x2)(t) = H(x1, 2t) on [0, 1/2], H(x2, 2 - 2t) on [1/2, 1].
/// The contraction contract is checked on `probes`; a failure throws
/// HomotopyContractViolation.
[[nodiscard]] MotionPlanner contractible_planner(Homotopy contraction, FreeSpace space,
                                                 std::span<const Vector> probes, const ToleranceConfig& tol = {});

/// Straight-line contraction to the star point, fed through contractible_planner.
[[nodiscard]] MotionPlanner star_planner(const StarDomain& domain, const ToleranceConfig& tol = {});

/// H(x, t) = s(x, x0)(t) for a single-rule planner s.
/// Throws NotSingleRule when the planner has more than one rule and
/// OutsideFreeSpace when x0 is not a member.
[[nodiscard]] Homotopy contraction_from_planner(const MotionPlanner& planner, const Vector& x0);

[[nodiscard]] FreeSpace sphere_space(const SphereSpec& spec, const ToleranceConfig& tol = {});

/// Normalized linear interpolation on U1 = {a != -b}; the shortest geodesic.
[[nodiscard]] LocalRule sphere_rule1(const SphereSpec& spec, const ToleranceConfig& tol = {});

/// a -> nu(a) -> -a, the detour used for antipodal pairs.
[[nodiscard]] Path alpha_detour(const SphereSpec& spec, const Vector& a, const ToleranceConfig& tol = {});

/// Geodesic a -> -b followed by the detour -b -> b, on U2 = {a != b}.
[[nodiscard]] LocalRule sphere_rule2(const SphereSpec& spec, const ToleranceConfig& tol = {});

/// The two-rule planner [rule1, rule2] on S^{2m-1}.
[[nodiscard]] MotionPlanner sphere_planner(const SphereSpec& spec, const ToleranceConfig& tol = {});

}  // namespace tcplan
