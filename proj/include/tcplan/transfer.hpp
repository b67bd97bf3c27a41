#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>

#include <tcplan/core.hpp>
#include <tcplan/planners.hpp>

namespace tcplan {

/// Maps Y --g--> X --f--> Y with a homotopy H on Y from the identity to f o g.
/// Planners on X (the source) lift to planners on Y (the target).
class TransferData {
  public:
    /// Checks |H(y, 0) - y| and |H(y, 1) - f(g(y))| <= tol.eps_assert at every
    /// probe; throws HomotopyContractViolation otherwise. An empty probe set
    /// skips the check.
    TransferData(PointMap g, PointMap f, Homotopy homotopy, std::size_t source_dim, std::size_t target_dim,
                 std::span<const Vector> probes, const ToleranceConfig& tol = {});

    [[nodiscard]] const PointMap& g() const noexcept { return g_; }
    [[nodiscard]] const PointMap& f() const noexcept { return f_; }
    [[nodiscard]] const Homotopy& homotopy() const noexcept { return homotopy_; }
    [[nodiscard]] std::size_t source_dim() const noexcept { return source_dim_; }
    [[nodiscard]] std::size_t target_dim() const noexcept { return target_dim_; }

    /// g = f = identity, H(y, t) = y.
    static TransferData identity(std::size_t dim);

  private:
    PointMap g_;
    PointMap f_;
    Homotopy homotopy_;
    std::size_t source_dim_;
    std::size_t target_dim_;
};

/// Lifts a rule along the transfer data:
///   H(y1, 3t)                         on [0, 1/3]
///   f(s(g(y1), g(y2))(3t - 1))        on [1/3, 2/3]
///   H(y2, 3 - 3t)                     on [2/3, 1]
/// with domain (y1, y2) -> rule.domain(g(y1), g(y2)). Sections throw
/// JunctionGap when H(., 1) and f o g disagree at the planned pair.
[[nodiscard]] LocalRule transfer_rule(const LocalRule& rule, const TransferData& data,
                                      const ToleranceConfig& tol = {});

/// Lifts every rule, keeping count and order.
[[nodiscard]] MotionPlanner transfer_planner(const MotionPlanner& planner, const TransferData& data,
                                             FreeSpace target, const ToleranceConfig& tol = {});

/// A disk robot of radius l_R around a disk obstacle of radius l_O centered at
/// the origin. The free space is {p in R^2 : |p| > l_O + l_R}; the planner
/// retracts it onto the circle of radius rho.
class AnnulusSpec {
  public:
    /// rho defaults to 2 (l_O + l_R). Throws InvalidArgument unless l_O, l_R > 0
    /// and rho > l_O + l_R.
    AnnulusSpec(double l_obstacle, double l_robot, std::optional<double> rho = std::nullopt);

    [[nodiscard]] double l_obstacle() const noexcept { return l_obstacle_; }
    [[nodiscard]] double l_robot() const noexcept { return l_robot_; }
    [[nodiscard]] double rho() const noexcept { return rho_; }
    /// l_O + l_R: the robot center must stay strictly outside this radius.
    [[nodiscard]] double clearance_radius() const noexcept { return l_obstacle_ + l_robot_; }
    [[nodiscard]] bool contains(const Vector& p) const { return p.dim() == 2 && p.norm() > clearance_radius(); }

  private:
    double l_obstacle_;
    double l_robot_;
    double rho_;
};

[[nodiscard]] FreeSpace annulus_space(const AnnulusSpec& spec);

/// Random free-space point: uniform angle, radius log-uniform in
/// [l_O + l_R + 0.01, max(10, 2 (l_O + l_R + 0.01))].
[[nodiscard]] Vector sample_annulus_point(const AnnulusSpec& spec, std::mt19937_64& rng);

/// The round circle of radius `radius` in R^2, planned by scaling the unit S^1 planner.
[[nodiscard]] MotionPlanner circle_planner(double radius, const ToleranceConfig& tol = {});

/// g(z) = rho z/|z|, f = inclusion of the rho-circle, H(z, t) = (1-t) z + t rho z/|z|.
/// Validated on 1000 seeded free-space samples.
[[nodiscard]] TransferData annulus_retraction(const AnnulusSpec& spec, const ToleranceConfig& tol = {});

/// The circle planner at radius rho transferred to the free space: two rules.
[[nodiscard]] MotionPlanner annulus_planner(const AnnulusSpec& spec, const ToleranceConfig& tol = {});

}  // namespace tcplan
