#include <tcplan/transfer.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace tcplan {

TransferData::TransferData(PointMap g, PointMap f, Homotopy homotopy, std::size_t source_dim,
                           std::size_t target_dim, std::span<const Vector> probes, const ToleranceConfig& tol)
    : g_(std::move(g)),
      f_(std::move(f)),
      homotopy_(std::move(homotopy)),
      source_dim_(source_dim),
      target_dim_(target_dim) {
    if (!g_ || !f_ || !homotopy_) {
        throw InvalidArgument("transfer data needs g, f and H");
    }
    for (const Vector& y : probes) {
        if (distance(homotopy_(y, 0.0), y) > tol.eps_assert) {
            throw HomotopyContractViolation("H(y, 0) != y at " + y.to_string());
        }
        if (distance(homotopy_(y, 1.0), f_(g_(y))) > tol.eps_assert) {
            throw HomotopyContractViolation("H(y, 1) != f(g(y)) at " + y.to_string());
        }
    }
}

TransferData TransferData::identity(std::size_t dim) {
    auto id = [](const Vector& v) { return v; };
    return TransferData(id, id, [](const Vector& y, double) { return y; }, dim, dim, {});
}

LocalRule transfer_rule(const LocalRule& rule, const TransferData& data, const ToleranceConfig& tol) {
    LocalRule lifted;
    lifted.label = rule.label;
    lifted.domain = [domain = rule.domain, g = data.g()](const Vector& y1, const Vector& y2) {
        return domain(g(y1), g(y2));
    };
    lifted.section = [section = rule.section, data, tol](const Vector& y1, const Vector& y2) {
        const Homotopy& h = data.homotopy();
        const std::size_t dim = data.target_dim();
        Path lead_in(dim, [h, y1](double t) { return h(y1, t); });
        Path middle = map_path(section(data.g()(y1), data.g()(y2)), data.f(), dim);
        Path lead_out(dim, [h, y2](double t) { return h(y2, 1.0 - t); });
        return concat3(lead_in, middle, lead_out, tol);
    };
    return lifted;
}

MotionPlanner transfer_planner(const MotionPlanner& planner, const TransferData& data, FreeSpace target,
                               const ToleranceConfig& tol) {
    std::vector<LocalRule> rules;
    rules.reserve(planner.rule_count());
    for (const LocalRule& r : planner.rules()) {
        rules.push_back(transfer_rule(r, data, tol));
    }
    return MotionPlanner(std::move(target), std::move(rules));
}

// ---------------------------------------------------------------------------
// Disk robot around a disk obstacle

AnnulusSpec::AnnulusSpec(double l_obstacle, double l_robot, std::optional<double> rho)
    : l_obstacle_(l_obstacle), l_robot_(l_robot), rho_(rho.value_or(2.0 * (l_obstacle + l_robot))) {
    if (!(l_obstacle_ > 0.0) || !std::isfinite(l_obstacle_)) {
        throw InvalidArgument("obstacle radius l_O must be positive");
    }
    if (!(l_robot_ > 0.0) || !std::isfinite(l_robot_)) {
        throw InvalidArgument("robot radius l_R must be positive");
    }
    if (!(rho_ > clearance_radius()) || !std::isfinite(rho_)) {
        throw InvalidArgument("rho must exceed l_O + l_R");
    }
}

FreeSpace annulus_space(const AnnulusSpec& spec) {
    const double r0 = spec.clearance_radius();
    FreeSpace space;
    space.name = "annulus";
    space.dim = 2;
    space.contains = [spec](const Vector& p) { return spec.contains(p); };
    // Strictly positive for every non-member, so tolerance 0 means strict clearance.
    space.violation = [spec, r0](const Vector& p) {
        if (p.dim() != 2) {
            return std::numeric_limits<double>::infinity();
        }
        if (spec.contains(p)) {
            return 0.0;
        }
        return std::max(r0 - p.norm(), std::numeric_limits<double>::min());
    };
    space.violation_tolerance = 0.0;
    space.project = [](const Vector& p) { return p; };
    return space;
}

Vector sample_annulus_point(const AnnulusSpec& spec, std::mt19937_64& rng) {
    const double r_min = spec.clearance_radius() + 0.01;
    const double r_max = std::max(10.0, 2.0 * r_min);
    std::uniform_real_distribution<double> log_r(std::log(r_min), std::log(r_max));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double r = std::exp(log_r(rng));
    const double theta = angle(rng);
    return Vector{r * std::cos(theta), r * std::sin(theta)};
}

MotionPlanner circle_planner(double radius, const ToleranceConfig& tol) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidArgument("circle radius must be positive");
    }
    const SphereSpec unit_circle(1);
    const MotionPlanner unit = sphere_planner(unit_circle, tol);

    std::vector<LocalRule> rules;
    for (const LocalRule& r : unit.rules()) {
        LocalRule scaled;
        scaled.label = r.label;
        scaled.domain = [domain = r.domain, radius](const Vector& a, const Vector& b) {
            return domain(a / radius, b / radius);
        };
        scaled.section = [section = r.section, radius](const Vector& a, const Vector& b) {
            return map_path(section(a / radius, b / radius), [radius](const Vector& v) { return radius * v; }, 2);
        };
        rules.push_back(std::move(scaled));
    }

    const double eps = tol.eps_assert * std::max(1.0, radius);
    FreeSpace space;
    space.name = "circle";
    space.dim = 2;
    space.contains = [radius, eps](const Vector& x) { return x.dim() == 2 && std::abs(x.norm() - radius) <= eps; };
    space.violation = [radius](const Vector& x) {
        return x.dim() == 2 ? std::abs(x.norm() - radius) : std::numeric_limits<double>::infinity();
    };
    space.violation_tolerance = eps;
    space.project = [radius, tol](const Vector& x) { return radius * normalize(x, tol); };
    return MotionPlanner(std::move(space), std::move(rules));
}

TransferData annulus_retraction(const AnnulusSpec& spec, const ToleranceConfig& tol) {
    const double rho = spec.rho();
    PointMap retract = [rho, tol](const Vector& z) { return rho * normalize(z, tol); };
    PointMap include = [](const Vector& z) { return z; };
    Homotopy deform = [rho, tol](const Vector& z, double t) { return (1.0 - t) * z + t * (rho * normalize(z, tol)); };

    std::mt19937_64 rng(20240917);
    std::vector<Vector> probes;
    probes.reserve(1000);
    for (int i = 0; i < 1000; ++i) {
        probes.push_back(sample_annulus_point(spec, rng));
    }
    return TransferData(retract, include, deform, 2, 2, probes, tol);
}

MotionPlanner annulus_planner(const AnnulusSpec& spec, const ToleranceConfig& tol) {
    return transfer_planner(circle_planner(spec.rho(), tol), annulus_retraction(spec, tol), annulus_space(spec), tol);
}

}  // namespace tcplan
