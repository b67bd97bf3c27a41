#include <tcplan/planners.hpp>

#include <cmath>
#include <limits>
#include <utility>

namespace tcplan {

FreeSpace FreeSpace::open_set(std::string name, std::size_t dim, Membership contains) {
    FreeSpace space;
    space.name = std::move(name);
    space.dim = dim;
    space.contains = [dim, inner = std::move(contains)](const Vector& x) { return x.dim() == dim && inner(x); };
    space.violation = [member = space.contains](const Vector& x) { return member(x) ? 0.0 : 1.0; };
    space.violation_tolerance = 0.0;
    space.project = [](const Vector& x) { return x; };
    return space;
}

MotionPlanner::MotionPlanner(FreeSpace space, std::vector<LocalRule> rules)
    : space_(std::move(space)), rules_(std::move(rules)) {
    if (rules_.empty()) {
        throw InvalidArgument("a motion planner needs at least one rule");
    }
    for (const LocalRule& r : rules_) {
        if (!r.domain || !r.section) {
            throw InvalidArgument("rule '" + r.label + "' is missing its domain or section");
        }
    }
    if (!space_.contains || !space_.violation || !space_.project || space_.dim == 0) {
        throw InvalidArgument("free space '" + space_.name + "' is incomplete");
    }
}

PlanResult MotionPlanner::plan(const Vector& a, const Vector& b) const {
    if (!space_.contains(a)) {
        throw OutsideFreeSpace("start " + a.to_string() + " is not in " + space_.name);
    }
    if (!space_.contains(b)) {
        throw OutsideFreeSpace("goal " + b.to_string() + " is not in " + space_.name);
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (rules_[i].domain(a, b)) {
            return PlanResult{rules_[i].section(a, b), i + 1};
        }
    }
    throw NoApplicableRule("no rule of " + space_.name + " accepts " + a.to_string() + " -> " + b.to_string());
}

// ---------------------------------------------------------------------------
// Contractible spaces

StarDomain::StarDomain(std::string name, Vector star_point, Membership membership, PointSampler member_sampler,
                       std::size_t spot_checks, std::uint64_t seed)
    : name_(std::move(name)),
      star_point_(std::move(star_point)),
      membership_(std::move(membership)),
      sampler_(std::move(member_sampler)) {
    if (!membership_) {
        throw InvalidArgument("star domain needs a membership predicate");
    }
    if (!membership_(star_point_)) {
        throw InvalidArgument("star point " + star_point_.to_string() + " is not a member of " + name_);
    }
    if (!sampler_) {
        return;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < spot_checks; ++i) {
        const Vector x = sampler_(rng);
        const double t = unit(rng);
        if (!membership_(x) || !membership_(lerp(x, star_point_, t))) {
            throw InvalidArgument(name_ + " is not star-shaped about " + star_point_.to_string() + " (segment from " +
                                  x.to_string() + ")");
        }
    }
}

StarDomain StarDomain::disk(const Vector& center, double radius, const Vector& star_point) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidArgument("disk radius must be positive");
    }
    if (center.dim() != star_point.dim()) {
        throw DimensionMismatch("disk center and star point dimensions differ");
    }
    const std::size_t d = center.dim();
    auto member = [center, radius](const Vector& x) { return x.dim() == center.dim() && distance(x, center) < radius; };
    auto sampler = [center, radius, d](std::mt19937_64& rng) {
        // Gaussian direction with radius r * U^{1/d} is uniform in the ball; the
        // 0.999 factor keeps samples strictly inside the open disk.
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<double> dir(d);
        double n2 = 0.0;
        do {
            n2 = 0.0;
            for (double& c : dir) {
                c = gauss(rng);
                n2 += c * c;
            }
        } while (n2 < 1e-12);
        const double r = 0.999 * radius * std::pow(unit(rng), 1.0 / static_cast<double>(d));
        return center + (r / std::sqrt(n2)) * Vector(dir);
    };
    return StarDomain("disk", star_point, member, sampler);
}

StarDomain StarDomain::box(const Vector& lo, const Vector& hi, const Vector& star_point) {
    if (lo.dim() != hi.dim() || lo.dim() != star_point.dim()) {
        throw DimensionMismatch("box corners and star point dimensions differ");
    }
    for (std::size_t i = 0; i < lo.dim(); ++i) {
        if (!(lo[i] < hi[i])) {
            throw InvalidArgument("box needs lo < hi in every coordinate");
        }
    }
    auto member = [lo, hi](const Vector& x) {
        if (x.dim() != lo.dim()) {
            return false;
        }
        for (std::size_t i = 0; i < x.dim(); ++i) {
            if (!(lo[i] < x[i] && x[i] < hi[i])) {
                return false;
            }
        }
        return true;
    };
    auto sampler = [lo, hi](std::mt19937_64& rng) {
        std::vector<double> c(lo.dim());
        for (std::size_t i = 0; i < c.size(); ++i) {
            const double margin = 1e-3 * (hi[i] - lo[i]);
            std::uniform_real_distribution<double> u(lo[i] + margin, hi[i] - margin);
            c[i] = u(rng);
        }
        return Vector(std::move(c));
    };
    return StarDomain("rectangle", star_point, member, sampler);
}

MotionPlanner contractible_planner(Homotopy contraction, FreeSpace space, std::span<const Vector> probes,
                                   const ToleranceConfig& tol) {
    if (!contraction) {
        throw InvalidArgument("contraction is empty");
    }
    if (probes.empty()) {
        throw InvalidArgument("contractible_planner needs at least one probe point");
    }
    const Vector x0 = contraction(probes.front(), 1.0);
    for (const Vector& x : probes) {
        const double start_err = distance(contraction(x, 0.0), x);
        if (start_err > tol.eps_assert) {
            throw HomotopyContractViolation("H(x, 0) != x at " + x.to_string());
        }
        const double end_err = distance(contraction(x, 1.0), x0);
        if (end_err > tol.eps_assert) {
            throw HomotopyContractViolation("H(x, 1) is not constant: " + x.to_string() + " lands away from " +
                                            x0.to_string());
        }
    }

    const std::size_t dim = space.dim;
    LocalRule rule;
    rule.label = "contraction";
    rule.domain = [](const Vector&, const Vector&) { return true; };
    rule.section = [contraction, dim, tol](const Vector& x1, const Vector& x2) {
        Path out(dim, [contraction, x1](double t) { return contraction(x1, t); });
        Path back(dim, [contraction, x2](double t) { return contraction(x2, 1.0 - t); });
        return concat2(out, back, tol);
    };
    return MotionPlanner(std::move(space), {std::move(rule)});
}

MotionPlanner star_planner(const StarDomain& domain, const ToleranceConfig& tol) {
    const Vector x0 = domain.star_point();
    Homotopy straight = [x0](const Vector& x, double t) { return lerp(x, x0, t); };

    std::vector<Vector> probes{x0};
    if (domain.member_sampler()) {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 64; ++i) {
            probes.push_back(domain.member_sampler()(rng));
        }
    }
    FreeSpace space = FreeSpace::open_set(domain.name(), domain.dim(), domain.membership());
    return contractible_planner(std::move(straight), std::move(space), probes, tol);
}

Homotopy contraction_from_planner(const MotionPlanner& planner, const Vector& x0) {
    if (planner.rule_count() != 1) {
        throw NotSingleRule(planner.space_name() + " planner has " + std::to_string(planner.rule_count()) +
                            " rules; only a single continuous rule yields a contraction");
    }
    if (!planner.space().contains(x0)) {
        throw OutsideFreeSpace("base point " + x0.to_string() + " is not in " + planner.space_name());
    }
    return [planner, x0](const Vector& x, double t) { return planner.plan(x, x0).path(t); };
}

// ---------------------------------------------------------------------------
// Odd spheres

SphereSpec::SphereSpec(int m) : m_(m) {
    if (m < 1) {
        throw InvalidArgument("sphere parameter m must be at least 1");
    }
}

SphereSpec SphereSpec::from_sphere_dimension(int d) {
    if (d < 1) {
        throw InvalidArgument("sphere dimension must be at least 1");
    }
    if (d % 2 == 0) {
        throw OddDimension("S^" + std::to_string(d) + " lives in odd ambient dimension; no tangent field");
    }
    return SphereSpec((d + 1) / 2);
}

namespace {

void require_ambient(const SphereSpec& spec, const Vector& v) {
    if (v.dim() != spec.ambient_dim()) {
        throw DimensionMismatch("expected a point of R^" + std::to_string(spec.ambient_dim()) + ", got " +
                                v.to_string());
    }
}

// s1(a, b)(t) = ((1-t)a + tb) / |(1-t)a + tb|. For unit a, b the denominator
// stays >= |a + b| / 2, so a positive |a + b| keeps every division safe.
Path geodesic(const Vector& a, const Vector& b, const ToleranceConfig& tol) {
    if ((a + b).norm() <= tol.eps_predicate) {
        throw NearZeroVector("geodesic requested between antipodal points " + a.to_string() + " and " +
                             b.to_string());
    }
    return Path(a.dim(), [a, b](double t) {
        const Vector p = lerp(a, b, t);
        return p / p.norm();
    });
}

Path detour(const Vector& a, const ToleranceConfig& tol) {
    const Vector nu = tangent_field_nu(a);
    return concat2(geodesic(a, nu, tol), geodesic(nu, -a, tol), tol);
}

}  // namespace

FreeSpace sphere_space(const SphereSpec& spec, const ToleranceConfig& tol) {
    const std::size_t dim = spec.ambient_dim();
    const double eps = tol.eps_assert;
    FreeSpace space;
    space.name = "S^" + std::to_string(spec.sphere_dim());
    space.dim = dim;
    space.contains = [dim, eps](const Vector& x) { return x.dim() == dim && std::abs(x.norm() - 1.0) <= eps; };
    space.violation = [dim](const Vector& x) {
        return x.dim() == dim ? std::abs(x.norm() - 1.0) : std::numeric_limits<double>::infinity();
    };
    space.violation_tolerance = eps;
    space.project = [tol](const Vector& x) { return normalize(x, tol); };
    return space;
}

LocalRule sphere_rule1(const SphereSpec& spec, const ToleranceConfig& tol) {
    LocalRule rule;
    rule.label = "geodesic";
    rule.domain = [tol](const Vector& a, const Vector& b) { return (a + b).norm() > tol.eps_predicate; };
    rule.section = [spec, tol](const Vector& a, const Vector& b) {
        require_ambient(spec, a);
        require_ambient(spec, b);
        return geodesic(a, b, tol);
    };
    return rule;
}

Path alpha_detour(const SphereSpec& spec, const Vector& a, const ToleranceConfig& tol) {
    require_ambient(spec, a);
    if (std::abs(a.norm() - 1.0) > tol.eps_assert) {
        throw OutsideFreeSpace("detour base " + a.to_string() + " is not a unit vector");
    }
    return detour(a, tol);
}

LocalRule sphere_rule2(const SphereSpec& spec, const ToleranceConfig& tol) {
    LocalRule rule;
    rule.label = "antipodal-detour";
    rule.domain = [tol](const Vector& a, const Vector& b) { return (a - b).norm() > tol.eps_predicate; };
    rule.section = [spec, tol](const Vector& a, const Vector& b) {
        require_ambient(spec, a);
        require_ambient(spec, b);
        const Vector minus_b = -b;
        if ((a + minus_b).norm() <= tol.eps_predicate) {
            throw NearZeroVector("rule 2 requested for coincident points " + a.to_string());
        }
        return concat2(geodesic(a, minus_b, tol), detour(minus_b, tol), tol);
    };
    return rule;
}

MotionPlanner sphere_planner(const SphereSpec& spec, const ToleranceConfig& tol) {
    return MotionPlanner(sphere_space(spec, tol), {sphere_rule1(spec, tol), sphere_rule2(spec, tol)});
}

}  // namespace tcplan
