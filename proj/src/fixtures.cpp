#include <tcplan/fixtures.hpp>

#include <cmath>

namespace tcplan::fixtures {

namespace {

const SphereSpec kCircle(1);

}  // namespace

MotionPlanner broken_rule_planner() {
    LocalRule broken = sphere_rule1(kCircle);
    broken.label = "overshooting-geodesic";
    broken.section = [](const Vector& a, const Vector& b) {
        const Vector past = normalize(std::cos(0.1) * b + std::sin(0.1) * tangent_field_nu(b));
        return sphere_rule1(kCircle).section(a, past);
    };
    return MotionPlanner(sphere_space(kCircle), {broken, sphere_rule2(kCircle)});
}

MotionPlanner straight_line_planner(const AnnulusSpec& spec) {
    LocalRule straight;
    straight.label = "straight-line";
    straight.domain = [](const Vector&, const Vector&) { return true; };
    straight.section = [](const Vector& a, const Vector& b) { return segment_path(a, b); };
    return MotionPlanner(annulus_space(spec), {straight});
}

MotionPlanner rule1_only_planner() { return MotionPlanner(sphere_space(kCircle), {sphere_rule1(kCircle)}); }

MotionPlanner broken_junction_planner() {
    LocalRule jump;
    jump.label = "jump";
    jump.domain = [](const Vector&, const Vector&) { return true; };
    jump.section = [](const Vector& a, const Vector& b) {
        return Path(a.dim(), [a, b](double t) { return t <= 0.5 ? a : b; }, {0.5});
    };
    return MotionPlanner(sphere_space(kCircle), {jump});
}

std::vector<std::string> names() { return {"broken-rule", "straight-line", "rule1-only", "broken-junction"}; }

Fixture make(const std::string& name) {
    if (name == "broken-rule") {
        return Fixture{name, broken_rule_planner(), sphere_pair_sampler(kCircle)};
    }
    if (name == "straight-line") {
        const AnnulusSpec spec(0.3, 0.2);
        return Fixture{name, straight_line_planner(spec), annulus_pair_sampler(spec)};
    }
    if (name == "rule1-only") {
        // Half of the draws are exactly antipodal so the cover defect is always hit.
        PairSampler sampler = [](std::mt19937_64& rng) {
            VectorPair p = sphere_pair_sampler(kCircle)(rng);
            if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
                p.second = -p.first;
            }
            return p;
        };
        return Fixture{name, rule1_only_planner(), sampler};
    }
    if (name == "broken-junction") {
        return Fixture{name, broken_junction_planner(), sphere_pair_sampler(kCircle)};
    }
    throw InvalidArgument("unknown fixture '" + name + "'");
}

}  // namespace tcplan::fixtures
