#include <tcplan/scenario.hpp>

#include <fstream>

namespace tcplan {

namespace {

template <class T>
T require(const nlohmann::json& j, const char* key, const char* where) {
    if (!j.contains(key)) {
        throw ScenarioError(std::string(where) + " is missing \"" + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ScenarioError(std::string(where) + ": \"" + key + "\" has the wrong type");
    }
}

Vector to_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) {
        throw ScenarioError(std::string(what) + " must be a non-empty array of numbers");
    }
    std::vector<double> c;
    for (const auto& x : j) {
        if (!x.is_number()) {
            throw ScenarioError(std::string(what) + " must contain only numbers");
        }
        c.push_back(x.get<double>());
    }
    try {
        return Vector(std::move(c));
    } catch (const InvalidArgument& e) {
        throw ScenarioError(std::string(what) + ": " + e.what());
    }
}

SpaceSpec parse_star(const nlohmann::json& j) {
    const std::string shape = j.value("shape", std::string("disk"));
    if (shape == "disk") {
        const Vector center = j.contains("center") ? to_vector(j.at("center"), "star.center") : Vector{0.0, 0.0};
        const double radius = j.contains("radius") ? require<double>(j, "radius", "star disk") : 1.0;
        const Vector star = j.contains("star") ? to_vector(j.at("star"), "star.star") : center;
        return StarDomain::disk(center, radius, star);
    }
    if (shape == "rectangle") {
        const Vector lo = to_vector(require<nlohmann::json>(j, "min", "star rectangle"), "star.min");
        const Vector hi = to_vector(require<nlohmann::json>(j, "max", "star rectangle"), "star.max");
        const Vector star = j.contains("star") ? to_vector(j.at("star"), "star.star") : lerp(lo, hi, 0.5);
        return StarDomain::box(lo, hi, star);
    }
    throw ScenarioError("unknown star shape \"" + shape + "\" (expected disk or rectangle)");
}

}  // namespace

SpaceSpec parse_space(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ScenarioError("space must be a JSON object");
    }
    const std::string type = require<std::string>(j, "type", "space");
    try {
        if (type == "sphere") {
            return SphereSpec(require<int>(j, "m", "sphere space"));
        }
        if (type == "annulus") {
            std::optional<double> rho;
            if (j.contains("rho") && !j.at("rho").is_null()) {
                rho = require<double>(j, "rho", "annulus space");
            }
            return AnnulusSpec(require<double>(j, "l_O", "annulus space"), require<double>(j, "l_R", "annulus space"),
                               rho);
        }
        if (type == "star") {
            return parse_star(j);
        }
    } catch (const ScenarioError&) {
        throw;
    } catch (const Error& e) {
        throw ScenarioError(std::string("invalid ") + type + " space: " + e.what());
    }
    throw ScenarioError("unknown space type \"" + type + "\" (expected sphere, annulus or star)");
}

Scenario parse_scenario(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ScenarioError("scenario must be a JSON object");
    }
    SpaceSpec space = parse_space(require<nlohmann::json>(j, "space", "scenario"));
    Vector start = to_vector(require<nlohmann::json>(j, "start", "scenario"), "start");
    Vector goal = to_vector(require<nlohmann::json>(j, "goal", "scenario"), "goal");
    std::size_t samples = 256;
    if (j.contains("samples")) {
        const long long s = require<long long>(j, "samples", "scenario");
        if (s < 2) {
            throw ScenarioError("samples must be at least 2");
        }
        samples = static_cast<std::size_t>(s);
    }

    const std::size_t dim = space_dim(space);
    if (start.dim() != dim || goal.dim() != dim) {
        throw ScenarioError("start and goal must have the space's ambient dimension " + std::to_string(dim));
    }
    const FreeSpace fs = build_planner(space).space();
    if (!fs.contains(start)) {
        throw ScenarioError("start " + start.to_string() + " is not in the free space " + fs.name);
    }
    if (!fs.contains(goal)) {
        throw ScenarioError("goal " + goal.to_string() + " is not in the free space " + fs.name);
    }
    return Scenario{std::move(space), std::move(start), std::move(goal), samples};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ScenarioError("cannot open scenario file " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioError("scenario " + path + " is not valid JSON: " + e.what());
    }
    return parse_scenario(j);
}

std::size_t space_dim(const SpaceSpec& space) {
    return std::visit(
        [](const auto& s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SphereSpec>) {
                return s.ambient_dim();
            } else if constexpr (std::is_same_v<T, AnnulusSpec>) {
                return 2;
            } else {
                return s.dim();
            }
        },
        space);
}

MotionPlanner build_planner(const SpaceSpec& space, const ToleranceConfig& tol) {
    return std::visit(
        [&tol](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SphereSpec>) {
                return sphere_planner(s, tol);
            } else if constexpr (std::is_same_v<T, AnnulusSpec>) {
                return annulus_planner(s, tol);
            } else {
                return star_planner(s, tol);
            }
        },
        space);
}

PairSampler space_pair_sampler(const SpaceSpec& space) {
    return std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SphereSpec>) {
                return sphere_pair_sampler(s);
            } else if constexpr (std::is_same_v<T, AnnulusSpec>) {
                return annulus_pair_sampler(s);
            } else {
                return star_pair_sampler(s);
            }
        },
        space);
}

std::optional<VectorPair> boundary_hint(const SpaceSpec& space) {
    if (const auto* sphere = std::get_if<SphereSpec>(&space)) {
        const Vector e1 = Vector::basis(sphere->ambient_dim(), 0);
        return VectorPair{e1, -e1};
    }
    if (const auto* annulus = std::get_if<AnnulusSpec>(&space)) {
        const double r = annulus->rho();
        return VectorPair{Vector{r, 0.0}, Vector{-r, 0.0}};
    }
    return std::nullopt;
}

}  // namespace tcplan
