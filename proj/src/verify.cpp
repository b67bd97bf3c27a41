#include <tcplan/verify.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace tcplan {

PairBatch draw_pairs(const PairSampler& sampler, std::size_t n, std::uint64_t seed) {
    PairBatch batch;
    batch.seed = seed;
    batch.pairs.reserve(n);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        batch.pairs.push_back(sampler(rng));
    }
    return batch;
}

PairBatch angular_grid_pairs(std::size_t k) {
    if (k == 0) {
        throw InvalidArgument("angular grid needs at least one point");
    }
    PairBatch batch;
    std::vector<Vector> ring;
    ring.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
        ring.push_back(Vector{std::cos(theta), std::sin(theta)});
    }
    batch.pairs.reserve(k * k);
    for (const Vector& a : ring) {
        for (const Vector& b : ring) {
            batch.pairs.emplace_back(a, b);
        }
    }
    return batch;
}

Vector random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
    if (dim == 2) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        const double theta = angle(rng);
        return Vector{std::cos(theta), std::sin(theta)};
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> c(dim);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (double& x : c) {
            x = gauss(rng);
            n2 += x * x;
        }
    } while (n2 < 1e-12);
    return Vector(std::move(c)) / std::sqrt(n2);
}

PairSampler sphere_pair_sampler(const SphereSpec& spec) {
    const std::size_t dim = spec.ambient_dim();
    return [dim](std::mt19937_64& rng) {
        Vector a = random_unit_vector(dim, rng);
        Vector b = random_unit_vector(dim, rng);
        return VectorPair{std::move(a), std::move(b)};
    };
}

PairSampler geodesic_pair_sampler(const SphereSpec& spec, double margin) {
    const std::size_t dim = spec.ambient_dim();
    return [dim, margin](std::mt19937_64& rng) {
        for (;;) {
            Vector a = random_unit_vector(dim, rng);
            Vector b = random_unit_vector(dim, rng);
            if ((a + b).norm() > margin) {
                return VectorPair{std::move(a), std::move(b)};
            }
        }
    };
}

PairSampler annulus_pair_sampler(const AnnulusSpec& spec) {
    return [spec](std::mt19937_64& rng) {
        Vector a = sample_annulus_point(spec, rng);
        Vector b = sample_annulus_point(spec, rng);
        return VectorPair{std::move(a), std::move(b)};
    };
}

PairSampler star_pair_sampler(const StarDomain& domain) {
    if (!domain.member_sampler()) {
        throw InvalidArgument("star domain " + domain.name() + " has no member sampler");
    }
    return [sampler = domain.member_sampler()](std::mt19937_64& rng) {
        Vector a = sampler(rng);
        Vector b = sampler(rng);
        return VectorPair{std::move(a), std::move(b)};
    };
}

// ---------------------------------------------------------------------------
// Reports

namespace {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

nlohmann::json vector_json(const Vector& v) { return nlohmann::json(std::vector<double>(v.coords().begin(), v.coords().end())); }

// Tracks the running maximum and keeps the first offending pairs by sample index.
class ViolationTracker {
  public:
    ViolationTracker(VerificationReport& report, std::size_t max_witnesses)
        : report_(report), max_witnesses_(max_witnesses) {}

    void record(const VectorPair& pair, double violation, std::string note = {}) {
        if (std::isnan(violation)) {
            violation = std::numeric_limits<double>::infinity();
        }
        report_.max_violation = std::max(report_.max_violation, violation);
        if (violation > report_.tolerance && report_.witnesses.size() < max_witnesses_) {
            report_.witnesses.push_back(Witness{pair.first, pair.second, violation, std::move(note)});
        }
    }

  private:
    VerificationReport& report_;
    std::size_t max_witnesses_;
};

VerificationReport make_report(std::string name, const PairBatch& batch, double tolerance) {
    VerificationReport r;
    r.check_name = std::move(name);
    r.seed = batch.seed;
    r.samples = batch.pairs.size();
    r.tolerance = tolerance;
    return r;
}

}  // namespace

std::string VerificationReport::to_text() const {
    std::string line = std::string(passed() ? "PASS" : "FAIL") + " " + check_name + " samples=" +
                       std::to_string(samples) + " max_violation=" + format_real(max_violation) +
                       " tolerance=" + format_real(tolerance) + " seed=" + std::to_string(seed);
    for (const Witness& w : witnesses) {
        line += "\n  witness start=" + w.start.to_string() + " goal=" + w.goal.to_string() +
                " value=" + format_real(w.value);
        if (!w.note.empty()) {
            line += " (" + w.note + ")";
        }
    }
    return line;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json ws = nlohmann::json::array();
    for (const Witness& w : witnesses) {
        ws.push_back({{"start", vector_json(w.start)}, {"goal", vector_json(w.goal)}, {"value", w.value},
                      {"note", w.note}});
    }
    return {{"check_name", check_name}, {"seed", seed},           {"samples", samples},
            {"max_violation", max_violation}, {"tolerance", tolerance}, {"passed", passed()},
            {"witnesses", ws}};
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const VerificationReport& r : reports) {
        arr.push_back(r.to_json());
        all = all && r.passed();
    }
    return {{"passed", all}, {"reports", arr}};
}

// ---------------------------------------------------------------------------
// Checks

VerificationReport check_endpoints(const MotionPlanner& planner, const PairBatch& batch, const HarnessConfig& cfg) {
    VerificationReport report = make_report("endpoints", batch, cfg.tol.eps_assert);
    ViolationTracker track(report, cfg.max_witnesses);
    for (const VectorPair& pair : batch.pairs) {
        try {
            const PlanResult res = planner.plan(pair.first, pair.second);
            const double err =
                std::max(distance(res.path(0.0), pair.first), distance(res.path(1.0), pair.second));
            track.record(pair, err, "rule " + std::to_string(res.rule_index));
        } catch (const Error& e) {
            track.record(pair, std::numeric_limits<double>::infinity(), e.what());
        }
    }
    return report;
}

VerificationReport check_membership(const MotionPlanner& planner, const PairBatch& batch,
                                    std::size_t samples_per_path, const HarnessConfig& cfg) {
    const FreeSpace& space = planner.space();
    VerificationReport report = make_report("membership", batch, space.violation_tolerance);
    ViolationTracker track(report, cfg.max_witnesses);
    for (const VectorPair& pair : batch.pairs) {
        try {
            const PlanResult res = planner.plan(pair.first, pair.second);
            double worst = 0.0;
            for (const Vector& p : sample_path(res.path, samples_per_path)) {
                worst = std::max(worst, space.violation(p));
            }
            track.record(pair, worst, "rule " + std::to_string(res.rule_index));
        } catch (const Error& e) {
            track.record(pair, std::numeric_limits<double>::infinity(), e.what());
        }
    }
    return report;
}

VerificationReport check_cover(const MotionPlanner& planner, const PairBatch& batch, const HarnessConfig& cfg) {
    VerificationReport report = make_report("cover", batch, 0.0);
    std::size_t uncovered = 0;
    for (const VectorPair& pair : batch.pairs) {
        const bool covered = std::any_of(planner.rules().begin(), planner.rules().end(), [&](const LocalRule& r) {
            return r.domain(pair.first, pair.second);
        });
        if (!covered) {
            ++uncovered;
            if (report.witnesses.size() < cfg.max_witnesses) {
                report.witnesses.push_back(Witness{pair.first, pair.second, 1.0, "no rule domain accepts"});
            }
        }
    }
    report.max_violation = static_cast<double>(uncovered);
    return report;
}

VerificationReport check_junctions(const MotionPlanner& planner, const PairBatch& batch, const HarnessConfig& cfg) {
    if (!(cfg.junction_h > 0.0 && cfg.junction_h <= 1e-6)) {
        throw InvalidArgument("junction probe h must lie in (0, 1e-6]");
    }
    VerificationReport report = make_report("junctions", batch, cfg.junction_tolerance);
    ViolationTracker track(report, cfg.max_witnesses);
    const double h = cfg.junction_h;
    for (const VectorPair& pair : batch.pairs) {
        try {
            const PlanResult res = planner.plan(pair.first, pair.second);
            double worst = 0.0;
            double worst_at = 0.0;
            for (double b : res.path.breakpoints()) {
                const double gap = distance(res.path(std::max(0.0, b - h)), res.path(std::min(1.0, b + h)));
                if (gap > worst) {
                    worst = gap;
                    worst_at = b;
                }
            }
            track.record(pair, worst, "breakpoint " + format_real(worst_at));
        } catch (const Error& e) {
            track.record(pair, std::numeric_limits<double>::infinity(), e.what());
        }
    }
    return report;
}

VerificationReport check_geodesic(const SphereSpec& spec, const PairBatch& batch, const HarnessConfig& cfg) {
    VerificationReport report = make_report("geodesic", batch, cfg.geodesic_tolerance);
    ViolationTracker track(report, cfg.max_witnesses);
    const LocalRule rule = sphere_rule1(spec, cfg.tol);
    for (const VectorPair& pair : batch.pairs) {
        try {
            const Path path = rule.section(pair.first, pair.second);
            const double length = polyline_length(path, cfg.geodesic_samples);
            const double angle = std::acos(std::clamp(pair.first.dot(pair.second), -1.0, 1.0));
            track.record(pair, std::abs(length - angle));
        } catch (const Error& e) {
            track.record(pair, std::numeric_limits<double>::infinity(), e.what());
        }
    }
    return report;
}

VerificationReport continuity_probe(const LocalRule& rule, const PairBatch& batch, double delta,
                                    const PointMap& project, const HarnessConfig& cfg) {
    if (!(delta > 0.0 && delta <= 1e-3)) {
        throw InvalidArgument("continuity probe delta must lie in (0, 1e-3]");
    }
    VerificationReport report = make_report("continuity[" + rule.label + "]", batch, cfg.continuity_modulus);
    ViolationTracker track(report, cfg.max_witnesses);
    std::mt19937_64 rng(batch.seed ^ 0x9E3779B97F4A7C15ULL);
    for (const VectorPair& pair : batch.pairs) {
        const Vector& a = pair.first;
        const Vector& b = pair.second;
        const Vector a2 = project(a + delta * random_unit_vector(a.dim(), rng));
        const Vector b2 = project(b + delta * random_unit_vector(b.dim(), rng));
        if (!rule.domain(a, b) || !rule.domain(a2, b2)) {
            track.record(pair, std::numeric_limits<double>::infinity(), "perturbed pair left the rule domain");
            continue;
        }
        const double sup = sup_distance(rule.section(a, b), rule.section(a2, b2), cfg.continuity_samples);
        track.record(pair, sup / delta);
    }
    return report;
}

VerificationReport discontinuity_witness(const MotionPlanner& planner, const VectorPair& hint,
                                         const HarnessConfig& cfg) {
    if (planner.rule_count() < 2) {
        throw InvalidArgument("a single-rule planner has no dispatch boundary to witness");
    }
    const FreeSpace& space = planner.space();
    const double radius = cfg.witness_radius;

    // Candidates move one endpoint by at most radius / 2 along +-e_k, so any two
    // of them are within `radius` before projection; the distance is re-checked
    // after projection below.
    std::vector<VectorPair> candidates{hint};
    for (int endpoint = 0; endpoint < 2; ++endpoint) {
        const Vector& base = endpoint == 0 ? hint.first : hint.second;
        for (std::size_t k = 0; k < base.dim(); ++k) {
            for (double sign : {1.0, -1.0}) {
                double step = radius / 2.0;
                for (int level = 0; level < 8; ++level, step /= 2.0) {
                    const Vector moved = space.project(base + (sign * step) * Vector::basis(base.dim(), k));
                    candidates.push_back(endpoint == 0 ? VectorPair{moved, hint.second}
                                                       : VectorPair{hint.first, moved});
                }
            }
        }
    }

    struct Planned {
        VectorPair pair;
        PlanResult result;
    };
    std::vector<Planned> planned;
    for (const VectorPair& c : candidates) {
        if (!space.contains(c.first) || !space.contains(c.second)) {
            continue;
        }
        try {
            planned.push_back(Planned{c, planner.plan(c.first, c.second)});
        } catch (const NoApplicableRule&) {
        }
    }

    double best_gap = -1.0;
    const Planned* best_a = nullptr;
    const Planned* best_b = nullptr;
    for (std::size_t i = 0; i < planned.size(); ++i) {
        for (std::size_t j = i + 1; j < planned.size(); ++j) {
            const Planned& p = planned[i];
            const Planned& q = planned[j];
            if (p.result.rule_index == q.result.rule_index) {
                continue;
            }
            const double input_gap =
                std::max(distance(p.pair.first, q.pair.first), distance(p.pair.second, q.pair.second));
            if (input_gap > radius) {
                continue;
            }
            const double gap = sup_distance(p.result.path, q.result.path, cfg.tol.sample_count);
            if (gap > best_gap) {
                best_gap = gap;
                best_a = &p;
                best_b = &q;
            }
        }
    }

    if (best_a == nullptr || best_gap < cfg.witness_min_gap) {
        throw WitnessNotFound("no pair of nearby inputs with different rules and path gap >= " +
                              format_real(cfg.witness_min_gap) + " near " + hint.first.to_string() + " -> " +
                              hint.second.to_string() + " (best gap " + format_real(std::max(best_gap, 0.0)) + ")");
    }

    VerificationReport report;
    report.check_name = "discontinuity";
    report.samples = planned.size();
    report.tolerance = 0.0;
    report.max_violation = std::max(0.0, cfg.witness_min_gap - best_gap);
    report.witnesses.push_back(Witness{best_a->pair.first, best_a->pair.second, best_gap,
                                       "rule " + std::to_string(best_a->result.rule_index)});
    report.witnesses.push_back(Witness{best_b->pair.first, best_b->pair.second, best_gap,
                                       "rule " + std::to_string(best_b->result.rule_index)});
    return report;
}

}  // namespace tcplan
