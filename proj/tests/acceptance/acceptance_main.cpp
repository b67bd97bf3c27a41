// Acceptance gate: runs every acceptance criterion at its stated scale and
// tolerance and prints one PASS/FAIL line per criterion. Exit status is 0 only
// if all of them pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <tcplan/cli.hpp>
#include <tcplan/planners.hpp>
#include <tcplan/transfer.hpp>
#include <tcplan/verify.hpp>

using namespace tcplan;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
        }
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += (ok ? "" : "!") + what;
    }
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string sci(double x) { return fmt("%.3e", x); }

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const SphereSpec kS1(1);
const SphereSpec kS3(2);
const AnnulusSpec kSmall(0.3, 0.2);
const AnnulusSpec kLarge(3.0, 1.0);

StarDomain unit_disk() { return StarDomain::disk(Vector{0.0, 0.0}, 1.0, Vector{0.0, 0.0}); }

// Replaces every fourth pair with a radially antipodal one so the second rule
// is exercised; uniform sampling essentially never lands there.
PairBatch with_antipodes(PairBatch batch) {
    for (std::size_t i = 0; i < batch.pairs.size(); i += 4) {
        auto& [a, b] = batch.pairs[i];
        b = -(b.norm() / a.norm()) * a;
    }
    return batch;
}

// ---------------------------------------------------------------------------

Outcome rule_counts() {
    Outcome o;
    const std::size_t star = star_planner(unit_disk()).rule_count();
    const std::size_t s1 = sphere_planner(kS1).rule_count();
    const std::size_t s3 = sphere_planner(kS3).rule_count();
    const std::size_t annulus = annulus_planner(kSmall).rule_count();
    o.require(star == 1, "star=" + std::to_string(star));
    o.require(s1 == 2, "sphere(m=1)=" + std::to_string(s1));
    o.require(s3 == 2, "sphere(m=2)=" + std::to_string(s3));
    o.require(annulus == 2, "annulus=" + std::to_string(annulus));
    return o;
}

Outcome endpoint_contract() {
    Outcome o;
    const auto start = Clock::now();
    const StarDomain disk = unit_disk();
    struct Case {
        std::string name;
        MotionPlanner planner;
        PairSampler sampler;
    };
    const std::vector<Case> cases{
        {"star", star_planner(disk), star_pair_sampler(disk)},
        {"S1", sphere_planner(kS1), sphere_pair_sampler(kS1)},
        {"S3", sphere_planner(kS3), sphere_pair_sampler(kS3)},
        {"annulus", annulus_planner(kSmall), annulus_pair_sampler(kSmall)},
    };
    std::size_t total = 0;
    double worst = 0.0;
    std::uint64_t seed = 1001;
    for (const Case& c : cases) {
        const VerificationReport r = check_endpoints(c.planner, draw_pairs(c.sampler, 25000, seed++));
        total += r.samples;
        worst = std::max(worst, r.max_violation);
        o.require(r.max_violation <= 1e-9, c.name + " " + sci(r.max_violation));
    }
    const double elapsed = seconds_since(start);
    o.require(total == 100000, "pairs=" + std::to_string(total));
    o.require(worst <= 1e-9, "max=" + sci(worst) + " <= 1e-9");
    o.require(elapsed < 10.0, "runtime " + fmt("%.2f", elapsed) + " s < 10 s");
    return o;
}

Outcome containment() {
    Outcome o;
    const auto start = Clock::now();
    std::uint64_t seed = 3001;
    for (const SphereSpec& spec : {kS1, kS3}) {
        const VerificationReport r =
            check_membership(sphere_planner(spec), with_antipodes(draw_pairs(sphere_pair_sampler(spec), 1000, seed++)), 1000);
        o.require(r.passed() && r.tolerance == 1e-9,
                  "S" + std::to_string(spec.sphere_dim()) + " max|norm-1|=" + sci(r.max_violation));
    }
    for (const AnnulusSpec& spec : {kSmall, kLarge}) {
        const PairBatch batch = with_antipodes(draw_pairs(annulus_pair_sampler(spec), 1000, seed++));
        const MotionPlanner planner = annulus_planner(spec);
        // Independent of the free-space predicate: the smallest norm seen must
        // exceed l_O + l_R strictly.
        double min_norm = INFINITY;
        for (const auto& [a, b] : batch.pairs) {
            for (const Vector& x : sample_path(planner.plan(a, b).path, 1000)) {
                min_norm = std::min(min_norm, x.norm());
            }
        }
        o.require(min_norm > spec.clearance_radius(), "annulus(" + fmt("%g", spec.l_obstacle()) + "," +
                                                          fmt("%g", spec.l_robot()) + ") min|p|=" +
                                                          fmt("%.6f", min_norm) + " > " +
                                                          fmt("%g", spec.clearance_radius()));
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 20.0, "runtime " + fmt("%.2f", elapsed) + " s < 20 s");
    return o;
}

Outcome cover() {
    Outcome o;
    const VerificationReport grid = check_cover(sphere_planner(kS1), angular_grid_pairs(720));
    o.require(grid.passed() && grid.samples == 720 * 720,
              "720x720 grid uncovered=" + fmt("%.0f", grid.max_violation));
    const VerificationReport annulus = check_cover(annulus_planner(kSmall), draw_pairs(annulus_pair_sampler(kSmall), 100000, 4001));
    o.require(annulus.passed() && annulus.samples == 100000,
              "annulus 1e5 uncovered=" + fmt("%.0f", annulus.max_violation));
    return o;
}

Outcome geodesic_optimality() {
    Outcome o;
    std::uint64_t seed = 5001;
    for (const SphereSpec& spec : {kS1, kS3}) {
        const VerificationReport r = check_geodesic(spec, draw_pairs(geodesic_pair_sampler(spec, 0.1), 1000, seed++));
        o.require(r.passed() && r.tolerance == 1e-6,
                  "S" + std::to_string(spec.sphere_dim()) + " max=" + sci(r.max_violation));
    }
    return o;
}

// Largest |path(b - h) - path(b + h)| over the given schedule points of every planned path.
double schedule_gap(const MotionPlanner& planner, const PairBatch& batch, const std::vector<double>& schedule, double h) {
    double worst = 0.0;
    for (const auto& [a, b] : batch.pairs) {
        const Path path = planner.plan(a, b).path;
        for (double s : schedule) {
            worst = std::max(worst, distance(path(s - h), path(s + h)));
        }
    }
    return worst;
}

Outcome junction_continuity() {
    Outcome o;
    HarnessConfig cfg;
    cfg.junction_h = 1e-8;

    // Star and sphere paths: every recorded breakpoint is probed. For a star
    // path that is the 1/2 of the contraction, for an s2 path the 1/2 between
    // its pieces plus the inner junction of the detour.
    const StarDomain disk = unit_disk();
    const StarDomain box = StarDomain::box(Vector{-1.0, -2.0, 0.0}, Vector{3.0, 1.0, 1.0}, Vector{0.5, -0.5, 0.5});
    struct Case {
        std::string name;
        MotionPlanner planner;
        PairBatch batch;
    };
    std::vector<Case> cases;
    cases.push_back({"star-disk", star_planner(disk), draw_pairs(star_pair_sampler(disk), 1000, 6001)});
    cases.push_back({"star-box", star_planner(box), draw_pairs(star_pair_sampler(box), 1000, 6002)});
    for (const SphereSpec& spec : {kS1, kS3}) {
        cases.push_back({"S" + std::to_string(spec.sphere_dim()), sphere_planner(spec),
                         with_antipodes(draw_pairs(sphere_pair_sampler(spec), 1000, 6003 + spec.m()))});
    }
    for (const Case& c : cases) {
        // The probe is vacuous unless 1/2 really is a breakpoint of the paths it covers.
        bool schedule_ok = true;
        for (const auto& [a, b] : c.batch.pairs) {
            const PlanResult res = c.planner.plan(a, b);
            if (c.planner.rule_count() == 1 || res.rule_index == 2) {
                const std::vector<double>& bps = res.path.breakpoints();
                schedule_ok = schedule_ok && std::find(bps.begin(), bps.end(), 0.5) != bps.end();
            }
        }
        const VerificationReport r = check_junctions(c.planner, c.batch, cfg);
        o.require(r.passed() && schedule_ok && r.samples == 1000, c.name + " " + sci(r.max_violation));
    }

    // Transferred paths: the schedule points are 1/3 and 2/3. Nested breakpoints
    // of the lifted sphere path are shown for information only; their probe
    // gap grows with rho because the lifted detour runs at speed ~12 rho there.
    std::uint64_t seed = 6010;
    for (const AnnulusSpec& spec : {kSmall, kLarge}) {
        const MotionPlanner planner = annulus_planner(spec);
        const PairBatch batch = with_antipodes(draw_pairs(annulus_pair_sampler(spec), 1000, seed++));
        bool schedule_ok = true;
        for (const auto& [a, b] : batch.pairs) {
            const PlanResult res = planner.plan(a, b);
            const std::vector<double>& bps = res.path.breakpoints();
            schedule_ok = schedule_ok && std::find(bps.begin(), bps.end(), 1.0 / 3.0) != bps.end() &&
                          std::find(bps.begin(), bps.end(), 2.0 / 3.0) != bps.end();
        }
        const double gap = schedule_gap(planner, batch, {1.0 / 3.0, 2.0 / 3.0}, cfg.junction_h);
        const VerificationReport all = check_junctions(planner, batch, cfg);
        o.require(gap <= 1e-6 && schedule_ok, "annulus(" + fmt("%g", spec.l_obstacle()) + "," +
                                                  fmt("%g", spec.l_robot()) + ") 1/3,2/3 " + sci(gap) +
                                                  " (all breakpoints " + sci(all.max_violation) + ")");
    }
    return o;
}

Outcome transfer_wiring() {
    Outcome o;
    double worst = 0.0;
    for (const AnnulusSpec& spec : {kSmall, kLarge}) {
        const double rho = spec.rho();
        const MotionPlanner planner = annulus_planner(spec);
        const MotionPlanner unit = sphere_planner(kS1);
        // g and f written out directly: radial projection to the rho-circle and inclusion.
        auto g = [rho](const Vector& z) { return (rho / std::hypot(z[0], z[1])) * z; };
        auto f = [](const Vector& y) { return y; };
        const PairBatch batch = with_antipodes(draw_pairs(annulus_pair_sampler(spec), 1000, 7001));
        std::size_t rule2 = 0;
        for (const auto& [z1, z2] : batch.pairs) {
            const PlanResult res = planner.plan(z1, z2);
            const Vector y1 = g(z1);
            const Vector y2 = g(z2);
            // The unit-circle section applied to g(z)/rho, then scaled back up.
            const Path s = unit.rules()[res.rule_index - 1].section(y1 / rho, y2 / rho);
            const std::size_t expected_rule = (y1 + y2).norm() / rho > 1e-6 ? 1 : 2;
            if (res.rule_index != expected_rule) {
                worst = INFINITY;
            }
            rule2 += res.rule_index == 2 ? 1 : 0;
            for (int k = 0; k < 100; ++k) {
                const double t = 1.0 / 3.0 + (k + 0.5) / 300.0;
                const Vector direct = f(rho * s(3.0 * t - 1.0));
                worst = std::max(worst, distance(res.path(t), direct));
            }
        }
        o.require(rule2 > 0, "annulus(" + fmt("%g", spec.l_obstacle()) + ") rule-2 pairs=" + std::to_string(rule2));
    }
    o.require(worst <= 1e-12, "max=" + sci(worst) + " <= 1e-12");
    return o;
}

Outcome discontinuity() {
    Outcome o;
    struct Case {
        std::string name;
        MotionPlanner planner;
        VectorPair hint;
    };
    const std::vector<Case> cases{
        {"S1", sphere_planner(kS1), {Vector{1.0, 0.0}, Vector{-1.0, 0.0}}},
        {"annulus(0.3,0.2)", annulus_planner(kSmall), {Vector{2.0, 0.0}, Vector{-2.0, 0.0}}},
        {"annulus(3,1)", annulus_planner(kLarge), {Vector{5.0, 0.0}, Vector{-5.0, 0.0}}},
    };
    for (const Case& c : cases) {
        try {
            const VerificationReport r = discontinuity_witness(c.planner, c.hint);
            const Witness& p = r.witnesses.at(0);
            const Witness& q = r.witnesses.at(1);
            // Re-plan both witnesses and measure them here rather than trusting the report.
            const double input_gap = std::max(distance(p.start, q.start), distance(p.goal, q.goal));
            const PlanResult rp = c.planner.plan(p.start, p.goal);
            const PlanResult rq = c.planner.plan(q.start, q.goal);
            const double gap = sup_distance(rp.path, rq.path, 1001);
            o.require(r.passed() && input_gap <= 1e-3 && gap >= 0.5 && rp.rule_index != rq.rule_index,
                      c.name + " input=" + sci(input_gap) + " paths=" + fmt("%.4f", gap));
        } catch (const Error& e) {
            o.require(false, c.name + " " + e.what());
        }
    }
    return o;
}

Outcome contraction_round_trip() {
    Outcome o;
    const StarDomain disk = unit_disk();
    const StarDomain box = StarDomain::box(Vector{-1.0, -2.0, 0.0}, Vector{3.0, 1.0, 1.0}, Vector{0.5, -0.5, 0.5});
    for (const StarDomain* d : {&disk, &box}) {
        const Homotopy h = contraction_from_planner(star_planner(*d), d->star_point());
        std::mt19937_64 rng(9001);
        double worst0 = 0.0;
        double worst1 = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const Vector x = d->member_sampler()(rng);
            worst0 = std::max(worst0, distance(h(x, 0.0), x));
            worst1 = std::max(worst1, distance(h(x, 1.0), d->star_point()));
        }
        o.require(worst0 <= 1e-9 && worst1 <= 1e-9,
                  d->name() + " |H(x,0)-x|=" + sci(worst0) + " |H(x,1)-x0|=" + sci(worst1));
    }
    return o;
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tcplan");
    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

Outcome cli_goldens(double suite_seconds) {
    Outcome o;
    const fs::path root(TCPLAN_TEST_DATA_DIR);
    const fs::path scratch = fs::temp_directory_path() / "tcplan_acceptance";
    fs::create_directories(scratch);

    struct Golden {
        std::string scenario;
        std::string command;
        std::string ext;
    };
    const std::vector<Golden> goldens{
        {"annulus", "plan", "csv"},         {"annulus", "render", "svg"},
        {"annulus_antipodal", "plan", "csv"}, {"annulus_antipodal", "render", "svg"},
        {"star_disk", "plan", "csv"},       {"star_disk", "render", "svg"},
        {"sphere_s3", "plan", "csv"},
    };
    std::size_t matched = 0;
    for (const Golden& g : goldens) {
        const std::string scenario = (root / "data" / (g.scenario + ".json")).string();
        const std::string name = g.scenario + "." + g.ext;
        const fs::path first = scratch / ("1_" + name);
        const fs::path second = scratch / ("2_" + name);
        const int c1 = cli({g.command, "--scenario", scenario, "--out", first.string()});
        const int c2 = cli({g.command, "--scenario", scenario, "--out", second.string()});
        const std::string a = slurp(first);
        const std::string b = slurp(second);
        const fs::path golden = root / "golden" / name;
        const bool ok = c1 == 0 && c2 == 0 && !a.empty() && a == b && fs::exists(golden) && a == slurp(golden);
        if (ok) {
            ++matched;
        } else {
            o.require(false, name + " differs");
        }
    }
    fs::remove_all(scratch);
    o.require(matched == goldens.size(),
              std::to_string(matched) + "/" + std::to_string(goldens.size()) + " outputs byte-identical to goldens");
    o.require(suite_seconds < 60.0, "criteria 1-9 in " + fmt("%.2f", suite_seconds) + " s < 60 s");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "rule counts", rule_counts},
        {2, "endpoint contract", endpoint_contract},
        {3, "containment", containment},
        {4, "cover", cover},
        {5, "geodesic optimality", geodesic_optimality},
        {6, "junction continuity", junction_continuity},
        {7, "transfer wiring", transfer_wiring},
        {8, "discontinuity witness", discontinuity},
        {9, "contraction round trip", contraction_round_trip},
    };

    bool all = true;
    const auto suite_start = Clock::now();
    auto report = [&](int id, const std::string& title, const Outcome& o, double secs) {
        all = all && o.pass;
        std::printf("%s AC%d %s [%.2f s]: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
    };
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        report(c.id, c.title, o, seconds_since(start));
    }
    const double suite = seconds_since(suite_start);

    const auto start = Clock::now();
    Outcome goldens;
    try {
        goldens = cli_goldens(suite);
    } catch (const std::exception& e) {
        goldens.require(false, std::string("exception: ") + e.what());
    }
    report(10, "CLI goldens", goldens, seconds_since(start));

    std::printf("%s: %s\n", all ? "ACCEPTED" : "REJECTED", all ? "all criteria pass" : "see FAIL lines above");
    return all ? 0 : 1;
}
