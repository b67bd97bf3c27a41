#include <tcplan/cli.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <tcplan/fixtures.hpp>

namespace tcplan::cli {

namespace {

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fixed6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

std::string space_label(const SpaceSpec& space) {
    if (const auto* s = std::get_if<SphereSpec>(&space)) {
        return "sphere S^" + std::to_string(s->sphere_dim());
    }
    if (std::holds_alternative<AnnulusSpec>(space)) {
        return "annulus";
    }
    return "star " + std::get<StarDomain>(space).name();
}

void write_output(const std::string& content, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ScenarioError("cannot open output file " + path);
    }
    file << content;
}

}  // namespace

PlannedScenario plan_scenario(const Scenario& scenario) {
    const MotionPlanner planner = build_planner(scenario.space);
    const PlanResult res = planner.plan(scenario.start, scenario.goal);

    PlannedScenario planned;
    planned.planner_name = space_label(scenario.space);
    planned.rule_count = planner.rule_count();
    planned.rule_index = res.rule_index;
    planned.rule_label = planner.rules()[res.rule_index - 1].label;
    planned.points = sample_path(res.path, scenario.samples);
    const double denom = static_cast<double>(scenario.samples - 1);
    for (std::size_t i = 0; i < scenario.samples; ++i) {
        planned.times.push_back(static_cast<double>(i) / denom);
    }
    return planned;
}

std::string format_csv(const PlannedScenario& planned) {
    std::string csv = "t";
    const std::size_t dim = planned.points.empty() ? 0 : planned.points.front().dim();
    for (std::size_t k = 1; k <= dim; ++k) {
        csv += ",x" + std::to_string(k);
    }
    csv += '\n';
    for (std::size_t i = 0; i < planned.points.size(); ++i) {
        csv += g17(planned.times[i]);
        for (double c : planned.points[i].coords()) {
            csv += ',' + g17(c);
        }
        csv += '\n';
    }
    return csv;
}

std::string format_json(const PlannedScenario& planned) {
    nlohmann::json points = nlohmann::json::array();
    for (const Vector& p : planned.points) {
        points.push_back(std::vector<double>(p.coords().begin(), p.coords().end()));
    }
    const nlohmann::json j = {{"planner", planned.planner_name},
                              {"rule_count", planned.rule_count},
                              {"rule_index", planned.rule_index},
                              {"rule_label", planned.rule_label},
                              {"samples", planned.points.size()},
                              {"t", planned.times},
                              {"points", points}};
    return j.dump(2) + "\n";
}

std::vector<VerificationReport> verify_space(const SpaceSpec& space, std::uint64_t seed, std::size_t n,
                                             const HarnessConfig& cfg) {
    const MotionPlanner planner = build_planner(space, cfg.tol);
    const PairBatch batch = draw_pairs(space_pair_sampler(space), n, seed);
    PairBatch head = batch;
    head.pairs.resize(std::min<std::size_t>(n, 1000), batch.pairs.front());

    std::vector<VerificationReport> reports;
    reports.push_back(check_endpoints(planner, batch, cfg));
    reports.push_back(check_membership(planner, head, 1000, cfg));
    reports.push_back(check_cover(planner, batch, cfg));
    reports.push_back(check_junctions(planner, head, cfg));

    if (const auto* sphere = std::get_if<SphereSpec>(&space)) {
        if (sphere->m() == 1) {
            VerificationReport grid = check_cover(planner, angular_grid_pairs(720), cfg);
            grid.check_name = "cover-grid";
            reports.push_back(std::move(grid));
        }
        // Random pairs almost never reach rule 2; probe its junctions on exact antipodes.
        PairBatch antipodal = head;
        for (VectorPair& pair : antipodal.pairs) {
            pair.second = -pair.first;
        }
        VerificationReport junctions2 = check_junctions(planner, antipodal, cfg);
        junctions2.check_name = "junctions-antipodal";
        reports.push_back(std::move(junctions2));

        const PairBatch geo = draw_pairs(geodesic_pair_sampler(*sphere), std::min<std::size_t>(n, 1000), seed);
        reports.push_back(check_geodesic(*sphere, geo, cfg));
        reports.push_back(continuity_probe(sphere_rule1(*sphere, cfg.tol), geo, 1e-4, planner.space().project, cfg));
    }

    if (const auto hint = boundary_hint(space); hint && planner.rule_count() >= 2) {
        try {
            reports.push_back(discontinuity_witness(planner, *hint, cfg));
        } catch (const WitnessNotFound& e) {
            VerificationReport failed;
            failed.check_name = "discontinuity";
            failed.max_violation = std::numeric_limits<double>::infinity();
            failed.witnesses.push_back(Witness{hint->first, hint->second, 0.0, e.what()});
            reports.push_back(std::move(failed));
        }
    }
    return reports;
}

std::vector<VerificationReport> verify_fixture(const std::string& name, std::uint64_t seed, std::size_t n,
                                               const HarnessConfig& cfg) {
    const fixtures::Fixture fx = fixtures::make(name);
    const PairBatch batch = draw_pairs(fx.sampler, n, seed);
    PairBatch head = batch;
    head.pairs.resize(std::min<std::size_t>(n, 1000), batch.pairs.front());
    return {check_endpoints(fx.planner, batch, cfg), check_membership(fx.planner, head, 1000, cfg),
            check_cover(fx.planner, batch, cfg), check_junctions(fx.planner, head, cfg)};
}

std::string render_svg(const Scenario& scenario) {
    if (space_dim(scenario.space) != 2) {
        throw ScenarioError("render needs a planar scenario, got ambient dimension " +
                            std::to_string(space_dim(scenario.space)));
    }
    const PlannedScenario planned = plan_scenario(scenario);

    double extent = 0.0;
    for (const Vector& p : planned.points) {
        extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
    }
    std::string shapes;
    if (const auto* annulus = std::get_if<AnnulusSpec>(&scenario.space)) {
        extent = std::max(extent, annulus->rho());
        shapes += "  <circle class=\"obstacle\" cx=\"0\" cy=\"0\" r=\"" + fixed6(annulus->l_obstacle()) +
                  "\" fill=\"#9e9e9e\"/>\n";
        shapes += "  <circle class=\"clearance\" cx=\"0\" cy=\"0\" r=\"" + fixed6(annulus->clearance_radius()) +
                  "\" fill=\"none\" stroke=\"#c62828\" stroke-dasharray=\"0.05 0.03\"/>\n";
        shapes += "  <circle class=\"deformation\" cx=\"0\" cy=\"0\" r=\"" + fixed6(annulus->rho()) +
                  "\" fill=\"none\" stroke=\"#1565c0\" stroke-dasharray=\"0.02 0.02\"/>\n";
    } else if (std::holds_alternative<SphereSpec>(scenario.space)) {
        extent = std::max(extent, 1.0);
        shapes += "  <circle class=\"space\" cx=\"0\" cy=\"0\" r=\"1.000000\" fill=\"none\" stroke=\"#1565c0\"/>\n";
    } else {
        const StarDomain& star = std::get<StarDomain>(scenario.space);
        // The star domain keeps only a predicate, so the boundary is not drawn;
        // the star point is.
        const Vector& x0 = star.star_point();
        extent = std::max({extent, std::abs(x0[0]), std::abs(x0[1])});
        shapes += "  <circle class=\"star-point\" cx=\"" + fixed6(x0[0]) + "\" cy=\"" + fixed6(x0[1]) +
                  "\" r=\"0.010000\" fill=\"#1565c0\"/>\n";
    }
    const double half = 1.2 * std::max(extent, 1e-6);
    const double marker = 0.02 * half;
    const double stroke = 0.004 * half;

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"" + fixed6(-half) + " " +
           fixed6(-half) + " " + fixed6(2 * half) + " " + fixed6(2 * half) + "\">\n";
    svg += "<!-- " + planned.planner_name + ", rule " + std::to_string(planned.rule_index) + " of " +
           std::to_string(planned.rule_count) + " (" + planned.rule_label + ") -->\n";
    svg += "<g transform=\"scale(1,-1)\" stroke-width=\"" + fixed6(stroke) + "\">\n";
    svg += shapes;
    svg += "  <polyline class=\"path\" fill=\"none\" stroke=\"#212121\" points=\"";
    for (std::size_t i = 0; i < planned.points.size(); ++i) {
        if (i > 0) {
            svg += ' ';
        }
        svg += fixed6(planned.points[i][0]) + "," + fixed6(planned.points[i][1]);
    }
    svg += "\"/>\n";
    svg += "  <circle class=\"start\" cx=\"" + fixed6(scenario.start[0]) + "\" cy=\"" + fixed6(scenario.start[1]) +
           "\" r=\"" + fixed6(marker) + "\" fill=\"#2e7d32\"/>\n";
    svg += "  <rect class=\"goal\" x=\"" + fixed6(scenario.goal[0] - marker) + "\" y=\"" +
           fixed6(scenario.goal[1] - marker) + "\" width=\"" + fixed6(2 * marker) + "\" height=\"" +
           fixed6(2 * marker) + "\" fill=\"#ad1457\"/>\n";
    svg += "</g>\n</svg>\n";
    return svg;
}

// ---------------------------------------------------------------------------

namespace {

int cmd_plan(const std::string& scenario_path, const std::string& out_path, const std::string& format,
             std::ostream& out, std::ostream& err) {
    Scenario scenario = load_scenario(scenario_path);
    PlannedScenario planned;
    try {
        planned = plan_scenario(scenario);
    } catch (const NoApplicableRule& e) {
        err << "error: " << e.what() << '\n';
        return kNoApplicableRule;
    }
    write_output(format == "json" ? format_json(planned) : format_csv(planned), out_path, out);
    std::ostream& meta = out_path.empty() ? err : out;
    meta << "planner=" << planned.planner_name << " rule_index=" << planned.rule_index
         << " rule_count=" << planned.rule_count << " rule=" << planned.rule_label
         << " samples=" << planned.points.size() << '\n';
    return kOk;
}

int cmd_verify(const std::string& scenario_path, const std::string& space_json, const std::string& fixture,
               std::uint64_t seed, std::size_t n, const std::string& report_path, std::ostream& out) {
    if (n == 0) {
        throw ScenarioError("--n must be at least 1");
    }
    std::vector<VerificationReport> reports;
    if (!fixture.empty()) {
        reports = verify_fixture(fixture, seed, n);
    } else if (!scenario_path.empty()) {
        reports = verify_space(load_scenario(scenario_path).space, seed, n);
    } else if (!space_json.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(space_json);
        } catch (const nlohmann::json::parse_error& e) {
            throw ScenarioError(std::string("--space is not valid JSON: ") + e.what());
        }
        reports = verify_space(parse_space(j), seed, n);
    } else {
        throw ScenarioError("verify needs one of --scenario, --space or --fixture");
    }

    bool all = true;
    for (const VerificationReport& r : reports) {
        out << r.to_text() << '\n';
        all = all && r.passed();
    }
    if (!report_path.empty()) {
        nlohmann::json j = reports_to_json(reports);
        j["seed"] = seed;
        write_output(j.dump(2) + "\n", report_path, out);
    }
    return all ? kOk : kCheckFailed;
}

int cmd_render(const std::string& scenario_path, const std::string& out_path, std::ostream& out) {
    const Scenario scenario = load_scenario(scenario_path);
    write_output(render_svg(scenario), out_path, out);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Motion planners with a minimal number of continuous rules"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 42;
    std::size_t n = 1000;
    std::string report_path;
    std::string fixture;
    std::string space_json;

    CLI::App* plan = app.add_subcommand("plan", "Plan a path for a scenario and write sampled points");
    plan->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    plan->add_option("--out", out_path, "Output file (default: stdout)");
    plan->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "Run the verification checks");
    verify->add_option("--scenario", scenario_path, "Scenario JSON file (its space is verified)");
    verify->add_option("--space", space_json, "Inline space JSON, e.g. {\"type\":\"sphere\",\"m\":1}");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--n", n, "Number of sampled pairs");
    verify->add_option("--report", report_path, "Write a JSON report to this file");
    verify->add_option("--fixture", fixture, "Verify a deliberately broken planner instead")
        ->check(CLI::IsMember(fixtures::names()));

    CLI::App* render = app.add_subcommand("render", "Render a planar scenario to SVG");
    render->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    render->add_option("--out", out_path, "SVG output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (plan->parsed()) {
            return cmd_plan(scenario_path, out_path, format, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(scenario_path, space_json, fixture, seed, n, report_path, out);
        }
        return cmd_render(scenario_path, out_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace tcplan::cli
