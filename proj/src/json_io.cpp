#include "cat0/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cat0/error.hpp"

namespace cat0 {

json space_to_json(const Space& space) {
    switch (space.kind()) {
        case SpaceKind::euclidean:
            return {{"kind", "euclidean"}, {"dim", space.dim()}};
        case SpaceKind::biquadrant:
            return {{"kind", "biquadrant"}};
        case SpaceKind::product:
            return {{"kind", "product"},
                    {"left", space_to_json(space.left())},
                    {"right", space_to_json(space.right())}};
    }
    throw InputError("space_to_json: unknown kind");
}

Space space_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "euclidean") return Space::euclidean(j.at("dim").get<int>());
    if (kind == "biquadrant") return Space::biquadrant();
    if (kind == "product")
        return Space::product(space_from_json(j.at("left")), space_from_json(j.at("right")));
    throw InputError("space_from_json: unknown kind '" + kind + "'");
}

json point_to_json(const Point& p) {
    switch (p.kind()) {
        case SpaceKind::euclidean:
            return json(p.coords());
        case SpaceKind::biquadrant:
            return {{"quadrant", p.quadrant() == Quadrant::plus ? "plus" : "minus"},
                    {"xy", {p.xy()[0], p.xy()[1]}}};
        case SpaceKind::product:
            return {{"left", point_to_json(p.left())}, {"right", point_to_json(p.right())}};
    }
    throw InputError("point_to_json: unknown kind");
}

Point point_from_json(const Space& space, const json& j) {
    switch (space.kind()) {
        case SpaceKind::euclidean: {
            if (!j.is_array()) throw InputError("point_from_json: euclidean point must be an array");
            return Point::euclidean(j.get<std::vector<double>>());
        }
        case SpaceKind::biquadrant: {
            const std::string q = j.at("quadrant").get<std::string>();
            const auto xy = j.at("xy").get<std::vector<double>>();
            if (xy.size() != 2) throw InputError("point_from_json: xy must have two entries");
            if (q != "plus" && q != "minus")
                throw InputError("point_from_json: quadrant must be plus or minus");
            return Point::biquadrant(q == "plus" ? Quadrant::plus : Quadrant::minus, xy[0], xy[1]);
        }
        case SpaceKind::product:
            return Point::product(point_from_json(space.left(), j.at("left")),
                                  point_from_json(space.right(), j.at("right")));
    }
    throw InputError("point_from_json: unknown kind");
}

json cloud_to_json(const PointCloud& cloud) {
    json pts = json::array();
    for (std::size_t i = 0; i < cloud.size(); ++i) pts.push_back(point_to_json(cloud[i]));
    return {{"space", space_to_json(cloud.space())},
            {"points", std::move(pts)},
            {"dedup_eps", cloud.dedup_eps()}};
}

PointCloud cloud_from_json(const json& j, double default_dedup_eps) {
    const Space space = space_from_json(j.at("space"));
    const double dedup = j.value("dedup_eps", default_dedup_eps);
    PointCloud cloud(space, dedup);
    for (const json& p : j.at("points")) cloud.insert(point_from_json(space, p));
    return cloud;
}

json problem_to_json(const FrechetProblem& problem) {
    json pts = json::array();
    for (const Point& p : problem.points) pts.push_back(point_to_json(p));
    return {{"space", space_to_json(problem.space)},
            {"points", std::move(pts)},
            {"weights", problem.weights},
            {"p", problem.p}};
}

FrechetProblem problem_from_json(const json& j) {
    const Space space = space_from_json(j.at("space"));
    std::vector<Point> pts;
    for (const json& p : j.at("points")) pts.push_back(point_from_json(space, p));
    std::vector<double> weights;
    if (j.contains("weights")) {
        weights = j.at("weights").get<std::vector<double>>();
    } else {
        weights.assign(pts.size(), 1.0);
    }
    return FrechetProblem::make(space, std::move(pts), std::move(weights), j.value("p", 2));
}

namespace {

json params_to_json(const ThreadParams& p) {
    return {{"grid_k", p.grid_k},
            {"cap", p.cap},
            {"dedup_eps", p.dedup_eps},
            {"seed", p.seed},
            {"candidate_budget", p.candidate_budget},
            {"threads", p.threads}};
}

json report_to_json_impl(const ThreadingReport& report, bool with_timing) {
    json iters = json::array();
    for (const IterationRecord& r : report.iterations) {
        iters.push_back({{"n", r.n},
                         {"size", r.size},
                         {"gap", r.gap},
                         {"resolution", r.resolution},
                         {"millis", with_timing ? r.millis : 0.0},
                         {"cap_hit", r.cap_hit},
                         {"candidates", r.candidates}});
    }
    json j = {{"params", params_to_json(report.params)},
              {"iterations", std::move(iters)},
              {"stabilized", report.stabilized},
              {"cap_influenced", report.cap_influenced},
              {"gaps_monotone_after_first", report.gaps_monotone_after_first},
              {"final_gap", report.final_gap},
              {"final_resolution", report.final_resolution}};
    if (report.eps > 0.0) j["eps"] = report.eps;
    return j;
}

}  // namespace

json report_to_json(const ThreadingReport& report) { return report_to_json_impl(report, true); }

json report_to_canonical_json(const ThreadingReport& report) {
    return report_to_json_impl(report, false);
}

std::string report_to_csv(const ThreadingReport& report) {
    std::ostringstream out;
    out << "n,size,gap,millis\n";
    for (const IterationRecord& r : report.iterations)
        out << r.n << "," << r.size << "," << r.gap << "," << r.millis << "\n";
    return out.str();
}

json degree_to_json(const DegreeEstimate& estimate) {
    json j = {{"stabilized", estimate.degree.has_value()},
              {"gap", estimate.gap},
              {"eps", estimate.eps},
              {"resolution", estimate.resolution},
              {"threshold", estimate.threshold},
              {"n_max", estimate.n_max},
              {"cap_influenced", estimate.cap_influenced},
              {"report", report_to_json(estimate.report)}};
    if (estimate.degree) j["degree"] = *estimate.degree;
    else j["degree"] = nullptr;
    return j;
}

json solver_result_to_json(const SolverResult& result) {
    json j = {{"method", result.method},
              {"minimizer", point_to_json(result.minimizer)},
              {"objective", result.objective},
              {"iterations", result.iterations},
              {"near_tie", result.near_tie},
              {"degraded_accuracy", result.degraded_accuracy}};
    if (result.certificate_distance) {
        j["certificate"] = {{"distance", *result.certificate_distance},
                            {"threshold", *result.certificate_threshold},
                            {"pass", result.certificate_pass}};
    }
    return j;
}

json space_check_to_json(const SpaceCheckReport& report) {
    return {{"trials", report.trials},
            {"seed", report.seed},
            {"box_radius", report.box_radius},
            {"min_distance", report.min_distance},
            {"max_symmetry_gap", report.max_symmetry_gap},
            {"max_triangle_violation", report.max_triangle_violation},
            {"max_geodesic_gap", report.max_geodesic_gap},
            {"max_interp_symmetry_gap", report.max_interp_symmetry_gap},
            {"min_defect", report.min_defect},
            {"max_abs_defect", report.max_abs_defect}};
}

json flatness_to_json(const FlatnessVerdict& verdict) {
    json j = {{"flat", verdict.flat},
              {"max_abs_defect", verdict.max_abs_defect},
              {"min_defect", verdict.min_defect}};
    if (verdict.witness) {
        j["witness"] = {{"x", point_to_json(verdict.witness->x)},
                        {"y", point_to_json(verdict.witness->y)},
                        {"z", point_to_json(verdict.witness->z)},
                        {"t", verdict.witness->t},
                        {"defect", verdict.witness->defect}};
    }
    return j;
}

json hull_convergence_to_json(const HullConvergenceReport& report) {
    json steps = json::array();
    for (const auto& s : report.steps) steps.push_back({{"n", s.n}, {"gap", s.gap}});
    return {{"steps", std::move(steps)},
            {"sampling_resolution", report.sampling_resolution},
            {"final_gap", report.final_gap},
            {"reached_tolerance", report.reached_tolerance},
            {"gaps_monotone_after_first", report.gaps_monotone_after_first}};
}

std::string hull_convergence_to_csv(const HullConvergenceReport& report) {
    std::ostringstream out;
    out << "n,gap\n";
    for (const auto& s : report.steps) out << s.n << "," << s.gap << "\n";
    return out.str();
}

json algebra_verdict_to_json(const AlgebraVerdict& verdict) {
    json j = {{"pass", verdict.pass}, {"nested", verdict.nested}, {"checks", verdict.checks}};
    if (verdict.witness) {
        j["witness"] = {{"clause", verdict.witness->clause},
                        {"point", point_to_json(verdict.witness->point)}};
    }
    return j;
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

PointCloud load_cloud(const std::string& path, double default_dedup_eps) {
    try {
        return cloud_from_json(load_json_file(path), default_dedup_eps);
    } catch (const json::exception& e) {
        throw InputError("bad cloud file " + path + ": " + e.what());
    }
}

FrechetProblem load_problem(const std::string& path) {
    try {
        return problem_from_json(load_json_file(path));
    } catch (const json::exception& e) {
        throw InputError("bad problem file " + path + ": " + e.what());
    }
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
}

}  // namespace cat0
