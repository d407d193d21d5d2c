#pragma once

#include <string>

#include <json.hpp>

#include "cat0/cloud.hpp"
#include "cat0/convergence.hpp"
#include "cat0/frechet.hpp"
#include "cat0/geometry.hpp"
#include "cat0/threading.hpp"

namespace cat0 {

using json = nlohmann::json;

json space_to_json(const Space& space);
Space space_from_json(const json& j);

json point_to_json(const Point& p);
Point point_from_json(const Space& space, const json& j);

/// {"space": {...}, "points": [...]}; optional "dedup_eps".
json cloud_to_json(const PointCloud& cloud);
PointCloud cloud_from_json(const json& j, double default_dedup_eps);

/// {"space": {...}, "points": [...], "weights": [...], "p": 1|2}
json problem_to_json(const FrechetProblem& problem);
FrechetProblem problem_from_json(const json& j);

json report_to_json(const ThreadingReport& report);
/// Same report with timing fields zeroed; byte-identical across runs.
json report_to_canonical_json(const ThreadingReport& report);
/// CSV table "n,size,gap,millis\n..." mirroring the report iterations.
std::string report_to_csv(const ThreadingReport& report);

json degree_to_json(const DegreeEstimate& estimate);
json solver_result_to_json(const SolverResult& result);
json space_check_to_json(const SpaceCheckReport& report);
json flatness_to_json(const FlatnessVerdict& verdict);
json hull_convergence_to_json(const HullConvergenceReport& report);
std::string hull_convergence_to_csv(const HullConvergenceReport& report);
json algebra_verdict_to_json(const AlgebraVerdict& verdict);

PointCloud load_cloud(const std::string& path, double default_dedup_eps);
FrechetProblem load_problem(const std::string& path);
void save_json(const std::string& path, const json& j);
void save_text(const std::string& path, const std::string& text);

}  // namespace cat0
