// Command-line front end: load point-set/problem JSON, run the library
// operations, emit report JSON on stdout (progress on stderr).

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cat0/config.hpp"
#include "cat0/convergence.hpp"
#include "cat0/error.hpp"
#include "cat0/frechet.hpp"
#include "cat0/geometry.hpp"
#include "cat0/json_io.hpp"
#include "cat0/threading.hpp"

namespace {

using namespace cat0;

struct CommonOpts {
    ThreadParams thread;
    double eps = Defaults::eps;
    int n_max = Defaults::n_max;
};

void add_thread_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--grid", opts.thread.grid_k, "grid points per segment (>= 2)")
        ->envname("CAT0_GRID")
        ->capture_default_str();
    cmd->add_option("--cap", opts.thread.cap, "max cloud size per iterate")
        ->envname("CAT0_CAP")
        ->capture_default_str();
    cmd->add_option("--dedup", opts.thread.dedup_eps, "dedup merge radius")
        ->envname("CAT0_DEDUP")
        ->capture_default_str();
    cmd->add_option("--seed", opts.thread.seed, "PRNG seed")
        ->envname("CAT0_SEED")
        ->capture_default_str();
    cmd->add_option("--budget", opts.thread.candidate_budget,
                    "max interpolants generated per iteration")
        ->envname("CAT0_BUDGET")
        ->capture_default_str();
    cmd->add_option("--threads", opts.thread.threads, "worker thread cap")
        ->envname("CAT0_THREADS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_eps_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--eps", opts.eps, "stabilization tolerance")
        ->envname("CAT0_EPS")
        ->capture_default_str();
    cmd->add_option("--nmax", opts.n_max, "max threading iterations")
        ->envname("CAT0_NMAX")
        ->capture_default_str();
}

HullParams hull_params(const CommonOpts& opts) {
    return HullParams{opts.thread, opts.eps, opts.n_max};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"Geodesic toolkit for CAT(0) model spaces: threading, convex-hull clouds, "
                 "threading degrees, Frechet means"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "metric/geodesic/comparison invariants of a space");
    std::string check_space_spec;
    int check_trials = 10000;
    double check_tol = 1e-9;
    double check_box = Defaults::box_radius;
    std::uint64_t check_seed = Defaults::seed;
    check->add_option("--space", check_space_spec,
                      "euclidean:<d> | biquadrant | product(<spec>,<spec>)")
        ->required();
    check->add_option("--trials", check_trials, "random trials")->capture_default_str();
    check->add_option("--tol", check_tol, "violation tolerance")->capture_default_str();
    check->add_option("--box", check_box, "sampling box radius")->capture_default_str();
    check->add_option("--seed", check_seed, "PRNG seed")->envname("CAT0_SEED")->capture_default_str();

    // thread
    auto* thread = app.add_subcommand("thread", "iterated threading of a point cloud");
    CommonOpts thread_opts;
    std::string thread_input, thread_out, thread_csv;
    int thread_iters = 1;
    thread->add_option("--input", thread_input, "cloud JSON file")->required();
    thread->add_option("--iters", thread_iters, "number of threading iterations")
        ->capture_default_str();
    thread->add_option("--out", thread_out, "write resulting cloud JSON here");
    thread->add_option("--csv", thread_csv, "write report CSV here");
    add_thread_options(thread, thread_opts);

    // degree
    auto* degree = app.add_subcommand("degree", "threading-degree estimate of a point cloud");
    CommonOpts degree_opts;
    std::string degree_input;
    degree->add_option("--input", degree_input, "cloud JSON file")->required();
    add_thread_options(degree, degree_opts);
    add_eps_options(degree, degree_opts);

    // hull
    auto* hull = app.add_subcommand("hull", "convex-hull cloud approximation");
    CommonOpts hull_opts;
    std::string hull_input, hull_out, hull_csv;
    hull->add_option("--input", hull_input, "cloud JSON file")->required();
    hull->add_option("--out", hull_out, "write hull cloud JSON here");
    hull->add_option("--csv", hull_csv, "write report CSV here");
    add_thread_options(hull, hull_opts);
    add_eps_options(hull, hull_opts);

    // mean / median
    auto* mean = app.add_subcommand("mean", "Frechet mean solvers (p = 2)");
    auto* median = app.add_subcommand("median", "weighted median solver (p = 1)");
    CommonOpts mean_opts, median_opts;
    std::string mean_input, median_input;
    std::string mean_method = "search";
    std::string mean_order = "random";
    int mean_iters = 100000;
    int mean_refine = Defaults::refine_steps;
    int median_refine = Defaults::refine_steps;
    bool mean_no_cert = false, median_no_cert = false;
    mean->add_option("--input", mean_input, "problem JSON file")->required();
    mean->add_option("--method", mean_method, "closed | inductive | search")
        ->check(CLI::IsMember({"closed", "inductive", "search"}))
        ->capture_default_str();
    mean->add_option("--order", mean_order, "inductive anchor order: cycle | random")
        ->check(CLI::IsMember({"cycle", "random"}))
        ->capture_default_str();
    mean->add_option("--iters", mean_iters, "inductive iteration count")->capture_default_str();
    mean->add_option("--refine", mean_refine, "refinement rounds for search")
        ->capture_default_str();
    mean->add_flag("--no-certificate", mean_no_cert, "skip the hull-membership certificate");
    add_thread_options(mean, mean_opts);
    add_eps_options(mean, mean_opts);
    median->add_option("--input", median_input, "problem JSON file")->required();
    median->add_option("--refine", median_refine, "refinement rounds")->capture_default_str();
    median->add_flag("--no-certificate", median_no_cert, "skip the hull-membership certificate");
    add_thread_options(median, median_opts);
    add_eps_options(median, median_opts);

    // converge
    auto* converge = app.add_subcommand("converge", "increasing-hull convergence experiment");
    CommonOpts converge_opts;
    std::string converge_target, converge_csv;
    int converge_steps = 10;
    converge->add_option("--target", converge_target, "target cloud JSON file")->required();
    converge->add_option("--steps", converge_steps, "number of prefix sizes")
        ->capture_default_str();
    converge->add_option("--csv", converge_csv, "write gap CSV here");
    add_thread_options(converge, converge_opts);
    add_eps_options(converge, converge_opts);

    // algebra
    auto* algebra = app.add_subcommand("algebra", "threading intersection/union inclusion checks");
    CommonOpts algebra_opts;
    std::string algebra_s1, algebra_s2;
    std::size_t algebra_samples = 512;
    double algebra_tol = Defaults::point_eq_tol;
    algebra->add_option("--s1", algebra_s1, "first cloud JSON file")->required();
    algebra->add_option("--s2", algebra_s2, "second cloud JSON file")->required();
    algebra->add_option("--samples", algebra_samples, "membership samples per clause")
        ->capture_default_str();
    algebra->add_option("--tol", algebra_tol, "membership tolerance")->capture_default_str();
    add_thread_options(algebra, algebra_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (check->parsed()) {
        const Space space = Space::parse(check_space_spec);
        std::cerr << "checking " << space.str() << " with " << check_trials << " trials\n";
        const SpaceCheckReport report = check_space(space, check_trials, check_seed, check_box);
        const FlatnessVerdict flat = is_flat_sample(space, check_trials, check_seed + 1,
                                                    check_tol, check_box);
        json j = space_check_to_json(report);
        j["metric_ok"] = report.metric_ok(check_tol);
        j["cat0_ok"] = report.cat0_ok(check_tol);
        j["flatness"] = flatness_to_json(flat);
        emit(j);
        return (report.metric_ok(check_tol) && report.cat0_ok(check_tol)) ? 0 : 1;
    }

    if (thread->parsed()) {
        const PointCloud cloud = load_cloud(thread_input, thread_opts.thread.dedup_eps);
        auto [result, report] = iterate_threading(cloud, thread_iters, thread_opts.thread);
        if (!thread_out.empty()) save_json(thread_out, cloud_to_json(result));
        if (!thread_csv.empty()) save_text(thread_csv, report_to_csv(report));
        json j = report_to_json(report);
        j["final_size"] = result.size();
        emit(j);
        return 0;
    }

    if (degree->parsed()) {
        const PointCloud cloud = load_cloud(degree_input, degree_opts.thread.dedup_eps);
        emit(degree_to_json(estimate_degree(cloud, hull_params(degree_opts))));
        return 0;
    }

    if (hull->parsed()) {
        const PointCloud cloud = load_cloud(hull_input, hull_opts.thread.dedup_eps);
        auto [result, report] = convex_hull_cloud(cloud, hull_params(hull_opts));
        if (!hull_out.empty()) save_json(hull_out, cloud_to_json(result));
        if (!hull_csv.empty()) save_text(hull_csv, report_to_csv(report));
        json j = report_to_json(report);
        j["final_size"] = result.size();
        emit(j);
        return 0;
    }

    auto with_certificate = [](json result_json, const FrechetProblem& problem,
                               const Point& minimizer, const CommonOpts& opts) {
        const HullCertificate cert = certify_in_hull(problem, minimizer, opts.eps,
                                                     HullParams{opts.thread, opts.eps, opts.n_max});
        result_json["certificate"] = {{"distance", cert.distance},
                                      {"threshold", cert.threshold},
                                      {"pass", cert.pass}};
        return result_json;
    };

    if (mean->parsed()) {
        const FrechetProblem problem = load_problem(mean_input);
        if (mean_method == "closed") {
            const Point m = euclidean_mean(problem);
            json j = {{"method", "closed"},
                      {"minimizer", point_to_json(m)},
                      {"objective", frechet_objective(problem, m)}};
            emit(mean_no_cert ? j : with_certificate(j, problem, m, mean_opts));
            return 0;
        }
        if (mean_method == "inductive") {
            const SolverResult r = inductive_mean(
                problem, mean_iters, mean_opts.thread.seed,
                mean_order == "cycle" ? AnchorOrder::cycle : AnchorOrder::random);
            json j = solver_result_to_json(r);
            emit(mean_no_cert ? j : with_certificate(j, problem, r.minimizer, mean_opts));
            return 0;
        }
        const SolverResult r = threading_search_mean(
            problem, SearchParams{hull_params(mean_opts), mean_refine});
        emit(solver_result_to_json(r));
        return 0;
    }

    if (median->parsed()) {
        FrechetProblem problem = load_problem(median_input);
        problem = FrechetProblem::make(problem.space, problem.points, problem.weights, 1);
        const SolverResult r = threading_search_mean(
            problem, SearchParams{hull_params(median_opts), median_refine});
        emit(solver_result_to_json(r));
        return 0;
    }

    if (converge->parsed()) {
        const PointCloud target = load_cloud(converge_target, converge_opts.thread.dedup_eps);
        const HullConvergenceReport report =
            increasing_hull_convergence(target, converge_steps, hull_params(converge_opts));
        if (!converge_csv.empty()) save_text(converge_csv, hull_convergence_to_csv(report));
        emit(hull_convergence_to_json(report));
        return report.reached_tolerance ? 0 : 1;
    }

    if (algebra->parsed()) {
        const PointCloud s1 = load_cloud(algebra_s1, algebra_opts.thread.dedup_eps);
        const PointCloud s2 = load_cloud(algebra_s2, algebra_opts.thread.dedup_eps);
        const AlgebraVerdict verdict = thread_algebra_check(
            s1, s2, algebra_samples, algebra_opts.thread.seed, algebra_tol, algebra_opts.thread);
        emit(algebra_verdict_to_json(verdict));
        return verdict.pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cat0::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const cat0::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
