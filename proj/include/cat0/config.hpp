#pragma once

#include <cstddef>
#include <cstdint>

namespace cat0 {

/// One home for every tunable default; the CLI exposes each as a flag with a
/// CAT0_-prefixed environment fallback.
struct Defaults {
    static constexpr int grid_k = 33;
    static constexpr std::size_t cap = 20000;
    static constexpr double eps = 1e-2;
    static constexpr double dedup_eps = 1e-6;
    static constexpr double point_eq_tol = 1e-9;
    static constexpr double box_radius = 10.0;
    static constexpr std::size_t candidate_budget = 1'500'000;
    static constexpr int n_max = 8;
    static constexpr int threads = 1;
    static constexpr std::uint64_t seed = 0;
    static constexpr int refine_steps = 3;
};

}  // namespace cat0
