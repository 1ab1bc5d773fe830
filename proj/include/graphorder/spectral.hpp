#ifndef GRAPHORDER_SPECTRAL_HPP
#define GRAPHORDER_SPECTRAL_HPP

#include "graphorder/graph.hpp"

#include <Eigen/Core>

#include <cstdint>

namespace graphorder {

struct SolverConfig {
    double tol = 1e-6;        // residual tolerance on the unit Ritz vector
    int max_iters = 5000;     // budget in matrix applications
    std::uint64_t seed = 1;   // start-vector seed
};

/// Approximate eigenpair of the second-smallest eigenvalue of the
/// normalized Laplacian L = I - D^{-1/2} A D^{-1/2}.
struct FiedlerResult {
    Eigen::VectorXd vector;          // unit 2-norm, orthogonal to d^{1/2}
    double eigenvalue_estimate = 0.0;
    double residual_norm = 0.0;
    int iterations_used = 0;         // matrix applications consumed
    bool converged = false;
    bool degenerate = false;         // converged into a multiple eigenvalue
};

struct FiedlerCut {
    std::vector<vidx> side_a;  // the floor(n/2) lowest Fiedler entries
    std::vector<vidx> side_b;
    bool degenerate = false;
    bool converged = false;
};

/// Locally optimal block preconditioned CG (block size 1) on L with the
/// known null vector d^{1/2} deflated explicitly; matrix-free.
/// Requires a connected symmetric graph with n >= 2 and no zero-degree
/// vertex (DataError otherwise). A result is returned even when the
/// tolerance is not met within the budget (converged=false).
FiedlerResult fiedler_vector(const Graph& g, const SolverConfig& cfg = {});

/// Vertices sorted by Fiedler entry ascending, ties by vertex id; the
/// global sign is fixed so that the first vertex with a nonzero entry is
/// negative. The result for the K5-like degenerate case is still a valid
/// permutation; callers consult `result` to decide on fallbacks.
Permutation fiedler_order(const Graph& g, const SolverConfig& cfg = {},
                          FiedlerResult* result = nullptr);

/// Median split: side A holds the floor(n/2) lowest entries (ties by id).
FiedlerCut fiedler_cut(const Graph& g, const SolverConfig& cfg = {});

} // namespace graphorder

#endif
