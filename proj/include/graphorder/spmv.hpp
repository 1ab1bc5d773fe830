#ifndef GRAPHORDER_SPMV_HPP
#define GRAPHORDER_SPMV_HPP

#include "graphorder/graph.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace graphorder {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct BenchConfig {
    int dim = 8;
    int threads = 1;
    int iters = 10;
    int reps = 5;             // timing repetitions after one warm-up; median reported
    std::uint64_t seed = 1;
};

struct BenchResult {
    double seconds = 0.0;     // median wall time of the iteration loop
    std::vector<vidx> partition_rows; // rows per thread block
    double checksum = 0.0;    // sum of |entries| of the final scaled iterate
};

/// Y(i,:) = sum over j in row i of X(j,:), row-parallel over contiguous row
/// blocks balanced by nnz. Y must have the same shape as X.
void spmm_block(const Graph& g, const RowMatrix& x, RowMatrix& y, int threads);

/// nnz-balanced contiguous row partition (offsets of length threads+1).
std::vector<vidx> partition_rows_by_nnz(const Graph& g, int threads);

/// Repeated block multiplication x <- A x with per-iteration infinity-norm
/// column scaling (ordering-invariant, keeps the iterate bounded).
/// row_seed[i], when given, seeds row i of the start block; passing the
/// pre-permutation vertex ids makes checksums comparable across orderings.
BenchResult subspace_iterate(const Graph& g, const BenchConfig& cfg,
                             const std::vector<vidx>* row_seed = nullptr);

} // namespace graphorder

#endif
