#include "graphorder/spmv.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

namespace graphorder {

std::vector<vidx> partition_rows_by_nnz(const Graph& g, int threads) {
    if (threads < 1) throw DataError("partition_rows_by_nnz: threads must be >= 1");
    vidx n = g.n();
    const auto& off = g.row_offsets();
    eidx total = g.nnz() + n; // weight rows a little so empty rows spread too
    std::vector<vidx> bounds(size_t(threads) + 1, n);
    bounds[0] = 0;
    vidx r = 0;
    for (int t = 1; t < threads; ++t) {
        eidx target = total * t / threads;
        while (r < n && off[size_t(r)] + r < target) ++r;
        bounds[size_t(t)] = r;
    }
    return bounds;
}

void spmm_block(const Graph& g, const RowMatrix& x, RowMatrix& y, int threads) {
    if (x.rows() != g.n()) throw DataError("spmm_block: dimension mismatch");
    if (y.rows() != x.rows() || y.cols() != x.cols())
        throw DataError("spmm_block: output shape mismatch");
    auto bounds = partition_rows_by_nnz(g, threads);
    auto work = [&](vidx lo, vidx hi) {
        for (vidx i = lo; i < hi; ++i) {
            auto row = y.row(i);
            row.setZero();
            for (vidx j : g.neighbors(i)) row += x.row(j);
        }
    };
    if (threads == 1) {
        work(0, g.n());
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(size_t(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(work, bounds[size_t(t)], bounds[size_t(t) + 1]);
    for (auto& th : pool) th.join();
}

BenchResult subspace_iterate(const Graph& g, const BenchConfig& cfg,
                             const std::vector<vidx>* row_seed) {
    if (cfg.dim < 1 || cfg.threads < 1 || cfg.iters < 1 || cfg.reps < 1)
        throw DataError("subspace_iterate: bad configuration");
    const vidx n = g.n();
    RowMatrix x0(n, cfg.dim);
    for (vidx i = 0; i < n; ++i) {
        std::uint64_t id = row_seed ? std::uint64_t((*row_seed)[size_t(i)]) : std::uint64_t(i);
        std::mt19937_64 rng(cfg.seed ^ (id * 0x9e3779b97f4a7c15ull + 1));
        for (int c = 0; c < cfg.dim; ++c)
            x0(i, c) = double(rng() >> 11) * 0x1.0p-52 - 1.0;
    }

    BenchResult res;
    auto bounds = partition_rows_by_nnz(g, cfg.threads);
    for (int t = 0; t < cfg.threads; ++t)
        res.partition_rows.push_back(bounds[size_t(t) + 1] - bounds[size_t(t)]);

    RowMatrix x, y(n, cfg.dim);
    std::vector<double> times;
    for (int rep = 0; rep <= cfg.reps; ++rep) { // rep 0 is the warm-up
        x = x0;
        auto t0 = std::chrono::steady_clock::now();
        for (int it = 0; it < cfg.iters; ++it) {
            spmm_block(g, x, y, cfg.threads);
            x.swap(y);
            // Column scaling by 1/max|col|; identical across orderings, so
            // its cost stays inside the timed region without bias.
            for (int c = 0; c < cfg.dim; ++c) {
                double m = x.col(c).cwiseAbs().maxCoeff();
                if (m > 0) x.col(c) /= m;
            }
        }
        auto t1 = std::chrono::steady_clock::now();
        if (rep > 0) times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    res.seconds = times[times.size() / 2];
    res.checksum = x.cwiseAbs().sum();
    return res;
}

} // namespace graphorder
