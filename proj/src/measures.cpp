#include "graphorder/measures.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace graphorder {

namespace {

// Compensated accumulator; the 250K-scale reports are quoted to two
// decimals and must not drift with summation order.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

double mlog_a(const Graph& g, const Permutation& pi) {
    if (pi.n() != g.n()) throw DataError("mlog_a: permutation size mismatch");
    eidx m = g.nnz();
    if (m == 0) return 0.0;
    const auto& fwd = pi.forward();
    KahanSum acc;
    for (vidx v = 0; v < g.n(); ++v) {
        double pv = double(fwd[size_t(v)]);
        for (vidx u : g.neighbors(v)) {
            if (u == v) continue;
            acc.add(std::log2(1.0 + std::abs(double(fwd[size_t(u)]) - pv)));
        }
    }
    return acc.sum / double(m);
}

double mlog_gap_a(const Graph& g, const Permutation& pi) {
    if (pi.n() != g.n()) throw DataError("mlog_gap_a: permutation size mismatch");
    eidx m = g.nnz();
    if (m == 0) return 0.0;
    const auto& fwd = pi.forward();
    KahanSum acc;
    std::vector<vidx> pos;
    for (vidx v = 0; v < g.n(); ++v) {
        auto row = g.neighbors(v);
        if (row.empty()) continue;
        pos.clear();
        for (vidx u : row) pos.push_back(fwd[size_t(u)]);
        std::sort(pos.begin(), pos.end());
        acc.add(1.0); // first neighbor costs one bit; the host plays no role
        for (size_t i = 1; i < pos.size(); ++i)
            acc.add(std::log2(1.0 + double(pos[i] - pos[i - 1])));
    }
    return acc.sum / double(m);
}

double delta(const Graph& g, const Permutation& pi) {
    return mlog_a(g, pi) - mlog_gap_a(g, pi);
}

ReferenceBounds reference_bounds(vidx n, double d_avg) {
    if (d_avg < 1.0 || double(n) <= d_avg)
        throw DataError("reference_bounds: need n > d_avg >= 1");
    vidx b = vidx(std::ceil(d_avg / 2.0));
    ReferenceBounds rb;
    rb.lower = 1.0;
    rb.conv1_ref = 1.0 + (std::log2(3.0) - 1.0) / d_avg;
    rb.wheel_ref = 1.0 + std::log2(double(n) - d_avg) / d_avg;
    rb.upper_gap = 1.0 + std::log2(1.0 + double(n) - double(b));
    // mLogA of the complete K(b, n-b) with the centers contiguous at the end:
    // center i sits at position n-b+i, peripherals at 0..n-b-1, so the
    // distances run over i+1 .. n-b+i.
    KahanSum acc;
    for (vidx i = 0; i < b; ++i)
        for (eidx t = i + 1; t <= eidx(n - b) + i; ++t)
            acc.add(std::log2(1.0 + double(t)));
    rb.warning_threshold = acc.sum / (double(b) * double(n - b));
    return rb;
}

AalReport evaluate(const Graph& g, const Permutation& pi) {
    AalReport r;
    r.n = g.n();
    r.m = g.nnz();
    r.d_avg = g.average_degree();
    r.mlog_a = mlog_a(g, pi);
    r.mlog_gap_a = mlog_gap_a(g, pi);
    r.delta = r.mlog_a - r.mlog_gap_a;
    r.empty = r.m == 0;
    if (!r.empty && r.d_avg >= 1.0 && double(r.n) > r.d_avg) {
        r.bounds = reference_bounds(r.n, r.d_avg);
        r.warning = r.mlog_a > r.bounds.warning_threshold;
    }
    return r;
}

} // namespace graphorder
