#ifndef GRAPHORDER_MEASURES_HPP
#define GRAPHORDER_MEASURES_HPP

#include "graphorder/graph.hpp"

namespace graphorder {

/// Reference score lines for a graph of n vertices and average degree d_avg,
/// derived from the band graph and the biclique K(b, n-b), b = ceil(d_avg/2).
/// The band/biclique formulas carry an empirical factor close to 1 that this
/// toolkit fixes at exactly 1; warning_threshold is computed by exact
/// summation over the ideal biclique at a centers-last ordering, not by a
/// closed formula.
struct ReferenceBounds {
    double lower = 1.0;            // global floor of the gap score
    double conv1_ref = 0.0;        // 1 + (log2(3)-1)/d_avg
    double wheel_ref = 0.0;        // 1 + log2(n-d_avg)/d_avg
    double upper_gap = 0.0;        // 1 + log2(1+n-b)
    double warning_threshold = 0.0; // mLogA of K(b,n-b) with centers contiguous at the end
};

/// The locality descriptor for one (graph, permutation) pair.
struct AalReport {
    double mlog_a = 0.0;       // average neighbor distance, bits per link
    double mlog_gap_a = 0.0;   // average sorted-neighbor gap, bits per link
    double delta = 0.0;        // mlog_a - mlog_gap_a
    vidx n = 0;
    eidx m = 0;                // nnz used as divisor
    double d_avg = 0.0;
    ReferenceBounds bounds;
    bool warning = false;      // mlog_a exceeds the biclique reference line
    bool empty = false;        // m == 0; scores defined as zero
};

/// (1/m) * sum over stored entries (u,v), u != v, of log2(1 + |pi(u)-pi(v)|).
/// Returns 0 for an empty graph.
double mlog_a(const Graph& g, const Permutation& pi);

/// (1/m) * sum over vertices v with degree >= 1 of
///   1 + sum_{i=2..d(v)} log2(1 + pi(u_i) - pi(u_{i-1})),
/// neighbors sorted by pi ascending; the first neighbor costs a flat bit.
/// Isolated vertices contribute nothing. Returns 0 for an empty graph.
double mlog_gap_a(const Graph& g, const Permutation& pi);

/// mlog_a - mlog_gap_a.
double delta(const Graph& g, const Permutation& pi);

/// Throws DataError unless n > d_avg >= 1.
ReferenceBounds reference_bounds(vidx n, double d_avg);

/// Full report with bounds and the warning flag.
AalReport evaluate(const Graph& g, const Permutation& pi);

} // namespace graphorder

#endif
