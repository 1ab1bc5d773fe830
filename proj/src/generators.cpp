#include "graphorder/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace graphorder {

Graph gen_conv1(vidx n, vidx b) {
    if (n < 2) throw DataError("gen_conv1: n must be >= 2");
    if (b < 1 || b >= n) throw DataError("gen_conv1: need 1 <= b < n");
    std::vector<eidx> offsets(size_t(n) + 1, 0);
    for (vidx u = 0; u < n; ++u) {
        vidx lo = std::max<vidx>(0, u - b), hi = std::min<vidx>(n - 1, u + b);
        offsets[size_t(u) + 1] = hi - lo; // excludes self
    }
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::vector<vidx> cols(static_cast<size_t>(offsets.back()));
    eidx w = 0;
    for (vidx u = 0; u < n; ++u) {
        for (vidx v = std::max<vidx>(0, u - b); v <= std::min<vidx>(n - 1, u + b); ++v)
            if (v != u) cols[size_t(w++)] = v;
    }
    return Graph(n, std::move(offsets), std::move(cols));
}

Graph gen_pok(vidx n, vidx d_avg) {
    if (d_avg < 2) throw DataError("gen_pok: clique size must be >= 2");
    if (n < 2) throw DataError("gen_pok: n must be >= 2");
    vidx c = d_avg;
    std::vector<std::pair<vidx, vidx>> edges;
    for (vidx lo = 0; lo < n; lo += c) {
        vidx hi = std::min<vidx>(lo + c, n);
        for (vidx u = lo; u < hi; ++u)
            for (vidx v = u + 1; v < hi; ++v) edges.emplace_back(u, v);
        if (hi < n) edges.emplace_back(hi - 1, hi); // bridge, last-to-first
    }
    return Graph::from_edges(n, edges, true);
}

Graph gen_biclique(vidx n, double d_avg) {
    if (d_avg < 1.0) throw DataError("gen_biclique: d_avg must be >= 1");
    vidx b = vidx(std::ceil(d_avg / 2.0));
    if (n <= 2 * b) throw DataError("gen_biclique: need n > 2*ceil(d_avg/2)");
    eidx complete = 2 * eidx(b) * eidx(n - b);
    eidx target = eidx(std::llround(d_avg * double(n)));
    if (target < 2 * eidx(b)) throw DataError("gen_biclique: target edge count infeasible");
    eidx remove_pairs = target < complete ? (complete - target) / 2 : 0;

    // removed[c] = number of highest-indexed peripherals removed from center c;
    // the last centers lose edges first.
    std::vector<vidx> removed(size_t(b), 0);
    for (vidx c = b - 1; c >= 0 && remove_pairs > 0; --c) {
        vidx take = vidx(std::min<eidx>(remove_pairs, eidx(n - b) - 1)); // keep each center attached
        removed[size_t(c)] = take;
        remove_pairs -= take;
    }
    if (remove_pairs > 0) throw DataError("gen_biclique: target edge count infeasible");

    std::vector<eidx> offsets(size_t(n) + 1, 0);
    for (vidx c = 0; c < b; ++c) offsets[size_t(c) + 1] = eidx(n - b) - removed[size_t(c)];
    for (vidx p = b; p < n; ++p) {
        vidx deg = 0;
        for (vidx c = 0; c < b; ++c)
            if (p < n - removed[size_t(c)]) ++deg;
        offsets[size_t(p) + 1] = deg;
    }
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::vector<vidx> cols(static_cast<size_t>(offsets.back()));
    std::vector<eidx> fill(offsets.begin(), offsets.end() - 1);
    for (vidx c = 0; c < b; ++c)
        for (vidx p = b; p < n - removed[size_t(c)]; ++p) {
            cols[size_t(fill[size_t(c)]++)] = p;
            cols[size_t(fill[size_t(p)]++)] = c;
        }
    for (vidx p = b; p < n; ++p)
        std::sort(cols.begin() + offsets[size_t(p)], cols.begin() + fill[size_t(p)]);
    return Graph(n, std::move(offsets), std::move(cols));
}

Graph gen_wheel(vidx n, vidx b_l, vidx b_g) {
    if (b_l < 1 || b_g < 1) throw DataError("gen_wheel: b_l and b_g must be >= 1");
    if (n <= 2 * (b_l + b_g)) throw DataError("gen_wheel: need n > 2*(b_l+b_g)");
    std::vector<eidx> offsets(size_t(n) + 1, 0);
    vidx np = n - b_g; // peripherals occupy b_g..n-1
    for (vidx c = 0; c < b_g; ++c) offsets[size_t(c) + 1] = np;
    for (vidx p = b_g; p < n; ++p) {
        vidx lo = std::max<vidx>(b_g, p - b_l), hi = std::min<vidx>(n - 1, p + b_l);
        offsets[size_t(p) + 1] = b_g + (hi - lo); // centers + band (excludes self)
    }
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::vector<vidx> cols(static_cast<size_t>(offsets.back()));
    eidx w = 0;
    for (vidx c = 0; c < b_g; ++c)
        for (vidx p = b_g; p < n; ++p) cols[size_t(w++)] = p;
    for (vidx p = b_g; p < n; ++p) {
        for (vidx c = 0; c < b_g; ++c) cols[size_t(w++)] = c;
        for (vidx v = std::max<vidx>(b_g, p - b_l); v <= std::min<vidx>(n - 1, p + b_l); ++v)
            if (v != p) cols[size_t(w++)] = v;
    }
    return Graph(n, std::move(offsets), std::move(cols));
}

namespace {

// Portable helpers over mt19937_64; distribution classes vary across
// standard libraries and the generators must be bit-reproducible.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

double canonical_uniform(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Graph gen_ws(vidx n, vidx k_half, double beta, std::uint64_t seed) {
    if (n < 3) throw DataError("gen_ws: n must be >= 3");
    if (k_half < 1 || 2 * k_half >= n) throw DataError("gen_ws: need 1 <= k_half < n/2");
    if (beta < 0.0 || beta > 1.0) throw DataError("gen_ws: beta must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::set<vidx>> adj(static_cast<size_t>(n));
    auto connected = [&](vidx u, vidx v) { return adj[size_t(u)].count(v) != 0; };
    auto link = [&](vidx u, vidx v) {
        adj[size_t(u)].insert(v);
        adj[size_t(v)].insert(u);
    };
    for (vidx u = 0; u < n; ++u)
        for (vidx j = 1; j <= k_half; ++j) link(u, vidx((u + j) % n));
    if (beta > 0.0) {
        for (vidx u = 0; u < n; ++u) {
            for (vidx j = 1; j <= k_half; ++j) {
                vidx v = vidx((u + j) % n);
                if (canonical_uniform(rng) >= beta) continue;
                // Retarget (u,v) to a uniform random vertex; skip when the
                // candidate is invalid, as in the standard construction.
                vidx w = vidx(bounded_uniform(rng, std::uint64_t(n)));
                if (w == u || connected(u, w)) continue;
                adj[size_t(u)].erase(v);
                adj[size_t(v)].erase(u);
                link(u, w);
            }
        }
    }
    std::vector<eidx> offsets(size_t(n) + 1, 0);
    for (vidx v = 0; v < n; ++v) offsets[size_t(v) + 1] = eidx(adj[size_t(v)].size());
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::vector<vidx> cols(static_cast<size_t>(offsets.back()));
    eidx w = 0;
    for (vidx v = 0; v < n; ++v)
        for (vidx u : adj[size_t(v)]) cols[size_t(w++)] = u;
    return Graph(n, std::move(offsets), std::move(cols));
}

Graph gen_binomial_tree(int k) {
    if (k < 0 || k > 26) throw DataError("gen_binomial_tree: order out of range");
    vidx n = vidx(1) << k;
    std::vector<std::pair<vidx, vidx>> edges;
    edges.reserve(size_t(n) - 1);
    // B_j on ids [base, base + 2^j): root at base, second copy root at base + 2^{j-1}.
    for (int j = 1; j <= k; ++j) {
        vidx half = vidx(1) << (j - 1);
        for (vidx base = 0; base < n; base += vidx(1) << j)
            edges.emplace_back(base, base + half);
    }
    return Graph::from_edges(n, edges, true);
}

} // namespace graphorder
