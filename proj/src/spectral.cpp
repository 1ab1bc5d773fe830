#include "graphorder/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <array>
#include <numeric>
#include <random>

namespace graphorder {

namespace {

using Eigen::VectorXd;

// y = x - D^{-1/2} A D^{-1/2} x, matrix-free.
struct NormalizedLaplacian {
    const Graph& g;
    VectorXd dinv_sqrt;

    explicit NormalizedLaplacian(const Graph& graph) : g(graph) {
        dinv_sqrt.resize(g.n());
        for (vidx v = 0; v < g.n(); ++v)
            dinv_sqrt[v] = 1.0 / std::sqrt(double(g.degree(v)));
    }

    VectorXd apply(const VectorXd& x) const {
        VectorXd z = dinv_sqrt.cwiseProduct(x);
        VectorXd w(g.n());
        for (vidx v = 0; v < g.n(); ++v) {
            double s = 0.0;
            for (vidx u : g.neighbors(v)) s += z[u];
            w[v] = s;
        }
        return x - dinv_sqrt.cwiseProduct(w);
    }
};

VectorXd seeded_start(vidx n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    VectorXd x(n);
    for (vidx i = 0; i < n; ++i)
        x[i] = double(rng() >> 11) * 0x1.0p-52 - 1.0; // uniform [-1, 1)
    return x;
}

// Two-sided BFS level difference: depth from a pseudo-peripheral vertex
// minus depth from its antipode. Smooth along the graph and odd across the
// narrowest part between the two poles, so most of the start-vector mass
// lands on the low end of the spectrum. Sub-quantum noise breaks ties
// within a level without disturbing the level ordering.
VectorXd level_structure_start(const Graph& g, std::uint64_t seed) {
    vidx n = g.n();
    vidx start = 0;
    for (vidx v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(start)) start = v;
    std::vector<vidx> dist_a(static_cast<size_t>(n)), dist_b(static_cast<size_t>(n));
    std::vector<vidx> frontier, next_frontier;
    auto bfs = [&](vidx from, std::vector<vidx>& dist) {
        std::fill(dist.begin(), dist.end(), -1);
        frontier.assign(1, from);
        dist[size_t(from)] = 0;
        vidx far = from;
        while (!frontier.empty()) {
            next_frontier.clear();
            for (vidx v : frontier)
                for (vidx u : g.neighbors(v))
                    if (dist[size_t(u)] == -1) {
                        dist[size_t(u)] = dist[size_t(v)] + 1;
                        next_frontier.push_back(u);
                    }
            if (!next_frontier.empty()) {
                far = next_frontier[0];
                for (vidx v : next_frontier)
                    if (g.degree(v) < g.degree(far)) far = v;
            }
            frontier.swap(next_frontier);
        }
        return far;
    };
    vidx pole_a = bfs(start, dist_a);
    pole_a = bfs(pole_a, dist_a);
    vidx pole_b = bfs(pole_a, dist_a);
    bfs(pole_b, dist_b);

    VectorXd x(n);
    VectorXd noise = seeded_start(n, seed);
    for (vidx v = 0; v < n; ++v)
        x[v] = double(dist_a[size_t(v)] - dist_b[size_t(v)]) + 0.25 * noise[v];
    x.array() -= x.mean();
    double nx = x.norm();
    if (nx > 1e-12) x /= nx;
    return x;
}

} // namespace

FiedlerResult fiedler_vector(const Graph& g, const SolverConfig& cfg) {
    if (g.n() < 2) throw DataError("fiedler_vector: need n >= 2");
    if (!g.is_symmetric()) throw DataError("fiedler_vector: graph must be symmetric");
    for (vidx v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw DataError("fiedler_vector: zero-degree vertex");
    if (connected_components(g).component_count != 1)
        throw DataError("fiedler_vector: graph must be connected");
    if (cfg.tol <= 0 || cfg.max_iters < 1)
        throw DataError("fiedler_vector: bad solver configuration");

    const vidx n = g.n();
    NormalizedLaplacian op(g);

    // Exact null vector of L: q ~ d^{1/2}. L q = 0, so deflation needs no
    // correction on operator images.
    VectorXd q(n);
    for (vidx v = 0; v < n; ++v) q[v] = std::sqrt(double(g.degree(v)));
    q.normalize();
    auto deflate = [&q](VectorXd& v) { v -= (q.dot(v)) * q; };

    FiedlerResult res;
    VectorXd x = level_structure_start(g, cfg.seed);
    deflate(x);
    if (x.norm() < 1e-12) { // pathological seed; reseed deterministically
        x = seeded_start(n, cfg.seed + 0x9e3779b97f4a7c15ull);
        deflate(x);
    }
    x.normalize();

    VectorXd ax = op.apply(x);
    int matvecs = 1;
    double theta = x.dot(ax);
    double ritz_gap = std::numeric_limits<double>::infinity();

    VectorXd p, ap;
    bool have_p = false;
    double resid = (ax - theta * x).norm();
    int since_refresh = 0;

    while (matvecs < cfg.max_iters) {
        // Recombined operator images drift; refresh keeps the Ritz data honest.
        if (++since_refresh >= 32) {
            deflate(x);
            x.normalize();
            ax = op.apply(x);
            ++matvecs;
            theta = x.dot(ax);
            since_refresh = 0;
            if (matvecs >= cfg.max_iters) break;
        }
        VectorXd r = ax - theta * x;
        resid = r.norm();
        if (resid <= cfg.tol) {
            res.converged = true;
            break;
        }
        VectorXd w = r;
        deflate(w);
        w -= (x.dot(w)) * x;
        double wn = w.norm();
        if (wn < 1e-14) break; // stagnation: residual lives in the deflated space
        w /= wn;
        VectorXd aw = op.apply(w);
        ++matvecs;

        if (have_p) {
            double a = x.dot(p), b = w.dot(p), c = q.dot(p);
            p -= a * x + b * w + c * q;
            ap -= a * ax + b * aw; // A q = 0
            double pn = p.norm();
            if (pn < 1e-8) {
                have_p = false;
            } else {
                p /= pn;
                ap /= pn;
            }
        }

        const int dim = have_p ? 3 : 2;
        Eigen::MatrixXd T(dim, dim), M(dim, dim);
        std::array<const VectorXd*, 3> basis{&x, &w, &p};
        std::array<const VectorXd*, 3> images{&ax, &aw, &ap};
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                T(i, j) = basis[size_t(i)]->dot(*images[size_t(j)]);
                M(i, j) = basis[size_t(i)]->dot(*basis[size_t(j)]);
            }
        T = ((T + T.transpose()) / 2.0).eval();
        M = ((M + M.transpose()) / 2.0).eval();
        // Drop the history direction when the basis degenerates.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram(M);
        if (gram.eigenvalues()[0] < 1e-8) {
            if (!have_p) break;
            have_p = false;
            continue;
        }
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(T, M);
        Eigen::VectorXd z = es.eigenvectors().col(0); // M-orthonormal
        double theta_new = es.eigenvalues()[0];
        if (!(theta_new <= theta + 1e-12)) {
            // No progress possible in this subspace; restart from x alone.
            have_p = false;
            ax = op.apply(x);
            ++matvecs;
            theta = x.dot(ax);
            since_refresh = 0;
            continue;
        }
        theta = theta_new;
        ritz_gap = es.eigenvalues()[1] - theta;

        VectorXd x_new = z[0] * x + z[1] * w;
        VectorXd ax_new = z[0] * ax + z[1] * aw;
        VectorXd p_new = z[1] * w;
        VectorXd ap_new = z[1] * aw;
        if (have_p) {
            x_new += z[2] * p;
            ax_new += z[2] * ap;
            p_new += z[2] * p;
            ap_new += z[2] * ap;
        }
        double pn = p_new.norm();
        if (pn > 1e-10) {
            p = p_new / pn;
            ap = ap_new / pn;
            have_p = true;
        } else {
            have_p = false;
        }
        deflate(x_new);
        double xn = x_new.norm();
        if (xn < 1e-14) break;
        x = x_new / xn;
        ax = ax_new / xn; // deflation correction on ax is zero (A q = 0)
        theta = x.dot(ax);
    }

    resid = (ax - theta * x).norm();
    res.converged = resid <= cfg.tol;
    res.vector = x;
    res.eigenvalue_estimate = theta;
    res.residual_norm = resid;
    res.iterations_used = matvecs;
    // Multiplicity at the bottom of the deflated spectrum: either the last
    // Rayleigh-Ritz already shows a collapsed gap, or an independent random
    // probe direction reproduces the converged Rayleigh quotient (the final
    // Ritz data alone can miss a multiple eigenvalue when the basis happens
    // to span other directions).
    // Multiplicity check via independent random probes: if a random deflated
    // direction orthogonal to x reproduces the converged Rayleigh quotient,
    // the bottom eigenspace is large and the vector carries no structure.
    // (A collapsed Ritz gap alone is not used: clustered-but-meaningful
    // spectra, e.g. small-world graphs, have lambda3 ~ lambda2 while any
    // vector in their bottom cluster still orders the graph well.)
    (void)ritz_gap;
    if (res.converged) {
        double degen_tol = 0.5 * std::max(theta, 10.0 * cfg.tol);
        for (std::uint64_t probe = 0; probe < 2 && !res.degenerate; ++probe) {
            VectorXd y = seeded_start(n, cfg.seed ^ (0xabcdef1234567890ull + probe));
            deflate(y);
            y -= (x.dot(y)) * x;
            if (y.norm() <= 1e-12) break;
            y.normalize();
            VectorXd ay = op.apply(y);
            double theta_y = y.dot(ay);
            res.degenerate = (theta_y - theta) <= degen_tol;
        }
    }
    return res;
}

namespace {

std::vector<vidx> order_by_entry(const Eigen::VectorXd& v) {
    std::vector<vidx> idx(static_cast<size_t>(v.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](vidx a, vidx b) {
        if (v[a] != v[b]) return v[a] < v[b];
        return a < b;
    });
    return idx;
}

} // namespace

Permutation fiedler_order(const Graph& g, const SolverConfig& cfg, FiedlerResult* result) {
    FiedlerResult fr = fiedler_vector(g, cfg);
    // Canonical sign: first vertex carrying weight points negative.
    for (vidx v = 0; v < g.n(); ++v) {
        if (std::abs(fr.vector[v]) > 1e-12) {
            if (fr.vector[v] > 0) fr.vector = -fr.vector;
            break;
        }
    }
    std::vector<vidx> layout = order_by_entry(fr.vector);
    if (result) *result = fr;
    return permutation_from_layout(layout);
}

FiedlerCut fiedler_cut(const Graph& g, const SolverConfig& cfg) {
    FiedlerResult fr = fiedler_vector(g, cfg);
    std::vector<vidx> layout = order_by_entry(fr.vector);
    FiedlerCut cut;
    cut.degenerate = fr.degenerate;
    cut.converged = fr.converged;
    // Split at the widest Fiedler-value gap inside a window around the
    // median: an exact median cut slices through whatever cluster happens to
    // straddle it, while the value gaps sit between clusters. The window
    // keeps both sides near half, so the recursion depth stays logarithmic.
    size_t n = size_t(g.n());
    size_t half = n / 2;
    size_t lo = std::max<size_t>(1, (n * 45 + 99) / 100);
    size_t hi = std::min<size_t>(n - 1, std::max<size_t>(lo, (n * 55) / 100));
    size_t split = half;
    double best_gap = -1.0;
    for (size_t k = lo; k <= hi; ++k) {
        double gap = fr.vector[layout[k]] - fr.vector[layout[k - 1]];
        if (gap > best_gap + 1e-15 ||
            (std::abs(gap - best_gap) <= 1e-15 &&
             std::llabs((long long)k - (long long)half) <
                 std::llabs((long long)split - (long long)half))) {
            best_gap = gap;
            split = k;
        }
    }
    if (split < 1 || split > n - 1) split = half;
    cut.side_a.assign(layout.begin(), layout.begin() + split);
    cut.side_b.assign(layout.begin() + split, layout.end());
    return cut;
}

} // namespace graphorder
