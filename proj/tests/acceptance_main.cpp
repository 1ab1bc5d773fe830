// Acceptance suite: one pass/fail line per criterion, exit 0 only if every
// non-skipped criterion holds. Scales and tolerances are fixed here.

#include "graphorder/codec.hpp"
#include "graphorder/generators.hpp"
#include "graphorder/measures.hpp"
#include "graphorder/methods.hpp"
#include "graphorder/spmv.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <string>

using namespace graphorder;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void result(int criterion, bool pass, const std::string& detail, double secs) {
    std::printf("[%s] %2d. %s [%.1fs]\n", pass ? "PASS" : "FAIL", criterion, detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

void skip(int criterion, const std::string& detail) {
    std::printf("[SKIP] %2d. %s\n", criterion, detail.c_str());
    std::fflush(stdout);
}

void info(const std::string& detail) {
    std::printf("[INFO]     %s\n", detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double score_method(const Graph& g, Method m, const MethodOptions& opt, double* delta_out = nullptr) {
    Permutation p = apply_method(g, m, opt);
    AalReport r = evaluate(g, p);
    if (delta_out) *delta_out = r.delta;
    return r.mlog_gap_a;
}

void criterion_1_biclique() {
    Timer t;
    Graph g = gen_biclique(250000, 14.0);
    Graph sg = apply_permutation(g, random_shuffle_permutation(g.n(), 1));
    MethodOptions opt;
    bool pass = true;
    std::string vals;
    for (Method m : {Method::Rcm, Method::Fcut1, Method::Slashburn, Method::Nd, Method::Amd,
                     Method::Vifps}) {
        double gap = score_method(sg, m, opt);
        vals += fmt("%s=%.4f ", method_name(m).c_str(), gap);
        if (std::abs(gap - 1.0) > 0.01) pass = false;
    }
    double secs = t.seconds();
    if (secs >= 60.0) pass = false;
    result(1, pass, "biclique optimum, every scheme at 1.00 +- 0.01: " + vals, secs);
}

void criterion_2_conv1() {
    Timer t;
    Graph g = gen_conv1(250000, 7);
    double gap_ref = 1.0 + (std::log2(3.0) - 1.0) / 14.0;
    bool pass = true;
    std::string vals;
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph sg = apply_permutation(g, random_shuffle_permutation(g.n(), seed));
        for (Method m : {Method::Rcm, Method::Vifps}) {
            double delta_val = 0.0;
            double gap = score_method(sg, m, {}, &delta_val);
            if (std::abs(gap - gap_ref) > 0.02 || std::abs(delta_val - 1.14) > 0.05)
                pass = false;
            vals += fmt("%s/s%llu=%.4f|%.4f ", method_name(m).c_str(),
                        (unsigned long long)seed, gap, delta_val);
        }
    }
    result(2, pass,
           fmt("band recovery at %.4f +- 0.02, delta 1.14 +- 0.05: ", gap_ref) + vals,
           t.seconds());
}

void criterion_3_wheel() {
    Timer t;
    Graph g = gen_wheel(250000, 3, 4);
    Graph sg = apply_permutation(g, random_shuffle_permutation(g.n(), 1));
    double envelope = 1.0 + std::log2(250000.0 - 14.0) / 14.0;
    MethodOptions opt;
    double amd_gap = score_method(sg, Method::Amd, opt);
    double vifps_gap = score_method(sg, Method::Vifps, opt);
    // best over the hub-ratio sweep, as in the assessment protocol
    double slash_best = 1e30;
    for (double ratio : {0.001, 0.005, 0.01, 0.02, 0.05}) {
        MethodOptions o;
        o.slashburn.hub_ratio = ratio;
        slash_best = std::min(slash_best, score_method(sg, Method::Slashburn, o));
    }
    bool pass = amd_gap <= envelope && vifps_gap <= envelope &&
                std::abs(amd_gap - 2.15) <= 0.15 && std::abs(vifps_gap - 2.15) <= 0.15 &&
                slash_best > 2.9;
    result(3, pass,
           fmt("wheel composition: amd=%.4f vifps=%.4f (<= %.3f, 2.15 +- 0.15), "
               "slashburn=%.4f (> 2.9)",
               amd_gap, vifps_gap, envelope, slash_best),
           t.seconds());
}

void criterion_4_pok() {
    Timer t;
    Graph g = gen_pok(250000, 14);
    Graph sg = apply_permutation(g, random_shuffle_permutation(g.n(), 1));
    double rcm_gap = score_method(sg, Method::Rcm, {});
    double vifps_gap = score_method(sg, Method::Vifps, {});
    bool pass = std::abs(rcm_gap - 1.06) <= 0.06 && std::abs(vifps_gap - 1.06) <= 0.06;
    result(4, pass, fmt("clique chain at 1.06 +- 0.06: rcm=%.4f vifps=%.4f", rcm_gap, vifps_gap),
           t.seconds());
}

void criterion_5_binomial() {
    Timer t;
    Graph g = gen_binomial_tree(18);
    Graph sg = apply_permutation(g, random_shuffle_permutation(g.n(), 1));
    std::map<std::string, double> gaps;
    for (Method m : {Method::Vifps, Method::Amd, Method::Nd, Method::Rcm})
        gaps[method_name(m)] = score_method(sg, m, {});
    bool pass = gaps["vifps"] < gaps["amd"] && gaps["amd"] < gaps["nd"] &&
                gaps["nd"] < gaps["rcm"] && gaps["vifps"] <= 1.8 && gaps["amd"] <= 2.0;
    result(5, pass,
           fmt("binomial tree ranking vifps<amd<nd<rcm: %.4f < %.4f < %.4f < %.4f",
               gaps["vifps"], gaps["amd"], gaps["nd"], gaps["rcm"]),
           t.seconds());
}

void criterion_6_ws() {
    Timer t;
    double rcm_sum = 0, amd_sum = 0, vifps_sum = 0;
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = gen_ws(250000, 7, 0.1, 40 + seed);
        Graph sg = apply_permutation(g, random_shuffle_permutation(g.n(), seed));
        rcm_sum += score_method(sg, Method::Rcm, {});
        amd_sum += score_method(sg, Method::Amd, {});
        vifps_sum += score_method(sg, Method::Vifps, {});
    }
    bool pass = vifps_sum / 3 < std::min(rcm_sum, amd_sum) / 3;
    result(6, pass,
           fmt("small-world trend over 3 seeds: vifps=%.3f < min(rcm=%.3f, amd=%.3f)",
               vifps_sum / 3, rcm_sum / 3, amd_sum / 3),
           t.seconds());
}

void criterion_7_inequalities() {
    Timer t;
    std::mt19937_64 rng(1234);
    int violations = 0, count = 0;
    while (count < 1000) {
        vidx n = vidx(10 + rng() % 191);
        Graph g;
        switch (count % 6) {
            case 0: g = gen_conv1(n, vidx(1 + rng() % 7)); break;
            case 1: g = gen_pok(n, vidx(2 + rng() % 8)); break;
            case 2: g = gen_biclique(std::max<vidx>(n, 16), double(2 + rng() % 6)); break;
            case 3: g = gen_wheel(std::max<vidx>(n, 20), vidx(1 + rng() % 3), vidx(1 + rng() % 3)); break;
            case 4: g = gen_ws(n, vidx(1 + rng() % 4), 0.2, rng()); break;
            default: g = gen_binomial_tree(4 + int(rng() % 4)); break;
        }
        Permutation pi = random_shuffle_permutation(g.n(), rng());
        double a = mlog_a(g, pi), ga = mlog_gap_a(g, pi);
        if (!(ga >= 1.0 && ga <= a)) ++violations;
        ++count;
    }
    result(7, violations == 0,
           fmt("basic inequalities 1 <= mLogGapA <= mLogA on %d pairs: %d violations", count,
               violations),
           t.seconds());
}

void criterion_8_oracle() {
    Timer t;
    std::mt19937_64 rng(77);
    int checked = 0;
    double worst = 0.0;
    auto check = [&](const Graph& g) {
        for (int rep = 0; rep < 3; ++rep) {
            Permutation pi = random_shuffle_permutation(g.n(), rng());
            worst = std::max(worst, std::abs(mlog_a(g, pi) - oracles::brute_mlog_a(g, pi)));
            worst = std::max(worst,
                             std::abs(mlog_gap_a(g, pi) - oracles::brute_mlog_gap_a(g, pi)));
            ++checked;
        }
    };
    for (vidx n = 2; n <= 5; ++n) oracles::for_each_connected_graph(n, check);
    for (vidx n = 6; n <= 9; ++n)
        for (int rep = 0; rep < 40; ++rep) check(oracles::random_connected_graph(n, 0.35, rng));
    result(8, worst <= 1e-12,
           fmt("brute-force scorer agreement on %d cases, worst |err| = %.2e", checked, worst),
           t.seconds());
}

void criterion_9_equivalence_set() {
    Timer t;
    vidx n = 250000, b = 7;
    Graph k = gen_biclique(n, 14.0);
    std::mt19937_64 rng(5);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        // random member of the exact minimum-equivalence set: centers as a
        // contiguous block anchored at either end, both groups internally
        // shuffled
        std::vector<vidx> centers(static_cast<size_t>(b)), periph(static_cast<size_t>(n - b));
        std::iota(centers.begin(), centers.end(), 0);
        std::iota(periph.begin(), periph.end(), b);
        for (vidx i = b - 1; i > 0; --i)
            std::swap(centers[size_t(i)], centers[size_t(rng() % std::uint64_t(i + 1))]);
        for (vidx i = n - b - 1; i > 0; --i)
            std::swap(periph[size_t(i)], periph[size_t(rng() % std::uint64_t(i + 1))]);
        std::vector<vidx> layout;
        if (rng() & 1) {
            layout = centers;
            layout.insert(layout.end(), periph.begin(), periph.end());
        } else {
            layout = periph;
            layout.insert(layout.end(), centers.begin(), centers.end());
        }
        worst = std::max(worst,
                         std::abs(mlog_gap_a(k, permutation_from_layout(layout)) - 1.0));
    }
    double dispersed = mlog_gap_a(k, random_shuffle_permutation(n, 17));
    bool pass = worst <= 1e-12 && dispersed > 1.5;
    // a center block in the interior pays the documented vanishing surcharge
    std::vector<vidx> mid;
    for (vidx v = b; v < b + n / 2; ++v) mid.push_back(v);
    for (vidx c = 0; c < b; ++c) mid.push_back(c);
    for (vidx v = b + n / 2; v < n; ++v) mid.push_back(v);
    double mid_gap = mlog_gap_a(k, permutation_from_layout(mid));
    result(9, pass,
           fmt("minimum-equivalence set: 100 end-anchored layouts exact (worst dev %.1e), "
               "dispersed=%.3f > 1.5",
               worst, dispersed),
           t.seconds());
    info(fmt("interior center block scores 1 + %.2e (theory %.2e); exactness holds for "
             "end-anchored blocks",
             mid_gap - 1.0, (std::log2(double(b) + 2.0) - 1.0) / (2.0 * double(n - b))));
}

void criterion_10_codec() {
    Timer t;
    bool identity_ok = true;
    // full-scale generator outputs
    std::vector<Graph> graphs{gen_conv1(250000, 7), gen_pok(250000, 14),
                              gen_biclique(250000, 14.0), gen_wheel(250000, 3, 4),
                              gen_ws(250000, 7, 0.1, 41), gen_binomial_tree(18)};
    std::mt19937_64 rng(8);
    for (const auto& g : graphs) {
        Permutation pi = random_shuffle_permutation(g.n(), rng());
        if (!(decode(encode(g, pi)) == apply_permutation(g, pi))) identity_ok = false;
    }
    int fuzz = 0;
    for (; fuzz < 1000; ++fuzz) {
        Graph g = oracles::random_connected_graph(vidx(4 + rng() % 60), 0.25, rng);
        Permutation pi = random_shuffle_permutation(g.n(), rng());
        if (!(decode(encode(g, pi)) == apply_permutation(g, pi))) {
            identity_ok = false;
            break;
        }
    }
    // rank correlation across the six schemes on one fixed graph
    Graph g = gen_ws(20000, 7, 0.1, 42);
    Graph sg = apply_permutation(g, random_shuffle_permutation(g.n(), 3));
    std::vector<double> scores, sizes;
    for (Method m : {Method::Rcm, Method::Fcut1, Method::Slashburn, Method::Nd, Method::Amd,
                     Method::Vifps}) {
        Permutation p = apply_method(sg, m, {});
        scores.push_back(mlog_gap_a(sg, p));
        sizes.push_back(double(encode(sg, p).payload.size()));
    }
    double rho = oracles::spearman(scores, sizes);
    bool pass = identity_ok && rho >= 0.9;
    result(10, pass,
           fmt("codec: decode(encode(.)) identity on 6 generators + %d fuzz cases, "
               "Spearman(mLogGapA, bytes) = %.3f >= 0.9",
               fuzz, rho),
           t.seconds());
}

void criterion_11_spectral_oracle() {
    Timer t;
    std::mt19937_64 rng(31);
    SolverConfig cfg;
    cfg.tol = 1e-10;
    cfg.max_iters = 50000;
    int checked = 0, skipped = 0;
    double worst_val = 0.0, worst_vec = 0.0;
    auto check = [&](const Graph& g) {
        oracles::DenseFiedler ref = oracles::dense_fiedler(g);
        if (ref.gap_to_next < 1e-6) {
            ++skipped;
            return;
        }
        FiedlerResult r = fiedler_vector(g, cfg);
        if (!r.converged) {
            worst_val = 1e9;
            return;
        }
        worst_val = std::max(worst_val, std::abs(r.eigenvalue_estimate - ref.lambda));
        double dot = 0.0;
        for (vidx v = 0; v < g.n(); ++v) dot += r.vector[v] * ref.vector[v];
        double sgn = dot >= 0 ? 1.0 : -1.0;
        for (vidx v = 0; v < g.n(); ++v)
            worst_vec = std::max(worst_vec, std::abs(r.vector[v] - sgn * ref.vector[v]));
        ++checked;
    };
    for (vidx n = 2; n <= 5; ++n) oracles::for_each_connected_graph(n, check);
    for (vidx n = 6; n <= 8; ++n)
        for (int rep = 0; rep < 50; ++rep) check(oracles::random_connected_graph(n, 0.4, rng));
    bool pass = worst_val <= 1e-8 && worst_vec <= 1e-5;
    result(11, pass,
           fmt("dense eigensolver agreement on %d graphs (%d degenerate excluded): "
               "|dlambda| <= %.1e, |dvec| <= %.1e",
               checked, skipped, worst_val, worst_vec),
           t.seconds());
}

void criterion_12_spmv() {
    Timer t;
    Graph g = gen_ws(250000, 7, 0.1, 50);
    Permutation pi = random_shuffle_permutation(g.n(), 2);
    Graph pg = apply_permutation(g, pi);
    RowMatrix x = RowMatrix::Random(g.n(), 8);
    RowMatrix px(g.n(), 8);
    for (vidx v = 0; v < g.n(); ++v) px.row(pi(v)) = x.row(v);
    RowMatrix y(g.n(), 8), py(g.n(), 8);
    spmm_block(g, x, y, 4);
    spmm_block(pg, px, py, 4);
    double err = 0.0, scale = 0.0;
    for (vidx v = 0; v < g.n(); ++v) {
        err = std::max(err, (py.row(pi(v)) - y.row(v)).cwiseAbs().maxCoeff());
        scale = std::max(scale, y.row(v).cwiseAbs().maxCoeff());
    }
    double rel = err / std::max(scale, 1e-30);
    result(12, rel <= 1e-9,
           fmt("permute-then-multiply vs multiply-then-permute: rel err %.2e <= 1e-9", rel),
           t.seconds());
    // timing trends, informational only (machine dependent)
    BenchConfig cfg;
    cfg.dim = 16;
    cfg.iters = 10;
    cfg.reps = 3;
    for (int p = 1; p <= 4; p *= 2) {
        cfg.threads = p;
        BenchResult r = subspace_iterate(g, cfg);
        info(fmt("spmv timing (not asserted): shuffled ws, d=16 p=%d -> %.3fs", p, r.seconds));
    }
    Graph band = gen_conv1(250000, 7);
    cfg.threads = 2;
    BenchResult banded = subspace_iterate(band, cfg);
    Graph shuffled_band = apply_permutation(band, random_shuffle_permutation(250000, 4));
    BenchResult scattered = subspace_iterate(shuffled_band, cfg);
    info(fmt("spmv timing (not asserted): band order %.3fs vs shuffled %.3fs at d=16 p=2",
             banded.seconds, scattered.seconds));
}

void criterion_13_real_graph() {
    const char* path = std::getenv("GRAPHORDER_REAL_GRAPH");
    if (!path) {
        skip(13, "real-graph smoke: set GRAPHORDER_REAL_GRAPH to a Matrix Market file "
                 "(e.g. powergrid) to enable");
        return;
    }
    Timer t;
    std::ifstream in(path);
    if (!in) {
        result(13, false, fmt("real-graph smoke: cannot open %s", path), t.seconds());
        return;
    }
    Graph g = load_matrix_market(in);
    Graph sg = apply_permutation(symmetrize(g), random_shuffle_permutation(g.n(), 1));
    double v = score_method(sg, Method::Vifps, {});
    double r = score_method(sg, Method::Rcm, {});
    double a = score_method(sg, Method::Amd, {});
    result(13, v < r && v < a,
           fmt("real graph (%s): vifps=%.3f beats rcm=%.3f and amd=%.3f", path, v, r, a),
           t.seconds());
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    auto want = [&](int c) { return only.empty() || only.count(c) > 0; };

    if (want(1)) criterion_1_biclique();
    if (want(2)) criterion_2_conv1();
    if (want(3)) criterion_3_wheel();
    if (want(4)) criterion_4_pok();
    if (want(5)) criterion_5_binomial();
    if (want(6)) criterion_6_ws();
    if (want(7)) criterion_7_inequalities();
    if (want(8)) criterion_8_oracle();
    if (want(9)) criterion_9_equivalence_set();
    if (want(10)) criterion_10_codec();
    if (want(11)) criterion_11_spectral_oracle();
    if (want(12)) criterion_12_spmv();
    if (want(13)) criterion_13_real_graph();

    std::printf("%s (%d criterion failures)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                failures);
    return failures == 0 ? 0 : 1;
}
