// graphorder: vertex-ordering toolkit for sparse graph compression and
// sparse-matrix locality. Subcommands: generate, order, score, encode,
// decode, bench, report.

#include "graphorder/codec.hpp"
#include "graphorder/generators.hpp"
#include "graphorder/graph.hpp"
#include "graphorder/measures.hpp"
#include "graphorder/methods.hpp"
#include "graphorder/spmv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace go = graphorder;
using nlohmann::json;

namespace {

go::Graph read_graph(const std::string& path, const std::string& format, bool zero_based,
                     bool symmetrize_edges) {
    std::ifstream in(path);
    if (!in) throw go::DataError("cannot open '" + path + "'");
    if (format == "edgelist") return go::load_edge_list(in, zero_based, symmetrize_edges);
    return go::load_matrix_market(in);
}

go::Permutation read_permutation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw go::DataError("cannot open '" + path + "'");
    return go::load_permutation(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw go::DataError("cannot write '" + path + "'");
    return out;
}

int env_default_threads() {
    if (const char* env = std::getenv("GRAPHORDER_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

json report_to_json(const go::AalReport& r) {
    json j{{"mlogA", r.mlog_a},       {"mlogGapA", r.mlog_gap_a}, {"delta", r.delta},
           {"n", r.n},                {"m", r.m},                 {"dAvg", r.d_avg},
           {"warning", r.warning}};
    if (!r.empty) {
        j["bounds"] = {{"lower", r.bounds.lower},
                       {"conv1Ref", r.bounds.conv1_ref},
                       {"wheelRef", r.bounds.wheel_ref},
                       {"upperGap", r.bounds.upper_gap},
                       {"warningThreshold", r.bounds.warning_threshold}};
    }
    return j;
}

struct GenerateArgs {
    std::string kind;
    go::vidx n = 1000;
    double davg = 14;
    go::vidx b = 0, bl = 3, bg = 4;
    double beta = 0.1;
    int k = 10;
    go::vidx k_half = 7;
    std::uint64_t seed = 1;
    std::string out;
};

go::Graph run_generate(const GenerateArgs& a) {
    if (a.kind == "conv1") {
        go::vidx b = a.b > 0 ? a.b : go::vidx(std::max(1.0, std::ceil(a.davg / 2.0)));
        return go::gen_conv1(a.n, b);
    }
    if (a.kind == "pok") return go::gen_pok(a.n, go::vidx(a.davg));
    if (a.kind == "biclique") return go::gen_biclique(a.n, a.davg);
    if (a.kind == "wheel") return go::gen_wheel(a.n, a.bl, a.bg);
    if (a.kind == "ws") return go::gen_ws(a.n, a.k_half, a.beta, a.seed);
    if (a.kind == "binomial") return go::gen_binomial_tree(a.k);
    throw go::DataError("unknown generator kind '" + a.kind + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex ordering toolkit for graph compression and SpMV locality"};
    app.require_subcommand(1);

    // ---- generate ----
    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "write a synthetic graph as Matrix Market");
    cmd_gen->add_option("--kind", gen.kind, "conv1|pok|biclique|wheel|ws|binomial")->required();
    cmd_gen->add_option("--n", gen.n, "vertex count");
    cmd_gen->add_option("--davg", gen.davg, "target average degree");
    cmd_gen->add_option("--b", gen.b, "conv1 semi-bandwidth (default ceil(davg/2))");
    cmd_gen->add_option("--bl", gen.bl, "wheel local band");
    cmd_gen->add_option("--bg", gen.bg, "wheel global center count");
    cmd_gen->add_option("--beta", gen.beta, "ws rewiring probability");
    cmd_gen->add_option("--khalf", gen.k_half, "ws neighbors per side");
    cmd_gen->add_option("--k", gen.k, "binomial tree order");
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("-o,--out", gen.out, "output path")->required();

    // ---- shared graph-input options ----
    struct InputArgs {
        std::string in, format = "mtx";
        bool zero_based = false, symmetrize = false;
    };
    auto add_input = [](CLI::App* cmd, InputArgs& ia) {
        cmd->add_option("--in", ia.in, "input graph file")->required();
        cmd->add_option("--format", ia.format, "mtx|edgelist")
            ->check(CLI::IsMember({"mtx", "edgelist"}));
        cmd->add_flag("--zero-based", ia.zero_based, "edge list ids start at 0");
        cmd->add_flag("--symmetrize", ia.symmetrize, "mirror edge list entries");
    };

    // ---- order ----
    InputArgs ord_in;
    std::string ord_method, ord_perm_out, minority_placement = "back";
    go::MethodOptions opt;
    std::uint64_t ord_shuffle_seed = 0;
    bool ord_shuffle = false;
    auto* cmd_ord = app.add_subcommand("order", "compute a vertex ordering");
    add_input(cmd_ord, ord_in);
    cmd_ord->add_option("--method", ord_method,
                        "rcm|amd|slashburn|nd|fiedler|vifps|identity|random")->required();
    cmd_ord->add_option("--perm", ord_perm_out, "output permutation file")->required();
    cmd_ord->add_option("--hub-ratio", opt.slashburn.hub_ratio, "slashburn hub fraction");
    cmd_ord->add_option("--min-component", opt.slashburn.min_component,
                        "slashburn recursion floor");
    cmd_ord->add_option("--nbase", opt.vifps.n_base, "vifps/nd recursion base size");
    cmd_ord->add_option("--rvol", opt.vifps.rvol, "vifps Pareto volume percent");
    cmd_ord->add_option("--rminor", opt.vifps.rminor, "vifps Pareto node percent");
    cmd_ord->add_option("--minority-placement", minority_placement, "back|front");
    cmd_ord->add_option("--tol", opt.fiedler.tol, "eigensolver residual tolerance");
    cmd_ord->add_option("--max-iters", opt.fiedler.max_iters, "eigensolver matvec budget");
    cmd_ord->add_option("--seed", opt.random_seed, "seed for --method random");
    cmd_ord->add_flag("--strict", opt.strict, "fail on eigensolver non-convergence");
    auto* shuffle_opt = cmd_ord->add_option("--shuffle-seed", ord_shuffle_seed,
                                            "shuffle the graph before ordering");

    // ---- score ----
    InputArgs sc_in;
    std::string sc_perm, sc_out;
    auto* cmd_score = app.add_subcommand("score", "locality report as JSON");
    add_input(cmd_score, sc_in);
    cmd_score->add_option("--perm", sc_perm, "permutation file (default identity)");
    cmd_score->add_option("-o,--out", sc_out, "output path (default stdout)");

    // ---- encode / decode ----
    InputArgs enc_in;
    std::string enc_perm, enc_out;
    auto* cmd_enc = app.add_subcommand("encode", "gap-encode adjacency into .vgc");
    add_input(cmd_enc, enc_in);
    cmd_enc->add_option("--perm", enc_perm, "permutation file (default identity)");
    cmd_enc->add_option("-o,--out", enc_out, "output .vgc path")->required();

    std::string dec_in, dec_out;
    auto* cmd_dec = app.add_subcommand("decode", "decode .vgc into Matrix Market");
    cmd_dec->add_option("--in", dec_in, "input .vgc path")->required();
    cmd_dec->add_option("-o,--out", dec_out, "output .mtx path")->required();

    // ---- bench ----
    auto* cmd_bench = app.add_subcommand("bench", "performance experiments");
    cmd_bench->require_subcommand(1);
    InputArgs bench_in;
    go::BenchConfig bench_cfg;
    bench_cfg.threads = env_default_threads();
    std::string bench_perm, bench_label = "identity";
    auto* cmd_spmv = cmd_bench->add_subcommand("spmv", "blocked subspace iteration timing");
    add_input(cmd_spmv, bench_in);
    cmd_spmv->add_option("--perm", bench_perm, "apply this ordering first");
    cmd_spmv->add_option("--dim", bench_cfg.dim, "subspace dimension");
    cmd_spmv->add_option("--threads", bench_cfg.threads, "worker threads");
    cmd_spmv->add_option("--iters", bench_cfg.iters, "multiplications per run");
    cmd_spmv->add_option("--reps", bench_cfg.reps, "timed repetitions (median)");
    cmd_spmv->add_option("--seed", bench_cfg.seed, "start block seed");
    cmd_spmv->add_option("--label", bench_label, "ordering label for the CSV row");

    // ---- report ----
    InputArgs rep_in;
    std::string rep_methods = "rcm,fcut1,slashburn,nd,amd,vifps";
    std::string rep_out, rep_seeds = "";
    std::uint64_t rep_shuffle_seed = 7;
    bool rep_no_timing = false;
    auto* cmd_rep = app.add_subcommand("report", "table-style assessment across methods");
    add_input(cmd_rep, rep_in);
    cmd_rep->add_option("--methods", rep_methods, "comma-separated method list");
    cmd_rep->add_option("--shuffle-seed", rep_shuffle_seed, "single shuffle seed");
    cmd_rep->add_option("--seeds", rep_seeds, "comma-separated shuffle seeds (overrides)");
    cmd_rep->add_option("-o,--out", rep_out, "output CSV path (default stdout)");
    cmd_rep->add_flag("--no-timing", rep_no_timing, "omit the wall-time column");
    cmd_rep->add_option("--nbase", opt.vifps.n_base, "vifps/nd recursion base size");
    cmd_rep->add_option("--rvol", opt.vifps.rvol, "vifps Pareto volume percent");
    cmd_rep->add_option("--rminor", opt.vifps.rminor, "vifps Pareto node percent");
    cmd_rep->add_option("--tol", opt.fiedler.tol, "eigensolver residual tolerance");
    cmd_rep->add_option("--max-iters", opt.fiedler.max_iters, "eigensolver matvec budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    ord_shuffle = shuffle_opt->count() > 0;

    try {
        if (*cmd_gen) {
            std::cerr << "generate kind=" << gen.kind << " n=" << gen.n << " davg=" << gen.davg
                      << " b=" << gen.b << " bl=" << gen.bl << " bg=" << gen.bg
                      << " beta=" << gen.beta << " khalf=" << gen.k_half << " k=" << gen.k
                      << " seed=" << gen.seed << " -> " << gen.out << "\n";
            go::Graph g = run_generate(gen);
            auto out = open_out(gen.out);
            go::save_matrix_market(g, out);
            std::cerr << "generated n=" << g.n() << " nnz=" << g.nnz() << "\n";
        } else if (*cmd_ord) {
            opt.nd.n_base = opt.vifps.n_base;
            opt.vifps.solver.tol = std::min(opt.vifps.solver.tol, opt.fiedler.tol);
            opt.nd.solver = opt.vifps.solver;
            opt.vifps.minority_placement = minority_placement == "front"
                                               ? go::MinorityPlacement::Front
                                               : go::MinorityPlacement::Back;
            go::Method m = go::parse_method(ord_method);
            std::cerr << "order method=" << go::method_name(m) << " in=" << ord_in.in
                      << " hub-ratio=" << opt.slashburn.hub_ratio
                      << " nbase=" << opt.vifps.n_base << " rvol=" << opt.vifps.rvol
                      << " rminor=" << opt.vifps.rminor << " tol=" << opt.fiedler.tol
                      << " max-iters=" << opt.fiedler.max_iters << " seed=" << opt.random_seed
                      << " shuffle=" << (ord_shuffle ? std::to_string(ord_shuffle_seed) : "off")
                      << "\n";
            go::Graph g = read_graph(ord_in.in, ord_in.format, ord_in.zero_based,
                                     ord_in.symmetrize);
            go::Permutation result;
            if (ord_shuffle) {
                go::Permutation shuffle =
                    go::random_shuffle_permutation(g.n(), ord_shuffle_seed);
                go::Graph shuffled = go::apply_permutation(g, shuffle);
                go::Permutation on_shuffled = go::apply_method(shuffled, m, opt);
                result = go::compose(on_shuffled, shuffle); // maps original ids
            } else {
                result = go::apply_method(g, m, opt);
            }
            auto out = open_out(ord_perm_out);
            go::save_permutation(result, out);
        } else if (*cmd_score) {
            std::cerr << "score in=" << sc_in.in
                      << " perm=" << (sc_perm.empty() ? "identity" : sc_perm) << "\n";
            go::Graph g = read_graph(sc_in.in, sc_in.format, sc_in.zero_based, sc_in.symmetrize);
            go::Permutation p =
                sc_perm.empty() ? go::Permutation::identity(g.n()) : read_permutation(sc_perm);
            json j = report_to_json(go::evaluate(g, p));
            if (sc_out.empty())
                std::cout << j.dump(2) << "\n";
            else
                open_out(sc_out) << j.dump(2) << "\n";
        } else if (*cmd_enc) {
            std::cerr << "encode in=" << enc_in.in
                      << " perm=" << (enc_perm.empty() ? "identity" : enc_perm) << " -> "
                      << enc_out << "\n";
            go::Graph g = read_graph(enc_in.in, enc_in.format, enc_in.zero_based,
                                     enc_in.symmetrize);
            go::Permutation p =
                enc_perm.empty() ? go::Permutation::identity(g.n()) : read_permutation(enc_perm);
            go::EncodedGraph enc = go::encode(g, p);
            auto out = open_out(enc_out);
            go::save_vgc(enc, out);
            std::cerr << "payload " << enc.payload.size() << " bytes, "
                      << double(enc.payload_bits()) / double(std::max<std::uint64_t>(1, enc.m))
                      << " bits/link\n";
        } else if (*cmd_dec) {
            std::cerr << "decode in=" << dec_in << " -> " << dec_out << "\n";
            std::ifstream in(dec_in, std::ios::binary);
            if (!in) throw go::DataError("cannot open '" + dec_in + "'");
            go::Graph g = go::decode(go::load_vgc(in));
            auto out = open_out(dec_out);
            go::save_matrix_market(g, out);
        } else if (*cmd_spmv) {
            std::cerr << "bench spmv in=" << bench_in.in << " dim=" << bench_cfg.dim
                      << " threads=" << bench_cfg.threads << " iters=" << bench_cfg.iters
                      << " reps=" << bench_cfg.reps << " seed=" << bench_cfg.seed << "\n";
            go::Graph g = read_graph(bench_in.in, bench_in.format, bench_in.zero_based,
                                     bench_in.symmetrize);
            std::vector<go::vidx> row_seed;
            if (!bench_perm.empty()) {
                go::Permutation p = read_permutation(bench_perm);
                g = go::apply_permutation(g, p);
                row_seed = p.inverse(); // row i of the permuted graph is old vertex inv[i]
            }
            go::BenchResult r =
                go::subspace_iterate(g, bench_cfg, row_seed.empty() ? nullptr : &row_seed);
            std::cout << "ordering,d,p,seconds,checksum\n";
            std::cout << bench_label << ',' << bench_cfg.dim << ',' << bench_cfg.threads << ','
                      << r.seconds << ',' << std::setprecision(17) << r.checksum << "\n";
        } else if (*cmd_rep) {
            opt.nd.solver = opt.vifps.solver;
            opt.nd.n_base = opt.vifps.n_base;
            std::vector<go::Method> methods;
            std::stringstream ms(rep_methods);
            std::string tok;
            while (std::getline(ms, tok, ',')) methods.push_back(go::parse_method(tok));
            std::vector<std::uint64_t> seeds;
            if (rep_seeds.empty()) {
                seeds.push_back(rep_shuffle_seed);
            } else {
                std::stringstream ss(rep_seeds);
                while (std::getline(ss, tok, ',')) seeds.push_back(std::stoull(tok));
            }
            std::cerr << "report in=" << rep_in.in << " methods=" << rep_methods << " seeds=";
            for (auto s : seeds) std::cerr << s << ' ';
            std::cerr << "\n";
            go::Graph g = read_graph(rep_in.in, rep_in.format, rep_in.zero_based,
                                     rep_in.symmetrize);
            auto rows = go::run_report(g, methods, seeds, opt);
            std::ostringstream csv;
            csv << "method,seed,mlogGapA,delta,mlogA,warning,hubRatio";
            if (!rep_no_timing) csv << ",seconds";
            csv << ",lower,conv1Ref,wheelRef,upperGap,warningThreshold\n";
            csv << std::setprecision(6) << std::fixed;
            for (const auto& r : rows) {
                csv << r.method << ',' << r.seed << ',' << r.report.mlog_gap_a << ','
                    << r.report.delta << ',' << r.report.mlog_a << ','
                    << (r.report.warning ? 1 : 0) << ',' << r.slashburn_hub_ratio;
                if (!rep_no_timing) csv << ',' << r.seconds;
                csv << ',' << r.report.bounds.lower << ',' << r.report.bounds.conv1_ref << ','
                    << r.report.bounds.wheel_ref << ',' << r.report.bounds.upper_gap << ','
                    << r.report.bounds.warning_threshold << "\n";
            }
            if (rep_out.empty())
                std::cout << csv.str();
            else
                open_out(rep_out) << csv.str();
        }
    } catch (const go::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const go::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
