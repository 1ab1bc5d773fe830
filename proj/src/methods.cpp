#include "graphorder/methods.hpp"

#include <chrono>

namespace graphorder {

namespace internal {
std::vector<vidx> amd_layout(const Graph& g); // amd.cpp
}

Method parse_method(const std::string& name) {
    if (name == "identity") return Method::Identity;
    if (name == "random") return Method::Random;
    if (name == "rcm") return Method::Rcm;
    if (name == "amd") return Method::Amd;
    if (name == "slashburn" || name == "slash") return Method::Slashburn;
    if (name == "nd") return Method::Nd;
    if (name == "fcut1" || name == "fiedler") return Method::Fcut1;
    if (name == "vifps") return Method::Vifps;
    throw DataError("unknown ordering method '" + name + "'");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Identity: return "identity";
        case Method::Random: return "random";
        case Method::Rcm: return "rcm";
        case Method::Amd: return "amd";
        case Method::Slashburn: return "slashburn";
        case Method::Nd: return "nd";
        case Method::Fcut1: return "fcut1";
        case Method::Vifps: return "vifps";
    }
    return "?";
}

namespace {

// fcut1 over possibly disconnected graphs: components largest-first, amd
// fallback where the Fiedler vector is degenerate or undefined.
Permutation fcut1_order(const Graph& g, const MethodOptions& opt) {
    ComponentLabeling cc = connected_components(g);
    std::vector<std::vector<vidx>> comps(static_cast<size_t>(cc.component_count));
    for (vidx v = 0; v < g.n(); ++v) comps[size_t(cc.labels[size_t(v)])].push_back(v);
    std::vector<vidx> layout;
    layout.reserve(size_t(g.n()));
    for (const auto& comp : comps) {
        auto [sub, map] = induced_subgraph(g, comp);
        if (sub.n() < 2) {
            for (vidx v : comp) layout.push_back(v);
            continue;
        }
        FiedlerResult fr;
        Permutation p = fiedler_order(sub, opt.fiedler, &fr);
        if (fr.degenerate) {
            for (vidx local : internal::amd_layout(sub)) layout.push_back(map[size_t(local)]);
            continue;
        }
        if (!fr.converged && opt.strict)
            throw NumericalError("fcut1: eigensolver did not converge");
        const auto& inv = p.inverse();
        for (vidx pos = 0; pos < sub.n(); ++pos)
            layout.push_back(map[size_t(inv[size_t(pos)])]);
    }
    return permutation_from_layout(layout);
}

} // namespace

Permutation apply_method(const Graph& g, Method m, const MethodOptions& opt) {
    switch (m) {
        case Method::Identity: return identity_order(g);
        case Method::Random: return random_shuffle_permutation(g.n(), opt.random_seed);
        case Method::Vifps:
            if (g.is_symmetric()) return vifps(g, opt.vifps);
            return vifps_directed(g, opt.vifps).first;
        default: break;
    }
    const Graph& s = g.is_symmetric() ? g : symmetrize(g);
    switch (m) {
        case Method::Rcm: return rcm(s);
        case Method::Amd: return amd(s);
        case Method::Slashburn: return slashburn(s, opt.slashburn);
        case Method::Nd: return nested_dissection(s, opt.nd);
        case Method::Fcut1: return fcut1_order(s, opt);
        default: break;
    }
    throw DataError("apply_method: unhandled method");
}

std::vector<ReportRow> run_report(const Graph& g, const std::vector<Method>& methods,
                                  const std::vector<std::uint64_t>& shuffle_seeds,
                                  const MethodOptions& opt,
                                  const std::vector<double>& slashburn_sweep) {
    std::vector<ReportRow> rows;
    for (std::uint64_t seed : shuffle_seeds) {
        Graph shuffled = apply_permutation(g, random_shuffle_permutation(g.n(), seed));
        for (Method m : methods) {
            ReportRow row;
            row.method = method_name(m);
            row.seed = seed;
            auto t0 = std::chrono::steady_clock::now();
            if (m == Method::Slashburn) {
                // Best score over the hub-ratio sweep.
                bool first = true;
                for (double ratio : slashburn_sweep) {
                    MethodOptions o = opt;
                    o.slashburn.hub_ratio = ratio;
                    Permutation p = apply_method(shuffled, m, o);
                    AalReport rep = evaluate(shuffled, p);
                    if (first || rep.mlog_gap_a < row.report.mlog_gap_a) {
                        row.report = rep;
                        row.slashburn_hub_ratio = ratio;
                        first = false;
                    }
                }
            } else {
                Permutation p = apply_method(shuffled, m, opt);
                row.report = evaluate(shuffled, p);
            }
            auto t1 = std::chrono::steady_clock::now();
            row.seconds = std::chrono::duration<double>(t1 - t0).count();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace graphorder
