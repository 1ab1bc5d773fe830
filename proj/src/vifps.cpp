#include "graphorder/vifps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphorder {

namespace internal {
std::vector<vidx> amd_layout(const Graph& g); // amd.cpp
}

std::optional<ParetoSplit> pareto_split(const Graph& g, double rvol, double rminor) {
    if (rvol <= 0.0 || rvol > 100.0 || rminor <= 0.0 || rminor > 100.0)
        throw DataError("pareto_split: ratios must be in (0, 100]");
    eidx volume = g.nnz();
    if (volume == 0) return std::nullopt;
    vidx n = g.n();
    std::vector<vidx> by_degree(static_cast<size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](vidx a, vidx b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    double need = rvol / 100.0 * double(volume);
    double held = 0.0;
    size_t prefix = 0;
    while (prefix < by_degree.size() && held < need)
        held += double(g.degree(by_degree[prefix++]));
    if (held < need) return std::nullopt;
    // Complete the boundary degree class: a split that cuts through a set of
    // equal-degree vertices would depend on vertex labels, not structure.
    while (prefix < by_degree.size() &&
           g.degree(by_degree[prefix]) == g.degree(by_degree[prefix - 1]))
        ++prefix;
    if (double(prefix) > rminor / 100.0 * double(n)) return std::nullopt;
    ParetoSplit split;
    split.minority.assign(by_degree.begin(), by_degree.begin() + prefix);
    split.majority.assign(by_degree.begin() + prefix, by_degree.end());
    std::sort(split.majority.begin(), split.majority.end());
    return split;
}

namespace {

struct Assembler {
    std::vector<vidx> layout;          // global ids in new order
    std::vector<size_t> block_starts;  // aggregation blocks for orientation
    std::vector<char> placed;          // by global id

    explicit Assembler(vidx n) : placed(static_cast<size_t>(n), 0) {}

    void emit_block(const std::vector<vidx>& sub_layout, const std::vector<vidx>& to_global) {
        block_starts.push_back(layout.size());
        for (vidx local : sub_layout) {
            vidx v = to_global[size_t(local)];
            layout.push_back(v);
            placed[size_t(v)] = 1;
        }
    }
};

std::vector<std::vector<vidx>> component_lists(const Graph& g) {
    ComponentLabeling cc = connected_components(g);
    std::vector<std::vector<vidx>> lists(static_cast<size_t>(cc.component_count));
    for (vidx v = 0; v < g.n(); ++v) lists[size_t(cc.labels[size_t(v)])].push_back(v);
    return lists;
}

struct VifpsWorker {
    const Graph& root;           // adjacency used for degree ties and polish
    const ParetoParams& params;
    Assembler out;

    void settle_amd(const Graph& g, const std::vector<vidx>& to_global) {
        out.emit_block(internal::amd_layout(g), to_global);
    }

    // Minority vertices: amd over their induced subgraph; when that graph is
    // edgeless the tie rule is degree (in the parent graph) descending, id up.
    void emit_minority(const Graph& g, const std::vector<vidx>& to_global,
                       const std::vector<vidx>& minority) {
        auto [msub, mmap] = induced_subgraph(g, minority);
        if (msub.nnz() == 0) {
            std::vector<vidx> order(minority.begin(), minority.end());
            std::sort(order.begin(), order.end(), [&](vidx a, vidx b) {
                if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
                return a < b;
            });
            out.emit_block(order, to_global);
            return;
        }
        std::vector<vidx> block;
        for (const auto& comp : component_lists(msub)) {
            auto [csub, cmap] = induced_subgraph(msub, comp);
            for (vidx local : internal::amd_layout(csub))
                block.push_back(mmap[size_t(cmap[size_t(local)])]);
        }
        out.emit_block(block, to_global);
    }

    // Edges from this vertex set into the already-placed prefix.
    eidx prefix_affinity(const std::vector<vidx>& side, const std::vector<vidx>& to_global) {
        eidx edges = 0;
        for (vidx v : side)
            for (vidx u : root.neighbors(to_global[size_t(v)]))
                if (out.placed[size_t(u)]) ++edges;
        return edges;
    }

    // Median Fiedler cut of a connected subgraph, then full recursion on the
    // connected pieces of each side, components largest-first. The side with
    // more edges into the already-placed prefix goes first (the Fiedler sign
    // is arbitrary, so "side A" alone carries no placement information);
    // side A leads on ties and at the start of the stream.
    void cut_and_recurse(const Graph& g, const std::vector<vidx>& to_global, int depth) {
        FiedlerCut cut = fiedler_cut(g, params.solver);
        if (cut.degenerate) {
            settle_amd(g, to_global);
            return;
        }
        std::vector<const std::vector<vidx>*> sides{&cut.side_a, &cut.side_b};
        if (prefix_affinity(cut.side_b, to_global) > prefix_affinity(cut.side_a, to_global))
            std::swap(sides[0], sides[1]);
        for (const auto* side : sides) {
            auto [psub, pmap] = induced_subgraph(g, *side);
            for (const auto& comp : component_lists(psub)) {
                auto [csub, cmap] = induced_subgraph(psub, comp);
                std::vector<vidx> comp_global(comp.size());
                for (size_t i = 0; i < comp.size(); ++i)
                    comp_global[i] = to_global[size_t(pmap[size_t(cmap[i])])];
                order(csub, comp_global, depth + 1);
            }
        }
    }

    // One recursion level on a connected subgraph.
    void order(const Graph& g, const std::vector<vidx>& to_global, int depth) {
        if (g.n() == 0) return;
        if (g.n() <= params.n_base || depth >= params.max_depth || g.nnz() == 0) {
            settle_amd(g, to_global);
            return;
        }
        auto split = pareto_split(g, params.rvol, params.rminor);
        if (!split) {
            cut_and_recurse(g, to_global, depth);
            return;
        }
        auto emit_major = [&] {
            auto [jsub, jmap] = induced_subgraph(g, split->majority);
            for (const auto& comp : component_lists(jsub)) {
                auto [csub, cmap] = induced_subgraph(jsub, comp);
                std::vector<vidx> comp_global(comp.size());
                for (size_t i = 0; i < comp.size(); ++i)
                    comp_global[i] = to_global[size_t(jmap[size_t(cmap[i])])];
                if (csub.n() <= params.n_base || csub.nnz() == 0)
                    settle_amd(csub, comp_global);
                else
                    cut_and_recurse(csub, comp_global, depth + 1);
            }
        };
        if (params.minority_placement == MinorityPlacement::Front) {
            emit_minority(g, to_global, split->minority);
            emit_major();
        } else {
            emit_major();
            emit_minority(g, to_global, split->minority);
        }
    }
};

// Orient each aggregation block to minimize the log-distance cost of its
// edges into the already-placed prefix; greedy left-to-right, deterministic.
std::vector<vidx> polish_orientation(const Graph& root, const Assembler& asem) {
    const auto& layout = asem.layout;
    std::vector<vidx> pos(size_t(root.n()), -1);
    std::vector<vidx> final_layout(layout.size());
    for (size_t b = 0; b < asem.block_starts.size(); ++b) {
        size_t lo = asem.block_starts[b];
        size_t hi = b + 1 < asem.block_starts.size() ? asem.block_starts[b + 1] : layout.size();
        double cost_asis = 0.0, cost_flip = 0.0;
        for (size_t i = lo; i < hi; ++i) {
            vidx v = layout[i];
            double p_asis = double(i);
            double p_flip = double(lo + (hi - 1 - i));
            for (vidx u : root.neighbors(v)) {
                if (pos[size_t(u)] == -1) continue; // not in the prefix
                double pu = double(pos[size_t(u)]);
                cost_asis += std::log2(1.0 + std::abs(p_asis - pu));
                cost_flip += std::log2(1.0 + std::abs(p_flip - pu));
            }
        }
        bool flip = cost_flip < cost_asis;
        for (size_t i = lo; i < hi; ++i) {
            size_t target = flip ? lo + (hi - 1 - i) : i;
            final_layout[target] = layout[i];
        }
        for (size_t i = lo; i < hi; ++i) pos[size_t(final_layout[i])] = vidx(i);
    }
    return final_layout;
}

std::vector<vidx> vifps_layout(const Graph& g, const ParetoParams& params) {
    VifpsWorker worker{g, params, Assembler(g.n())};
    for (const auto& comp : component_lists(g)) {
        auto [sub, map] = induced_subgraph(g, comp);
        worker.order(sub, map, 0);
    }
    return polish_orientation(g, worker.out);
}

} // namespace

Permutation vifps(const Graph& g, const ParetoParams& params) {
    if (!g.is_symmetric()) throw DataError("vifps: graph must be symmetric");
    if (params.n_base < 2) throw DataError("vifps: n_base must be >= 2");
    if (params.rvol <= 0 || params.rvol > 100 || params.rminor <= 0 || params.rminor > 100)
        throw DataError("vifps: Pareto ratios must be in (0, 100]");
    return permutation_from_layout(vifps_layout(g, params));
}

std::pair<Permutation, Permutation> vifps_directed(const Graph& g, const ParetoParams& params) {
    Graph embedded = bipartite_embed(g);
    std::vector<vidx> layout = vifps_layout(embedded, params);
    vidx n = g.n();
    std::vector<vidx> row_layout, col_layout;
    row_layout.reserve(size_t(n));
    col_layout.reserve(size_t(n));
    for (vidx v : layout) {
        if (v < n)
            row_layout.push_back(v);
        else
            col_layout.push_back(v - n);
    }
    return {permutation_from_layout(row_layout), permutation_from_layout(col_layout)};
}

} // namespace graphorder
