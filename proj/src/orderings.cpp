#include "graphorder/orderings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <tuple>
#include <vector>

namespace graphorder {

namespace internal {
std::vector<vidx> amd_layout(const Graph& g); // amd.cpp
}

namespace {

std::vector<std::vector<vidx>> component_lists(const Graph& g) {
    ComponentLabeling cc = connected_components(g);
    std::vector<std::vector<vidx>> lists(static_cast<size_t>(cc.component_count));
    for (vidx k = 0; k < cc.component_count; ++k)
        lists[size_t(k)].reserve(size_t(cc.component_sizes[size_t(k)]));
    for (vidx v = 0; v < g.n(); ++v) lists[size_t(cc.labels[size_t(v)])].push_back(v);
    return lists;
}

std::pair<std::vector<vidx>, vidx> bfs_last_level(const Graph& g, vidx start,
                                                  std::vector<vidx>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<vidx> frontier{start}, next_frontier;
    dist[size_t(start)] = 0;
    vidx ecc = 0;
    std::vector<vidx> last = frontier;
    while (!frontier.empty()) {
        next_frontier.clear();
        for (vidx v : frontier) {
            for (vidx u : g.neighbors(v)) {
                if (dist[size_t(u)] == -1) {
                    dist[size_t(u)] = dist[size_t(v)] + 1;
                    next_frontier.push_back(u);
                }
            }
        }
        if (!next_frontier.empty()) {
            ++ecc;
            last = next_frontier;
        }
        frontier.swap(next_frontier);
    }
    return {last, ecc};
}

// Repeated eccentricity sweeps from the min-degree vertex; each sweep
// restarts from the min-degree vertex of the last BFS level.
vidx pseudo_peripheral_vertex(const Graph& g) {
    vidx start = 0;
    for (vidx v = 1; v < g.n(); ++v)
        if (g.degree(v) < g.degree(start)) start = v;
    std::vector<vidx> dist(static_cast<size_t>(g.n()));
    vidx ecc = -1;
    for (int sweep = 0; sweep < 16; ++sweep) {
        auto [last, e] = bfs_last_level(g, start, dist);
        if (e <= ecc) break;
        ecc = e;
        vidx cand = last[0];
        for (vidx v : last)
            if (g.degree(v) < g.degree(cand) ||
                (g.degree(v) == g.degree(cand) && v < cand))
                cand = v;
        start = cand;
    }
    return start;
}

// Cuthill-McKee order of one connected subgraph, already reversed.
std::vector<vidx> rcm_component_layout(const Graph& g) {
    vidx n = g.n();
    if (n == 1) return {0};
    std::vector<vidx> order;
    order.reserve(size_t(n));
    vidx start = pseudo_peripheral_vertex(g);
    std::vector<bool> visited(size_t(n), false);
    std::queue<vidx> q;
    q.push(start);
    visited[size_t(start)] = true;
    std::vector<vidx> children;
    while (!q.empty()) {
        vidx v = q.front();
        q.pop();
        order.push_back(v);
        children.clear();
        for (vidx u : g.neighbors(v)) {
            if (!visited[size_t(u)]) {
                visited[size_t(u)] = true;
                children.push_back(u);
            }
        }
        std::sort(children.begin(), children.end(), [&](vidx a, vidx b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
            return a < b;
        });
        for (vidx u : children) q.push(u);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

} // namespace

Permutation rcm(const Graph& g) {
    if (!g.is_symmetric()) throw DataError("rcm: graph must be symmetric");
    std::vector<vidx> layout;
    layout.reserve(size_t(g.n()));
    for (const auto& comp : component_lists(g)) {
        auto [sub, map] = induced_subgraph(g, comp);
        for (vidx local : rcm_component_layout(sub)) layout.push_back(map[size_t(local)]);
    }
    return permutation_from_layout(layout);
}

// ---- SlashBurn -----------------------------------------------------------

namespace {

// Hubs to the front in removal order, spoke components packed toward the
// back (later rounds land closer to the middle, smaller components closer
// to the end), iterating on the shrinking giant component.
std::vector<vidx> slashburn_layout(const Graph& g, const SlashburnParams& params) {
    vidx n = g.n();
    if (n == 0) return {};
    if (n == 1) return {0};

    std::vector<vidx> front;
    std::vector<std::vector<vidx>> back_rounds;
    std::vector<vidx> current(static_cast<size_t>(n));
    std::iota(current.begin(), current.end(), 0);

    while (true) {
        auto [sub, map] = induced_subgraph(g, current);
        auto comps = component_lists(sub); // largest first

        if (comps.size() > 1) {
            std::vector<vidx> round_seq;
            for (size_t k = 1; k < comps.size(); ++k) {
                auto [csub, cmap] = induced_subgraph(sub, comps[k]);
                std::vector<vidx> block(static_cast<size_t>(csub.n()));
                std::iota(block.begin(), block.end(), 0);
                if (csub.n() > params.min_component) {
                    block = slashburn_layout(csub, params);
                } else {
                    std::sort(block.begin(), block.end(), [&](vidx a, vidx b) {
                        if (csub.degree(a) != csub.degree(b))
                            return csub.degree(a) > csub.degree(b);
                        return cmap[size_t(a)] < cmap[size_t(b)];
                    });
                }
                for (vidx local : block) {
                    vidx in_sub = cmap[size_t(local)];
                    round_seq.push_back(map[size_t(in_sub)]);
                }
            }
            back_rounds.push_back(std::move(round_seq));
        }

        auto [gsub, gmap] = induced_subgraph(sub, comps[0]);
        vidx gn = gsub.n();
        vidx k = std::max<vidx>(1, vidx(std::ceil(params.hub_ratio * double(gn))));
        std::vector<vidx> by_degree(static_cast<size_t>(gn));
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::sort(by_degree.begin(), by_degree.end(), [&](vidx a, vidx b) {
            if (gsub.degree(a) != gsub.degree(b)) return gsub.degree(a) > gsub.degree(b);
            return gmap[size_t(a)] < gmap[size_t(b)];
        });
        if (gn <= k) {
            for (vidx local : by_degree) front.push_back(map[size_t(gmap[size_t(local)])]);
            break;
        }
        std::vector<bool> is_hub(size_t(gn), false);
        for (vidx i = 0; i < k; ++i) {
            vidx local = by_degree[size_t(i)];
            is_hub[size_t(local)] = true;
            front.push_back(map[size_t(gmap[size_t(local)])]);
        }
        std::vector<vidx> rest;
        rest.reserve(size_t(gn - k));
        for (vidx v = 0; v < gn; ++v)
            if (!is_hub[size_t(v)]) rest.push_back(map[size_t(gmap[size_t(v)])]);
        current = std::move(rest);
    }

    std::vector<vidx> layout = std::move(front);
    for (auto it = back_rounds.rbegin(); it != back_rounds.rend(); ++it)
        layout.insert(layout.end(), it->begin(), it->end());
    return layout;
}

} // namespace

Permutation slashburn(const Graph& g, const SlashburnParams& params) {
    if (!g.is_symmetric()) throw DataError("slashburn: graph must be symmetric");
    if (params.hub_ratio <= 0.0 || params.hub_ratio > 0.5)
        throw DataError("slashburn: hub_ratio must be in (0, 0.5]");
    return permutation_from_layout(slashburn_layout(g, params));
}

// ---- Nested dissection -----------------------------------------------------

namespace {

// Greedy vertex cover of the cut edges between side 0 and side 1: take the
// endpoint covering the most uncovered edges; ties prefer side 0 (the
// smaller median half), then the smaller id.
std::vector<bool> greedy_separator(const Graph& g, const std::vector<char>& side) {
    vidx n = g.n();
    std::vector<vidx> count(size_t(n), 0);
    eidx uncovered = 0;
    for (vidx v = 0; v < n; ++v)
        for (vidx u : g.neighbors(v))
            if (side[size_t(v)] == 0 && side[size_t(u)] == 1) {
                ++count[size_t(v)];
                ++count[size_t(u)];
                ++uncovered;
            }
    using Entry = std::tuple<vidx, char, vidx>; // (count, side, id)
    auto better = [](const Entry& a, const Entry& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) > std::get<1>(b);
        return std::get<2>(a) > std::get<2>(b);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(better)> heap(better);
    for (vidx v = 0; v < n; ++v)
        if (count[size_t(v)] > 0) heap.emplace(count[size_t(v)], side[size_t(v)], v);

    std::vector<bool> in_sep(size_t(n), false);
    while (uncovered > 0 && !heap.empty()) {
        auto [c, s, v] = heap.top();
        heap.pop();
        if (in_sep[size_t(v)] || c != count[size_t(v)]) continue; // stale
        in_sep[size_t(v)] = true;
        uncovered -= count[size_t(v)];
        count[size_t(v)] = 0;
        for (vidx u : g.neighbors(v)) {
            if (in_sep[size_t(u)] || side[size_t(u)] == side[size_t(v)]) continue;
            if (count[size_t(u)] > 0) {
                --count[size_t(u)];
                if (count[size_t(u)] > 0)
                    heap.emplace(count[size_t(u)], side[size_t(u)], u);
            }
        }
    }
    return in_sep;
}

void nd_layout(const Graph& g, const std::vector<vidx>& to_global, const NdParams& params,
               int depth, std::vector<vidx>& out) {
    vidx n = g.n();
    if (n == 0) return;
    auto settle_with_amd = [&] {
        for (vidx local : internal::amd_layout(g)) out.push_back(to_global[size_t(local)]);
    };
    if (n <= params.n_base || depth > 128) {
        settle_with_amd();
        return;
    }
    FiedlerCut cut = fiedler_cut(g, params.solver);
    if (cut.degenerate) {
        settle_with_amd();
        return;
    }

    std::vector<char> side(size_t(n), 0);
    for (vidx v : cut.side_b) side[size_t(v)] = 1;
    std::vector<bool> in_sep = greedy_separator(g, side);

    std::vector<vidx> part_a, part_b, sep;
    for (vidx v = 0; v < n; ++v) {
        if (in_sep[size_t(v)])
            sep.push_back(v);
        else if (side[size_t(v)] == 0)
            part_a.push_back(v);
        else
            part_b.push_back(v);
    }
    if (sep.empty() || part_a.empty() || part_b.empty()) {
        settle_with_amd();
        return;
    }

    for (const auto* part : {&part_a, &part_b}) {
        auto [psub, pmap] = induced_subgraph(g, *part);
        for (const auto& comp : component_lists(psub)) {
            auto [csub, cmap] = induced_subgraph(psub, comp);
            std::vector<vidx> comp_global(comp.size());
            for (size_t i = 0; i < comp.size(); ++i)
                comp_global[i] = to_global[size_t(pmap[size_t(cmap[i])])];
            nd_layout(csub, comp_global, params, depth + 1, out);
        }
    }
    auto [ssub, smap] = induced_subgraph(g, sep);
    for (vidx local : internal::amd_layout(ssub))
        out.push_back(to_global[size_t(smap[size_t(local)])]);
}

} // namespace

Permutation nested_dissection(const Graph& g, const NdParams& params) {
    if (!g.is_symmetric()) throw DataError("nested_dissection: graph must be symmetric");
    if (params.n_base < 2) throw DataError("nested_dissection: n_base must be >= 2");
    std::vector<vidx> layout;
    layout.reserve(size_t(g.n()));
    for (const auto& comp : component_lists(g)) {
        auto [sub, map] = induced_subgraph(g, comp);
        nd_layout(sub, map, params, 0, layout);
    }
    return permutation_from_layout(layout);
}

Permutation identity_order(const Graph& g) {
    return Permutation::identity(g.n());
}

} // namespace graphorder
