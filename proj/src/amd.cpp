// Approximate minimum degree ordering on a quotient graph, following the
// Amestoy-Davis-Duff scheme: approximate external degrees, element
// absorption, supervariable merging, mass elimination, and dense-row
// deferral. Ties inside a degree bucket resolve most-recently-updated
// first, which keeps elimination fronts moving along banded structures.

#include "graphorder/orderings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace graphorder {

namespace internal {

std::vector<vidx> amd_layout(const Graph& g) {
    const vidx n = g.n();
    std::vector<vidx> order;
    order.reserve(size_t(n));
    if (n == 0) return order;

    // Dense rows leave the quotient graph up front and are ordered last;
    // star-like rows otherwise make every element touch them.
    const vidx dense_cut =
        std::max<vidx>(16, vidx(10.0 * std::sqrt(double(n))));
    std::vector<bool> dense(size_t(n), false);
    std::vector<vidx> dense_rows;
    for (vidx v = 0; v < n; ++v) {
        if (g.degree(v) >= dense_cut && g.degree(v) > 0) {
            dense[size_t(v)] = true;
            dense_rows.push_back(v);
        }
    }
    if (vidx(dense_rows.size()) == n) {
        // Everything dense (near-complete graph): plain degree order.
        dense_rows.clear();
        dense.assign(size_t(n), false);
    }

    // Quotient graph state. A node is a supervariable (principal) until
    // eliminated (element) or absorbed into another supervariable.
    enum class State : unsigned char { Variable, Element, Dead };
    std::vector<State> state(size_t(n), State::Variable);
    std::vector<std::vector<vidx>> avar(static_cast<size_t>(n));  // adjacent supervariables
    std::vector<std::vector<vidx>> aelem(static_cast<size_t>(n)); // adjacent elements
    std::vector<std::vector<vidx>> lvars(static_cast<size_t>(n)); // element -> variable list
    std::vector<vidx> lsize(size_t(n), 0);           // live size of lvars, vertex units
    std::vector<vidx> svsize(size_t(n), 1);          // supervariable size
    std::vector<vidx> merge_next(size_t(n), -1);     // absorbed-chain links
    std::vector<vidx> merge_tail(static_cast<size_t>(n));
    std::iota(merge_tail.begin(), merge_tail.end(), 0);
    // Assembly-tree links: an element absorbed while forming a new element is
    // its child; mass-eliminated nodes hang off their pivot. The returned
    // order is a postorder of this forest (children first), which lays
    // subtrees out contiguously without changing the fill.
    std::vector<vidx> tree_parent(size_t(n), -1);
    std::vector<std::vector<vidx>> tree_children(static_cast<size_t>(n));
    std::vector<std::vector<vidx>> mass_children(static_cast<size_t>(n));
    std::vector<vidx> pivot_roots; // elements never absorbed, elimination order

    for (vidx v = 0; v < n; ++v) {
        if (dense[size_t(v)]) continue;
        for (vidx u : g.neighbors(v))
            if (!dense[size_t(u)]) avar[size_t(v)].push_back(u);
    }

    // Degree buckets, doubly linked, LIFO insertion.
    std::vector<vidx> head(size_t(n) + 1, -1), nxt(size_t(n), -1), prv(size_t(n), -1);
    std::vector<vidx> deg(size_t(n), 0);
    auto bucket_insert = [&](vidx i, vidx d) {
        deg[size_t(i)] = d;
        nxt[size_t(i)] = head[size_t(d)];
        prv[size_t(i)] = -1;
        if (head[size_t(d)] != -1) prv[size_t(head[size_t(d)])] = i;
        head[size_t(d)] = i;
    };
    auto bucket_remove = [&](vidx i) {
        if (prv[size_t(i)] != -1)
            nxt[size_t(prv[size_t(i)])] = nxt[size_t(i)];
        else
            head[size_t(deg[size_t(i)])] = nxt[size_t(i)];
        if (nxt[size_t(i)] != -1) prv[size_t(nxt[size_t(i)])] = prv[size_t(i)];
    };

    vidx live = 0;
    for (vidx v = n - 1; v >= 0; --v) { // reverse insert: low ids head the buckets
        if (dense[size_t(v)]) continue;
        bucket_insert(v, vidx(avar[size_t(v)].size()));
        ++live;
    }

    std::vector<vidx> stamp(size_t(n), 0);
    vidx stamp_tag = 0;
    std::vector<vidx> wdeg(size_t(n), 0); // per-element |L_e \ L_p| workspace (vertex units)
    std::vector<vidx> welem(size_t(n), 0);
    vidx wtag = 0;

    auto emit = [&](vidx i) {
        for (vidx v = i; v != -1; v = merge_next[size_t(v)]) order.push_back(v);
    };

    vidx min_deg = 0;
    vidx eliminated = 0;
    std::vector<vidx> lp, mass, hash_nodes;

    while (eliminated < live) {
        while (min_deg <= n && head[size_t(min_deg)] == -1) ++min_deg;
        vidx p = head[size_t(min_deg)];
        bucket_remove(p);

        // Build L_p = (avar[p] U union of adjacent element vars) \ {p}.
        ++stamp_tag;
        stamp[size_t(p)] = stamp_tag;
        lp.clear();
        for (vidx v : avar[size_t(p)]) {
            if (state[size_t(v)] != State::Variable) continue;
            if (stamp[size_t(v)] == stamp_tag) continue;
            stamp[size_t(v)] = stamp_tag;
            lp.push_back(v);
        }
        for (vidx e : aelem[size_t(p)]) {
            if (state[size_t(e)] != State::Element) continue;
            for (vidx v : lvars[size_t(e)]) {
                if (state[size_t(v)] != State::Variable) continue;
                if (stamp[size_t(v)] == stamp_tag) continue;
                stamp[size_t(v)] = stamp_tag;
                lp.push_back(v);
            }
            state[size_t(e)] = State::Dead; // absorbed by the new element
            lvars[size_t(e)].clear();
            tree_parent[size_t(e)] = p;
            tree_children[size_t(p)].push_back(e);
        }
        avar[size_t(p)].clear();
        aelem[size_t(p)].clear();

        state[size_t(p)] = State::Element;
        pivot_roots.push_back(p);
        eliminated += svsize[size_t(p)];

        vidx lp_weight = 0;
        for (vidx v : lp) lp_weight += svsize[size_t(v)];
        lvars[size_t(p)] = lp;
        lsize[size_t(p)] = lp_weight;

        if (lp.empty()) continue;

        // First pass: w[e] = |L_e \ L_p| for every element seen from L_p.
        ++wtag;
        for (vidx i : lp) {
            for (vidx e : aelem[size_t(i)]) {
                if (state[size_t(e)] != State::Element) continue;
                if (welem[size_t(e)] != wtag) {
                    welem[size_t(e)] = wtag;
                    wdeg[size_t(e)] = lsize[size_t(e)];
                }
                wdeg[size_t(e)] -= svsize[size_t(i)];
            }
        }

        // Second pass: prune lists, recompute approximate degrees, collect
        // mass eliminations and supervariable candidates.
        mass.clear();
        hash_nodes.clear();
        for (vidx i : lp) {
            auto& av = avar[size_t(i)];
            vidx ext_var = 0;
            size_t w = 0;
            for (vidx v : av) {
                if (state[size_t(v)] != State::Variable) continue;
                if (stamp[size_t(v)] == stamp_tag) continue; // inside L_p or p
                av[w++] = v;
                ext_var += svsize[size_t(v)];
            }
            av.resize(w);

            auto& ae = aelem[size_t(i)];
            vidx ext_elem = 0;
            w = 0;
            for (vidx e : ae) {
                if (state[size_t(e)] != State::Element) continue;
                ae[w++] = e;
                ext_elem += std::max<vidx>(0, wdeg[size_t(e)]);
            }
            ae.resize(w);
            ae.insert(std::lower_bound(ae.begin(), ae.end(), p), p);

            vidx lp_ext = lp_weight - svsize[size_t(i)];
            vidx d_new = std::min<vidx>(
                {vidx(n), deg[size_t(i)] + lp_ext, ext_var + lp_ext + ext_elem});
            d_new = std::max<vidx>(d_new, 0);

            bucket_remove(i);
            if (av.empty() && ae.size() == 1) {
                // Mass elimination: i lives entirely inside the new element,
                // eliminating it now adds no fill.
                mass.push_back(i);
            } else {
                bucket_insert(i, d_new);
                if (d_new < min_deg) min_deg = d_new;
                hash_nodes.push_back(i);
            }
        }

        // Mass-eliminated nodes are interchangeable fill-wise; emitting the
        // interior (higher original degree) first keeps an elimination
        // sweep moving in its current direction on banded remainders.
        std::sort(mass.begin(), mass.end(), [&](vidx a, vidx b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        for (vidx i : mass) {
            state[size_t(i)] = State::Dead;
            tree_parent[size_t(i)] = p;
            mass_children[size_t(p)].push_back(i);
            eliminated += svsize[size_t(i)];
        }
        if (!mass.empty()) {
            auto& lv = lvars[size_t(p)];
            size_t w = 0;
            vidx remaining = 0;
            for (vidx v : lv) {
                if (state[size_t(v)] != State::Variable) continue;
                lv[w++] = v;
                remaining += svsize[size_t(v)];
            }
            lv.resize(w);
            lsize[size_t(p)] = remaining;
        }

        // Supervariable detection among the updated nodes: equal quotient
        // adjacency (up to each other) means indistinguishable.
        if (hash_nodes.size() > 1) {
            auto hash_of = [&](vidx i) {
                std::uint64_t h = std::uint64_t(i);
                for (vidx v : avar[size_t(i)]) h += std::uint64_t(v) + 1;
                for (vidx e : aelem[size_t(i)]) h += (std::uint64_t(e) + 1) * 0x10001u;
                return h;
            };
            std::vector<std::pair<std::uint64_t, vidx>> hs;
            hs.reserve(hash_nodes.size());
            for (vidx i : hash_nodes)
                if (state[size_t(i)] == State::Variable) hs.emplace_back(hash_of(i), i);
            std::sort(hs.begin(), hs.end());
            auto indistinguishable = [&](vidx i, vidx j) {
                if (aelem[size_t(i)] != aelem[size_t(j)]) return false;
                const auto& a = avar[size_t(i)];
                const auto& b = avar[size_t(j)];
                if (a.size() != b.size()) return false;
                // Compare a \ {j} with b \ {i}; lists are unsorted after
                // pruning only if input was, so compare as sets via stamps.
                ++stamp_tag;
                for (vidx v : a)
                    if (v != j) stamp[size_t(v)] = stamp_tag;
                for (vidx v : b)
                    if (v != i && stamp[size_t(v)] != stamp_tag) return false;
                return true;
            };
            for (size_t s = 0; s < hs.size();) {
                size_t t = s;
                while (t < hs.size() && hs[t].first == hs[s].first) ++t;
                for (size_t a = s; a < t; ++a) {
                    vidx i = hs[a].second;
                    if (state[size_t(i)] != State::Variable) continue;
                    for (size_t b = a + 1; b < t; ++b) {
                        vidx j = hs[b].second;
                        if (state[size_t(j)] != State::Variable) continue;
                        if (!indistinguishable(i, j)) continue;
                        // absorb j into i
                        bucket_remove(j);
                        state[size_t(j)] = State::Dead;
                        merge_next[size_t(merge_tail[size_t(i)])] = j;
                        merge_tail[size_t(i)] = merge_tail[size_t(j)];
                        svsize[size_t(i)] += svsize[size_t(j)];
                        vidx d_adj = std::max<vidx>(0, deg[size_t(i)] - svsize[size_t(j)]);
                        bucket_remove(i);
                        bucket_insert(i, d_adj);
                        if (d_adj < min_deg) min_deg = d_adj;
                    }
                }
                s = t;
            }
        }
    }

    // Postorder over the assembly forest, roots in elimination order. A
    // node comes after its absorbed-element subtrees and right before its
    // mass set, matching the true elimination sequence.
    std::vector<std::pair<vidx, size_t>> stack;
    for (vidx r : pivot_roots) {
        if (tree_parent[size_t(r)] != -1) continue;
        stack.emplace_back(r, 0);
        while (!stack.empty()) {
            auto& [node, next_child] = stack.back();
            auto& kids = tree_children[size_t(node)];
            if (next_child < kids.size()) {
                vidx c = kids[next_child++];
                stack.emplace_back(c, 0);
            } else {
                emit(node);
                for (vidx mchild : mass_children[size_t(node)]) emit(mchild);
                stack.pop_back();
            }
        }
    }

    std::sort(dense_rows.begin(), dense_rows.end(), [&](vidx a, vidx b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });
    for (vidx v : dense_rows) order.push_back(v);
    return order;
}

} // namespace internal

namespace {

// Largest component first; ties by smallest contained vertex id. The
// labeling from connected_components already encodes that order.
std::vector<std::vector<vidx>> component_vertex_lists(const Graph& g) {
    ComponentLabeling cc = connected_components(g);
    std::vector<std::vector<vidx>> lists(static_cast<size_t>(cc.component_count));
    for (vidx k = 0; k < cc.component_count; ++k)
        lists[size_t(k)].reserve(size_t(cc.component_sizes[size_t(k)]));
    for (vidx v = 0; v < g.n(); ++v) lists[size_t(cc.labels[size_t(v)])].push_back(v);
    return lists;
}

} // namespace

Permutation amd(const Graph& g) {
    if (!g.is_symmetric()) throw DataError("amd: graph must be symmetric");
    std::vector<vidx> layout;
    layout.reserve(size_t(g.n()));
    for (const auto& comp : component_vertex_lists(g)) {
        auto [sub, map] = induced_subgraph(g, comp);
        for (vidx local : internal::amd_layout(sub)) layout.push_back(map[size_t(local)]);
    }
    return permutation_from_layout(layout);
}

} // namespace graphorder
