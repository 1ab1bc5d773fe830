#include "graphorder/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <string>

namespace graphorder {

// ---- Graph -----------------------------------------------------------------

Graph::Graph(vidx n, std::vector<eidx> offsets, std::vector<vidx> cols)
    : n_(n), offsets_(std::move(offsets)), cols_(std::move(cols)) {
    validate_and_finalize();
}

void Graph::validate_and_finalize() {
    if (n_ < 0) throw DataError("graph: negative vertex count");
    if (offsets_.size() != size_t(n_) + 1)
        throw DataError("graph: row offsets must have length n+1");
    if (offsets_[0] != 0 || offsets_[size_t(n_)] != eidx(cols_.size()))
        throw DataError("graph: row offsets do not bracket the column array");
    for (vidx v = 0; v < n_; ++v) {
        if (offsets_[v + 1] < offsets_[v])
            throw DataError("graph: row offsets not monotone");
        vidx prev = -1;
        for (eidx k = offsets_[v]; k < offsets_[v + 1]; ++k) {
            vidx u = cols_[size_t(k)];
            if (u < 0 || u >= n_) throw DataError("graph: column index out of range");
            if (u == v) throw DataError("graph: self-loop stored");
            if (u <= prev) throw DataError("graph: row not strictly increasing");
            prev = u;
        }
    }
    // Determine symmetry: every (u,v) needs its mirror.
    symmetric_ = true;
    for (vidx v = 0; v < n_ && symmetric_; ++v) {
        for (eidx k = offsets_[v]; k < offsets_[v + 1]; ++k) {
            auto row = neighbors(cols_[size_t(k)]);
            if (!std::binary_search(row.begin(), row.end(), v)) {
                symmetric_ = false;
                break;
            }
        }
    }
}

Graph Graph::from_edges(vidx n, const std::vector<std::pair<vidx, vidx>>& edges,
                        bool mirror) {
    if (n < 0) throw DataError("graph: negative vertex count");
    std::vector<eidx> counts(size_t(n) + 1, 0);
    auto check = [n](vidx u, vidx v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DataError("graph: edge endpoint out of range");
    };
    for (auto [u, v] : edges) {
        check(u, v);
        if (u == v) continue;
        ++counts[size_t(u) + 1];
        if (mirror) ++counts[size_t(v) + 1];
    }
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    std::vector<vidx> cols(static_cast<size_t>(counts.back()));
    std::vector<eidx> fill(counts.begin(), counts.end() - 1);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        cols[size_t(fill[size_t(u)]++)] = v;
        if (mirror) cols[size_t(fill[size_t(v)]++)] = u;
    }
    // Sort and deduplicate each row, then compact.
    std::vector<eidx> offsets(size_t(n) + 1, 0);
    eidx w = 0;
    for (vidx v = 0; v < n; ++v) {
        auto first = cols.begin() + counts[size_t(v)];
        auto last = cols.begin() + counts[size_t(v) + 1];
        std::sort(first, last);
        auto stop = std::unique(first, last);
        for (auto it = first; it != stop; ++it) cols[size_t(w++)] = *it;
        offsets[size_t(v) + 1] = w;
    }
    cols.resize(size_t(w));
    return Graph(n, std::move(offsets), std::move(cols));
}

// ---- Permutation -------------------------------------------------------------

Permutation::Permutation(std::vector<vidx> forward) : forward_(std::move(forward)) {
    vidx n = vidx(forward_.size());
    inverse_.assign(size_t(n), -1);
    for (vidx v = 0; v < n; ++v) {
        vidx p = forward_[size_t(v)];
        if (p < 0 || p >= n) throw DataError("permutation: position out of range");
        if (inverse_[size_t(p)] != -1) throw DataError("permutation: not a bijection");
        inverse_[size_t(p)] = v;
    }
}

Permutation Permutation::identity(vidx n) {
    std::vector<vidx> f(static_cast<size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    return Permutation(std::move(f));
}

Permutation Permutation::inverted() const {
    return Permutation(inverse_);
}

Permutation Permutation::reversed() const {
    vidx n = this->n();
    std::vector<vidx> f(static_cast<size_t>(n));
    for (vidx v = 0; v < n; ++v) f[size_t(v)] = n - 1 - forward_[size_t(v)];
    return Permutation(std::move(f));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.n() != inner.n()) throw DataError("compose: size mismatch");
    std::vector<vidx> f(static_cast<size_t>(outer.n()));
    for (vidx v = 0; v < outer.n(); ++v) f[size_t(v)] = outer(inner(v));
    return Permutation(std::move(f));
}

Permutation permutation_from_layout(const std::vector<vidx>& layout) {
    vidx n = vidx(layout.size());
    std::vector<vidx> f(size_t(n), -1);
    for (vidx pos = 0; pos < n; ++pos) {
        vidx v = layout[size_t(pos)];
        if (v < 0 || v >= n) throw DataError("layout: vertex id out of range");
        if (f[size_t(v)] != -1) throw DataError("layout: duplicate vertex id");
        f[size_t(v)] = pos;
    }
    return Permutation(std::move(f));
}

// ---- structural operations ---------------------------------------------------

Graph symmetrize(const Graph& g) {
    if (g.is_symmetric()) return g;
    vidx n = g.n();
    std::vector<eidx> counts(size_t(n) + 1, 0);
    for (vidx v = 0; v < n; ++v) {
        for (vidx u : g.neighbors(v)) {
            ++counts[size_t(v) + 1];
            ++counts[size_t(u) + 1];
        }
    }
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    std::vector<vidx> cols(static_cast<size_t>(counts.back()));
    std::vector<eidx> fill(counts.begin(), counts.end() - 1);
    for (vidx v = 0; v < n; ++v) {
        for (vidx u : g.neighbors(v)) {
            cols[size_t(fill[size_t(v)]++)] = u;
            cols[size_t(fill[size_t(u)]++)] = v;
        }
    }
    std::vector<eidx> offsets(size_t(n) + 1, 0);
    eidx w = 0;
    for (vidx v = 0; v < n; ++v) {
        auto first = cols.begin() + counts[size_t(v)];
        auto last = cols.begin() + counts[size_t(v) + 1];
        std::sort(first, last);
        auto stop = std::unique(first, last);
        for (auto it = first; it != stop; ++it) cols[size_t(w++)] = *it;
        offsets[size_t(v) + 1] = w;
    }
    cols.resize(size_t(w));
    return Graph(n, std::move(offsets), std::move(cols));
}

Graph bipartite_embed(const Graph& g) {
    vidx n = g.n();
    std::vector<eidx> counts(2 * size_t(n) + 1, 0);
    for (vidx v = 0; v < n; ++v) {
        counts[size_t(v) + 1] = g.degree(v);
        for (vidx u : g.neighbors(v)) ++counts[size_t(n) + size_t(u) + 1];
    }
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    std::vector<vidx> cols(static_cast<size_t>(counts.back()));
    std::vector<eidx> fill(counts.begin(), counts.end() - 1);
    for (vidx v = 0; v < n; ++v) {
        for (vidx u : g.neighbors(v)) {
            cols[size_t(fill[size_t(v)]++)] = n + u; // row side -> column side
            cols[size_t(fill[size_t(n) + size_t(u)]++)] = v;
        }
    }
    std::vector<eidx> offsets(counts);
    // Row-side lists are sorted already (g rows sorted, +n preserves order);
    // column-side lists are filled in row order, also sorted. Validate anyway.
    return Graph(2 * n, std::move(offsets), std::move(cols));
}

ComponentLabeling connected_components(const Graph& g) {
    const Graph& u = g.is_symmetric() ? g : symmetrize(g);
    vidx n = u.n();
    std::vector<vidx> raw(size_t(n), -1);
    std::vector<vidx> sizes;
    std::vector<vidx> first_vertex;
    std::vector<vidx> stack;
    vidx next = 0;
    for (vidx s = 0; s < n; ++s) {
        if (raw[size_t(s)] != -1) continue;
        vidx count = 0;
        stack.push_back(s);
        raw[size_t(s)] = next;
        while (!stack.empty()) {
            vidx v = stack.back();
            stack.pop_back();
            ++count;
            for (vidx w : u.neighbors(v)) {
                if (raw[size_t(w)] == -1) {
                    raw[size_t(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        sizes.push_back(count);
        first_vertex.push_back(s);
        ++next;
    }
    // Relabel largest-first; ties by smallest contained vertex id.
    std::vector<vidx> order(static_cast<size_t>(next));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](vidx a, vidx b) {
        if (sizes[size_t(a)] != sizes[size_t(b)]) return sizes[size_t(a)] > sizes[size_t(b)];
        return first_vertex[size_t(a)] < first_vertex[size_t(b)];
    });
    std::vector<vidx> remap(static_cast<size_t>(next));
    for (vidx k = 0; k < next; ++k) remap[size_t(order[size_t(k)])] = k;

    ComponentLabeling out;
    out.component_count = next;
    out.labels.resize(size_t(n));
    for (vidx v = 0; v < n; ++v) out.labels[size_t(v)] = remap[size_t(raw[size_t(v)])];
    out.component_sizes.resize(size_t(next));
    for (vidx k = 0; k < next; ++k)
        out.component_sizes[size_t(k)] = sizes[size_t(order[size_t(k)])];
    return out;
}

std::pair<Graph, std::vector<vidx>> induced_subgraph(const Graph& g,
                                                     const std::vector<vidx>& vertices) {
    vidx n = g.n();
    // Stamped scratch map: extracting many small components must not pay
    // O(n) initialization per call.
    thread_local std::vector<std::pair<std::uint32_t, vidx>> local;
    thread_local std::uint32_t stamp = 0;
    if (local.size() < size_t(n)) local.resize(size_t(n), {0, -1});
    if (++stamp == 0) {
        std::fill(local.begin(), local.end(), std::make_pair(std::uint32_t(0), vidx(-1)));
        stamp = 1;
    }
    for (size_t i = 0; i < vertices.size(); ++i) {
        vidx v = vertices[i];
        if (v < 0 || v >= n) throw DataError("induced_subgraph: vertex id out of range");
        if (local[size_t(v)].first == stamp)
            throw DataError("induced_subgraph: duplicate vertex id");
        local[size_t(v)] = {stamp, vidx(i)};
    }
    vidx k = vidx(vertices.size());
    std::vector<eidx> offsets(size_t(k) + 1, 0);
    std::vector<vidx> cols;
    for (vidx i = 0; i < k; ++i) {
        vidx v = vertices[size_t(i)];
        size_t row_start = cols.size();
        for (vidx u : g.neighbors(v)) {
            if (local[size_t(u)].first == stamp) cols.push_back(local[size_t(u)].second);
        }
        std::sort(cols.begin() + row_start, cols.end());
        offsets[size_t(i) + 1] = eidx(cols.size());
    }
    return {Graph(k, std::move(offsets), std::move(cols)), vertices};
}

Graph apply_permutation(const Graph& g, const Permutation& pi) {
    if (pi.n() != g.n()) throw DataError("apply_permutation: size mismatch");
    vidx n = g.n();
    std::vector<eidx> offsets(size_t(n) + 1, 0);
    for (vidx v = 0; v < n; ++v) offsets[size_t(pi(v)) + 1] = g.degree(v);
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::vector<vidx> cols(static_cast<size_t>(offsets.back()));
    for (vidx v = 0; v < n; ++v) {
        eidx w = offsets[size_t(pi(v))];
        for (vidx u : g.neighbors(v)) cols[size_t(w++)] = pi(u);
        std::sort(cols.begin() + offsets[size_t(pi(v))], cols.begin() + w);
    }
    return Graph(n, std::move(offsets), std::move(cols));
}

Permutation random_shuffle_permutation(vidx n, std::uint64_t seed) {
    if (n < 1) throw DataError("random_shuffle_permutation: n must be >= 1");
    std::vector<vidx> f(static_cast<size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    // Own Fisher-Yates with rejection sampling: std::shuffle and
    // std::uniform_int_distribution are not portable across libraries,
    // and golden arrays in the tests require stable output.
    std::mt19937_64 rng(seed);
    auto bounded = [&rng](std::uint64_t bound) {
        std::uint64_t threshold = (~bound + 1) % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t r = rng();
            if (r >= threshold) return r % bound;
        }
    };
    for (vidx i = n - 1; i > 0; --i) {
        vidx j = vidx(bounded(std::uint64_t(i) + 1));
        std::swap(f[size_t(i)], f[size_t(j)]);
    }
    return Permutation(std::move(f));
}

// ---- file formats -------------------------------------------------------------

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

Graph load_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("matrix market: empty file");
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix")
        throw DataError("matrix market: bad banner line");
    if (lower(format) != "coordinate")
        throw DataError("matrix market: only coordinate format supported");
    field = lower(field);
    if (field != "pattern" && field != "integer" && field != "real")
        throw DataError("matrix market: unsupported field type '" + field + "'");
    symmetry = lower(symmetry);
    if (symmetry != "general" && symmetry != "symmetric")
        throw DataError("matrix market: unsupported symmetry '" + symmetry + "'");
    bool has_value = field != "pattern";
    bool mirror = symmetry == "symmetric";

    // Size line: first non-comment, non-blank line.
    long long rows = -1, cols = -1, entries = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ls(line);
        if (!(ls >> rows >> cols >> entries))
            throw DataError("matrix market: malformed size line");
        break;
    }
    if (rows < 0) throw DataError("matrix market: missing size line");
    if (rows != cols) throw DataError("matrix market: matrix must be square");
    if (rows > (1LL << 31) - 2) throw DataError("matrix market: dimension too large");

    vidx n = vidx(rows);
    std::vector<std::pair<vidx, vidx>> edges;
    edges.reserve(size_t(entries));
    long long seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ls(line);
        long long i, j;
        if (!(ls >> i >> j)) throw DataError("matrix market: malformed entry line");
        if (has_value) {
            double v;
            ls >> v; // value discarded; absent value tolerated
        }
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw DataError("matrix market: index out of declared bounds");
        edges.emplace_back(vidx(i - 1), vidx(j - 1));
        ++seen;
    }
    if (seen != entries)
        throw DataError("matrix market: entry count does not match header");
    return Graph::from_edges(n, edges, mirror);
}

void save_matrix_market(const Graph& g, std::ostream& out) {
    out << "%%MatrixMarket matrix coordinate pattern general\n";
    out << g.n() << ' ' << g.n() << ' ' << g.nnz() << '\n';
    for (vidx v = 0; v < g.n(); ++v)
        for (vidx u : g.neighbors(v)) out << (v + 1) << ' ' << (u + 1) << '\n';
}

Graph load_edge_list(std::istream& in, bool zero_based, bool symmetrize_flag) {
    std::vector<std::pair<vidx, vidx>> edges;
    vidx max_id = -1;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a >> b))
            throw DataError("edge list: non-integer token at line " + std::to_string(lineno));
        if (!zero_based) {
            --a;
            --b;
        }
        if (a < 0 || b < 0)
            throw DataError("edge list: negative index at line " + std::to_string(lineno));
        edges.emplace_back(vidx(a), vidx(b));
        max_id = std::max({max_id, vidx(a), vidx(b)});
    }
    return Graph::from_edges(max_id + 1, edges, symmetrize_flag);
}

Permutation load_permutation(std::istream& in) {
    std::vector<vidx> f;
    long long x;
    while (in >> x) f.push_back(vidx(x));
    return Permutation(std::move(f));
}

void save_permutation(const Permutation& p, std::ostream& out) {
    for (vidx v = 0; v < p.n(); ++v) out << p(v) << '\n';
}

} // namespace graphorder
