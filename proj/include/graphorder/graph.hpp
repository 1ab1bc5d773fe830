#ifndef GRAPHORDER_GRAPH_HPP
#define GRAPHORDER_GRAPH_HPP

#include "graphorder/types.hpp"

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace graphorder {

class Permutation;

/// Immutable compressed-sparse-row adjacency structure.
///
/// Invariants enforced at construction:
///  - row offsets are non-decreasing, offsets[0] = 0, offsets[n] = nnz
///  - each row is strictly increasing (no parallel edges), entries in [0, n)
///  - no self-loops
/// The symmetry flag is computed from the pattern, never trusted from input.
class Graph {
public:
    Graph() = default;

    /// Build from raw CSR arrays. Rows must already be sorted, deduplicated
    /// and self-loop free; this is validated and throws DataError otherwise.
    Graph(vidx n, std::vector<eidx> offsets, std::vector<vidx> cols);

    /// Build from an edge list. Self-loops are dropped, duplicates merged,
    /// rows sorted. With mirror=true every edge is stored in both directions.
    static Graph from_edges(vidx n, const std::vector<std::pair<vidx, vidx>>& edges,
                            bool mirror);

    vidx n() const { return n_; }
    eidx nnz() const { return offsets_.empty() ? 0 : offsets_.back(); }
    bool is_symmetric() const { return symmetric_; }
    double average_degree() const { return n_ == 0 ? 0.0 : double(nnz()) / double(n_); }

    vidx degree(vidx v) const { return vidx(offsets_[v + 1] - offsets_[v]); }
    std::span<const vidx> neighbors(vidx v) const {
        return {cols_.data() + offsets_[v], size_t(offsets_[v + 1] - offsets_[v])};
    }

    const std::vector<eidx>& row_offsets() const { return offsets_; }
    const std::vector<vidx>& col_indices() const { return cols_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && offsets_ == other.offsets_ && cols_ == other.cols_;
    }

private:
    vidx n_ = 0;
    std::vector<eidx> offsets_{0};
    std::vector<vidx> cols_;
    bool symmetric_ = true;

    void validate_and_finalize();
};

/// Bijection old vertex id -> new position, with its inverse.
class Permutation {
public:
    Permutation() = default;

    /// Takes the forward map; throws DataError if it is not a bijection.
    explicit Permutation(std::vector<vidx> forward);

    static Permutation identity(vidx n);

    vidx n() const { return vidx(forward_.size()); }
    vidx operator()(vidx v) const { return forward_[v]; }

    const std::vector<vidx>& forward() const { return forward_; }
    const std::vector<vidx>& inverse() const { return inverse_; }

    Permutation inverted() const;

    /// Positions reversed: v -> n-1 - forward(v).
    Permutation reversed() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<vidx> forward_;
    std::vector<vidx> inverse_;
};

/// compose(outer, inner)(v) = outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Build the permutation that assigns position i to layout[i].
/// layout lists original vertex ids in their new order.
Permutation permutation_from_layout(const std::vector<vidx>& layout);

struct ComponentLabeling {
    std::vector<vidx> labels;          // labels[v] in [0, component_count)
    vidx component_count = 0;
    std::vector<vidx> component_sizes; // by label; labels assigned largest component first
};

// ---- structural operations ----------------------------------------------

/// Pattern of A + A^T; result is symmetric.
Graph symmetrize(const Graph& g);

/// The 2n-vertex symmetric graph of [0, A; A^T, 0]: vertex i is row i,
/// vertex n+j is column j, with an edge (i, n+j) per stored entry (i,j).
Graph bipartite_embed(const Graph& g);

/// Connected components of the undirected view of g. Labels are assigned
/// largest component first; equal sizes tie by smallest contained vertex id.
ComponentLabeling connected_components(const Graph& g);

/// Subgraph induced by `vertices` (kept in the given order as local ids
/// 0..k-1). Returns the subgraph and the local->global id map.
/// Throws DataError on duplicate or out-of-range ids.
std::pair<Graph, std::vector<vidx>> induced_subgraph(const Graph& g,
                                                     const std::vector<vidx>& vertices);

/// A(pi, pi): edge (u,v) becomes (pi(u), pi(v)).
Graph apply_permutation(const Graph& g, const Permutation& pi);

/// Uniform pseudo-random bijection, deterministic per seed
/// (own Fisher-Yates over mt19937_64; stable across platforms).
Permutation random_shuffle_permutation(vidx n, std::uint64_t seed);

// ---- file formats ---------------------------------------------------------

/// Matrix Market coordinate format, pattern/integer/real (values discarded),
/// 1-based indices. `symmetric` headers materialize mirrored entries.
/// Throws DataError on malformed input.
Graph load_matrix_market(std::istream& in);
void save_matrix_market(const Graph& g, std::ostream& out);

/// Whitespace-separated integer pairs, one edge per line, '#' comments.
Graph load_edge_list(std::istream& in, bool zero_based, bool symmetrize_flag);

/// Permutation file: line i holds forward[i], 0-based.
Permutation load_permutation(std::istream& in);
void save_permutation(const Permutation& p, std::ostream& out);

} // namespace graphorder

#endif
