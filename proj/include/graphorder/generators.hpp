#ifndef GRAPHORDER_GENERATORS_HPP
#define GRAPHORDER_GENERATORS_HPP

#include "graphorder/graph.hpp"

#include <cstdint>

namespace graphorder {

/// Non-circulant band graph: (u,v) in E iff 0 < |u-v| <= b.
/// The identity labeling has minimal semi-bandwidth b.
Graph gen_conv1(vidx n, vidx b);

/// Linear path of cliques of size c = d_avg, one bridge edge between the
/// last vertex of clique i and the first vertex of clique i+1. The last
/// clique is truncated if c does not divide n.
Graph gen_pok(vidx n, vidx d_avg);

/// Complete bipartite graph K(b, n-b) with b = ceil(d_avg/2): centers are
/// vertices 0..b-1, peripherals b..n-1. If the target edge count
/// round(d_avg * n) is below the complete count 2b(n-b), edges are removed
/// from the last centers against the highest-indexed peripherals; if above,
/// the complete biclique is kept (actual nnz is always reported by nnz()).
Graph gen_biclique(vidx n, double d_avg);

/// Union of the complete K(b_g, n-b_g) with centers 0..b_g-1 and a band of
/// semi-bandwidth b_l over the peripheral vertices b_g..n-1.
Graph gen_wheel(vidx n, vidx b_l, vidx b_g);

/// Watts-Strogatz: ring lattice with k_half neighbors per side, each
/// rightward edge rewired with probability beta (no self-loops/duplicates).
/// Deterministic per seed.
Graph gen_ws(vidx n, vidx k_half, double beta, std::uint64_t seed);

/// Binomial tree B_k, n = 2^k: B_k is two copies of B_{k-1} with the roots
/// linked; vertex 0 is the root, the second copy occupies ids 2^{k-1}..2^k-1.
Graph gen_binomial_tree(int k);

} // namespace graphorder

#endif
