#ifndef GRAPHORDER_ORDERINGS_HPP
#define GRAPHORDER_ORDERINGS_HPP

#include "graphorder/graph.hpp"
#include "graphorder/spectral.hpp"

namespace graphorder {

struct SlashburnParams {
    double hub_ratio = 0.005;  // fraction of current-component vertices removed per round
    vidx min_component = 32;   // below this, spoke components are ordered by degree
};

struct NdParams {
    vidx n_base = 64;          // leaf size switching to amd
    SolverConfig solver{1e-5, 192, 1}; // bisections need direction, not digits
};

/// Reverse Cuthill-McKee. Per connected component: BFS from a
/// pseudo-peripheral vertex (eccentricity sweeps from the min-degree
/// vertex), children enqueued by ascending degree then id, order reversed.
/// Components are concatenated largest-first; isolated vertices end up last.
Permutation rcm(const Graph& g);

/// Approximate minimum degree elimination order on a quotient graph:
/// approximate external degrees, supervariable merging, mass elimination,
/// dense rows deferred to the end. Earliest eliminated vertex gets
/// position 0. Components ordered largest-first.
Permutation amd(const Graph& g);

/// Hub/spoke layout: per round, the highest-degree vertices of the current
/// giant component move to the front, small components pack toward the back.
Permutation slashburn(const Graph& g, const SlashburnParams& params = {});

/// Fiedler-bisection nested dissection with a greedy vertex separator from
/// the edge cut and amd leaves; separators placed last. A spectral stand-in
/// for classic nested dissection, not a METIS equivalent.
Permutation nested_dissection(const Graph& g, const NdParams& params = {});

Permutation identity_order(const Graph& g);

} // namespace graphorder

#endif
