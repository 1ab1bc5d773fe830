#ifndef GRAPHORDER_VIFPS_HPP
#define GRAPHORDER_VIFPS_HPP

#include "graphorder/graph.hpp"
#include "graphorder/spectral.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace graphorder {

enum class MinorityPlacement { Back, Front };

struct ParetoParams {
    double rvol = 20.0;    // percent of total volume
    double rminor = 4.0;   // percent of nodes
    vidx n_base = 64;      // recursion base size
    int max_depth = 64;    // recursion guard
    MinorityPlacement minority_placement = MinorityPlacement::Back;
    // Cut solver. Cuts need direction, not eigenpair digits, so the budget
    // is far below the standalone Fiedler default.
    SolverConfig solver{1e-5, 192, 1};
};

struct ParetoSplit {
    std::vector<vidx> minority; // high-degree vertices holding >= rvol% of volume
    std::vector<vidx> majority;
};

/// Degree-descending prefix test: if rvol% of the total volume is held by
/// rminor% or less of the nodes, the prefix splits off as the minority.
/// Returns nullopt when the condition is not met or the graph has no edges.
std::optional<ParetoSplit> pareto_split(const Graph& g, double rvol, double rminor);

/// Recursive Fiedler partition conditioned by Pareto splits, amd at the
/// recursion base; minority vertices grouped per level. Requires a
/// symmetric graph; components are ordered largest-first.
Permutation vifps(const Graph& g, const ParetoParams& params = {});

/// Row and column permutations for a directed or bipartite input, obtained
/// by ordering the 2n-vertex embedding of [0, A; A^T, 0] and projecting the
/// embedded order onto the row and column sides.
std::pair<Permutation, Permutation> vifps_directed(const Graph& g,
                                                   const ParetoParams& params = {});

} // namespace graphorder

#endif
