#ifndef GRAPHORDER_METHODS_HPP
#define GRAPHORDER_METHODS_HPP

#include "graphorder/graph.hpp"
#include "graphorder/measures.hpp"
#include "graphorder/orderings.hpp"
#include "graphorder/vifps.hpp"

#include <string>
#include <vector>

namespace graphorder {

enum class Method { Identity, Random, Rcm, Amd, Slashburn, Nd, Fcut1, Vifps };

/// Accepts rcm | amd | slashburn | nd | fcut1 (alias fiedler) | vifps |
/// identity | random; throws DataError on anything else.
Method parse_method(const std::string& name);
std::string method_name(Method m);

struct MethodOptions {
    SlashburnParams slashburn;
    NdParams nd;
    ParetoParams vifps;
    SolverConfig fiedler;       // standalone fcut1 solver
    std::uint64_t random_seed = 1;
    bool strict = false;        // non-convergence raises NumericalError
};

/// Run one ordering scheme. Asymmetric inputs are symmetrized for the
/// schemes that need a symmetric pattern; vifps instead orders the
/// bipartite embedding and returns the row-side projection. fcut1 falls
/// back to amd on components with a degenerate Fiedler eigenspace.
Permutation apply_method(const Graph& g, Method m, const MethodOptions& opt = {});

struct ReportRow {
    std::string method;
    std::uint64_t seed = 0;
    AalReport report;
    double seconds = 0.0;
    double slashburn_hub_ratio = 0.0; // winning sweep value, slashburn only
};

/// Table-style assessment: shuffle the graph per seed, run each method,
/// score it. SlashBurn reports its best score over the hub-ratio sweep.
std::vector<ReportRow> run_report(const Graph& g, const std::vector<Method>& methods,
                                  const std::vector<std::uint64_t>& shuffle_seeds,
                                  const MethodOptions& opt = {},
                                  const std::vector<double>& slashburn_sweep = {
                                      0.001, 0.005, 0.01, 0.02, 0.05});

} // namespace graphorder

#endif
