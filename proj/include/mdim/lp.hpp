#pragma once

#include <iosfwd>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/rational.hpp"
#include "mdim/vertex_set.hpp"
#include "mdim/weighting.hpp"

namespace mdim {

// Covering LP: minimize sum_v g(v) subject to g(R) >= 1 for every row R and
// g >= 0. Rows are distinct and dominance-reduced (no row contains another).
// Upper bounds g <= 1 are omitted: an optimum of a {0,1}-coefficient covering
// LP with unit right-hand sides never exceeds 1 in any coordinate, since a
// coordinate above 1 could be lowered without losing feasibility.
struct CoveringLP {
    int var_count = 0;
    std::vector<VertexSet> rows;
};

// Keeps only the minimal antichain under inclusion: duplicates collapse and
// superset rows are dropped (their constraints are implied). Throws
// EmptyRowError if any input row is empty.
std::vector<VertexSet> reduce_constraints(std::vector<VertexSet> rows);

struct LpSolution {
    Rational optimum;
    Weighting weights;
};

// Two-phase primal simplex on the standard-form covering LP with surplus
// variables; Bland's pivot rule throughout; all arithmetic exact rational.
LpSolution solve_covering_lp(const CoveringLP& lp);

// All R_v{x,y} (resp. R_e{e1,e2}) sets over the eager pair enumeration.
std::vector<VertexSet> vertex_pair_rsets(const Graph& g, const DistMatrix& d);
std::vector<VertexSet> edge_pair_rsets(const Graph& g, const DistMatrix& d);

// Dominance-reduced covering LP of a graph for the given pair mode.
CoveringLP build_covering_lp(const Graph& g, const DistMatrix& d, PairMode mode);

struct FracResult {
    Rational value;
    Weighting weights;
};

// Fractional metric dimension (min total weight of a resolving function).
// Requires a connected graph with n >= 2.
FracResult dim_f(const Graph& g);

// Fractional edge metric dimension. Requires a connected graph with n >= 3.
FracResult edim_f(const Graph& g);

// One line per row listing member vertex indices, for external cross-checks.
void dump_lp(std::ostream& out, const CoveringLP& lp);

}  // namespace mdim
