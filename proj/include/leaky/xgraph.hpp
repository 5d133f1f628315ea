#pragma once

#include "leaky/profile.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace leaky {

class incompatible_shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A connected trivalent multigraph of genus g with n labeled ends and no
// orientation or weights. Loops are excluded: a loop admits no acyclic
// orientation, so such graphs never contribute to counts.
struct XGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // sorted pairs (a, b), a < b
    std::vector<int> end_vertex;             // label idx -> 0-based vertex
    // Order of the label-fixing automorphism group; 0 means not yet
    // computed (filled by the enumerator, computed on demand otherwise).
    long long aut_order = 0;

    int end_count() const { return static_cast<int>(end_vertex.size()); }
    int genus() const
    {
        return static_cast<int>(edges.size()) - vertex_count + 1;
    }
};

// All isomorphism classes of x-graphs with the given genus and number of
// labeled ends, canonically ordered. Results are memoized per (g, n).
const std::vector<XGraph>& enumerate_x_graphs(int g, int n);

// Automorphisms fixing the end labels: label-preserving vertex permutations
// that preserve the edge multiset, times the permutations of parallel
// edges.
long long xgraph_automorphism_order(const XGraph& xg);

// S(Gamma): the x-graph's share of L_g(x, k), evaluated as a lattice sum.
// Cycle-breaking edges span a g-dimensional coordinate box; each integer
// point with all edge weights nonzero and an acyclic induced orientation
// contributes (number of compatible vertex orders) * prod |w|, and the
// total is divided by |Aut(Gamma)|.
Rational contribution_S(const XGraph& xg, const RamificationProfile& profile);

// L_g(x, k) as the sum of S(Gamma) over all x-graphs.
Rational leaky_count_xgraphs(const RamificationProfile& profile);

// Number of total orders of the vertices 0..nv-1 compatible with the given
// directed edges; 0 when the digraph has a directed cycle. Exposed for
// tests.
long long linear_extension_count(int nv,
                                 const std::vector<std::pair<int, int>>& arcs);

}  // namespace leaky
