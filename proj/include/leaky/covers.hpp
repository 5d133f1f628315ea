#pragma once

#include "leaky/intmatrix.hpp"
#include "leaky/profile.hpp"

#include <stdexcept>
#include <vector>

namespace leaky {

// One bounded edge of a cover. Vertices are 0-based positions in the
// left-to-right vertex order; source < target always holds.
struct CoverEdge {
    int source = 0;
    int target = 0;
    int weight = 0;
    auto operator<=>(const CoverEdge&) const = default;
};

// A combinatorial type of k-leaky tropical cover: r ordered trivalent
// genus-0 vertices over the line, weighted bounded edges, and one attachment
// vertex per labeled end. in/out direction of an end follows the sign of the
// profile entry.
struct LeakyCover {
    RamificationProfile profile;
    std::vector<CoverEdge> bounded_edges;  // sorted, canonical
    std::vector<int> end_vertex;           // index i = label i+1 -> 0-based vertex

    int vertex_count() const { return profile.vertex_count(); }
    bool operator==(const LeakyCover&) const = default;
};

class singular_matrix_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every isomorphism class of cover type for the profile, each exactly once,
// sorted by canonical encoding (edge list, then end table). Distinct
// out-end labelings of the same shape are distinct covers unless their
// encodings coincide.
std::vector<LeakyCover> enumerate_covers(const RamificationProfile& profile);

// Covers are rigid over the line: the vertex order and end labels are fixed,
// so only equal-weight parallel edges may permute.
BigInt automorphism_order(const LeakyCover& cover);

// prod_e w(e) / |Aut|
Rational cover_multiplicity(const LeakyCover& cover);

// L_g(x, k): the sum of cover multiplicities. For k = 0 this is the double
// Hurwitz number H_g(x).
Rational leaky_count(const RamificationProfile& profile);

// One pass over all covers of the profile: the count, the number of
// classes, and whether every cover satisfies lattice_determinant ==
// prod_e w(e). The conformance sweep visits millions of covers, so this
// avoids per-cover bignum traffic.
struct CoverSweep {
    Rational total;
    size_t classes = 0;
    bool determinant_identity = true;
};
CoverSweep sweep_covers(const RamificationProfile& profile);

// |det| of the square matrix whose rows are the cycle-closure equations of
// the cover, completed by rows fixing the consecutive branch-point
// distances, in bounded-edge-length coordinates. Equals prod_e w(e); this
// identity is the tested postcondition. Throws singular_matrix_error on a
// malformed cover.
BigInt lattice_determinant(const LeakyCover& cover);

// The matrix behind lattice_determinant, exposed for inspection.
IntMatrix cover_matrix(const LeakyCover& cover);

}  // namespace leaky
