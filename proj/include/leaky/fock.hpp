#pragma once

#include "leaky/partition.hpp"
#include "leaky/profile.hpp"

#include <map>
#include <stdexcept>

namespace leaky {

// A finite exact-rational linear combination of partition basis vectors
// b_mu. No zero coefficients are stored; the vacuum is { {} -> 1 }.
using FockVector = std::map<Partition, Rational>;

class zero_index_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Which sign the split family of the cut-join operator uses for its creator
// index. `corrected` emits a part i+j+k (a split vertex absorbs the leak);
// `printed` emits i+j-k and is kept only as a diagnostic, since it cannot
// reproduce the cover counts for k >= 1.
enum class CutJoinSign { corrected, printed };

enum class Normalization { labeled_ends, paper_centralizer };

FockVector vacuum();
FockVector basis_vector(Partition mu);

// Heisenberg generator a_n: for n < 0 insert a part -n; for n > 0 remove one
// part n with coefficient n * multiplicity, annihilating when n is absent.
// a_0 is the identity and is rejected here.
FockVector apply_generator(int n, const FockVector& v);

// Bilinear pairing with <b_mu | b_nu> = z(mu) delta_{mu,nu}.
Rational inner_product(const FockVector& u, const FockVector& v);

// The k-leaky cut-join operator
//   M_k = 1/2 * sum_{i,j >= 1} [ a_{-j} a_{-i} a_{i+j-k}    (i+j-k >= 1)
//                              + a_{-(i+j+k)} a_i a_j ]
// applied to a finite vector; only the pairs that consume existing parts
// act. Every term raises the total size by exactly k.
FockVector apply_cut_join(int k, const FockVector& v,
                          CutJoinSign sign = CutJoinSign::corrected);

// <b_mu | M_k^r | b_nu>
Rational matrix_element(const Partition& mu, int k, int r, const Partition& nu,
                        CutJoinSign sign = CutJoinSign::corrected);

// L_g(x, k) through the transfer operator: the matrix element
// <b_{x+} | M_k^{2g-2+n} | b_{|x-|}> divided by prod_i |x_i| (labeled_ends)
// or by z(x+) z(x-) (paper_centralizer). The two differ exactly by
// |Aut(x+)| * |Aut(x-)|; labeled_ends is the one that matches the labeled
// cover counts and is the default.
Rational leaky_count_fock(const RamificationProfile& profile,
                          Normalization mode = Normalization::labeled_ends,
                          CutJoinSign sign = CutJoinSign::corrected);

}  // namespace leaky
