#pragma once

#include "leaky/rational.hpp"

#include <vector>

namespace leaky {

// Weakly decreasing sequence of positive integers. The empty partition is
// legal and plays the role of the vacuum index.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);

// Sorts the parts weakly decreasing; throws std::invalid_argument on a
// non-positive part.
Partition make_partition(std::vector<int> parts);

int partition_size(const Partition& p);

// z(mu) = |Aut(mu)| * prod(mu_i), where |Aut(mu)| is the product of
// factorials of the part multiplicities. z of the empty partition is 1.
BigInt centralizer_order(const Partition& mu);

// Number of permutations of the parts sequence that fix it, i.e. the
// product of multiplicities-factorials.
BigInt partition_automorphisms(const Partition& mu);

}  // namespace leaky
