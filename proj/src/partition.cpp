#include "leaky/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace leaky {

bool is_valid_partition(const Partition& p)
{
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0)
            return false;
        if (i > 0 && p[i] > p[i - 1])
            return false;
    }
    return true;
}

Partition make_partition(std::vector<int> parts)
{
    for (int x : parts)
        if (x <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

int partition_size(const Partition& p)
{
    return std::accumulate(p.begin(), p.end(), 0);
}

BigInt partition_automorphisms(const Partition& mu)
{
    BigInt aut = 1;
    size_t i = 0;
    while (i < mu.size()) {
        size_t j = i;
        while (j < mu.size() && mu[j] == mu[i])
            ++j;
        aut *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return aut;
}

BigInt centralizer_order(const Partition& mu)
{
    BigInt z = partition_automorphisms(mu);
    for (int part : mu)
        z *= part;
    return z;
}

}  // namespace leaky
