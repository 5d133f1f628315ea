#include "leaky/walls.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace leaky {

namespace {

// Whether sum_{i in I} x_i can equal c somewhere in the open region with
// the given sign pattern, with the complement absorbing S - c. Over an
// unconstrained mixed-sign block any real value is reachable; a pure block
// only reaches its open half-line.
bool side_feasible(int positives, int negatives, long long value)
{
    if (positives > 0 && negatives > 0)
        return true;
    if (positives > 0)
        return value > 0;
    return value < 0;
}

}  // namespace

std::vector<Wall> candidate_walls(int g, int n, int k, const std::vector<int>& signs,
                                  WallVariant variant)
{
    if (static_cast<int>(signs.size()) != n)
        throw std::invalid_argument("sign pattern length mismatch");
    for (int s : signs)
        if (s != 1 && s != -1)
            throw std::invalid_argument("sign pattern entries must be +1/-1");

    const long long total = static_cast<long long>(k) * (2 * g - 2 + n);

    std::set<std::pair<std::vector<int>, long long>> seen;
    std::vector<Wall> out;

    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        int pos_in = 0, neg_in = 0;
        std::vector<int> subset;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                subset.push_back(i + 1);
                (signs[i] > 0 ? pos_in : neg_in)++;
            }
        }
        int pos_total = 0;
        for (int s : signs)
            pos_total += s > 0 ? 1 : 0;
        const int pos_out = pos_total - pos_in;
        const int neg_out = (n - pos_total) - neg_in;

        const int size = static_cast<int>(subset.size());
        for (int g_part = 0; g_part <= g; ++g_part) {
            const int shift = variant == WallVariant::example_consistent ? -1 : -2;
            const long long c =
                static_cast<long long>(k) * (2 * g_part + shift + size);
            if (!side_feasible(pos_in, neg_in, c) ||
                !side_feasible(pos_out, neg_out, total - c))
                continue;

            // normalize against the complement so each hyperplane appears once
            std::vector<int> key_subset = subset;
            long long key_c = c;
            int key_g = g_part;
            if (!(mask & 1u)) {
                key_subset.clear();
                for (int i = 0; i < n; ++i)
                    if (!(mask & (1u << i)))
                        key_subset.push_back(i + 1);
                key_c = total - c;
                key_g = g - g_part;
            }
            if (!seen.insert({key_subset, key_c}).second)
                continue;
            out.push_back(Wall{key_subset, key_g, key_c, variant});
        }
    }

    std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
        if (a.subset != b.subset)
            return a.subset < b.subset;
        return a.constant < b.constant;
    });
    return out;
}

std::string wall_to_string(const Wall& w)
{
    std::ostringstream out;
    for (size_t i = 0; i < w.subset.size(); ++i) {
        if (i)
            out << "+";
        out << "x" << w.subset[i];
    }
    out << " = " << w.constant;
    return out.str();
}

long long wall_evaluate(const Wall& w, const std::vector<int>& x)
{
    long long s = -w.constant;
    for (int label : w.subset)
        s += x[label - 1];
    return s;
}

}  // namespace leaky
