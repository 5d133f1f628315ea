#pragma once

#include <string>
#include <vector>

namespace leaky {

enum class WallVariant {
    // constant k*(2g_I - 1 + |I|): the vertex count of the component cut
    // off by one zero-weight edge. This is the variant consistent with the
    // worked genus-0 chamber structure and is the default.
    example_consistent,
    // constant k*(2g_I - 2 + |I|), kept for comparison.
    theorem_printed,
};

// The hyperplane sum_{i in I} x_i = c restricted to the profile space.
// Candidate walls are generated per subset I and genus part g_I, filtered
// to hyperplanes that actually meet the open region cut out by the sign
// pattern, and deduplicated against their complements.
struct Wall {
    std::vector<int> subset;  // 1-based end labels, sorted
    int genus_part = 0;
    long long constant = 0;
    WallVariant variant = WallVariant::example_consistent;

    bool operator==(const Wall&) const = default;
};

// signs: one entry per end label, +1 or -1.
std::vector<Wall> candidate_walls(int g, int n, int k, const std::vector<int>& signs,
                                  WallVariant variant = WallVariant::example_consistent);

std::string wall_to_string(const Wall& w);

// Signed evaluation of sum_{i in I} x_i - c at a profile vector; the side
// of the wall a point lies on.
long long wall_evaluate(const Wall& w, const std::vector<int>& x);

}  // namespace leaky
