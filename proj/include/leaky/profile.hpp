#pragma once

#include "leaky/partition.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace leaky {

enum class ProfileErrorKind {
    DegreeMismatch,  // sum(x) != k*(2g-2+n)
    SignPattern,     // a zero entry, or no positive / no negative entry
    Degenerate,      // 2g-2+n < 1, no branch points to place
    NegativeLeak,    // k < 0 is outside the theory
};

class profile_error : public std::runtime_error {
public:
    profile_error(ProfileErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {
    }
    ProfileErrorKind kind() const { return kind_; }

private:
    ProfileErrorKind kind_;
};

// The universal input: genus g, leak k >= 0 and a labeled vector of nonzero
// integers x with sum(x) = k*(2g-2+n). Entries are labeled by position;
// permuted profiles are distinct objects. Immutable after construction.
struct RamificationProfile {
    int genus = 0;
    int leak = 0;
    std::vector<int> entries;

    int n() const { return static_cast<int>(entries.size()); }
    // r: number of trivalent vertices of any cover, also the operator power.
    int vertex_count() const { return 2 * genus - 2 + n(); }
    // E_b: number of bounded edges of any trivalent cover.
    int bounded_edge_count() const { return 3 * genus - 3 + n(); }

    int positive_sum() const;
    int negative_count() const;
    int positive_count() const;
    // x^+ as a partition (positive entries, sorted weakly decreasing).
    Partition left_degree() const;
    // |x^-| as a partition.
    Partition right_degree() const;

    bool operator==(const RamificationProfile&) const = default;
};

// Validates and returns the profile; throws profile_error otherwise.
RamificationProfile make_profile(int genus, std::vector<int> entries, int leak);

// The lattice-set membership predicate behind make_profile, usable without
// exceptions.
bool is_valid_profile(int genus, const std::vector<int>& entries, int leak);

std::string profile_to_string(const RamificationProfile& p);

}  // namespace leaky
