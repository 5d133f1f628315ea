#include "leaky/profile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace leaky {

int RamificationProfile::positive_sum() const
{
    int s = 0;
    for (int x : entries)
        if (x > 0)
            s += x;
    return s;
}

int RamificationProfile::negative_count() const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](int x) { return x < 0; }));
}

int RamificationProfile::positive_count() const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](int x) { return x > 0; }));
}

Partition RamificationProfile::left_degree() const
{
    std::vector<int> parts;
    for (int x : entries)
        if (x > 0)
            parts.push_back(x);
    return make_partition(std::move(parts));
}

Partition RamificationProfile::right_degree() const
{
    std::vector<int> parts;
    for (int x : entries)
        if (x < 0)
            parts.push_back(-x);
    return make_partition(std::move(parts));
}

RamificationProfile make_profile(int genus, std::vector<int> entries, int leak)
{
    if (genus < 0)
        throw profile_error(ProfileErrorKind::Degenerate, "genus must be non-negative");
    if (leak < 0)
        throw profile_error(ProfileErrorKind::NegativeLeak, "leak k must be non-negative");

    const int n = static_cast<int>(entries.size());
    const int r = 2 * genus - 2 + n;

    bool has_pos = false, has_neg = false;
    for (int x : entries) {
        if (x == 0)
            throw profile_error(ProfileErrorKind::SignPattern, "zero entry in x");
        (x > 0 ? has_pos : has_neg) = true;
    }
    if (!has_pos || !has_neg)
        throw profile_error(ProfileErrorKind::SignPattern,
                            "x needs at least one positive and one negative entry");

    const long long sum = std::accumulate(entries.begin(), entries.end(), 0LL);
    if (sum != static_cast<long long>(leak) * r) {
        std::ostringstream msg;
        msg << "sum(x) = " << sum << " but k*(2g-2+n) = " << leak * r;
        throw profile_error(ProfileErrorKind::DegreeMismatch, msg.str());
    }

    if (r < 1)
        throw profile_error(ProfileErrorKind::Degenerate,
                            "2g-2+n must be at least 1");

    return RamificationProfile{genus, leak, std::move(entries)};
}

bool is_valid_profile(int genus, const std::vector<int>& entries, int leak)
{
    try {
        make_profile(genus, entries, leak);
        return true;
    } catch (const profile_error&) {
        return false;
    }
}

std::string profile_to_string(const RamificationProfile& p)
{
    std::ostringstream out;
    out << "g=" << p.genus << " k=" << p.leak << " x=(";
    for (size_t i = 0; i < p.entries.size(); ++i) {
        if (i)
            out << ",";
        out << p.entries[i];
    }
    out << ")";
    return out.str();
}

}  // namespace leaky
