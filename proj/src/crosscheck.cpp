#include "leaky/crosscheck.hpp"

#include "leaky/covers.hpp"
#include "leaky/fock.hpp"
#include "leaky/xgraph.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace leaky {

namespace {

// Weakly decreasing entry vectors over {-max..-1, 1..max} with the exact
// degree sum, at least one entry of each sign.
void profiles_for(int g, int n, int k, int max_entry,
                  std::vector<RamificationProfile>& out)
{
    const int target = k * (2 * g - 2 + n);
    std::vector<int> x;
    std::function<void(int, int)> rec = [&](int pos, int sum) {
        if (pos == n) {
            if (sum == target && x.front() > 0 && x.back() < 0)
                out.push_back(make_profile(g, x, k));
            return;
        }
        const int hi = pos == 0 ? max_entry : x.back();
        const int remaining = n - pos - 1;
        for (int v = hi; v >= -max_entry; --v) {
            if (v == 0)
                continue;
            // crude but effective window prune
            const int lo_rest = -max_entry * remaining;
            const int hi_rest = max_entry * remaining;
            const int need = target - sum - v;
            if (need < lo_rest || need > hi_rest)
                continue;
            x.push_back(v);
            rec(pos + 1, sum + v);
            x.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<RamificationProfile> grid_profiles(const CrosscheckSpec& spec)
{
    std::vector<RamificationProfile> out;
    for (int g = 0; g <= spec.max_genus; ++g) {
        for (int n = 2; n <= spec.max_n; ++n) {
            if (2 * g - 2 + n < 1)
                continue;
            for (int k : spec.leaks)
                profiles_for(g, n, k, spec.max_entry, out);
        }
    }
    return out;
}

namespace {

CrosscheckRow check_one(const RamificationProfile& profile)
{
    CrosscheckRow row;
    row.profile = profile;

    const CoverSweep sweep = sweep_covers(profile);
    row.cover_classes = sweep.classes;
    row.by_enumeration = sweep.total;
    row.determinant_identity = sweep.determinant_identity;

    row.by_fock_labeled = leaky_count_fock(profile, Normalization::labeled_ends);
    // the centralizer mode differs from labeled by |Aut(x+)| * |Aut(x-)|
    row.by_fock_centralizer =
        row.by_fock_labeled /
        Rational(partition_automorphisms(profile.left_degree()) *
                 partition_automorphisms(profile.right_degree()));
    row.by_fock_printed_sign = leaky_count_fock(
        profile, Normalization::labeled_ends, CutJoinSign::printed);
    row.by_xgraph = leaky_count_xgraphs(profile);

    row.primaries_agree = row.by_enumeration == row.by_fock_labeled &&
                          row.by_enumeration == row.by_xgraph;
    row.centralizer_matches = row.by_fock_centralizer == row.by_enumeration;
    row.printed_sign_matches = row.by_fock_printed_sign == row.by_enumeration;
    return row;
}

}  // namespace

CrosscheckReport run_crosscheck(const CrosscheckSpec& spec)
{
    const auto profiles = grid_profiles(spec);

    // warm the x-graph cache up front; the enumeration is shared state
    for (int g = 0; g <= spec.max_genus; ++g)
        for (int n = 2; n <= spec.max_n; ++n)
            if (2 * g - 2 + n >= 1)
                enumerate_x_graphs(g, n);

    std::vector<CrosscheckRow> rows(profiles.size());
    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < profiles.size(); ++i)
            rows[i] = check_one(profiles[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= profiles.size())
                    return;
                rows[i] = check_one(profiles[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    CrosscheckReport report;
    report.spec = spec;
    report.rows = std::move(rows);
    report.profiles = report.rows.size();
    for (const CrosscheckRow& row : report.rows) {
        report.primary_disagreements += row.primaries_agree ? 0 : 1;
        report.centralizer_deviations += row.centralizer_matches ? 0 : 1;
        report.printed_sign_deviations += row.printed_sign_matches ? 0 : 1;
    }
    report.all_primaries_agree = report.primary_disagreements == 0;
    report.all_determinants_match =
        std::all_of(report.rows.begin(), report.rows.end(),
                    [](const CrosscheckRow& r) { return r.determinant_identity; });
    return report;
}

}  // namespace leaky
