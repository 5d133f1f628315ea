#include "leaky/fock.hpp"

#include <algorithm>
#include <cassert>

namespace leaky {

namespace {

void add_term(FockVector& v, Partition mu, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = v.try_emplace(std::move(mu), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            v.erase(it);
    }
}

Partition without_one(const Partition& mu, int part)
{
    Partition out;
    out.reserve(mu.size() - 1);
    bool removed = false;
    for (int p : mu) {
        if (!removed && p == part) {
            removed = true;
            continue;
        }
        out.push_back(p);
    }
    assert(removed);
    return out;
}

Partition with_one(const Partition& mu, int part)
{
    Partition out;
    out.reserve(mu.size() + 1);
    bool inserted = false;
    for (int p : mu) {
        if (!inserted && part >= p) {
            out.push_back(part);
            inserted = true;
        }
        out.push_back(p);
    }
    if (!inserted)
        out.push_back(part);
    return out;
}

int multiplicity(const Partition& mu, int part)
{
    return static_cast<int>(std::count(mu.begin(), mu.end(), part));
}

std::vector<int> distinct_parts(const Partition& mu)
{
    std::vector<int> vals;
    for (int p : mu)
        if (vals.empty() || vals.back() != p)
            vals.push_back(p);
    return vals;
}

}  // namespace

FockVector vacuum()
{
    return {{Partition{}, Rational(1)}};
}

FockVector basis_vector(Partition mu)
{
    if (!is_valid_partition(mu))
        mu = make_partition(std::move(mu));
    return {{std::move(mu), Rational(1)}};
}

FockVector apply_generator(int n, const FockVector& v)
{
    if (n == 0)
        throw zero_index_error("a_0 is the identity; apply it directly");
    FockVector out;
    for (const auto& [mu, c] : v) {
        if (n < 0) {
            add_term(out, with_one(mu, -n), c);
        } else {
            int m = multiplicity(mu, n);
            if (m > 0)
                add_term(out, without_one(mu, n), c * n * m);
        }
    }
    return out;
}

Rational inner_product(const FockVector& u, const FockVector& v)
{
    // Pair the smaller support against the larger.
    const FockVector& a = u.size() <= v.size() ? u : v;
    const FockVector& b = u.size() <= v.size() ? v : u;
    Rational total = 0;
    for (const auto& [mu, ca] : a) {
        auto it = b.find(mu);
        if (it != b.end())
            total += ca * it->second * Rational(centralizer_order(mu));
    }
    return total;
}

FockVector apply_cut_join(int k, const FockVector& v, CutJoinSign sign)
{
    assert(k >= 0);
    FockVector out;
    const Rational half(1, 2);
    for (const auto& [mu, c] : v) {
        // Join family a_{-j} a_{-i} a_{i+j-k}: consume one part p = i+j-k,
        // emit i and j. Ordered pairs (i, j) with i+j = p+k.
        for (int p : distinct_parts(mu)) {
            const Rational consumed = c * p * multiplicity(mu, p);
            Partition base = without_one(mu, p);
            for (int i = 1; i <= p + k - 1; ++i) {
                const int j = p + k - i;
                add_term(out, with_one(with_one(base, i), j), half * consumed);
            }
        }
        // Split family: a_j then a_i consume two parts, emit one part whose
        // index depends on the operator variant.
        for (int j : distinct_parts(mu)) {
            const Rational after_j = c * j * multiplicity(mu, j);
            Partition mu_j = without_one(mu, j);
            for (int i : distinct_parts(mu_j)) {
                const Rational after_ij = after_j * i * multiplicity(mu_j, i);
                const int emitted =
                    sign == CutJoinSign::corrected ? i + j + k : i + j - k;
                if (emitted < 1)
                    continue;
                add_term(out, with_one(without_one(mu_j, i), emitted),
                         half * after_ij);
            }
        }
    }
    return out;
}

Rational matrix_element(const Partition& mu, int k, int r, const Partition& nu,
                        CutJoinSign sign)
{
    FockVector state = basis_vector(nu);
    for (int step = 0; step < r; ++step) {
        state = apply_cut_join(k, state, sign);
        if (state.empty())
            return 0;
    }
    return inner_product(basis_vector(mu), state);
}

namespace {

// Matrix elements count covers with any number of connected components: an
// in-end may pair straight across to an out-end, and the operator factors
// may split among components in every interleaving. The connected count is
// extracted by the usual inclusion-exclusion over partitions of the labeled
// ends, with binomials distributing the operator power.
class ConnectedExtractor {
public:
    ConnectedExtractor(int k, CutJoinSign sign) : k_(k), sign_(sign) {}

    // full (possibly disconnected) labeled count of the entry multiset
    Rational full(const std::vector<int>& entries, int power)
    {
        if (entries.empty())
            return power == 0 ? 1 : 0;
        const auto key = std::make_pair(entries, power);
        if (auto it = full_memo_.find(key); it != full_memo_.end())
            return it->second;
        std::vector<int> plus, minus;
        BigInt denom = 1;
        for (int x : entries) {
            (x > 0 ? plus : minus).push_back(x > 0 ? x : -x);
            denom *= (x > 0 ? x : -x);
        }
        const Rational value =
            matrix_element(make_partition(std::move(plus)), k_, power,
                           make_partition(std::move(minus)), sign_) /
            Rational(denom);
        full_memo_.emplace(key, value);
        return value;
    }

    // connected labeled count
    Rational connected(const std::vector<int>& entries, int power)
    {
        const auto key = std::make_pair(entries, power);
        if (auto it = conn_memo_.find(key); it != conn_memo_.end())
            return it->second;
        Rational value = full(entries, power);
        const int n = static_cast<int>(entries.size());
        // subtract every split where the component of end 0 is proper
        for (unsigned mask = 1; mask + 1 < (1u << n); mask += 2) {
            std::vector<int> block, rest;
            for (int i = 0; i < n; ++i)
                ((mask >> i) & 1u ? block : rest).push_back(entries[i]);
            for (int p = 0; p <= power; ++p) {
                const Rational lc = connected(block, p);
                if (lc == 0)
                    continue;
                const Rational fu = full(rest, power - p);
                if (fu == 0)
                    continue;
                value -= Rational(binomial(power, p)) * lc * fu;
            }
        }
        conn_memo_.emplace(key, value);
        return value;
    }

private:
    static BigInt binomial(int n, int k)
    {
        BigInt b = 1;
        for (int i = 0; i < k; ++i)
            b = b * (n - i) / (i + 1);
        return b;
    }

    int k_;
    CutJoinSign sign_;
    std::map<std::pair<std::vector<int>, int>, Rational> full_memo_;
    std::map<std::pair<std::vector<int>, int>, Rational> conn_memo_;
};

}  // namespace

Rational leaky_count_fock(const RamificationProfile& profile, Normalization mode,
                          CutJoinSign sign)
{
    ConnectedExtractor extractor(profile.leak, sign);
    const Rational labeled =
        extractor.connected(profile.entries, profile.vertex_count());
    if (mode == Normalization::labeled_ends)
        return labeled;
    // the two normalizations differ exactly by |Aut(x+)| * |Aut(x-)|
    return labeled / Rational(partition_automorphisms(profile.left_degree()) *
                              partition_automorphisms(profile.right_degree()));
}

}  // namespace leaky
