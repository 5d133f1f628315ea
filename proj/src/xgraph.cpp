#include "leaky/xgraph.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace leaky {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList apply_perm(const EdgeList& edges, const std::vector<int>& sigma)
{
    EdgeList out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) {
        int x = sigma[a], y = sigma[b];
        out.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool edges_connected(int nv, const EdgeList& edges)
{
    if (nv <= 1)
        return true;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = nv;
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps == 1;
}

long long parallel_edge_factor(const EdgeList& edges)
{
    long long f = 1;
    size_t i = 0;
    while (i < edges.size()) {
        size_t j = i;
        while (j < edges.size() && edges[j] == edges[i])
            ++j;
        for (size_t m = 2; m <= j - i; ++m)
            f *= static_cast<long long>(m);
        i = j;
    }
    return f;
}

// Permutations of 0..nv-1 that preserve the class structure given by
// `cls` (vertices may only map within their class).
void class_permutations(const std::vector<int>& cls,
                        const std::function<void(const std::vector<int>&)>& visit)
{
    const int nv = static_cast<int>(cls.size());
    std::vector<int> sigma(nv, -1);
    std::vector<bool> used(nv, false);
    std::function<void(int)> rec = [&](int v) {
        if (v == nv) {
            visit(sigma);
            return;
        }
        for (int t = 0; t < nv; ++t) {
            if (used[t] || cls[t] != cls[v])
                continue;
            used[t] = true;
            sigma[v] = t;
            rec(v + 1);
            used[t] = false;
        }
    };
    rec(0);
}

// Enumerates all edge multisets realizing the exact degree sequence, in
// non-decreasing lexicographic edge order.
void edge_multisets(int nv, int ne, const std::vector<int>& target_degree,
                    const std::function<void(const EdgeList&)>& visit)
{
    EdgeList edges;
    std::vector<int> remaining = target_degree;
    std::function<void(int, int)> rec = [&](int min_a, int min_b) {
        if (static_cast<int>(edges.size()) == ne) {
            for (int d : remaining)
                if (d != 0)
                    return;
            visit(edges);
            return;
        }
        const int left = ne - static_cast<int>(edges.size());
        int total = 0, maxdeg = 0;
        for (int d : remaining) {
            total += d;
            maxdeg = std::max(maxdeg, d);
        }
        if (total != 2 * left || maxdeg > left || maxdeg > total - maxdeg)
            return;
        for (int a = min_a; a < nv; ++a) {
            if (remaining[a] == 0)
                continue;
            const int bstart = (a == min_a) ? std::max(min_b, a + 1) : a + 1;
            for (int b = bstart; b < nv; ++b) {
                if (remaining[b] == 0)
                    continue;
                edges.push_back({a, b});
                --remaining[a];
                --remaining[b];
                rec(a, b);
                ++remaining[a];
                ++remaining[b];
                edges.pop_back();
            }
            // once we move past vertex a, its degree is final
            if (remaining[a] != 0)
                return;
        }
    };
    rec(0, 0);
}

void degree_sequences(int nv, int sum, std::vector<int>& acc,
                      const std::function<void(const std::vector<int>&)>& visit)
{
    if (static_cast<int>(acc.size()) == nv) {
        if (sum == 0)
            visit(acc);
        return;
    }
    const int hi = acc.empty() ? 3 : acc.back();
    const int slots = nv - static_cast<int>(acc.size());
    for (int d = std::min(hi, sum); d >= 1; --d) {
        if (sum - d > 3 * (slots - 1))
            continue;
        acc.push_back(d);
        degree_sequences(nv, sum - d, acc, visit);
        acc.pop_back();
    }
}

std::vector<XGraph> build_x_graphs(int g, int n)
{
    const int nv = 2 * g - 2 + n;
    const int ne = 3 * g - 3 + n;
    std::vector<XGraph> out;
    if (nv < 1 || ne < 0)
        return out;

    if (nv == 1) {
        if (ne == 0) {
            XGraph xg;
            xg.vertex_count = 1;
            xg.end_vertex.assign(n, 0);
            xg.aut_order = 1;
            out.push_back(std::move(xg));
        }
        return out;  // any edge on a single vertex would be a loop
    }

    std::vector<int> acc;
    degree_sequences(nv, 2 * ne, acc, [&](const std::vector<int>& deg) {
        // vertices within a degree class are interchangeable at this stage
        std::vector<int> cls(deg.size());
        for (size_t i = 0; i < deg.size(); ++i)
            cls[i] = deg[i];

        edge_multisets(nv, ne, deg, [&](const EdgeList& edges) {
            if (!edges_connected(nv, edges))
                return;
            // canonical representative under degree-class permutations
            EdgeList best = edges;
            std::vector<std::vector<int>> autos;
            class_permutations(cls, [&](const std::vector<int>& sigma) {
                EdgeList mapped = apply_perm(edges, sigma);
                if (mapped < best)
                    best = mapped;
                if (mapped == edges)
                    autos.push_back(sigma);
            });
            if (best != edges)
                return;

            // distribute the labeled ends over the free vertex slots
            std::vector<int> cap(nv);
            for (int v = 0; v < nv; ++v)
                cap[v] = 3 - deg[v];
            const long long parallel = parallel_edge_factor(edges);
            std::vector<int> assign(n, -1);
            std::function<void(int)> place = [&](int label) {
                if (label == n) {
                    // orbit representative under the unlabeled automorphisms
                    std::vector<int> mapped(n);
                    for (const auto& sigma : autos) {
                        for (int i = 0; i < n; ++i)
                            mapped[i] = sigma[assign[i]];
                        if (mapped < assign)
                            return;
                    }
                    long long fixing = 0;
                    for (const auto& sigma : autos) {
                        bool fixes = true;
                        for (int i = 0; i < n && fixes; ++i)
                            fixes = sigma[assign[i]] == assign[i];
                        if (fixes)
                            ++fixing;
                    }
                    XGraph xg;
                    xg.vertex_count = nv;
                    xg.edges = edges;
                    xg.end_vertex = assign;
                    xg.aut_order = fixing * parallel;
                    out.push_back(std::move(xg));
                    return;
                }
                for (int v = 0; v < nv; ++v) {
                    if (cap[v] == 0)
                        continue;
                    --cap[v];
                    assign[label] = v;
                    place(label + 1);
                    assign[label] = -1;
                    ++cap[v];
                }
            };
            place(0);
        });
    });

    std::sort(out.begin(), out.end(), [](const XGraph& a, const XGraph& b) {
        if (a.edges != b.edges)
            return a.edges < b.edges;
        return a.end_vertex < b.end_vertex;
    });
    return out;
}

}  // namespace

const std::vector<XGraph>& enumerate_x_graphs(int g, int n)
{
    if (g < 0 || n < 1 || 2 * g - 2 + n < 1)
        throw incompatible_shape_error("enumerate_x_graphs: bad (g, n)");
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::vector<XGraph>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({g, n});
    if (it == cache.end())
        it = cache.emplace(std::pair{g, n}, build_x_graphs(g, n)).first;
    return it->second;
}

long long xgraph_automorphism_order(const XGraph& xg)
{
    if (xg.aut_order > 0)
        return xg.aut_order;
    std::vector<int> sigma(xg.vertex_count);
    std::iota(sigma.begin(), sigma.end(), 0);
    long long fixing = 0;
    do {
        if (apply_perm(xg.edges, sigma) != xg.edges)
            continue;
        bool fixes = true;
        for (int v : xg.end_vertex)
            if (sigma[v] != v) {
                fixes = false;
                break;
            }
        if (fixes)
            ++fixing;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return fixing * parallel_edge_factor(xg.edges);
}

long long linear_extension_count(int nv,
                                 const std::vector<std::pair<int, int>>& arcs)
{
    assert(nv <= 20);
    std::vector<unsigned> pred(nv, 0);
    for (auto [a, b] : arcs)
        pred[b] |= 1u << a;
    const unsigned full = (1u << nv) - 1;
    std::vector<long long> dp(full + 1, 0);
    dp[0] = 1;
    for (unsigned s = 1; s <= full; ++s) {
        long long total = 0;
        for (int v = 0; v < nv; ++v) {
            const unsigned bit = 1u << v;
            if (!(s & bit))
                continue;
            if ((pred[v] & (s ^ bit)) == pred[v])
                total += dp[s ^ bit];
        }
        dp[s] = total;
    }
    return dp[full];
}

namespace {

// Edge weights as affine forms c0 + sum_j c_j * i_j over the cycle
// coordinates.
struct AffineForm {
    std::vector<long long> c;  // size g+1; c[0] is the constant term
};

long long floor_div(long long a, long long b)
{
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

long long ceil_div(long long a, long long b)
{
    return -floor_div(-a, b);
}

BigInt int128_to_big(unsigned __int128 v)
{
    const unsigned long long lo = static_cast<unsigned long long>(v);
    const unsigned long long hi = static_cast<unsigned long long>(v >> 64);
    BigInt out = hi;
    out <<= 64;
    out += lo;
    return out;
}

struct LatticeScan {
    int nv = 0;
    int g = 0;
    long long bound = 0;
    std::vector<std::pair<int, int>> edge_ends;
    std::vector<AffineForm> form;
    std::vector<int> last_coord;  // highest coordinate with nonzero coefficient
    std::vector<long long> ext_cache;
    std::vector<bool> ext_known;
    BigInt total = 0;

    void prepare()
    {
        const int ne = static_cast<int>(form.size());
        last_coord.assign(ne, 0);
        for (int e = 0; e < ne; ++e)
            for (int j = g; j >= 1; --j)
                if (form[e].c[j] != 0) {
                    last_coord[e] = j;
                    break;
                }
        ext_cache.assign(size_t(1) << ne, 0);
        ext_known.assign(size_t(1) << ne, false);
    }

    long long extensions(unsigned flip_mask)
    {
        if (!ext_known[flip_mask]) {
            std::vector<unsigned> pred(nv, 0);
            for (size_t e = 0; e < edge_ends.size(); ++e) {
                auto [a, b] = edge_ends[e];
                if (flip_mask & (1u << e))
                    pred[a] |= 1u << b;
                else
                    pred[b] |= 1u << a;
            }
            const unsigned full = (1u << nv) - 1;
            std::vector<long long> dp(full + 1, 0);
            dp[0] = 1;
            for (unsigned s = 1; s <= full; ++s) {
                long long t = 0;
                for (int v = 0; v < nv; ++v) {
                    const unsigned bit = 1u << v;
                    if (!(s & bit))
                        continue;
                    if ((pred[v] & (s ^ bit)) == pred[v])
                        t += dp[s ^ bit];
                }
                dp[s] = t;
            }
            ext_cache[flip_mask] = dp[full];
            ext_known[flip_mask] = true;
        }
        return ext_cache[flip_mask];
    }

    void leaf_point(const std::vector<long long>& weights)
    {
        unsigned flip = 0;
        unsigned __int128 prod = 1;
        for (size_t e = 0; e < weights.size(); ++e) {
            long long w = weights[e];
            if (w == 0)
                return;
            if (w < 0) {
                flip |= 1u << e;
                w = -w;
            }
            prod *= static_cast<unsigned long long>(w);
        }
        const long long m = extensions(flip);
        if (m != 0)
            total += int128_to_big(prod * static_cast<unsigned long long>(m));
    }

    // Range of the coordinate `coord` allowed by the |w| <= bound bands of
    // the edges that are fully determined at this depth.
    bool coordinate_window(int coord, const std::vector<long long>& partial,
                           long long& lo, long long& hi) const
    {
        lo = -bound;
        hi = bound;
        const int ne = static_cast<int>(form.size());
        for (int e = 0; e < ne; ++e) {
            if (last_coord[e] != coord)
                continue;
            const long long c = form[e].c[coord];
            const long long p = partial[e];
            long long l, h;
            if (c > 0) {
                l = ceil_div(-bound - p, c);
                h = floor_div(bound - p, c);
            } else {
                l = ceil_div(bound - p, c);
                h = floor_div(-bound - p, c);
            }
            lo = std::max(lo, l);
            hi = std::min(hi, h);
            if (lo > hi)
                return false;
        }
        return true;
    }

    // Recursion over the cycle coordinates; `partial` holds each weight with
    // the first `depth` coordinates substituted.
    void scan(int depth, const std::vector<long long>& partial)
    {
        const int ne = static_cast<int>(form.size());
        long long lo, hi;
        if (!coordinate_window(depth + 1, partial, lo, hi))
            return;
        if (depth == g - 1) {
            std::vector<long long> w(ne);
            for (long long i = lo; i <= hi; ++i) {
                for (int e = 0; e < ne; ++e)
                    w[e] = partial[e] + form[e].c[g] * i;
                leaf_point(w);
            }
            return;
        }
        std::vector<long long> next(partial.size());
        for (long long i = lo; i <= hi; ++i) {
            bool viable = true;
            for (int e = 0; e < ne && viable; ++e) {
                next[e] = partial[e] + form[e].c[depth + 1] * i;
                if (last_coord[e] == depth + 1 && next[e] == 0)
                    viable = false;
            }
            if (viable)
                scan(depth + 1, next);
        }
    }
};

}  // namespace

Rational contribution_S(const XGraph& xg, const RamificationProfile& profile)
{
    if (xg.genus() != profile.genus || xg.end_count() != profile.n())
        throw incompatible_shape_error("x-graph does not match the profile");

    const int nv = xg.vertex_count;
    const int ne = static_cast<int>(xg.edges.size());
    const int g = profile.genus;
    const int k = profile.leak;

    if (ne == 0) {
        // single vertex, all ends attached there
        return Rational(1, xgraph_automorphism_order(xg));
    }

    // Spanning tree; the non-tree edges carry the free coordinates.
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> free_index(ne, -1);
    std::vector<bool> in_tree(ne, false);
    int nfree = 0;
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = xg.edges[e];
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            in_tree[e] = true;
        } else {
            free_index[e] = nfree++;
        }
    }
    int tree_edges = 0;
    for (int e = 0; e < ne; ++e)
        tree_edges += in_tree[e] ? 1 : 0;
    if (tree_edges != nv - 1)
        throw incompatible_shape_error("x-graph is disconnected");
    assert(nfree == g);

    // Balancing at each vertex, with the reference orientation a -> b:
    //   sum(w into v) - sum(w out of v) = k - sum(ends at v)
    std::vector<long long> rhs(nv, k);
    for (int i = 0; i < profile.n(); ++i)
        rhs[xg.end_vertex[i]] -= profile.entries[i];

    std::vector<AffineForm> form(ne, AffineForm{std::vector<long long>(g + 1, 0)});
    std::vector<bool> solved(ne, false);
    for (int e = 0; e < ne; ++e) {
        if (!in_tree[e]) {
            form[e].c[1 + free_index[e]] = 1;
            solved[e] = true;
        }
    }

    // Peel tree leaves: a vertex with exactly one unsolved incident edge
    // determines that edge from its balancing equation.
    std::vector<std::vector<int>> incident(nv);
    for (int e = 0; e < ne; ++e) {
        incident[xg.edges[e].first].push_back(e);
        incident[xg.edges[e].second].push_back(e);
    }
    std::vector<int> unsolved_at(nv, 0);
    for (int v = 0; v < nv; ++v)
        for (int e : incident[v])
            if (!solved[e])
                ++unsolved_at[v];
    std::vector<int> queue;
    std::vector<bool> done_vertex(nv, false);
    for (int v = 0; v < nv; ++v)
        if (unsolved_at[v] == 1)
            queue.push_back(v);
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        if (done_vertex[v] || unsolved_at[v] != 1)
            continue;
        done_vertex[v] = true;
        int target = -1;
        std::vector<long long> acc(g + 1, 0);
        acc[0] = rhs[v];
        for (int e : incident[v]) {
            if (!solved[e]) {
                target = e;
                continue;
            }
            // contribution of a solved edge to (in - out) at v
            const int sgn = (xg.edges[e].second == v) ? 1 : -1;
            for (int j = 0; j <= g; ++j)
                acc[j] -= sgn * form[e].c[j];
        }
        assert(target >= 0);
        const int sgn = (xg.edges[target].second == v) ? 1 : -1;
        for (int j = 0; j <= g; ++j)
            form[target].c[j] = sgn * acc[j];
        solved[target] = true;
        const int other = xg.edges[target].first == v ? xg.edges[target].second
                                                      : xg.edges[target].first;
        if (--unsolved_at[other] == 1)
            queue.push_back(other);
        unsolved_at[v] = 0;
    }
    for (int e = 0; e < ne; ++e)
        assert(solved[e]);

#ifndef NDEBUG
    // the untouched vertex equations must hold identically
    for (int v = 0; v < nv; ++v) {
        std::vector<long long> acc(g + 1, 0);
        acc[0] = -rhs[v];
        for (int e : incident[v]) {
            const int sgn = (xg.edges[e].second == v) ? 1 : -1;
            for (int j = 0; j <= g; ++j)
                acc[j] += sgn * form[e].c[j];
        }
        for (int j = 0; j <= g; ++j)
            assert(acc[j] == 0);
    }
#endif

    LatticeScan ls;
    ls.nv = nv;
    ls.g = g;
    ls.bound = profile.positive_sum();
    ls.edge_ends = xg.edges;
    ls.form = std::move(form);
    ls.prepare();

    std::vector<long long> partial(ne);
    bool feasible = true;
    for (int e = 0; e < ne; ++e) {
        partial[e] = ls.form[e].c[0];
        // an edge with a forced weight that is zero or out of range kills
        // the whole graph
        if (ls.last_coord[e] == 0 &&
            (partial[e] == 0 || partial[e] > ls.bound || partial[e] < -ls.bound))
            feasible = false;
    }
    if (feasible) {
        if (g == 0)
            ls.leaf_point(partial);
        else
            ls.scan(0, partial);
    }

    return Rational(ls.total, BigInt(xgraph_automorphism_order(xg)));
}

Rational leaky_count_xgraphs(const RamificationProfile& profile)
{
    Rational total = 0;
    for (const XGraph& xg : enumerate_x_graphs(profile.genus, profile.n()))
        total += contribution_S(xg, profile);
    return total;
}

}  // namespace leaky
