#include "leaky/covers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace leaky {

namespace {

// A strand is an open edge germ during the left-to-right sweep: either an
// in-end not yet consumed (end_born, origin = label index) or the growing
// right half of a bounded edge / future out-end (origin = birth vertex).
struct Strand {
    int weight = 0;
    bool end_born = false;
    int origin = 0;

    auto key() const { return std::tuple(weight, end_born, origin); }
};

struct CoverLess {
    bool operator()(const LeakyCover& a, const LeakyCover& b) const
    {
        if (a.bounded_edges != b.bounded_edges)
            return a.bounded_edges < b.bounded_edges;
        return a.end_vertex < b.end_vertex;
    }
};

// Callback receives the canonically sorted edge list and the end table of
// each accepted cover. Every cover class is visited exactly once: the event
// at each vertex is determined by the cover, and choices among strands with
// identical (weight, origin) are tried once per event.
class CoverSearch {
public:
    using Visitor = std::function<void(const std::vector<CoverEdge>&,
                                       const std::vector<int>&)>;

    explicit CoverSearch(const RamificationProfile& profile)
        : profile_(profile),
          r_(profile.vertex_count()),
          k_(profile.leak),
          bound_(profile.positive_sum())
    {
        end_vertex_.assign(profile.n(), -1);
        for (int i = 0; i < profile.n(); ++i) {
            if (profile.entries[i] > 0)
                strands_.push_back(Strand{profile.entries[i], true, i});
            else
                out_labels_.push_back(i);
        }
        right_degree_ = profile.right_degree();
        saved_.resize(r_);
        tried_joins_.resize(r_);
        tried_splits_.resize(r_);
    }

    void run(const Visitor& visit)
    {
        visitor_ = &visit;
        place_vertex(0);
        visitor_ = nullptr;
    }

private:
    void place_vertex(int v)
    {
        if (v == r_) {
            finalize();
            return;
        }
        const int remaining = r_ - v;
        const int n_minus = static_cast<int>(out_labels_.size());
        const int count = static_cast<int>(strands_.size());
        // Each event changes the strand count by exactly one and consumes at
        // most two strands, so dead branches can be cut early.
        if (std::abs(count - n_minus) > remaining)
            return;
        if ((count + remaining - n_minus) % 2 != 0)
            return;
        int end_born = 0;
        for (const Strand& s : strands_)
            end_born += s.end_born ? 1 : 0;
        if (end_born > 2 * remaining)
            return;

        // Joins: two strands a, b merge into one of weight a+b-k. Identical
        // (weight, origin) choices produce identical covers and are tried
        // once.
        auto& tried_joins = tried_joins_[v];
        tried_joins.clear();
        for (int i = 0; i < count; ++i) {
            for (int j = i + 1; j < count; ++j) {
                const Strand a = strands_[i], b = strands_[j];
                const int w = a.weight + b.weight - k_;
                if (w < 1)
                    continue;
                auto ka = a.key(), kb = b.key();
                if (kb < ka)
                    std::swap(ka, kb);
                const auto sig = std::pair(ka, kb);
                if (std::find(tried_joins.begin(), tried_joins.end(), sig) !=
                    tried_joins.end())
                    continue;
                tried_joins.push_back(sig);
                assert(w <= bound_);
                auto& saved = saved_[v];
                saved = strands_;
                consume(a, v);
                consume(b, v);
                strands_.erase(strands_.begin() + j);
                strands_.erase(strands_.begin() + i);
                strands_.push_back(Strand{w, false, v});
                place_vertex(v + 1);
                strands_ = saved;
                unconsume(a);
                unconsume(b);
            }
        }

        // Splits: one strand of weight w becomes two of weights a + b = w - k.
        auto& tried_splits = tried_splits_[v];
        tried_splits.clear();
        for (int i = 0; i < count; ++i) {
            const Strand s = strands_[i];
            const int total = s.weight - k_;
            if (total < 2)
                continue;
            const auto sk = s.key();
            if (std::find(tried_splits.begin(), tried_splits.end(), sk) !=
                tried_splits.end())
                continue;
            tried_splits.push_back(sk);
            for (int a = 1; 2 * a <= total; ++a) {
                const int b = total - a;
                auto& saved = saved_[v];
                saved = strands_;
                consume(s, v);
                strands_.erase(strands_.begin() + i);
                strands_.push_back(Strand{a, false, v});
                strands_.push_back(Strand{b, false, v});
                place_vertex(v + 1);
                strands_ = saved;
                unconsume(s);
            }
        }
    }

    // Consuming a strand at vertex v closes either an in-end or a bounded
    // edge.
    void consume(const Strand& s, int v)
    {
        if (s.end_born) {
            end_vertex_[s.origin] = v;
        } else {
            edges_.push_back(CoverEdge{s.origin, v, s.weight});
        }
    }

    void unconsume(const Strand& s)
    {
        if (s.end_born)
            end_vertex_[s.origin] = -1;
        else
            edges_.pop_back();
    }

    void finalize()
    {
        const int n_minus = static_cast<int>(out_labels_.size());
        if (static_cast<int>(strands_.size()) != n_minus)
            return;
        std::vector<int> weights;
        weights.reserve(strands_.size());
        for (const Strand& s : strands_) {
            if (s.end_born)
                return;  // an in-end survived to +infinity
            weights.push_back(s.weight);
        }
        std::sort(weights.begin(), weights.end(), std::greater<int>());
        if (weights != right_degree_)
            return;
        assign_out_label(0, std::vector<bool>(strands_.size(), false));
    }

    void assign_out_label(size_t pos, std::vector<bool> used)
    {
        if (pos == out_labels_.size()) {
            accept();
            return;
        }
        const int label = out_labels_[pos];
        const int want = -profile_.entries[label];
        std::set<std::pair<int, int>> tried;
        for (size_t i = 0; i < strands_.size(); ++i) {
            if (used[i] || strands_[i].weight != want)
                continue;
            if (!tried.insert({strands_[i].weight, strands_[i].origin}).second)
                continue;
            used[i] = true;
            end_vertex_[label] = strands_[i].origin;
            assign_out_label(pos + 1, used);
            end_vertex_[label] = -1;
            used[i] = false;
        }
    }

    void accept()
    {
        if (!connected())
            return;
        sorted_edges_ = edges_;
        std::sort(sorted_edges_.begin(), sorted_edges_.end());
        assert(static_cast<int>(sorted_edges_.size()) ==
               profile_.bounded_edge_count());
        (*visitor_)(sorted_edges_, end_vertex_);
    }

    bool connected() const
    {
        if (r_ <= 1)
            return true;
        std::vector<int> parent(r_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = r_;
        for (const CoverEdge& e : edges_) {
            int a = find(e.source), b = find(e.target);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        return components == 1;
    }

    using StrandKey = std::tuple<int, bool, int>;

    const RamificationProfile& profile_;
    int r_;
    int k_;
    int bound_;
    std::vector<Strand> strands_;
    std::vector<int> out_labels_;
    std::vector<int> right_degree_;
    std::vector<CoverEdge> edges_;
    std::vector<int> end_vertex_;
    std::vector<std::vector<Strand>> saved_;
    std::vector<std::vector<std::pair<StrandKey, StrandKey>>> tried_joins_;
    std::vector<std::vector<StrandKey>> tried_splits_;
    std::vector<CoverEdge> sorted_edges_;
    const Visitor* visitor_ = nullptr;
};

}  // namespace

std::vector<LeakyCover> enumerate_covers(const RamificationProfile& profile)
{
    std::set<LeakyCover, CoverLess> results;
    CoverSearch(profile).run(
        [&](const std::vector<CoverEdge>& edges, const std::vector<int>& ends) {
            const bool fresh =
                results.insert(LeakyCover{profile, edges, ends}).second;
            assert(fresh);
            (void)fresh;
        });
    return {results.begin(), results.end()};
}

BigInt automorphism_order(const LeakyCover& cover)
{
    BigInt aut = 1;
    size_t i = 0;
    const auto& edges = cover.bounded_edges;
    while (i < edges.size()) {
        size_t j = i;
        while (j < edges.size() && edges[j] == edges[i])
            ++j;
        aut *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return aut;
}

Rational cover_multiplicity(const LeakyCover& cover)
{
    BigInt product = 1;
    for (const CoverEdge& e : cover.bounded_edges)
        product *= e.weight;
    return Rational(product, automorphism_order(cover));
}

Rational leaky_count(const RamificationProfile& profile)
{
    return sweep_covers(profile).total;
}

namespace {

// Edge indices of the tree path from a to b.
std::vector<int> tree_path(int a, int b,
                           const std::vector<std::vector<std::pair<int, int>>>& adj,
                           int r)
{
    std::vector<int> parent_vertex(r, -1), parent_edge(r, -1);
    std::vector<int> stack{a};
    parent_vertex[a] = a;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [to, idx] : adj[v]) {
            if (parent_vertex[to] != -1)
                continue;
            parent_vertex[to] = v;
            parent_edge[to] = idx;
            stack.push_back(to);
        }
    }
    std::vector<int> path;
    if (parent_vertex[b] == -1)
        return path;  // disconnected; caller reports
    for (int v = b; v != a; v = parent_vertex[v])
        path.push_back(parent_edge[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

namespace {

// Rows over the bounded-edge-length coordinates, as machine integers; the
// entries are signed edge weights, so they stay tiny.
std::vector<std::vector<long long>> cover_matrix_rows(const LeakyCover& cover)
{
    const int r = cover.vertex_count();
    const auto& edges = cover.bounded_edges;
    const int ne = static_cast<int>(edges.size());

    // Spanning tree over the bounded edges, in canonical edge order.
    std::vector<int> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> in_tree(ne, false);
    std::vector<std::vector<std::pair<int, int>>> tree_adj(r);
    std::vector<int> nontree;
    for (int i = 0; i < ne; ++i) {
        int a = find(edges[i].source), b = find(edges[i].target);
        if (a != b) {
            parent[a] = b;
            in_tree[i] = true;
            tree_adj[edges[i].source].push_back({edges[i].target, i});
            tree_adj[edges[i].target].push_back({edges[i].source, i});
        } else {
            nontree.push_back(i);
        }
    }
    for (int v = 1; v < r; ++v)
        if (find(v) != find(0))
            throw singular_matrix_error("cover is disconnected");

    // pos(b) - pos(a) along the tree path, as a row of signed edge weights.
    auto path_row = [&](int a, int b) {
        std::vector<long long> row(ne, 0);
        auto path = tree_path(a, b, tree_adj, r);
        int at = a;
        for (int idx : path) {
            const CoverEdge& e = edges[idx];
            if (e.source == at) {
                row[idx] += e.weight;
                at = e.target;
            } else {
                row[idx] -= e.weight;
                at = e.source;
            }
        }
        if (at != b)
            throw singular_matrix_error("broken spanning tree path");
        return row;
    };

    std::vector<std::vector<long long>> m;
    // Cycle closure: for every non-tree edge, going around the cycle returns
    // to the start.
    for (int idx : nontree) {
        const CoverEdge& e = edges[idx];
        std::vector<long long> row = path_row(e.source, e.target);
        row[idx] -= e.weight;
        m.push_back(std::move(row));
    }
    // Evaluation rows: distances between consecutive branch points.
    for (int v = 0; v + 1 < r; ++v)
        m.push_back(path_row(v, v + 1));

    if (static_cast<int>(m.size()) != ne)
        throw singular_matrix_error("cover matrix is not square");
    return m;
}

// Bareiss over __int128. Intermediate entries are minors of the input, so a
// Hadamard bound certifies no overflow before we start.
bool hadamard_fits_i128(const std::vector<std::vector<long long>>& m)
{
    long double log2_bound = 0;
    for (const auto& row : m) {
        long double norm2 = 0;
        for (long long v : row)
            norm2 += static_cast<long double>(v) * static_cast<long double>(v);
        if (norm2 == 0)
            return true;  // singular anyway
        log2_bound += std::log2(norm2) / 2;
    }
    return 2 * log2_bound + 2 < 126;
}

__int128 determinant_i128(std::vector<std::vector<long long>> in)
{
    const size_t n = in.size();
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = in[i][j];
    __int128 sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

IntMatrix cover_matrix(const LeakyCover& cover)
{
    const auto rows = cover_matrix_rows(cover);
    IntMatrix m(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        m[i].assign(rows[i].begin(), rows[i].end());
    return m;
}

namespace {

// Allocation-free fixed-size variant of the matrix build plus Bareiss; the
// grid check visits millions of covers so this path matters.
constexpr int kSmall = 16;

bool lattice_determinant_small(const std::vector<CoverEdge>& edges, int r,
                               __int128& out)
{
    const int ne = static_cast<int>(edges.size());
    if (ne > kSmall || r > kSmall)
        return false;
    long double log2_norm2_sum = 0;
    for (const CoverEdge& e : edges) {
        // every row entry is a signed weight appearing at most once per edge
        const long double w2 =
            static_cast<long double>(e.weight) * e.weight * ne;
        log2_norm2_sum += std::log2(w2) / 2;
    }
    if (2 * log2_norm2_sum + 2 >= 126)
        return false;

    // spanning tree
    int parent[kSmall];
    for (int v = 0; v < r; ++v)
        parent[v] = v;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int adj_to[kSmall][3], adj_edge[kSmall][3], adj_count[kSmall] = {};
    bool in_tree[kSmall] = {};
    int nontree[kSmall], n_nontree = 0;
    for (int i = 0; i < ne; ++i) {
        const int a = find(edges[i].source), b = find(edges[i].target);
        if (a != b) {
            parent[a] = b;
            in_tree[i] = true;
            const int s = edges[i].source, t = edges[i].target;
            if (adj_count[s] >= 3 || adj_count[t] >= 3)
                return false;  // not trivalent; use the general path
            adj_to[s][adj_count[s]] = t;
            adj_edge[s][adj_count[s]++] = i;
            adj_to[t][adj_count[t]] = s;
            adj_edge[t][adj_count[t]++] = i;
        } else {
            nontree[n_nontree++] = i;
        }
    }
    for (int v = 1; v < r; ++v)
        if (find(v) != find(0))
            throw singular_matrix_error("cover is disconnected");

    // signed tree-path rows from the root to each vertex, in one pass
    long long pos[kSmall][kSmall];
    {
        bool seen[kSmall] = {};
        int stack[kSmall], top = 0;
        stack[top++] = 0;
        seen[0] = true;
        for (int j = 0; j < ne; ++j)
            pos[0][j] = 0;
        while (top > 0) {
            const int v = stack[--top];
            for (int i = 0; i < adj_count[v]; ++i) {
                const int to = adj_to[v][i];
                if (seen[to])
                    continue;
                seen[to] = true;
                const int idx = adj_edge[v][i];
                for (int j = 0; j < ne; ++j)
                    pos[to][j] = pos[v][j];
                pos[to][idx] += edges[idx].target == to ? edges[idx].weight
                                                        : -edges[idx].weight;
                stack[top++] = to;
            }
        }
        for (int v = 0; v < r; ++v)
            if (!seen[v])
                throw singular_matrix_error("broken spanning tree path");
    }

    __int128 m[kSmall][kSmall];
    int row = 0;
    for (int t = 0; t < n_nontree; ++t) {
        const CoverEdge& e = edges[nontree[t]];
        for (int j = 0; j < ne; ++j)
            m[row][j] = pos[e.target][j] - pos[e.source][j];
        m[row][nontree[t]] -= e.weight;
        ++row;
    }
    for (int v = 0; v + 1 < r; ++v) {
        for (int j = 0; j < ne; ++j)
            m[row][j] = pos[v + 1][j] - pos[v][j];
        ++row;
    }
    if (row != ne)
        throw singular_matrix_error("cover matrix is not square");

    __int128 sign = 1, prev = 1;
    for (int k = 0; k + 1 < ne; ++k) {
        if (m[k][k] == 0) {
            int swap_row = k + 1;
            while (swap_row < ne && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == ne) {
                out = 0;
                return true;
            }
            for (int j = 0; j < ne; ++j)
                std::swap(m[k][j], m[swap_row][j]);
            sign = -sign;
        }
        for (int i = k + 1; i < ne; ++i) {
            for (int j = k + 1; j < ne; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    out = sign * m[ne - 1][ne - 1];
    return true;
}

BigInt int128_to_bigint(__int128 d)
{
    const bool neg = d < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(d)
                              : static_cast<unsigned __int128>(d);
    BigInt out = (BigInt(static_cast<unsigned long long>(u >> 64)) << 64) +
                 BigInt(static_cast<unsigned long long>(u));
    return neg ? -out : out;
}

}  // namespace

CoverSweep sweep_covers(const RamificationProfile& profile)
{
    CoverSweep sweep;
    const int ne = profile.bounded_edge_count();
    const int r = profile.vertex_count();
    const double log_prod_bound =
        ne * std::log2(std::max(2, profile.positive_sum()));
    const bool fast = ne <= 8 && log_prod_bound < 62;

    if (!fast) {
        Rational total = 0;
        for (const LeakyCover& cover : enumerate_covers(profile)) {
            ++sweep.classes;
            total += cover_multiplicity(cover);
            BigInt expected = 1;
            for (const CoverEdge& e : cover.bounded_edges)
                expected *= e.weight;
            if (lattice_determinant(cover) != expected)
                sweep.determinant_identity = false;
        }
        sweep.total = total;
        return sweep;
    }

    // common denominator: every automorphism order is a product of
    // factorials of parallel-edge multiplicities summing to at most 8
    constexpr long long kDen = 40320;  // 8!
    __int128 acc = 0;
    CoverSearch(profile).run([&](const std::vector<CoverEdge>& edges,
                                 const std::vector<int>& ends) {
        ++sweep.classes;
        long long prod = 1, aut = 1;
        size_t i = 0;
        while (i < edges.size()) {
            size_t j = i;
            while (j < edges.size() && edges[j] == edges[i]) {
                prod *= edges[j].weight;
                ++j;
            }
            for (size_t run = 2; run <= j - i; ++run)
                aut *= static_cast<long long>(run);
            i = j;
        }
        acc += static_cast<__int128>(prod) * (kDen / aut);

        __int128 det = 1;
        bool have_det = true;
        if (!edges.empty()) {
            have_det = lattice_determinant_small(edges, r, det);
            if (det < 0)
                det = -det;
        }
        if (!have_det) {
            LeakyCover cover{profile, edges, ends};
            if (lattice_determinant(cover) != BigInt(prod))
                sweep.determinant_identity = false;
        } else if (det != prod) {
            sweep.determinant_identity = false;
        }
    });
    sweep.total = Rational(int128_to_bigint(acc), BigInt(kDen));
    return sweep;
}

BigInt lattice_determinant(const LeakyCover& cover)
{
    if (cover.bounded_edges.empty())
        return 1;  // single-vertex covers: empty product of weights
    BigInt det;
    __int128 small = 0;
    if (lattice_determinant_small(cover.bounded_edges, cover.vertex_count(),
                                  small)) {
        det = int128_to_bigint(small);
    } else {
        const auto rows = cover_matrix_rows(cover);
        if (hadamard_fits_i128(rows)) {
            det = int128_to_bigint(determinant_i128(rows));
        } else {
            IntMatrix m(rows.size());
            for (size_t i = 0; i < rows.size(); ++i)
                m[i].assign(rows[i].begin(), rows[i].end());
            det = determinant(std::move(m));
        }
    }
    if (det == 0)
        throw singular_matrix_error("cover matrix is singular");
    return det < 0 ? -det : det;
}

}  // namespace leaky
