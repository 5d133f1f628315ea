#include "leaky/chamber.hpp"

#include "leaky/covers.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace leaky {

std::vector<std::vector<int>> box_profiles(int g, int n, int k,
                                           const std::vector<int>& signs,
                                           const SampleBox& box)
{
    if (static_cast<int>(signs.size()) != n ||
        static_cast<int>(box.ranges.size()) != n - 1)
        throw std::invalid_argument("box_profiles: shape mismatch");
    const long long total = static_cast<long long>(k) * (2 * g - 2 + n);

    std::vector<std::vector<int>> out;
    std::vector<int> x(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n - 1) {
            long long last = total - std::accumulate(x.begin(), x.end() - 1, 0LL);
            if (last == 0 || (last > 0) != (signs[n - 1] > 0))
                return;
            x[n - 1] = static_cast<int>(last);
            out.push_back(x);
            return;
        }
        for (int v = box.ranges[pos].first; v <= box.ranges[pos].second; ++v) {
            if (v == 0 || (v > 0) != (signs[pos] > 0))
                continue;
            x[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

bool box_avoids_walls(const std::vector<std::vector<int>>& points,
                      const std::vector<Wall>& walls)
{
    for (const Wall& w : walls) {
        int side = 0;
        for (const auto& x : points) {
            const long long v = wall_evaluate(w, x);
            if (v == 0)
                return false;  // a point on the wall
            const int s = v > 0 ? 1 : -1;
            if (side == 0)
                side = s;
            else if (side != s)
                return false;  // wall separates the box
        }
    }
    return true;
}

ChamberReport chamber_polynomial(int g, int n, int k, const std::vector<int>& signs,
                                 const SampleBox& box)
{
    const int degree_bound = 4 * g - 3 + n;
    const int nvars = n - 1;
    const auto monomials = monomials_up_to_degree(nvars, degree_bound);
    const size_t m = monomials.size();

    const auto points = box_profiles(g, n, k, signs, box);
    if (points.size() < m)
        throw interpolation_failure("not enough lattice points in the region");

    auto monomial_row = [&](const std::vector<int>& x) {
        std::vector<Rational> row(m);
        for (size_t j = 0; j < m; ++j) {
            Rational v = 1;
            for (int var = 0; var < nvars; ++var)
                for (int e = 0; e < monomials[j][var]; ++e)
                    v *= x[var];
            row[j] = v;
        }
        return row;
    };

    // Greedy rank selection over lexicographically ordered points: keep a
    // point when its monomial row enlarges the row space.
    std::vector<std::vector<Rational>> reduced;  // echelon rows
    std::vector<size_t> pivot_col;
    std::vector<size_t> training;
    std::vector<Rational> values(points.size());
    std::vector<bool> value_known(points.size(), false);

    auto reduce_row = [&](std::vector<Rational> row) {
        for (size_t r = 0; r < reduced.size(); ++r) {
            const Rational& lead = row[pivot_col[r]];
            if (lead != 0) {
                const Rational f = lead;
                for (size_t j = 0; j < m; ++j)
                    row[j] -= f * reduced[r][j];
            }
        }
        return row;
    };

    for (size_t i = 0; i < points.size() && reduced.size() < m; ++i) {
        std::vector<Rational> row = monomial_row(points[i]);
        std::vector<Rational> rem = reduce_row(row);
        size_t col = m;
        for (size_t j = 0; j < m; ++j)
            if (rem[j] != 0) {
                col = j;
                break;
            }
        if (col == m)
            continue;
        const Rational lead = rem[col];
        for (size_t j = 0; j < m; ++j)
            rem[j] /= lead;
        reduced.push_back(std::move(rem));
        pivot_col.push_back(col);
        training.push_back(i);
    }
    if (reduced.size() < m)
        throw interpolation_failure("sample design is rank-deficient");

    // Solve the exact m x m system on the selected points.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (size_t r = 0; r < m; ++r) {
        const auto& x = points[training[r]];
        auto row = monomial_row(x);
        for (size_t j = 0; j < m; ++j)
            a[r][j] = row[j];
        const auto profile = make_profile(g, x, k);
        values[training[r]] = leaky_count(profile);
        value_known[training[r]] = true;
        a[r][m] = values[training[r]];
    }
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m)
            throw interpolation_failure("singular interpolation system");
        std::swap(a[col], a[pivot]);
        const Rational lead = a[col][col];
        for (size_t j = col; j <= m; ++j)
            a[col][j] /= lead;
        for (size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (size_t j = col; j <= m; ++j)
                a[r][j] -= f * a[col][j];
        }
    }

    MultivariatePolynomial poly;
    poly.nvars = nvars;
    for (size_t j = 0; j < m; ++j)
        poly.add_term(monomials[j], a[j][m]);

    // validate on every remaining box point
    int validated = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        if (value_known[i])
            continue;
        const auto& x = points[i];
        std::vector<int> free_coords(x.begin(), x.end() - 1);
        const Rational predicted = poly.evaluate_int(free_coords);
        const Rational actual = leaky_count(make_profile(g, x, k));
        if (predicted != actual)
            throw interpolation_failure("validation sample disagrees with the fit");
        ++validated;
    }

    ChamberReport report;
    report.genus = g;
    report.n = n;
    report.leak = k;
    report.signs = signs;
    report.box = box;
    report.degree_bound = degree_bound;
    report.polynomial = std::move(poly);
    report.training_points = static_cast<int>(m);
    report.validation_points = validated;
    report.verified = true;
    return report;
}

}  // namespace leaky
