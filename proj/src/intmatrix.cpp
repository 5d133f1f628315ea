#include "leaky/intmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace leaky {

BigInt determinant(IntMatrix m)
{
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix not square");
    if (n == 0)
        return 1;

    // Bareiss: all divisions are exact, intermediate entries stay integral.
    BigInt sign = 1;
    BigInt prev = 1;
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
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

void minor_gcd_rec(const IntMatrix& m, int k, size_t row_start,
                   std::vector<size_t>& rows, BigInt& g)
{
    if (static_cast<int>(rows.size()) == k) {
        // Fix the rows, run over all column k-subsets.
        const size_t ncols = m[0].size();
        std::vector<size_t> c(k);
        for (int i = 0; i < k; ++i)
            c[i] = i;
        while (true) {
            IntMatrix sub(k, std::vector<BigInt>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub[i][j] = m[rows[i]][c[j]];
            BigInt d = determinant(sub);
            if (d < 0)
                d = -d;
            g = boost::multiprecision::gcd(g, d);
            int pos = k - 1;
            while (pos >= 0 && c[pos] == ncols - static_cast<size_t>(k - pos))
                --pos;
            if (pos < 0)
                break;
            ++c[pos];
            for (int i = pos + 1; i < k; ++i)
                c[i] = c[i - 1] + 1;
        }
        return;
    }
    for (size_t r = row_start; r < m.size(); ++r) {
        rows.push_back(r);
        minor_gcd_rec(m, k, r + 1, rows, g);
        rows.pop_back();
    }
}

}  // namespace

BigInt gcd_of_minors(const IntMatrix& m, int k)
{
    if (m.empty() || k <= 0)
        throw std::invalid_argument("gcd_of_minors: bad arguments");
    if (static_cast<int>(m.size()) < k || static_cast<int>(m[0].size()) < k)
        return 0;
    BigInt g = 0;
    std::vector<size_t> rows;
    minor_gcd_rec(m, k, 0, rows, g);
    return g;
}

}  // namespace leaky
