#include "leaky/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace leaky {

void MultivariatePolynomial::add_term(const std::vector<int>& exponents,
                                      const Rational& c)
{
    if (static_cast<int>(exponents.size()) != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

Rational MultivariatePolynomial::evaluate(const std::vector<Rational>& point) const
{
    if (static_cast<int>(point.size()) != nvars)
        throw std::invalid_argument("evaluation point length mismatch");
    Rational total = 0;
    for (const auto& [exp, c] : terms) {
        Rational term = c;
        for (int v = 0; v < nvars; ++v)
            for (int e = 0; e < exp[v]; ++e)
                term *= point[v];
        total += term;
    }
    return total;
}

Rational MultivariatePolynomial::evaluate_int(const std::vector<int>& point) const
{
    std::vector<Rational> q(point.begin(), point.end());
    return evaluate(q);
}

int MultivariatePolynomial::total_degree() const
{
    int deg = -1;
    for (const auto& [exp, c] : terms)
        deg = std::max(deg, std::accumulate(exp.begin(), exp.end(), 0));
    return deg;
}

namespace {

void monomials_rec(int nvars, int budget, std::vector<int>& acc,
                   std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(acc.size()) == nvars) {
        out.push_back(acc);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        acc.push_back(e);
        monomials_rec(nvars, budget - e, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> monomials_up_to_degree(int nvars, int max_degree)
{
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    monomials_rec(nvars, max_degree, acc, out);
    return out;
}

std::string polynomial_to_string(const MultivariatePolynomial& p,
                                 const std::vector<std::string>& var_names)
{
    if (p.terms.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // highest total degree first reads better
    std::vector<std::pair<std::vector<int>, Rational>> sorted(p.terms.begin(),
                                                              p.terms.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        return da > db;
    });
    for (const auto& [exp, c] : sorted) {
        if (!first)
            out << " + ";
        first = false;
        out << rational_to_string(c);
        for (size_t v = 0; v < exp.size(); ++v) {
            if (exp[v] == 0)
                continue;
            out << "*" << (v < var_names.size() ? var_names[v] : "x?");
            if (exp[v] > 1)
                out << "^" << exp[v];
        }
    }
    return out.str();
}

}  // namespace leaky
