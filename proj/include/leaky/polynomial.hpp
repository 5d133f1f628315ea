#pragma once

#include "leaky/rational.hpp"

#include <map>
#include <vector>

namespace leaky {

// Exact multivariate polynomial: exponent vector -> coefficient, with no
// zero coefficients stored.
struct MultivariatePolynomial {
    int nvars = 0;
    std::map<std::vector<int>, Rational> terms;

    void add_term(const std::vector<int>& exponents, const Rational& c);
    Rational evaluate(const std::vector<Rational>& point) const;
    Rational evaluate_int(const std::vector<int>& point) const;
    int total_degree() const;  // -1 for the zero polynomial

    bool operator==(const MultivariatePolynomial&) const = default;
};

// All exponent vectors in `nvars` variables of total degree <= max_degree,
// in lexicographic order.
std::vector<std::vector<int>> monomials_up_to_degree(int nvars, int max_degree);

std::string polynomial_to_string(const MultivariatePolynomial& p,
                                 const std::vector<std::string>& var_names);

}  // namespace leaky
