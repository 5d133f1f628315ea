#pragma once

#include "leaky/polynomial.hpp"
#include "leaky/profile.hpp"
#include "leaky/walls.hpp"

#include <stdexcept>
#include <vector>

namespace leaky {

class interpolation_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integer ranges for the free coordinates x_1 .. x_{n-1}; the last entry is
// pinned by sum(x) = k*(2g-2+n).
struct SampleBox {
    std::vector<std::pair<int, int>> ranges;
};

struct ChamberReport {
    int genus = 0;
    int n = 0;
    int leak = 0;
    std::vector<int> signs;
    SampleBox box;
    int degree_bound = 0;
    MultivariatePolynomial polynomial;  // in x_1 .. x_{n-1}
    int training_points = 0;
    int validation_points = 0;
    bool verified = false;
};

struct PiecewiseReport {
    std::vector<Wall> walls;  // both variants, tagged
    std::vector<ChamberReport> chambers;
};

// All valid profile vectors whose free coordinates lie in the box, in
// lexicographic order.
std::vector<std::vector<int>> box_profiles(int g, int n, int k,
                                           const std::vector<int>& signs,
                                           const SampleBox& box);

// True when no candidate wall passes through or separates the box points.
bool box_avoids_walls(const std::vector<std::vector<int>>& points,
                      const std::vector<Wall>& walls);

// Interpolates L_g(x, k) on the box as a polynomial of total degree at most
// 4g-3+n in the free coordinates, solving an exact linear system on
// lexicographically smallest points of full rank and validating on every
// remaining box point. Throws interpolation_failure when the region cannot
// pin down the polynomial or a validation point disagrees (a wall inside
// the region or a degree-bound violation).
ChamberReport chamber_polynomial(int g, int n, int k, const std::vector<int>& signs,
                                 const SampleBox& box);

}  // namespace leaky
