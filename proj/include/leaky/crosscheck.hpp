#pragma once

#include "leaky/profile.hpp"
#include "leaky/rational.hpp"

#include <string>
#include <vector>

namespace leaky {

// Grid of profiles for the conformance sweep. Profiles are enumerated as
// weakly decreasing entry vectors (one representative per label
// permutation; label equivariance is tested separately).
struct CrosscheckSpec {
    int max_genus = 1;
    int max_n = 3;
    int max_entry = 5;
    std::vector<int> leaks{0, 1};
    int jobs = 1;
};

struct CrosscheckRow {
    RamificationProfile profile;
    Rational by_enumeration;
    Rational by_fock_labeled;
    Rational by_xgraph;
    Rational by_fock_centralizer;   // recorded, not required to agree
    Rational by_fock_printed_sign;  // recorded, expected to deviate for k >= 1
    size_t cover_classes = 0;
    bool primaries_agree = false;
    bool centralizer_matches = false;
    bool printed_sign_matches = false;
    bool determinant_identity = false;  // lattice det == prod of weights
};

struct CrosscheckReport {
    CrosscheckSpec spec;
    std::vector<CrosscheckRow> rows;
    size_t profiles = 0;
    size_t primary_disagreements = 0;
    size_t centralizer_deviations = 0;
    size_t printed_sign_deviations = 0;
    bool all_primaries_agree = false;
    bool all_determinants_match = false;
};

std::vector<RamificationProfile> grid_profiles(const CrosscheckSpec& spec);

// Runs all three pipelines (plus the diagnostic fock modes) on every grid
// profile. Deterministic for a fixed spec regardless of the worker count.
CrosscheckReport run_crosscheck(const CrosscheckSpec& spec);

}  // namespace leaky
