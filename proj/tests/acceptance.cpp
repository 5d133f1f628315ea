// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Criterion 1 pins the reference tally 21 (= 9+6+3+3) for L_1((5,-1,-1),1)
// with exactly four cover classes. The direct graph oracle, the strand
// enumeration, the transfer operator and the x-graph lattice sums all
// produce 24 with six classes: the reference tally omits the two labelings
// of the shape whose lone out-end sits at the same vertex as the in-end
// (multiplicity 3/2 each, and the analogous k=0 shapes are required to
// reproduce the classical H_0((2,1,-2,-1)) = 4). The criterion is asserted
// as stated and reported honestly; the cross-pipeline criteria below pass
// at the computed value.

#include "leaky/chamber.hpp"
#include "leaky/covers.hpp"
#include "leaky/crosscheck.hpp"
#include "leaky/fock.hpp"
#include "leaky/intmatrix.hpp"
#include "leaky/walls.hpp"
#include "leaky/xgraph.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace leaky;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "")
{
    std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

std::string rat(const Rational& q) { return rational_to_string(q); }

// ---------------------------------------------------------------------
// 1. L_1((5,-1,-1),1) = 21 by all three pipelines; multiplicities
//    9, 6, 3, 3; four cover classes.
void criterion_1()
{
    const auto profile = make_profile(1, {5, -1, -1}, 1);
    const Rational by_enum = leaky_count(profile);
    const Rational by_fock = leaky_count_fock(profile);
    const Rational by_xgraph = leaky_count_xgraphs(profile);
    const auto covers = enumerate_covers(profile);

    std::multiset<Rational> mults;
    for (const LeakyCover& c : covers)
        mults.insert(cover_multiplicity(c));
    const std::multiset<Rational> expected_mults{9, 6, 3, 3};

    const bool pass = by_enum == 21 && by_fock == 21 && by_xgraph == 21 &&
                      covers.size() == 4 && mults == expected_mults;
    std::ostringstream detail;
    detail << "expected 21 with 4 classes {9,6,3,3}; computed enumerate="
           << rat(by_enum) << " fock=" << rat(by_fock)
           << " xgraph=" << rat(by_xgraph) << " with " << covers.size()
           << " classes {";
    bool first = true;
    for (const Rational& m : mults) {
        detail << (first ? "" : ",") << rat(m);
        first = false;
    }
    detail << "}";
    if (!pass)
        detail << " -- pipelines, direct oracle and classical k=0 values "
                  "support the computed tally; the reference omits the two "
                  "multiplicity-3/2 classes";
    report("criterion 1: L_1((5,-1,-1),1) = 21 with classes {9,6,3,3}", pass,
           detail.str());
}

// ---------------------------------------------------------------------
// 2. H_1((3,-3)) = 2 by all three pipelines.
void criterion_2()
{
    const auto profile = make_profile(1, {3, -3}, 0);
    const Rational a = leaky_count(profile);
    const Rational b = leaky_count_fock(profile);
    const Rational c = leaky_count_xgraphs(profile);
    const bool pass = a == 2 && b == 2 && c == 2;
    report("criterion 2: H_1((3,-3)) = 2 by all three pipelines", pass,
           "enumerate=" + rat(a) + " fock=" + rat(b) + " xgraph=" + rat(c));
}

// ---------------------------------------------------------------------
// 3. Lattice determinant of the pictured cover is 3; the 2x2-minor gcd of
//    its weight rows is 1; determinant = weight product on the whole grid.
void criterion_3(const CrosscheckReport& grid)
{
    LeakyCover pictured;
    pictured.profile = make_profile(1, {5, -1, -1}, 1);
    pictured.bounded_edges = {{0, 1, 3}, {0, 2, 1}, {1, 2, 1}};
    pictured.end_vertex = {0, 1, 2};
    const BigInt det = lattice_determinant(pictured);

    const IntMatrix weight_rows{
        {BigInt(3), BigInt(1), BigInt(-1), BigInt(-1)},
        {BigInt(0), BigInt(1), BigInt(0), BigInt(-1)}};
    const BigInt gcd = gcd_of_minors(weight_rows, 2);

    const bool pass = det == 3 && gcd == 1 && grid.all_determinants_match;
    report("criterion 3: lattice determinant 3, minor gcd 1, det = prod(w) "
           "on the grid",
           pass,
           "det=" + det.str() + " gcd=" + gcd.str() + " grid identity " +
               (grid.all_determinants_match ? "holds" : "VIOLATED"));
}

// ---------------------------------------------------------------------
// 4. Genus-1 two-end family: pipelines agree for x in 3..9 and the common
//    value interpolates to c*x(x-1)(x-2); c is recorded against the printed
//    closed form 1/6.
void criterion_4()
{
    bool agree = true;
    for (int x = 3; x <= 9; ++x) {
        const auto p = make_profile(1, {x, -(x - 2)}, 1);
        const Rational a = leaky_count(p);
        if (a != leaky_count_fock(p) || a != leaky_count_xgraphs(p))
            agree = false;
    }

    SampleBox box;
    box.ranges = {{3, 9}};
    bool cubic_ok = false;
    Rational c;
    std::string poly_note = "interpolation failed";
    try {
        const ChamberReport rep = chamber_polynomial(1, 2, 1, {1, -1}, box);
        const auto it = rep.polynomial.terms.find(std::vector<int>{3});
        if (it != rep.polynomial.terms.end()) {
            c = it->second;
            MultivariatePolynomial expected;
            expected.nvars = 1;
            expected.add_term({3}, c);
            expected.add_term({2}, -3 * c);
            expected.add_term({1}, 2 * c);
            cubic_ok = rep.verified && rep.degree_bound == 3 &&
                       rep.polynomial == expected;
            poly_note = "c = " + rat(c) + " (printed closed form uses 1/6)";
        }
    } catch (const interpolation_failure& e) {
        poly_note = std::string("interpolation failed: ") + e.what();
    }
    report("criterion 4: genus-1 two-end family cubic c*x(x-1)(x-2)",
           agree && cubic_ok,
           std::string(agree ? "pipelines agree on 3..9, " : "pipelines disagree, ") +
               poly_note);
}

// ---------------------------------------------------------------------
// 5. Exact three-way agreement across the whole grid.
void criterion_5(const CrosscheckReport& grid)
{
    std::ostringstream detail;
    detail << grid.profiles << " profiles, " << grid.primary_disagreements
           << " disagreements";
    report("criterion 5: three-way agreement on g<=2, n<=5, |x|<=6, k in {0,1,2}",
           grid.all_primaries_agree && grid.profiles > 300, detail.str());
}

// ---------------------------------------------------------------------
// 6. Wall generator output for (g,n,k) = (0,4,1), signs (+,+,-,-), and the
//    chamber polynomial there.
void criterion_6()
{
    const std::vector<int> signs{1, 1, -1, -1};
    const auto walls = candidate_walls(0, 4, 1, signs);
    const bool walls_ok =
        walls.size() == 2 && walls[0].subset == std::vector<int>{1, 3} &&
        walls[0].constant == 1 && walls[1].subset == std::vector<int>{1, 4} &&
        walls[1].constant == 1;

    bool chamber_ok = false;
    std::string note;
    try {
        SampleBox box;
        box.ranges = {{8, 11}, {2, 3}, {-5, -4}};
        const ChamberReport rep = chamber_polynomial(0, 4, 1, signs, box);
        const Rational at_point = rep.polynomial.evaluate_int({4, 1, -2});
        chamber_ok = rep.verified && rep.polynomial.total_degree() <= 1 &&
                     at_point == 7;
        note = "walls {x1+x3=1, x1+x4=1}: " +
               std::string(walls_ok ? "exact" : "WRONG") +
               ", chamber degree <= 1, value at (4,1,-2,-1) = " + rat(at_point);
    } catch (const interpolation_failure& e) {
        note = std::string("interpolation failed: ") + e.what();
    }
    report("criterion 6: example-consistent walls and 4-end chamber",
           walls_ok && chamber_ok, note);
}

// ---------------------------------------------------------------------
// 7. Algebra property suite on randomized sparse vectors.
void criterion_7()
{
    std::mt19937 rng(424242);
    auto random_vector = [&rng]() {
        std::uniform_int_distribution<int> nterms(1, 4);
        std::uniform_int_distribution<int> nparts(0, 3);
        std::uniform_int_distribution<int> part(1, 6);
        std::uniform_int_distribution<int> numer(-6, 6);
        FockVector v;
        const int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            std::vector<int> parts;
            const int m = nparts(rng);
            for (int j = 0; j < m; ++j)
                parts.push_back(part(rng));
            int c = numer(rng);
            if (c == 0)
                c = 3;
            const Partition mu = make_partition(parts);
            v[mu] += Rational(c, 2);
            if (v[mu] == 0)
                v.erase(mu);
        }
        return v;
    };

    bool ok = true;
    std::uniform_int_distribution<int> idx(1, 6);
    for (int trial = 0; trial < 80 && ok; ++trial) {
        const FockVector v = random_vector();
        const FockVector u = random_vector();
        int n = idx(rng), m = idx(rng);
        if (trial % 2)
            m = -m;
        if (trial % 3 == 0)
            m = -n;

        // commutation [a_n, a_m] = n delta_{n,-m}
        FockVector lhs = apply_generator(n, apply_generator(m, v));
        for (const auto& [mu, c] : apply_generator(m, apply_generator(n, v))) {
            lhs[mu] -= c;
            if (lhs[mu] == 0)
                lhs.erase(mu);
        }
        FockVector rhs;
        if (m == -n)
            for (const auto& [mu, c] : v)
                rhs[mu] = c * n;
        if (lhs != rhs)
            ok = false;

        // vacuum annihilation
        if (!apply_generator(idx(rng), vacuum()).empty())
            ok = false;

        // adjointness
        if (inner_product(apply_generator(n, u), v) !=
            inner_product(u, apply_generator(-n, v)))
            ok = false;
    }

    // pairing z(mu) delta on all partitions with parts <= 6, size <= 8
    for (int a = 1; a <= 6 && ok; ++a)
        for (int b = a; b <= 6 && ok; ++b) {
            const Partition mu = make_partition({b, a});
            if (inner_product(basis_vector(mu), basis_vector(mu)) !=
                Rational(centralizer_order(mu)))
                ok = false;
            const Partition nu = make_partition({b + 1, a});
            if (inner_product(basis_vector(mu), basis_vector(nu)) != 0)
                ok = false;
        }

    report("criterion 7: commutation, annihilation, pairing, adjointness", ok);
}

// ---------------------------------------------------------------------
// 8. Label-permutation invariance and k=0 reflection across the grid.
void criterion_8(const CrosscheckReport& grid)
{
    std::mt19937 rng(987654);
    bool ok = true;
    size_t perm_checked = 0, refl_checked = 0;
    for (size_t i = 0; i < grid.rows.size(); i += 5) {
        const auto& row = grid.rows[i];
        std::vector<int> x = row.profile.entries;
        std::shuffle(x.begin(), x.end(), rng);
        const auto permuted = make_profile(row.profile.genus, x, row.profile.leak);
        if (leaky_count_fock(permuted) != row.by_enumeration)
            ok = false;
        ++perm_checked;
        if (row.profile.leak == 0) {
            std::vector<int> reflected = row.profile.entries;
            for (int& v : reflected)
                v = -v;
            if (leaky_count_fock(make_profile(row.profile.genus, reflected, 0)) !=
                row.by_enumeration)
                ok = false;
            ++refl_checked;
        }
    }
    std::ostringstream detail;
    detail << perm_checked << " permutation and " << refl_checked
           << " reflection checks";
    report("criterion 8: label permutation and k=0 reflection invariance",
           ok && perm_checked > 100, detail.str());
}

// ---------------------------------------------------------------------
// 9. Exact interpolation in wall-free regions for the four (g, n) shapes.
void criterion_9()
{
    struct Case {
        int g, n, k;
        std::vector<int> signs;
        SampleBox box;
    };
    std::vector<Case> cases;
    for (int k = 0; k <= 1; ++k) {
        cases.push_back({0, 4, k, {1, 1, -1, -1},
                         SampleBox{{{8, 11}, {2, 3}, {-5, -4}}}});
        cases.push_back({0, 5, k, {1, 1, 1, -1, -1},
                         SampleBox{{{30, 33}, {2, 4}, {2, 4}, {-12, -10}}}});
        cases.push_back({1, 2, k, {1, -1}, SampleBox{{{4, 9}}}});
        cases.push_back({1, 3, k, {1, -1, -1},
                         SampleBox{{{12, 18}, {-7, -3}}}});
    }
    bool ok = true;
    std::string first_failure;
    for (const Case& c : cases) {
        std::ostringstream tag;
        tag << "(g=" << c.g << ",n=" << c.n << ",k=" << c.k << ")";
        try {
            auto walls = candidate_walls(c.g, c.n, c.k, c.signs);
            for (const Wall& w : candidate_walls(c.g, c.n, c.k, c.signs,
                                                 WallVariant::theorem_printed))
                walls.push_back(w);
            const auto points = box_profiles(c.g, c.n, c.k, c.signs, c.box);
            if (!box_avoids_walls(points, walls)) {
                ok = false;
                if (first_failure.empty())
                    first_failure = tag.str() + " box not wall-free";
                continue;
            }
            const ChamberReport rep =
                chamber_polynomial(c.g, c.n, c.k, c.signs, c.box);
            if (!rep.verified ||
                rep.polynomial.total_degree() > 4 * c.g - 3 + c.n ||
                rep.validation_points < 1) {
                ok = false;
                if (first_failure.empty())
                    first_failure = tag.str() + " fit not verified";
            }
        } catch (const std::exception& e) {
            ok = false;
            if (first_failure.empty())
                first_failure = tag.str() + " " + e.what();
        }
    }
    report("criterion 9: exact chamber interpolation for (0,4),(0,5),(1,2),(1,3)",
           ok, ok ? "all verified on held-out points" : first_failure);
}

}  // namespace

int main()
{
    const auto t0 = std::chrono::steady_clock::now();

    criterion_1();
    criterion_2();

    CrosscheckSpec spec;
    spec.max_genus = 2;
    spec.max_n = 5;
    spec.max_entry = 6;
    spec.leaks = {0, 1, 2};
    spec.jobs = std::max(2u, std::thread::hardware_concurrency());
    const CrosscheckReport grid = run_crosscheck(spec);

    criterion_3(grid);
    criterion_4();
    criterion_5(grid);
    criterion_6();
    criterion_7();
    criterion_8(grid);
    criterion_9();

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("%d/9 criteria passed in %.1fs\n", 9 - failures, elapsed);
    return failures == 0 ? 0 : 1;
}
