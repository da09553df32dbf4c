#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "ferrers/ideal.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/resolution.hpp"
#include "ferrers/toric.hpp"

using namespace ferrers;

namespace {

// The dumbest possible count: enumerate exponent vectors of degree d and
// test divisibility against the generator list.
Int standard_monomials_by_enumeration(const Partition& p, int d) {
    Int count = 0;
    std::vector<int> exp(p.n() + p.m(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
        if (var == exp.size()) {
            if (left != 0) return;
            std::vector<int> x(exp.begin(), exp.begin() + p.n());
            std::vector<int> y(exp.begin() + p.n(), exp.end());
            if (!ideal_membership(p, x, y)) ++count;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exp[var] = e;
            rec(var + 1, left - e);
        }
        exp[var] = 0;
    };
    rec(0, d);
    return count;
}

}  // namespace

TEST_CASE("quotient hilbert oracle") {
    CHECK(oracle::quotient_hilbert_oracle(validate_partition({2, 1}), 3) == 10);
    for_each_partition_in_box(3, 3, [](const Partition& p) {
        CHECK(oracle::quotient_hilbert_oracle(p, 0) == 1);
        CHECK(oracle::quotient_hilbert_oracle(p, 1) == p.n() + p.m());
        for (int d = 2; d <= 5; ++d)
            REQUIRE(oracle::quotient_hilbert_oracle(p, d) == standard_monomials_by_enumeration(p, d));
    });
}

TEST_CASE("toric hilbert oracle") {
    CHECK(oracle::toric_hilbert_oracle(validate_partition({2, 2}), 2) == 9);
    CHECK(oracle::toric_hilbert_oracle(validate_partition({3, 1, 1}), 2) == binomial(6, 2));
    for_each_partition_in_box(3, 3, [](const Partition& p) {
        CHECK(oracle::toric_hilbert_oracle(p, 1) == p.weight());
    });
    CHECK_THROWS_AS(oracle::toric_hilbert_oracle(validate_partition({6, 6, 6}), 12, 100),
                    resource_limit_error);
}

TEST_CASE("lattice path counts") {
    // rectangles: the classical turn statistic
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            Partition rect{std::vector<int>(n, m)};
            for (int k = 0; k <= n; ++k)
                REQUIRE(oracle::lattice_path_count(rect, k) == binomial(m - 1, k) * binomial(n - 1, k));
        }

    // (2,2): east-then-north walk turns once, north-then-east walk never
    CHECK(oracle::lattice_path_count(validate_partition({2, 2}), 0) == 1);
    CHECK(oracle::lattice_path_count(validate_partition({2, 2}), 1) == 1);
    CHECK(oracle::lattice_path_count(validate_partition({2, 2}), 2) == 0);

    // (2,1): the only walk is north then east
    CHECK(oracle::lattice_path_count(validate_partition({2, 1}), 0) == 1);
    CHECK(oracle::lattice_path_count(validate_partition({2, 1}), 1) == 0);

    CHECK(oracle::lattice_path_count(validate_partition({4, 3, 2, 1}), 2) == 1);
    CHECK(oracle::lattice_path_count(validate_partition({5}), 0) == 1);

    // the DP agrees with explicit walk enumeration, and every enumerated
    // walk stays inside the diagram
    for_each_partition_up_to_weight(8, [](const Partition& p) {
        auto paths = oracle::enumerate_lattice_paths(p);
        std::map<int, Int> by_turns;
        for (const oracle::LatticePath& path : paths) {
            REQUIRE(path.steps.size() == static_cast<std::size_t>(p.n() + p.m() - 2));
            int i = p.n(), j = 1;
            for (char step : path.steps) {
                if (step == 'E')
                    ++j;
                else
                    --i;
                REQUIRE(i >= 1);
                REQUIRE(j <= p.part(i));
            }
            by_turns[path.turns()] += 1;
        }
        for (int k = 0; k <= p.n(); ++k) {
            Int expected = by_turns.count(k) ? by_turns[k] : Int(0);
            REQUIRE(oracle::lattice_path_count(p, k) == expected);
        }
    });

    // the statistic recovers every numerator coefficient at desk scale
    for_each_partition_up_to_weight(9, [](const Partition& p) {
        HVector h = h_vector_recursive(p);
        Int total = 0;
        for (int k = 0; k <= p.n(); ++k) {
            Int walks = oracle::lattice_path_count(p, k);
            total += walks;
            REQUIRE(walks == (k < static_cast<int>(h.size()) ? h[k] : Int(0)));
        }
        REQUIRE(total == multiplicity(p));
    });
}

TEST_CASE("reduced homology ranks") {
    // full triangle: contractible
    IntMatrix d1{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
    IntMatrix d2{{1}, {-1}, {1}};
    CHECK(oracle::homology_ranks(3, {d1, d2}) == std::vector<long long>{0, 0, 0});

    // hollow square: a circle
    IntMatrix square{{-1, 0, 0, -1}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, 1}};
    CHECK(oracle::homology_ranks(4, {square}) == std::vector<long long>{0, 1});

    // single vertex
    CHECK(oracle::homology_ranks(1, {}) == std::vector<long long>{0});

    // broken chain: composition nonzero
    IntMatrix bad2{{1}, {1}, {1}};
    CHECK_THROWS_AS(oracle::homology_ranks(3, {d1, bad2}), std::invalid_argument);
    // augmentation not annihilated
    IntMatrix unsigned_edge{{1}, {1}};
    CHECK_THROWS_AS(oracle::homology_ranks(2, {unsigned_edge}), std::invalid_argument);
}

TEST_CASE("smith normal form and torsion") {
    CHECK(smith_invariant_factors({{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
    CHECK(smith_invariant_factors({{2, 4}, {6, 8}}) == std::vector<Int>{2, 4});
    CHECK(smith_invariant_factors({{0, 0}, {0, 0}}).empty());
    CHECK(smith_invariant_factors({{1, 0}, {0, 1}}) == std::vector<Int>{1, 1});

    // disc glued to a loop with degree 2: torsion Z/2 in degree 1
    IntMatrix d1{{0}};       // one vertex, one loop edge
    IntMatrix d2{{2}};       // one disc attached twice around
    auto torsion = oracle::homology_torsion({d1, d2});
    REQUIRE(torsion.size() == 3);
    CHECK(torsion[0].empty());
    CHECK(torsion[1] == std::vector<Int>{2});

    // rank via rational elimination, invariant factors, and cofactor
    // determinants agree on random small matrices
    std::mt19937 rng(11);
    std::function<Int(const IntMatrix&)> det = [&](const IntMatrix& m) -> Int {
        if (m.size() == 1) return m[0][0];
        Int total = 0;
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (m[0][c] == 0) continue;
            IntMatrix minor;
            for (std::size_t r = 1; r < m.size(); ++r) {
                std::vector<Int> row;
                for (std::size_t cc = 0; cc < m.size(); ++cc)
                    if (cc != c) row.push_back(m[r][cc]);
                minor.push_back(std::move(row));
            }
            Int cof = m[0][c] * det(minor);
            total += (c % 2 == 0) ? cof : -cof;
        }
        return total;
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = std::uniform_int_distribution<int>(1, 5)(rng);
        std::size_t cols = std::uniform_int_distribution<int>(1, 5)(rng);
        IntMatrix m(rows, std::vector<Int>(cols));
        for (auto& row : m)
            for (Int& v : row) v = std::uniform_int_distribution<int>(-4, 4)(rng);
        auto factors = smith_invariant_factors(m);
        REQUIRE(static_cast<int>(factors.size()) == matrix_rank(m));
        for (std::size_t i = 0; i + 1 < factors.size(); ++i)
            REQUIRE(factors[i + 1] % factors[i] == 0);
        if (rows == cols) {
            Int product = 1;
            for (const Int& f : factors) product *= f;
            Int determinant = det(m);
            if (determinant != 0)
                REQUIRE(product == abs(determinant));
            else
                REQUIRE(factors.size() < rows);
        }
    }

    // boundary maps of the tableau complexes never create torsion
    for_each_partition_up_to_weight(6, [](const Partition& p) {
        ChainComplex chain = build_resolution(p);
        std::vector<IntMatrix> boundaries;
        for (std::size_t k = 0; k < chain.maps.size(); ++k) {
            IntMatrix mat(chain.cells.f_vector[k], std::vector<Int>(chain.cells.f_vector[k + 1], Int(0)));
            for (const ChainEntry& e : chain.maps[k]) mat[e.row][e.col] = e.sign;
            boundaries.push_back(std::move(mat));
        }
        for (const auto& level : oracle::homology_torsion(boundaries))
            REQUIRE(level.empty());
    });
}
