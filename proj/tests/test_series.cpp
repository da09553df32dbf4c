#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "ferrers/ideal.hpp"
#include "ferrers/resolution.hpp"
#include "ferrers/series.hpp"

using namespace ferrers;

namespace {

// Standard-monomial count by raw exponent enumeration, independent of both
// the series arithmetic and the support-pair oracle.
Int count_standard_monomials(const Partition& p, int d) {
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

TEST_CASE("betti numbers: closed families") {
    // single row: Koszul, beta_i = C(m, i)
    BettiTable row = betti_numbers(validate_partition({5}));
    REQUIRE(row.projective_dimension() == 5);
    for (int i = 0; i <= 5; ++i) CHECK(row.beta[i] == binomial(5, i));

    // staircase n = m = 4: (1, 10, 20, 15, 4), i.e. i * C(5, i+1)
    BettiTable stairs = betti_numbers(validate_partition({4, 3, 2, 1}));
    CHECK(stairs.beta == std::vector<Int>{1, 10, 20, 15, 4});
    for (int i = 1; i <= 4; ++i) CHECK(stairs.beta[i] == Int(i) * binomial(5, i + 1));

    // complete bipartite: C(m+n, i+1) - C(m, i+1) - C(n, i+1)
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            BettiTable table = betti_numbers(Partition{std::vector<int>(n, m)});
            CHECK(table.projective_dimension() == n + m - 1);
            for (int i = 1; i <= n + m - 1; ++i)
                CHECK(table.beta[i] ==
                      binomial(m + n, i + 1) - binomial(m, i + 1) - binomial(n, i + 1));
        }

    CHECK(betti_numbers(validate_partition({6, 4, 4, 2, 1})).beta[1] == 17);
}

TEST_CASE("betti internal degrees sit on the linear strand") {
    CHECK(BettiTable::internal_degree(0) == 0);
    CHECK(BettiTable::internal_degree(1) == 2);
    CHECK(BettiTable::internal_degree(4) == 5);
}

TEST_CASE("hilbert series canonical forms") {
    // single row: 1/(1-t)^m + t/(1-t)
    for (int m : {1, 2, 5}) {
        HilbertSeries h = hilbert_series(validate_partition({m}));
        HilbertSeries expected = canonical_series(
            poly_add(Poly{1}, poly_shift(one_minus_t_power(m - 1), 1)), m);
        CHECK(h == expected);
        CHECK(h.denom_power == m);
    }

    // staircase n = m: (1 + nt)/(1-t)^n
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> parts;
        for (int k = n; k >= 1; --k) parts.push_back(k);
        HilbertSeries h = hilbert_series(Partition{parts});
        CHECK(h.numerator == Poly{1, n});
        CHECK(h.denom_power == n);
    }

    HilbertSeries h21 = hilbert_series(validate_partition({2, 1}));
    CHECK(h21.numerator == Poly{1, 2});
    CHECK(h21.denom_power == 2);

    // canonical form leaves no root at t = 1
    for_each_partition_up_to_weight(8, [](const Partition& p) {
        HilbertSeries h = hilbert_series(p);
        REQUIRE(poly_eval_at_one(h.numerator) != 0);
        // denominator power is the dimension: n + m - height
        CHECK(h.denom_power == p.n() + p.m() - ideal_invariants(p).height);
    });
}

TEST_CASE("hilbert function values") {
    HilbertSeries h21 = hilbert_series(validate_partition({2, 1}));
    CHECK(hilbert_function(h21, 3) == 10);
    CHECK(hilbert_function(h21, 0) == 1);

    HilbertSeries pure{Poly{1}, 4};
    for (int d = 0; d <= 6; ++d) CHECK(hilbert_function(pure, d) == binomial(d + 3, 3));

    for (const auto& parts :
         std::vector<std::vector<int>>{{2, 1}, {2, 2}, {3, 1}, {3, 3, 1}, {4, 2, 1}}) {
        Partition p = validate_partition(parts);
        HilbertSeries h = hilbert_series(p);
        for (int d = 0; d <= 5; ++d)
            REQUIRE(hilbert_function(h, d) == count_standard_monomials(p, d));
    }
}

TEST_CASE("numerator identity between Betti table and series") {
    for (const auto& parts : std::vector<std::vector<int>>{
             {4}, {6, 4, 4, 2, 1}, {3, 2, 1}, {2, 2}, {5, 5, 5}, {3, 1, 1, 1}}) {
        KPolynomialReport r = k_polynomial_check(validate_partition(parts));
        INFO("first mismatch at degree " << r.first_mismatch_degree);
        CHECK(r.ok);
    }
}

TEST_CASE("face counts realize the Betti numbers") {
    for (const auto& parts :
         std::vector<std::vector<int>>{{3}, {2, 1}, {4, 3, 2, 1}, {3, 3, 2}, {5, 2, 1, 1}}) {
        Partition p = validate_partition(parts);
        CellComplex complex = build_complex(p);
        BettiTable betti = betti_numbers(p);
        REQUIRE(complex.dim() == betti.projective_dimension() - 1);
        for (int k = 0; k <= complex.dim(); ++k)
            CHECK(Int(complex.f_vector[k]) == betti.beta[k + 1]);
    }
}
