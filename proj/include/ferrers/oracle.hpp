#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/linalg.hpp"
#include "ferrers/partition.hpp"

// Brute-force oracles. Everything here is deliberately independent of the
// closed formulas it is used to verify: counting is done by enumeration.

namespace ferrers::oracle {

// Number of monomials of total degree d in x_1..x_n, y_1..y_m that avoid
// the Ferrers ideal. A monomial avoids the ideal iff its support pair
// (A, B) has min(B) > lambda_{min(A)} whenever both are nonempty; for each
// admissible support of size k there are C(d-1, k-1) monomials.
inline Int quotient_hilbert_oracle(const Partition& p, long long d) {
    if (d < 0) return 0;
    if (d == 0) return 1;
    int n = p.n(), m = p.m();
    if (n + m > 26)
        throw resource_limit_error("quotient_hilbert_oracle: support enumeration limited to n + m <= 26");
    Int total = 0;
    for (unsigned long a_mask = 0; a_mask < (1UL << n); ++a_mask) {
        int min_a = 0;  // smallest row in the support, 0 if empty
        int a_size = 0;
        for (int i = 1; i <= n; ++i)
            if (a_mask & (1UL << (i - 1))) {
                ++a_size;
                if (min_a == 0) min_a = i;
            }
        for (unsigned long b_mask = 0; b_mask < (1UL << m); ++b_mask) {
            int min_b = 0;
            int b_size = 0;
            for (int j = 1; j <= m; ++j)
                if (b_mask & (1UL << (j - 1))) {
                    ++b_size;
                    if (min_b == 0) min_b = j;
                }
            if (a_size + b_size == 0) continue;
            if (min_a != 0 && min_b != 0 && min_b <= p.part(min_a)) continue;
            total += binomial(d - 1, a_size + b_size - 1);
        }
    }
    return total;
}

// Dimension of the degree-d piece of the toric ring: the number of distinct
// exponent vectors among products of d tableau-box generators, counted by
// exhaustive multiset enumeration.
inline Int toric_hilbert_oracle(const Partition& p, long long d,
                                long long max_multisets = 2000000) {
    if (d < 0) return 0;
    if (d == 0) return 1;
    std::vector<std::pair<int, int>> gens;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.part(i); ++j) gens.emplace_back(i, j);

    if (binomial(static_cast<long long>(gens.size()) + d - 1, d) > max_multisets)
        throw resource_limit_error("toric_hilbert_oracle: multiset count exceeds the ceiling");

    std::set<std::vector<int>> exponents;
    std::vector<int> exp(static_cast<std::size_t>(p.n() + p.m()), 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t from, long long left) {
        if (left == 0) {
            exponents.insert(exp);
            return;
        }
        for (std::size_t g = from; g < gens.size(); ++g) {
            exp[static_cast<std::size_t>(gens[g].first) - 1] += 1;
            exp[static_cast<std::size_t>(p.n() + gens[g].second) - 1] += 1;
            rec(g, left - 1);
            exp[static_cast<std::size_t>(gens[g].first) - 1] -= 1;
            exp[static_cast<std::size_t>(p.n() + gens[g].second) - 1] -= 1;
        }
    };
    rec(0, d);
    return Int(exponents.size());
}

// A monotone walk through the cells of the tableau: from the bottom-left
// cell (n, 1) to the top-right cell (1, m), stepping east (i, j) -> (i, j+1)
// or north (i, j) -> (i-1, j), never leaving the diagram.
struct LatticePath {
    std::string steps;  // 'E' and 'N', (n-1) N's and (m-1) E's

    int turns() const {
        int count = 0;
        for (std::size_t k = 0; k + 1 < steps.size(); ++k)
            if (steps[k] == 'E' && steps[k + 1] == 'N') ++count;
        return count;
    }
};

// All walks, by explicit backtracking. Intended for desk scale; the DP in
// lattice_path_count handles larger diagrams.
inline std::vector<LatticePath> enumerate_lattice_paths(const Partition& p,
                                                        long long max_paths = 1000000) {
    std::vector<LatticePath> paths;
    std::string steps;
    std::function<void(int, int)> walk = [&](int i, int j) {
        if (i == 1 && j == p.m()) {
            if (static_cast<long long>(paths.size()) >= max_paths)
                throw resource_limit_error("enumerate_lattice_paths: too many walks");
            paths.push_back(LatticePath{steps});
            return;
        }
        if (j + 1 <= p.part(i)) {
            steps.push_back('E');
            walk(i, j + 1);
            steps.pop_back();
        }
        if (i > 1) {  // the cell above exists: lambda_{i-1} >= lambda_i >= j
            steps.push_back('N');
            walk(i - 1, j);
            steps.pop_back();
        }
    };
    walk(p.n(), 1);
    return paths;
}

// Number of walks with exactly `turns` east-north corners.
inline Int lattice_path_count(const Partition& p, int turns) {
    if (turns < 0) return 0;
    int n = p.n(), m = p.m();
    // arrival[i][j][t][s]: walks reaching cell (i, j) with t turns, last
    // step east (s = 1) or north/none (s = 0).
    std::map<std::tuple<int, int, int, int>, Int> arrival;
    arrival[{n, 1, 0, 0}] = 1;
    Int total = 0;
    for (int i = n; i >= 1; --i)
        for (int j = 1; j <= m; ++j)
            for (int t = 0; t <= turns; ++t)
                for (int s = 0; s <= 1; ++s) {
                    auto it = arrival.find({i, j, t, s});
                    if (it == arrival.end() || it->second == 0) continue;
                    Int ways = it->second;
                    if (i == 1 && j == m) {
                        if (t == turns) total += ways;
                        continue;
                    }
                    if (j + 1 <= p.part(i)) arrival[{i, j + 1, t, 1}] += ways;
                    if (i > 1) {
                        int t2 = t + (s == 1 ? 1 : 0);
                        if (t2 <= turns) arrival[{i - 1, j, t2, 0}] += ways;
                    }
                }
    return total;
}

inline Int lattice_path_total(const Partition& p) {
    Int total = 0;
    for (int k = 0; k <= p.n(); ++k) total += lattice_path_count(p, k);
    return total;
}

// Reduced homology ranks of a complex given by its boundary maps.
// boundaries[k] is the matrix of C_{k+1} -> C_k (rows index k-cells);
// the augmentation C_0 -> Z is implicit. Throws unless consecutive maps
// compose to zero and every column of boundaries[0] sums to zero.
inline std::vector<long long> homology_ranks(std::size_t n0, const std::vector<IntMatrix>& boundaries) {
    for (std::size_t k = 0; k + 1 < boundaries.size(); ++k)
        if (!boundaries[k].empty() && !boundaries[k + 1].empty() &&
            !is_zero_matrix(matrix_product(boundaries[k], boundaries[k + 1])))
            throw std::invalid_argument("homology_ranks: consecutive boundaries do not compose to zero");
    if (!boundaries.empty())
        for (std::size_t c = 0; c < col_count(boundaries[0]); ++c) {
            Int sum = 0;
            for (std::size_t r = 0; r < row_count(boundaries[0]); ++r) sum += boundaries[0][r][c];
            if (sum != 0)
                throw std::invalid_argument("homology_ranks: augmentation does not annihilate boundary");
        }

    std::vector<std::size_t> dims{n0};
    for (const auto& b : boundaries) dims.push_back(col_count(b));
    std::vector<int> ranks{n0 > 0 ? 1 : 0};  // rank of the augmentation row
    for (const auto& b : boundaries) ranks.push_back(matrix_rank(b));

    std::vector<long long> reduced(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) {
        long long incoming = (k + 1 < ranks.size()) ? ranks[k + 1] : 0;
        reduced[k] = static_cast<long long>(dims[k]) - ranks[k] - incoming;
    }
    return reduced;
}

// Strict integral variant: the invariant factors > 1 of each incoming
// boundary map, i.e. the torsion of the corresponding homology group.
inline std::vector<std::vector<Int>> homology_torsion(const std::vector<IntMatrix>& boundaries) {
    std::vector<std::vector<Int>> torsion(boundaries.size() + 1);
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
        for (const Int& f : smith_invariant_factors(boundaries[k]))
            if (f > 1) torsion[k].push_back(f);
    }
    return torsion;
}

}  // namespace ferrers::oracle
