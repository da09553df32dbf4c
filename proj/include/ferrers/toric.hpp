#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/ideal.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/polynomial.hpp"

namespace ferrers {

// Shape of the one-sided ladder obtained from the tableau by cutting the
// first row at column lambda_2 and the first column at row s. The toric
// ring of the graph is the quotient by the 2x2 minors supported on this
// ladder; when the ladder is degenerate (s <= 1) there are no minors and
// the toric ring is a polynomial ring.
struct Ladder {
    std::vector<int> shape;  // (lambda_2, lambda_2, lambda_3, ..., lambda_s); empty when degenerate

    bool degenerate() const { return shape.size() < 2; }
    int rows() const { return static_cast<int>(shape.size()); }
};

inline Ladder ladder(const Partition& p) {
    int s = p.s();
    if (p.n() < 2 || s <= 1) return Ladder{};
    std::vector<int> shape;
    shape.push_back(p.part(2));
    for (int i = 2; i <= s; ++i) shape.push_back(p.part(i));
    return Ladder{std::move(shape)};
}

// A 2x2 minor: rows i1 < i2, columns j1 < j2, all four boxes in the ladder.
struct Minor {
    int i1 = 0, i2 = 0, j1 = 0, j2 = 0;
};

inline std::vector<Minor> minor_generators(const Ladder& l) {
    std::vector<Minor> minors;
    for (int i1 = 1; i1 <= l.rows(); ++i1)
        for (int i2 = i1 + 1; i2 <= l.rows(); ++i2)
            for (int j1 = 1; j1 <= l.shape[static_cast<std::size_t>(i2) - 1]; ++j1)
                for (int j2 = j1 + 1; j2 <= l.shape[static_cast<std::size_t>(i2) - 1]; ++j2)
                    minors.push_back({i1, i2, j1, j2});
    return minors;
}

// Height of the toric (ladder determinantal) ideal:
// lambda_2 + ... + lambda_s - s + 1, which also equals |lambda| - (n+m-1).
inline long long toric_ideal_height(const Partition& p) {
    int s = p.s();
    if (s == 0) return 0;
    long long h = 1 - s;
    for (int i = 2; i <= s; ++i) h += p.part(i);
    return h;
}

// Coefficients of the numerator p_lambda(t) of the normalized Hilbert
// series; h_0 = 1 and all coefficients are nonnegative. Trailing zeros are
// trimmed, so the degree of the vector is the regularity of the toric ring.
using HVector = std::vector<Int>;

namespace detail {

inline Poly h_poly_recursive(std::vector<int> parts, std::map<std::vector<int>, Poly>& cache) {
    std::size_t n = parts.size();
    if (n == 1) return Poly{1};
    if (n == 2) {
        Poly p{1, Int(parts[1] - 1)};
        poly_trim(p);
        return p;
    }
    if (parts.back() == 1) {
        parts.pop_back();
        return h_poly_recursive(std::move(parts), cache);
    }
    // the numerator does not depend on lambda_1, so cap it for the cache key
    if (parts[0] > parts[1]) parts[0] = parts[1];
    auto it = cache.find(parts);
    if (it != cache.end()) return it->second;

    std::vector<int> shrunk = parts;  // last part lowered by one
    shrunk.back() -= 1;
    std::vector<int> cut(parts.begin(), parts.end() - 1);  // column-shifted, one row fewer
    for (int& v : cut) v -= parts.back() - 1;
    Poly result = poly_add(h_poly_recursive(std::move(shrunk), cache),
                           poly_shift(h_poly_recursive(std::move(cut), cache), 1));
    cache.emplace(std::move(parts), result);
    return result;
}

}  // namespace detail

// Liaison recursion: p_lambda = p_lambda'' + t * p_lambda' with
// lambda'' = (lambda_1, ..., lambda_{n-1}, lambda_n - 1) and
// lambda' = (lambda_1 - lambda_n + 1, ..., lambda_{n-1} - lambda_n + 1);
// base cases p = 1 (one row), p = 1 + (lambda_2 - 1) t (two rows), and
// dropping a trailing part equal to 1.
inline HVector h_vector_recursive(const Partition& p) {
    std::map<std::vector<int>, Poly> cache;
    return detail::h_poly_recursive(p.parts, cache);
}

namespace detail {

// Nested sum over j_{k-1} >= ... >= j_1 with per-level lower bounds
// lambda_{i_1} - lambda_{i_{t+1}} - t + 1 and sentinel upper bound
// j_k = lambda_{i_1} - k; the innermost summand is j_1 itself.
struct NestedSum {
    const Partition& p;
    const std::vector<int>& idx;  // i_1 < ... < i_k
    int k;
    std::map<std::pair<int, long long>, Int> memo;

    Int sum_level(int t, long long upper) {
        long long lower = p.part(idx[0]) - p.part(idx[static_cast<std::size_t>(t)]) - t + 1;
        if (lower > upper) return 0;
        auto key = std::make_pair(t, upper);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total = 0;
        if (t == 1) {
            // sum of j over [lower, upper]
            total = (Int(upper) * (upper + 1) - Int(lower) * (lower - 1)) / 2;
        } else {
            for (long long j = lower; j <= upper; ++j) total += sum_level(t - 1, j);
        }
        memo.emplace(key, total);
        return total;
    }

    Int evaluate() { return sum_level(k - 1, p.part(idx[0]) - k); }
};

}  // namespace detail

// Closed form for the numerator coefficients: h_1 = sum_{j>=2} (lambda_j - 1)
// and, for k >= 2, a sum of nested sums over row subsets 2 <= i_1 < ... < i_k <= n.
inline HVector h_vector_closed(const Partition& p) {
    int n = p.n();
    HVector h(static_cast<std::size_t>(std::max(n, 1)), Int(0));
    h[0] = 1;
    if (n >= 2) {
        Int h1 = 0;
        for (int j = 2; j <= n; ++j) h1 += p.part(j) - 1;
        h[1] = h1;
    }
    for (int k = 2; k <= n - 1; ++k) {
        Int hk = 0;
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::function<void(int, int)> choose = [&](int next, int depth) {
            if (depth == k) {
                detail::NestedSum nested{p, idx, k, {}};
                hk += nested.evaluate();
                return;
            }
            for (int i = next; i <= n - (k - depth - 1); ++i) {
                idx[static_cast<std::size_t>(depth)] = i;
                choose(i + 1, depth + 1);
            }
        };
        choose(2, 0);
        h[static_cast<std::size_t>(k)] = hk;
    }
    poly_trim(h);
    return h;
}

// Multiplicity e = p_lambda(1), computed from the recursion and, for
// n >= 3, cross-checked against the closed nested sum (which degenerates
// to e = lambda_2 at n = 2 and e = 1 at n = 1).
inline Int multiplicity(const Partition& p) {
    Int value = poly_eval_at_one(h_vector_recursive(p));
    int n = p.n();
    if (n >= 3) {
        // nested sum with levels t = n-2 .. 1, lower bounds
        // lambda_2 - lambda_{t+2} + 1, sentinel upper bound lambda_2
        std::map<std::pair<int, long long>, Int> memo;
        std::function<Int(int, long long)> level = [&](int t, long long upper) -> Int {
            long long lower = p.part(2) - p.part(t + 2) + 1;
            if (lower > upper) return Int(0);
            auto key = std::make_pair(t, upper);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            Int total = 0;
            if (t == 1) {
                total = (Int(upper) * (upper + 1) - Int(lower) * (lower - 1)) / 2;
            } else {
                for (long long j = lower; j <= upper; ++j) total += level(t - 1, j);
            }
            memo.emplace(key, total);
            return total;
        };
        Int closed = level(n - 2, p.part(2));
        if (closed != value)
            throw std::logic_error("multiplicity: recursion and closed sum disagree on " + partition_text(p));
    }
    return value;
}

// min{ s - 1, lambda_j + j - 3 : 2 <= j <= s }; zero for hooks and single
// rows (the toric ring is then a polynomial ring). Agrees with the degree
// of the trimmed numerator.
inline int toric_regularity(const Partition& p) {
    int s = p.s();
    if (p.n() < 2 || p.part(2) < 2) return 0;
    int reg = s - 1;
    for (int j = 2; j <= s; ++j) reg = std::min(reg, p.part(j) + j - 3);
    return reg;
}

inline long long a_invariant(const Partition& p) {
    return -(static_cast<long long>(p.n()) + p.m() - 1) + toric_regularity(p);
}

// Gorenstein iff lambda_2 = s and every inside corner (i, j) of the ladder
// lies on its main anti-diagonal i + j = lambda_2 + 1. Degenerate ladders
// give polynomial rings, which are Gorenstein.
inline bool is_gorenstein(const Partition& p) {
    Ladder l = ladder(p);
    if (l.degenerate()) return true;
    if (p.part(2) != p.s()) return false;
    Partition shape{l.shape};
    for (const auto& [row, col] : corners(shape).inner)
        if (row + col != p.part(2) + 1) return false;
    return true;
}

// The unmixed witness mu = (lambda_2 + 1, lambda_2, ..., lambda_s, 1): its
// ladder has the same minors, so the toric rings agree up to polynomial
// extensions and the numerators coincide.
inline Partition gorenstein_witness(const Partition& p) {
    if (!is_gorenstein(p)) throw std::invalid_argument("gorenstein_witness: toric ring is not Gorenstein");
    int s = p.s();
    std::vector<int> mu;
    if (s <= 1) {
        mu = {2, 1};  // ladder of a hook is empty; the smallest unmixed witness
    } else {
        mu.push_back(p.part(2) + 1);
        for (int i = 2; i <= s; ++i) mu.push_back(p.part(i));
        mu.push_back(1);
    }
    Partition witness{std::move(mu)};
    if (!is_unmixed(witness))
        throw std::logic_error("gorenstein_witness: produced partition is not unmixed");
    if (h_vector_recursive(witness) != h_vector_recursive(p))
        throw std::logic_error("gorenstein_witness: numerator mismatch");
    return witness;
}

// Coefficient of t^d in p_lambda(t) / (1 - t)^{n + m - 1}.
inline Int toric_hilbert_function(const Partition& p, long long d) {
    if (d < 0) return 0;
    HVector h = h_vector_recursive(p);
    long long dim = static_cast<long long>(p.n()) + p.m() - 1;
    Int value = 0;
    for (std::size_t k = 0; k < h.size(); ++k) {
        long long rest = d - static_cast<long long>(k);
        if (rest < 0) break;
        value += h[k] * binomial(rest + dim - 1, dim - 1);
    }
    return value;
}

struct ToricInvariants {
    long long dimension = 0;
    long long ideal_height = 0;
    Int multiplicity;
    int regularity = 0;
    long long a_invariant = 0;
    bool gorenstein = false;
    HVector h_vector;
    Ladder ladder;
};

inline ToricInvariants toric_invariants(const Partition& p) {
    ToricInvariants inv;
    inv.dimension = static_cast<long long>(p.n()) + p.m() - 1;
    inv.ideal_height = toric_ideal_height(p);
    inv.h_vector = h_vector_recursive(p);
    inv.multiplicity = multiplicity(p);
    inv.regularity = poly_degree(inv.h_vector);
    inv.a_invariant = inv.regularity - inv.dimension;
    inv.gorenstein = is_gorenstein(p);
    inv.ladder = ladder(p);
    return inv;
}

}  // namespace ferrers
