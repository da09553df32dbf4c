#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

// Edge ideal of the Ferrers graph of a partition: one quadric x_i y_j per
// tableau box (i, j), j <= lambda_i, listed in row-major order.
struct EdgeIdeal {
    Partition partition;
    std::vector<std::pair<int, int>> generators;
};

inline EdgeIdeal edge_ideal(const Partition& p) {
    EdgeIdeal ideal{p, {}};
    ideal.generators.reserve(static_cast<std::size_t>(p.weight()));
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.part(i); ++j) ideal.generators.emplace_back(i, j);
    return ideal;
}

// The prime (x_1..x_a, y_1..y_b), stored as prefix lengths. All primes in
// the decompositions below are prefix-generated, which makes containment a
// componentwise comparison.
struct PrimeComponent {
    int x_prefix = 0;
    int y_prefix = 0;

    int size() const { return x_prefix + y_prefix; }
    bool contains(const PrimeComponent& other) const {
        return x_prefix >= other.x_prefix && y_prefix >= other.y_prefix;
    }
    bool operator==(const PrimeComponent& other) const {
        return x_prefix == other.x_prefix && y_prefix == other.y_prefix;
    }
};

// The s + 2 components (i-1, lambda_i) for i = 1..s, then (s, 1), then (n, 0).
// Not necessarily irredundant.
inline std::vector<PrimeComponent> redundant_decomposition(const Partition& p) {
    std::vector<PrimeComponent> comps;
    int s = p.s();
    for (int i = 1; i <= s; ++i) comps.push_back({i - 1, p.part(i)});
    comps.push_back({s, 1});
    comps.push_back({p.n(), 0});
    return comps;
}

// One component (j_{i-1}, lambda_{j_i}) per outer corner, plus the final
// (n, 0); exactly t + 1 pairwise incomparable primes.
inline std::vector<PrimeComponent> irredundant_decomposition(const Partition& p) {
    CornerData c = corners(p);
    std::vector<PrimeComponent> comps;
    for (int i = 1; i <= c.t; ++i)
        comps.push_back({c.j[static_cast<std::size_t>(i) - 1], c.outer[static_cast<std::size_t>(i) - 1].second});
    comps.push_back({p.n(), 0});
    return comps;
}

// Drops every component that contains another one; the survivors form the
// irredundant list.
inline std::vector<PrimeComponent> prune_containments(const std::vector<PrimeComponent>& comps) {
    std::vector<PrimeComponent> kept;
    for (const auto& c : comps) {
        bool redundant = false;
        for (const auto& other : comps)
            if (!(c == other) && c.contains(other)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(c);
    }
    return kept;
}

struct IdealInvariants {
    int height = 0;
    int projective_dimension = 0;
    int regularity = 2;
    bool unmixed = false;
    bool cohen_macaulay = false;
    std::optional<int> cm_type;
};

inline bool is_staircase(const Partition& p) {
    for (int i = 1; i <= p.n(); ++i)
        if (p.part(i) != p.n() - i + 1) return false;
    return true;
}

inline bool is_unmixed(const Partition& p) {
    if (p.n() != p.m()) return false;
    for (const auto& [row, col] : corners(p).inner)
        if (row + col != p.m()) return false;
    return true;
}

inline IdealInvariants ideal_invariants(const Partition& p) {
    IdealInvariants inv;
    int lo = p.part(1), hi = p.part(1);
    for (int j = 1; j <= p.n(); ++j) {
        lo = std::min(lo, p.part(j) + j - 1);
        hi = std::max(hi, p.part(j) + j - 1);
    }
    inv.height = std::min(lo, p.n());
    inv.projective_dimension = hi;
    inv.regularity = 2;
    inv.unmixed = is_unmixed(p);
    inv.cohen_macaulay = p.n() == p.m() && is_staircase(p);
    if (inv.cohen_macaulay) inv.cm_type = p.n();
    return inv;
}

// Does some generator x_i y_j divide x^a y^b? Equivalent to the support
// test min(supp b) <= lambda_{min(supp a)}.
inline bool ideal_membership(const Partition& p, const std::vector<int>& x_exp,
                             const std::vector<int>& y_exp) {
    if (static_cast<int>(x_exp.size()) != p.n() || static_cast<int>(y_exp.size()) != p.m())
        throw std::invalid_argument("exponent vectors must have lengths n and m");
    for (int i = 1; i <= p.n(); ++i) {
        if (x_exp[static_cast<std::size_t>(i) - 1] <= 0) continue;
        for (int j = 1; j <= p.part(i); ++j)
            if (y_exp[static_cast<std::size_t>(j) - 1] > 0) return true;
        break;  // later rows have shorter prefixes
    }
    return false;
}

// Membership in the prefix prime (x_1..x_a, y_1..y_b).
inline bool component_membership(const PrimeComponent& c, const std::vector<int>& x_exp,
                                 const std::vector<int>& y_exp) {
    for (int i = 0; i < c.x_prefix; ++i)
        if (x_exp[static_cast<std::size_t>(i)] > 0) return true;
    for (int j = 0; j < c.y_prefix; ++j)
        if (y_exp[static_cast<std::size_t>(j)] > 0) return true;
    return false;
}

// reg(I^k) = 2k for every power of an edge ideal with linear resolution.
inline long long power_regularity(const Partition&, long long k) {
    if (k < 1) throw std::invalid_argument("power_regularity requires k >= 1");
    return 2 * k;
}

}  // namespace ferrers
