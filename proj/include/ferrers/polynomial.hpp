#pragma once

#include <stdexcept>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

// Dense univariate polynomial over Z; coefficient of t^k at index k.
// The zero polynomial is the empty vector; trailing zeros are trimmed.
using Poly = std::vector<Int>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// t^k * p
inline Poly poly_shift(const Poly& p, int k) {
    if (p.empty()) return {};
    Poly r(p.size() + static_cast<std::size_t>(k), Int(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i + static_cast<std::size_t>(k)] = p[i];
    return r;
}

inline Int poly_eval_at_one(const Poly& p) {
    Int total = 0;
    for (const Int& c : p) total += c;
    return total;
}

// (1 - t)^e expanded.
inline Poly one_minus_t_power(int e) {
    Poly r(static_cast<std::size_t>(e) + 1);
    for (int k = 0; k <= e; ++k) r[static_cast<std::size_t>(k)] = (k % 2 == 0 ? binomial(e, k) : -binomial(e, k));
    return r;
}

// Exact division by (1 - t); throws if (1 - t) does not divide p.
// Synthetic division: if p = (1 - t) q then q_k = sum_{i<=k} p_i.
inline Poly poly_div_one_minus_t(const Poly& p) {
    if (p.empty()) return {};
    Poly q(p.size() - 1, Int(0));
    Int carry = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        carry += p[k];
        q[k] = carry;
    }
    if (carry + p.back() != 0)
        throw std::domain_error("polynomial is not divisible by (1 - t)");
    poly_trim(q);
    return q;
}

}  // namespace ferrers
