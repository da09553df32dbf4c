#pragma once

#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/polynomial.hpp"

namespace ferrers {

// Betti numbers of the quotient by the Ferrers ideal. The resolution is
// 2-linear: beta_0 = 1 sits in degree 0 and each beta_i (i >= 1) sits in
// internal degree i + 1, so the single strand determines the graded table.
struct BettiTable {
    std::vector<Int> beta;  // beta[0..pd]

    int projective_dimension() const { return static_cast<int>(beta.size()) - 1; }
    static int internal_degree(int i) { return i == 0 ? 0 : i + 1; }
};

// beta_i = sum_j C(lambda_j + j - 1, i) - C(n, i + 1) for 1 <= i <= pd.
inline BettiTable betti_numbers(const Partition& p) {
    int pd = 0;
    for (int j = 1; j <= p.n(); ++j) pd = std::max(pd, p.part(j) + j - 1);
    BettiTable table;
    table.beta.resize(static_cast<std::size_t>(pd) + 1);
    table.beta[0] = 1;
    for (int i = 1; i <= pd; ++i) {
        Int b = -binomial(p.n(), i + 1);
        for (int j = 1; j <= p.n(); ++j) b += binomial(p.part(j) + j - 1, i);
        table.beta[static_cast<std::size_t>(i)] = b;
    }
    return table;
}

// numerator / (1 - t)^denom_power in canonical form: the numerator is not
// divisible by (1 - t), so the representation is unique and denom_power is
// the Krull dimension of the quotient.
struct HilbertSeries {
    Poly numerator;
    int denom_power = 0;

    bool operator==(const HilbertSeries& other) const {
        return denom_power == other.denom_power && numerator == other.numerator;
    }
};

inline HilbertSeries canonical_series(Poly numerator, int denom_power) {
    poly_trim(numerator);
    while (denom_power > 0 && !numerator.empty() && poly_eval_at_one(numerator) == 0) {
        numerator = poly_div_one_minus_t(numerator);
        --denom_power;
    }
    return HilbertSeries{std::move(numerator), denom_power};
}

// Series of the quotient: over the common denominator (1 - t)^{m + n + 1}
// the numerator is (1 - t)^{n + 1} + t * sum_j (1 - t)^{lambda_j + j}.
inline HilbertSeries hilbert_series(const Partition& p) {
    Poly numerator = one_minus_t_power(p.n() + 1);
    Poly sum;
    for (int j = 1; j <= p.n(); ++j) sum = poly_add(sum, one_minus_t_power(p.part(j) + j));
    numerator = poly_add(numerator, poly_shift(sum, 1));
    return canonical_series(std::move(numerator), p.m() + p.n() + 1);
}

// Coefficient of t^d: convolve the numerator with the expansion of
// 1 / (1 - t)^e, whose d'-th coefficient is C(d' + e - 1, e - 1).
inline Int hilbert_function(const HilbertSeries& h, long long d) {
    if (d < 0) return 0;
    Int value = 0;
    for (std::size_t k = 0; k < h.numerator.size(); ++k) {
        long long rest = d - static_cast<long long>(k);
        if (rest < 0) break;
        if (h.denom_power == 0) {
            if (rest == 0) value += h.numerator[k];
        } else {
            value += h.numerator[k] * binomial(rest + h.denom_power - 1, h.denom_power - 1);
        }
    }
    return value;
}

struct KPolynomialReport {
    bool ok = true;
    int first_mismatch_degree = -1;
    Int lhs;
    Int rhs;
};

// Consistency bridge between the Betti table and the Hilbert series:
// (1 - t)^{m + n} * P(t) must equal 1 + sum_{i>=1} (-1)^i beta_i t^{i+1}.
inline KPolynomialReport k_polynomial_check(const Partition& p) {
    HilbertSeries h = hilbert_series(p);
    Poly lhs = poly_mul(h.numerator, one_minus_t_power(p.m() + p.n() - h.denom_power));

    BettiTable table = betti_numbers(p);
    Poly rhs(static_cast<std::size_t>(table.projective_dimension()) + 2, Int(0));
    rhs[0] = 1;
    for (int i = 1; i <= table.projective_dimension(); ++i) {
        Int term = table.beta[static_cast<std::size_t>(i)];
        rhs[static_cast<std::size_t>(i) + 1] = (i % 2 == 0) ? term : -term;
    }
    poly_trim(rhs);

    KPolynomialReport report;
    std::size_t len = std::max(lhs.size(), rhs.size());
    for (std::size_t k = 0; k < len; ++k) {
        Int a = k < lhs.size() ? lhs[k] : Int(0);
        Int b = k < rhs.size() ? rhs[k] : Int(0);
        if (a != b) {
            report.ok = false;
            report.first_mismatch_degree = static_cast<int>(k);
            report.lhs = a;
            report.rhs = b;
            return report;
        }
    }
    return report;
}

}  // namespace ferrers
