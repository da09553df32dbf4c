#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

// Row-major dense matrix over Z. Fine at desk scale; the boundary matrices
// handled here have at most a few hundred rows.
using IntMatrix = std::vector<std::vector<Int>>;

inline std::size_t row_count(const IntMatrix& m) { return m.size(); }
inline std::size_t col_count(const IntMatrix& m) { return m.empty() ? 0 : m.front().size(); }

inline IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    if (col_count(a) != row_count(b)) throw std::invalid_argument("matrix dimensions do not match");
    IntMatrix r(row_count(a), std::vector<Int>(col_count(b), Int(0)));
    for (std::size_t i = 0; i < row_count(a); ++i)
        for (std::size_t k = 0; k < col_count(a); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < col_count(b); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline bool is_zero_matrix(const IntMatrix& m) {
    for (const auto& row : m)
        for (const Int& v : row)
            if (v != 0) return false;
    return true;
}

// Rank by Gaussian elimination over exact rationals.
inline int matrix_rank(const IntMatrix& m) {
    std::size_t rows = row_count(m), cols = col_count(m);
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Rational factor = a[i][col] / a[pivot_row][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

// Smith normal form: returns the invariant factors d_1 | d_2 | ... (all
// positive, zeros dropped). Textbook pivoting algorithm; inputs are small.
inline std::vector<Int> smith_invariant_factors(IntMatrix m) {
    std::size_t rows = row_count(m), cols = col_count(m);
    std::vector<Int> factors;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero entry of minimal absolute value in the submatrix
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder became the smaller pivot
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
                        clean = false;
                    }
        }
        factors.push_back(abs(m[t][t]));
        ++t;
    }
    return factors;
}

}  // namespace ferrers
