#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ferrers/oracle.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/series.hpp"

namespace ferrers {

// A face of the product-of-simplices complex: a pair of nonempty sorted
// index sets (S, T). The face belongs to the complex of a partition iff
// max(T) <= lambda_{max(S)}, i.e. every vertex label x_i y_j is a tableau
// box. The monomial label is prod_{i in S} x_i * prod_{j in T} y_j, of
// degree dim + 2.
struct CellFace {
    std::vector<int> rows;  // S, sorted ascending
    std::vector<int> cols;  // T, sorted ascending

    int dim() const { return static_cast<int>(rows.size() + cols.size()) - 2; }
    int label_degree() const { return dim() + 2; }

    bool operator==(const CellFace& other) const { return rows == other.rows && cols == other.cols; }
    bool operator<(const CellFace& other) const {
        return rows != other.rows ? rows < other.rows : cols < other.cols;
    }
};

struct CellComplex {
    Partition partition;
    std::vector<std::vector<CellFace>> faces;  // faces[k] sorted, k = 0..dim
    std::vector<long long> f_vector;

    int dim() const { return static_cast<int>(faces.size()) - 1; }
    int face_index(const CellFace& f) const {
        const auto& level = faces[static_cast<std::size_t>(f.dim())];
        auto it = std::lower_bound(level.begin(), level.end(), f);
        if (it == level.end() || !(*it == f)) throw std::invalid_argument("face not in complex");
        return static_cast<int>(it - level.begin());
    }
};

// Enumerates all faces, grouped and sorted by dimension. Faces with
// max(S) = i pair an arbitrary subset of {1..i-1} with a nonempty subset
// of {1..lambda_i}.
inline CellComplex build_complex(const Partition& p, long long max_faces = 500000) {
    long long expected = 0;
    for (int i = 1; i <= p.n(); ++i) {
        if (i - 1 >= 30 || p.part(i) >= 30 ||
            (expected += (1LL << (i - 1)) * ((1LL << p.part(i)) - 1)) > max_faces)
            throw resource_limit_error("cell complex would exceed the face ceiling");
    }

    CellComplex complex{p, {}, {}};
    std::vector<int> s_set, t_set;
    auto emit = [&]() {
        CellFace face{s_set, t_set};
        int d = face.dim();
        if (d >= static_cast<int>(complex.faces.size())) complex.faces.resize(static_cast<std::size_t>(d) + 1);
        complex.faces[static_cast<std::size_t>(d)].push_back(std::move(face));
    };
    for (int i = 1; i <= p.n(); ++i) {
        // subsets of {1..i-1} by bitmask, then i itself
        for (unsigned long mask = 0; mask < (1UL << (i - 1)); ++mask) {
            s_set.clear();
            for (int b = 1; b < i; ++b)
                if (mask & (1UL << (b - 1))) s_set.push_back(b);
            s_set.push_back(i);
            t_set.clear();
            std::function<void(int)> rec = [&](int from) {
                if (!t_set.empty()) emit();
                for (int j = from; j <= p.part(i); ++j) {
                    t_set.push_back(j);
                    rec(j + 1);
                    t_set.pop_back();
                }
            };
            rec(1);
        }
    }
    for (auto& level : complex.faces) std::sort(level.begin(), level.end());
    for (const auto& level : complex.faces) complex.f_vector.push_back(static_cast<long long>(level.size()));
    return complex;
}

// Incidence sign for a facet Q of P, tensor-product convention: removing
// the row at sorted position p gives (-1)^p, removing the column at sorted
// position q gives (-1)^{|S| - 1 + q}.
inline int incidence(const CellFace& P, const CellFace& Q) {
    if (P.rows == Q.rows && static_cast<int>(P.cols.size()) == static_cast<int>(Q.cols.size()) + 1) {
        int removed = -1;
        std::size_t qi = 0;
        for (std::size_t pi = 0; pi < P.cols.size(); ++pi) {
            if (qi < Q.cols.size() && P.cols[pi] == Q.cols[qi]) {
                ++qi;
            } else if (removed == -1) {
                removed = static_cast<int>(pi);
            } else {
                removed = -2;
                break;
            }
        }
        if (removed >= 0 && qi == Q.cols.size())
            return ((static_cast<int>(P.rows.size()) - 1 + removed) % 2 == 0) ? 1 : -1;
    }
    if (P.cols == Q.cols && static_cast<int>(P.rows.size()) == static_cast<int>(Q.rows.size()) + 1) {
        int removed = -1;
        std::size_t qi = 0;
        for (std::size_t pi = 0; pi < P.rows.size(); ++pi) {
            if (qi < Q.rows.size() && P.rows[pi] == Q.rows[qi]) {
                ++qi;
            } else if (removed == -1) {
                removed = static_cast<int>(pi);
            } else {
                removed = -2;
                break;
            }
        }
        if (removed >= 0 && qi == Q.rows.size()) return (removed % 2 == 0) ? 1 : -1;
    }
    throw std::invalid_argument("incidence: Q is not a facet of P");
}

// A variable x_i or y_j; i/j are 1-based.
struct Variable {
    bool is_y = false;
    int index = 0;

    std::string str() const { return (is_y ? "y" : "x") + std::to_string(index); }
    int code(int n) const { return is_y ? n + index : index; }
    bool operator==(const Variable& other) const { return is_y == other.is_y && index == other.index; }
};

struct ChainEntry {
    int row = 0;  // index into F_k
    int col = 0;  // index into F_{k+1}
    int sign = 0;
    Variable var;
};

// The free complex supported on the cell complex. maps[k] holds the
// entries of the map F_{k+1} -> F_k; the augmentation row consists of the
// vertex labels themselves (the ideal generators, in row-major order).
struct ChainComplex {
    CellComplex cells;
    std::vector<std::vector<ChainEntry>> maps;

    std::vector<std::pair<int, int>> generators() const {
        std::vector<std::pair<int, int>> gens;
        for (const CellFace& v : cells.faces[0]) gens.emplace_back(v.rows[0], v.cols[0]);
        return gens;
    }
};

namespace detail {

// All facets of P inside the complex, with the removed variable.
inline std::vector<std::pair<CellFace, Variable>> facets_of(const CellFace& P) {
    std::vector<std::pair<CellFace, Variable>> facets;
    if (P.rows.size() > 1)
        for (std::size_t r = 0; r < P.rows.size(); ++r) {
            CellFace Q = P;
            Q.rows.erase(Q.rows.begin() + static_cast<std::ptrdiff_t>(r));
            facets.emplace_back(std::move(Q), Variable{false, P.rows[r]});
        }
    if (P.cols.size() > 1)
        for (std::size_t c = 0; c < P.cols.size(); ++c) {
            CellFace Q = P;
            Q.cols.erase(Q.cols.begin() + static_cast<std::ptrdiff_t>(c));
            facets.emplace_back(std::move(Q), Variable{true, P.cols[c]});
        }
    return facets;
}

}  // namespace detail

inline ChainComplex build_resolution(const Partition& p, long long max_faces = 500000) {
    ChainComplex chain{build_complex(p, max_faces), {}};
    const CellComplex& cells = chain.cells;
    chain.maps.resize(static_cast<std::size_t>(std::max(cells.dim(), 0)));
    for (int k = 1; k <= cells.dim(); ++k) {
        auto& entries = chain.maps[static_cast<std::size_t>(k) - 1];
        const auto& level = cells.faces[static_cast<std::size_t>(k)];
        for (std::size_t col = 0; col < level.size(); ++col) {
            const CellFace& P = level[col];
            for (auto& [Q, var] : detail::facets_of(P))
                entries.push_back(ChainEntry{cells.face_index(Q), static_cast<int>(col), incidence(P, Q), var});
        }
    }
    return chain;
}

enum class VerifyDepth : int {
    minimality = 1,    // every entry is a single variable
    composition = 2,   // consecutive maps compose to zero, symbolically
    betti_match = 3,   // f_k equals beta_{k+1} of the quotient
    acyclicity = 4,    // every squarefree restriction has zero reduced homology
};

struct ResolutionReport {
    bool ok = true;
    int depth = 0;
    std::vector<long long> f_vector;
    std::string failure;  // pinpoints the offending face or multidegree
};

namespace detail {

inline std::string face_str(const CellFace& f) {
    std::ostringstream os;
    os << "({";
    for (std::size_t i = 0; i < f.rows.size(); ++i) os << (i ? "," : "") << f.rows[i];
    os << "},{";
    for (std::size_t i = 0; i < f.cols.size(); ++i) os << (i ? "," : "") << f.cols[i];
    os << "})";
    return os.str();
}

// Boundary matrices over Z (variables specialized to 1) of the subcomplex
// consisting of the faces with S inside A and T inside B.
inline std::pair<std::size_t, std::vector<IntMatrix>> restricted_boundaries(
    const CellComplex& cells, const std::vector<bool>& in_A, const std::vector<bool>& in_B) {
    auto allowed = [&](const CellFace& f) {
        for (int i : f.rows)
            if (!in_A[static_cast<std::size_t>(i) - 1]) return false;
        for (int j : f.cols)
            if (!in_B[static_cast<std::size_t>(j) - 1]) return false;
        return true;
    };
    std::vector<std::vector<CellFace>> kept;
    for (const auto& level : cells.faces) {
        std::vector<CellFace> sub;
        for (const CellFace& f : level)
            if (allowed(f)) sub.push_back(f);
        if (sub.empty()) break;  // closed under faces, so higher levels are empty too
        kept.push_back(std::move(sub));
    }
    std::vector<IntMatrix> boundaries;
    for (std::size_t k = 1; k < kept.size(); ++k) {
        IntMatrix mat(kept[k - 1].size(), std::vector<Int>(kept[k].size(), Int(0)));
        for (std::size_t col = 0; col < kept[k].size(); ++col)
            for (auto& [Q, var] : facets_of(kept[k][col])) {
                auto it = std::lower_bound(kept[k - 1].begin(), kept[k - 1].end(), Q);
                mat[static_cast<std::size_t>(it - kept[k - 1].begin())][col] = incidence(kept[k][col], Q);
            }
        boundaries.push_back(std::move(mat));
    }
    return {kept.empty() ? 0 : kept[0].size(), std::move(boundaries)};
}

}  // namespace detail

inline ResolutionReport verify_resolution(const Partition& p, VerifyDepth depth,
                                          long long max_faces = 500000) {
    ChainComplex chain = build_resolution(p, max_faces);
    const CellComplex& cells = chain.cells;
    ResolutionReport report;
    report.depth = static_cast<int>(depth);
    report.f_vector = cells.f_vector;

    auto label = [&](const CellFace& f) {
        std::vector<int> exp(static_cast<std::size_t>(p.n() + p.m()), 0);
        for (int i : f.rows) exp[static_cast<std::size_t>(i) - 1] = 1;
        for (int j : f.cols) exp[static_cast<std::size_t>(p.n() + j) - 1] = 1;
        return exp;
    };

    // (1) minimality: every entry divides its column label with quotient of
    // degree exactly one, so no unit can appear in any map.
    for (int k = 1; k <= cells.dim(); ++k)
        for (const ChainEntry& e : chain.maps[static_cast<std::size_t>(k) - 1]) {
            const CellFace& P = cells.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(e.col)];
            const CellFace& Q = cells.faces[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(e.row)];
            std::vector<int> diff = label(P);
            const std::vector<int> lq = label(Q);
            bool divides = true;
            int total = 0;
            for (std::size_t v = 0; v < diff.size(); ++v) {
                diff[v] -= lq[v];
                if (diff[v] < 0) divides = false;
                total += diff[v];
            }
            if (!divides || total != 1 || diff[static_cast<std::size_t>(e.var.code(p.n())) - 1] != 1) {
                report.ok = false;
                report.failure = "entry of degree != 1 at " + detail::face_str(P);
                return report;
            }
        }
    if (static_cast<int>(depth) < 2) return report;

    // (2) boundary of boundary vanishes; terms are tracked symbolically as
    // (target face, unordered variable pair).
    for (int k = 1; k < cells.dim(); ++k) {
        const auto& upper = chain.maps[static_cast<std::size_t>(k)];
        std::vector<std::vector<ChainEntry>> lower_by_col(cells.f_vector[static_cast<std::size_t>(k)]);
        for (const ChainEntry& e : chain.maps[static_cast<std::size_t>(k) - 1])
            lower_by_col[static_cast<std::size_t>(e.col)].push_back(e);
        std::map<std::tuple<int, int, int, int>, long long> terms;  // (colP, rowR, var, var)
        for (const ChainEntry& hi : upper)
            for (const ChainEntry& lo : lower_by_col[static_cast<std::size_t>(hi.row)]) {
                int a = hi.var.code(p.n()), b = lo.var.code(p.n());
                terms[{hi.col, lo.row, std::min(a, b), std::max(a, b)}] += hi.sign * lo.sign;
            }
        for (const auto& [key, coeff] : terms)
            if (coeff != 0) {
                report.ok = false;
                report.failure = "d o d != 0 at " +
                                 detail::face_str(cells.faces[static_cast<std::size_t>(k) + 1]
                                                            [static_cast<std::size_t>(std::get<0>(key))]);
                return report;
            }
    }
    // augmentation: the two facets of an edge carry opposite signs, and the
    // products label(Q) * var both equal the edge label.
    if (cells.dim() >= 1) {
        std::vector<long long> sign_sum(static_cast<std::size_t>(cells.f_vector[1]), 0);
        for (const ChainEntry& e : chain.maps[0]) {
            const CellFace& P = cells.faces[1][static_cast<std::size_t>(e.col)];
            const CellFace& Q = cells.faces[0][static_cast<std::size_t>(e.row)];
            std::vector<int> prod = label(Q);
            prod[static_cast<std::size_t>(e.var.code(p.n())) - 1] += 1;
            if (prod != label(P)) {
                report.ok = false;
                report.failure = "augmented composition fails at " + detail::face_str(P);
                return report;
            }
            sign_sum[static_cast<std::size_t>(e.col)] += e.sign;
        }
        for (std::size_t c = 0; c < sign_sum.size(); ++c)
            if (sign_sum[c] != 0) {
                report.ok = false;
                report.failure = "augmented composition fails at " + detail::face_str(cells.faces[1][c]);
                return report;
            }
    }
    if (static_cast<int>(depth) < 3) return report;

    // (3) face counts against the Betti numbers of the quotient
    BettiTable betti = betti_numbers(p);
    if (cells.dim() != betti.projective_dimension() - 1) {
        report.ok = false;
        report.failure = "complex dimension differs from projective dimension - 1";
        return report;
    }
    for (int k = 0; k <= cells.dim(); ++k)
        if (Int(cells.f_vector[static_cast<std::size_t>(k)]) != betti.beta[static_cast<std::size_t>(k) + 1]) {
            report.ok = false;
            report.failure = "f_" + std::to_string(k) + " differs from beta_" + std::to_string(k + 1);
            return report;
        }
    if (static_cast<int>(depth) < 4) return report;

    // (4) acyclicity of every squarefree restriction, by exact-rational rank
    if (p.n() + p.m() > 20)
        throw resource_limit_error("acyclicity sweep limited to n + m <= 20");
    std::vector<bool> in_A(static_cast<std::size_t>(p.n()));
    std::vector<bool> in_B(static_cast<std::size_t>(p.m()));
    for (unsigned long a_mask = 1; a_mask < (1UL << p.n()); ++a_mask) {
        for (int i = 0; i < p.n(); ++i) in_A[static_cast<std::size_t>(i)] = (a_mask >> i) & 1;
        for (unsigned long b_mask = 1; b_mask < (1UL << p.m()); ++b_mask) {
            for (int j = 0; j < p.m(); ++j) in_B[static_cast<std::size_t>(j)] = (b_mask >> j) & 1;
            auto [n0, boundaries] = detail::restricted_boundaries(cells, in_A, in_B);
            if (n0 == 0) continue;  // empty restriction
            std::vector<long long> reduced = oracle::homology_ranks(n0, boundaries);
            for (std::size_t k = 0; k < reduced.size(); ++k)
                if (reduced[k] != 0) {
                    std::ostringstream os;
                    os << "restriction A=" << a_mask << " B=" << b_mask
                       << " has reduced homology of rank " << reduced[k] << " in degree " << k;
                    report.ok = false;
                    report.failure = os.str();
                    return report;
                }
        }
    }
    return report;
}

}  // namespace ferrers
