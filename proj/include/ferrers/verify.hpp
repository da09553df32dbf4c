#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ferrers/graph.hpp"
#include "ferrers/ideal.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/resolution.hpp"
#include "ferrers/series.hpp"
#include "ferrers/toric.hpp"

// Cross-module invariant sweeps. Each sweep checks one family of claims by
// enumeration; on the first violation it records a counterexample and
// stops. Both the CLI `verify` subcommand and the acceptance suite are
// built from these.

namespace ferrers {

struct SweepResult {
    std::string name;
    bool ok = true;
    long long cases = 0;
    std::string counterexample;

    explicit SweepResult(std::string name = {}) : name(std::move(name)) {}
};

namespace detail {

struct Failure {
    SweepResult* result;
    bool fail(const std::string& message) {
        if (result->ok) {
            result->ok = false;
            result->counterexample = message;
        }
        return false;
    }
    bool require(bool condition, const std::string& message) {
        return condition ? true : fail(message);
    }
};

}  // namespace detail

// dual-dual involution, s = dual_2, and the corner rectangles tiling the
// whole diagram.
inline SweepResult sweep_partition_identities(int max_weight) {
    SweepResult result{"partition identities (|lambda| <= " + std::to_string(max_weight) + ")"};
    detail::Failure check{&result};
    for_each_partition_up_to_weight(max_weight, [&](const Partition& p) {
        if (!result.ok) return;
        ++result.cases;
        std::string tag = "lambda=(" + partition_text(p) + ")";
        Partition d = dual(p);
        check.require(dual(d) == p, tag + ": dual is not an involution");
        check.require(d.part(1) == p.n(), tag + ": dual_1 != n");
        if (p.m() >= 2) check.require(p.s() == d.part(2), tag + ": s != dual_2");
        int count2 = 0;
        for (int i = 1; i <= p.n(); ++i)
            if (p.part(i) >= 2) ++count2;
        check.require(p.s() == count2, tag + ": s is not the number of parts >= 2");
        CornerData c = corners(p);
        long long area = 0;
        for (int i = 1; i <= c.t; ++i)
            area += static_cast<long long>(c.j[static_cast<std::size_t>(i)] -
                                           c.j[static_cast<std::size_t>(i) - 1]) *
                    c.outer[static_cast<std::size_t>(i) - 1].second;
        check.require(area == p.weight(), tag + ": corner rectangles do not tile the diagram");
        check.require(c.j.back() == p.n() && c.outer.front().second == p.m(),
                      tag + ": corner conventions violated");
    });
    return result;
}

inline SweepResult sweep_binomial_pascal(int max_a) {
    SweepResult result{"binomial vs Pascal recurrence (a <= " + std::to_string(max_a) + ")"};
    detail::Failure check{&result};
    std::vector<std::vector<Int>> pascal(static_cast<std::size_t>(max_a) + 1);
    for (int a = 0; a <= max_a; ++a) {
        pascal[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a) + 1, 1);
        for (int k = 1; k < a; ++k)
            pascal[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] =
                pascal[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(k) - 1] +
                pascal[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(k)];
        for (int k = 0; k <= a; ++k) {
            ++result.cases;
            if (!check.require(binomial(a, k) == pascal[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)],
                               "C(" + std::to_string(a) + "," + std::to_string(k) + ") mismatch"))
                return result;
        }
    }
    return result;
}

// Betti positivity, beta_1 = |lambda|, vanishing alternating sum, and the
// numerator identity between the Betti table and the Hilbert series.
inline SweepResult sweep_betti_series(int max_weight) {
    SweepResult result{"betti/Hilbert consistency (|lambda| <= " + std::to_string(max_weight) + ")"};
    detail::Failure check{&result};
    for_each_partition_up_to_weight(max_weight, [&](const Partition& p) {
        if (!result.ok) return;
        ++result.cases;
        std::string tag = "lambda=(" + partition_text(p) + ")";
        BettiTable t = betti_numbers(p);
        check.require(t.beta[0] == 1, tag + ": beta_0 != 1");
        check.require(t.beta[1] == p.weight(), tag + ": beta_1 != |lambda|");
        Int alt = 0;
        for (int i = 0; i <= t.projective_dimension(); ++i) {
            const Int& b = t.beta[static_cast<std::size_t>(i)];
            if (i >= 1 && b <= 0) check.fail(tag + ": beta_" + std::to_string(i) + " not positive");
            alt += (i % 2 == 0) ? b : -b;
        }
        check.require(alt == 0, tag + ": alternating sum of Betti numbers nonzero");
        KPolynomialReport k = k_polynomial_check(p);
        if (!k.ok)
            check.fail(tag + ": numerator identity fails at degree " + std::to_string(k.first_mismatch_degree));
    });
    return result;
}

inline SweepResult sweep_hilbert_oracle(int max_nm, int max_degree) {
    SweepResult result{"Hilbert function vs standard-monomial count (n+m <= " + std::to_string(max_nm) +
                       ", d <= " + std::to_string(max_degree) + ")"};
    detail::Failure check{&result};
    for_each_partition_in_box(max_nm - 1, max_nm - 1, [&](const Partition& p) {
        if (!result.ok || p.n() + p.m() > max_nm) return;
        HilbertSeries h = hilbert_series(p);
        for (long long d = 0; d <= max_degree; ++d) {
            ++result.cases;
            Int series_value = hilbert_function(h, d);
            Int oracle_value = oracle::quotient_hilbert_oracle(p, d);
            if (series_value != oracle_value) {
                check.fail("lambda=(" + partition_text(p) + "), d=" + std::to_string(d) + ": series " +
                           series_value.str() + " vs oracle " + oracle_value.str());
                return;
            }
        }
    });
    return result;
}

// Monomial-by-monomial equality of the ideal with the intersection of each
// decomposition, antichain property, and the height/unmixedness readings.
inline SweepResult sweep_decompositions(int max_nm, int max_degree) {
    SweepResult result{"primary decompositions (n+m <= " + std::to_string(max_nm) + ", d <= " +
                       std::to_string(max_degree) + ")"};
    detail::Failure check{&result};
    for_each_partition_in_box(max_nm - 1, max_nm - 1, [&](const Partition& p) {
        if (!result.ok || p.n() + p.m() > max_nm) return;
        ++result.cases;
        std::string tag = "lambda=(" + partition_text(p) + ")";
        auto irr = irredundant_decomposition(p);
        auto red = redundant_decomposition(p);
        CornerData c = corners(p);
        check.require(static_cast<int>(irr.size()) == c.t + 1, tag + ": component count != t+1");
        check.require(static_cast<int>(red.size()) == p.s() + 2, tag + ": redundant count != s+2");
        for (const auto& a : irr)
            for (const auto& b : irr)
                if (!(a == b) && a.contains(b)) check.fail(tag + ": irredundant list is not an antichain");
        auto pruned = prune_containments(red);
        auto sorted_key = [](std::vector<PrimeComponent> v) {
            std::sort(v.begin(), v.end(), [](const PrimeComponent& a, const PrimeComponent& b) {
                return std::pair(a.x_prefix, a.y_prefix) < std::pair(b.x_prefix, b.y_prefix);
            });
            return v;
        };
        check.require(sorted_key(pruned) == sorted_key(irr), tag + ": pruning does not recover the corners");

        IdealInvariants inv = ideal_invariants(p);
        int min_size = irr.front().size();
        bool equal_sizes = true;
        for (const auto& comp : irr) {
            min_size = std::min(min_size, comp.size());
            equal_sizes = equal_sizes && comp.size() == irr.front().size();
        }
        check.require(inv.height == min_size, tag + ": height != min component size");
        check.require(inv.unmixed == equal_sizes, tag + ": unmixedness disagrees with component sizes");
        check.require(inv.cohen_macaulay == (inv.height == inv.projective_dimension),
                      tag + ": Cohen-Macaulay flag disagrees with height = pd");
        check.require(inv.height <= inv.projective_dimension, tag + ": height > pd");

        // every monomial of total degree <= max_degree
        std::vector<int> exp(static_cast<std::size_t>(p.n() + p.m()), 0);
        std::function<void(std::size_t, int)> enumerate = [&](std::size_t var, int left) {
            if (!result.ok) return;
            if (var == exp.size()) {
                std::vector<int> x_exp(exp.begin(), exp.begin() + p.n());
                std::vector<int> y_exp(exp.begin() + p.n(), exp.end());
                bool in_ideal = ideal_membership(p, x_exp, y_exp);
                for (const auto* decomposition : {&irr, &red}) {
                    bool in_all = true;
                    for (const auto& comp : *decomposition)
                        in_all = in_all && component_membership(comp, x_exp, y_exp);
                    if (in_all != in_ideal) {
                        std::ostringstream os;
                        os << tag << ": membership mismatch on exponents (";
                        for (std::size_t i = 0; i < exp.size(); ++i) os << (i ? "," : "") << exp[i];
                        os << ")";
                        check.fail(os.str());
                        return;
                    }
                }
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exp[var] = e;
                enumerate(var + 1, left - e);
            }
            exp[var] = 0;
        };
        enumerate(0, max_degree);
    });
    return result;
}

inline SweepResult sweep_resolutions(int max_weight) {
    SweepResult result{"cellular resolutions: minimality, d o d = 0, f = beta (|lambda| <= " +
                       std::to_string(max_weight) + ")"};
    detail::Failure check{&result};
    for_each_partition_up_to_weight(max_weight, [&](const Partition& p) {
        if (!result.ok) return;
        ++result.cases;
        ResolutionReport report = verify_resolution(p, VerifyDepth::betti_match);
        if (!report.ok) check.fail("lambda=(" + partition_text(p) + "): " + report.failure);
    });
    return result;
}

inline SweepResult sweep_resolution_acyclicity(int max_weight) {
    SweepResult result{"restriction acyclicity (|lambda| <= " + std::to_string(max_weight) + ")"};
    detail::Failure check{&result};
    for_each_partition_up_to_weight(max_weight, [&](const Partition& p) {
        if (!result.ok) return;
        ++result.cases;
        ResolutionReport report = verify_resolution(p, VerifyDepth::acyclicity);
        if (!report.ok) check.fail("lambda=(" + partition_text(p) + "): " + report.failure);
    });
    return result;
}

// The sign rule satisfies the diamond cancellation on every codimension-2
// pair, which is what boundary-of-boundary cancellation rests on.
inline SweepResult sweep_incidence_diamond(int max_weight) {
    SweepResult result{"incidence diamond identity (|lambda| <= " + std::to_string(max_weight) + ")"};
    detail::Failure check{&result};
    for_each_partition_up_to_weight(max_weight, [&](const Partition& p) {
        if (!result.ok) return;
        CellComplex complex = build_complex(p);
        for (int k = 2; k <= complex.dim(); ++k)
            for (const CellFace& F : complex.faces[static_cast<std::size_t>(k)]) {
                auto facets = detail::facets_of(F);
                for (std::size_t a = 0; a < facets.size(); ++a)
                    for (std::size_t b = a + 1; b < facets.size(); ++b) {
                        // common codimension-2 face, if removing both stays a face
                        const auto& [Qa, va] = facets[a];
                        const auto& [Qb, vb] = facets[b];
                        CellFace R = F;
                        auto drop = [&](const Variable& v) {
                            auto& list = v.is_y ? R.cols : R.rows;
                            list.erase(std::find(list.begin(), list.end(), v.index));
                        };
                        drop(va);
                        drop(vb);
                        if (R.rows.empty() || R.cols.empty()) continue;
                        ++result.cases;
                        int lhs = incidence(F, Qa) * incidence(Qa, R) + incidence(F, Qb) * incidence(Qb, R);
                        if (lhs != 0) {
                            check.fail("lambda=(" + partition_text(p) + "): diamond fails at " +
                                       detail::face_str(F));
                            return;
                        }
                    }
            }
    });
    return result;
}

namespace detail {

inline bool validate_chordality_certificate(const SimpleGraph& g, const ChordalityResult& r,
                                            std::string& why) {
    if (r.chordal) {
        if (static_cast<int>(r.elimination_order.size()) != g.n) {
            why = "elimination order has wrong length";
            return false;
        }
        if (!is_perfect_elimination_order(g, r.elimination_order)) {
            why = "claimed elimination order is not perfect";
            return false;
        }
        return true;
    }
    const auto& cycle = r.hole;
    if (cycle.size() < 4) {
        why = "hole shorter than 4";
        return false;
    }
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) {
        why = "hole revisits a vertex";
        return false;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        for (std::size_t j = i + 1; j < cycle.size(); ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == cycle.size() - 1);
            if (consecutive != g.has_edge(cycle[i], cycle[j])) {
                why = consecutive ? "hole edge missing" : "hole has a chord";
                return false;
            }
        }
    return true;
}

inline bool validate_recognition(const BipartiteGraph& g, std::string& why) {
    RecognitionResult rec = recognize_ferrers(g);
    bool linear = has_two_linear_resolution(g);
    if (rec.ferrers != linear) {
        why = rec.ferrers ? "recognized as chain graph but complement not chordal"
                          : "complement chordal but not recognized as chain graph";
        return false;
    }
    if (rec.ferrers) {
        if (!is_ferrers_labeled(apply_relabeling(g, rec))) {
            why = "relabeling does not reach staircase form";
            return false;
        }
        long long weight = rec.lambda->weight();
        if (weight != g.edge_count()) {
            why = "recovered partition weight differs from edge count";
            return false;
        }
    } else {
        const SwitchObstruction& sw = *rec.obstruction;
        if (!(g.has_edge(sw.i, sw.k) && g.has_edge(sw.i2, sw.j) && !g.has_edge(sw.i, sw.j) &&
              !g.has_edge(sw.i2, sw.k))) {
            why = "switch obstruction incidences do not hold";
            return false;
        }
    }
    ChordalityResult chord = is_chordal(complement(g));
    return validate_chordality_certificate(complement(g), chord, why);
}

}  // namespace detail

// Chain-graph recognition agrees with complement chordality on every
// bipartite graph without isolated vertices, with certificates validated.
inline SweepResult sweep_recognition_exhaustive(int max_nx, int max_ny) {
    SweepResult result{"recognition = complement chordality, exhaustive (nx,ny <= " +
                       std::to_string(max_nx) + "," + std::to_string(max_ny) + ")"};
    detail::Failure check{&result};
    for (int nx = 1; nx <= max_nx && result.ok; ++nx)
        for (int ny = 1; ny <= max_ny && result.ok; ++ny) {
            int bits = nx * ny;
            for (unsigned long mask = 0; mask < (1UL << bits); ++mask) {
                BipartiteGraph g(nx, ny);
                for (int bit = 0; bit < bits; ++bit)
                    if (mask & (1UL << bit)) g.add_edge(bit / ny + 1, bit % ny + 1);
                bool isolated = false;
                for (int i = 1; i <= nx && !isolated; ++i) isolated = g.row_degree(i) == 0;
                for (int j = 1; j <= ny && !isolated; ++j) isolated = g.col_degree(j) == 0;
                if (isolated) continue;
                ++result.cases;
                std::string why;
                if (!detail::validate_recognition(g, why)) {
                    std::ostringstream os;
                    os << "nx=" << nx << " ny=" << ny << " mask=" << mask << ": " << why;
                    check.fail(os.str());
                    break;
                }
            }
        }
    return result;
}

inline SweepResult sweep_recognition_random(int instances, int max_nx, int max_ny, unsigned seed) {
    SweepResult result{"recognition randomized (" + std::to_string(instances) + " instances, nx,ny <= " +
                       std::to_string(max_nx) + "," + std::to_string(max_ny) + ")"};
    detail::Failure check{&result};
    std::mt19937 rng(seed);
    for (int trial = 0; trial < instances && result.ok; ++trial) {
        int nx = std::uniform_int_distribution<int>(1, max_nx)(rng);
        int ny = std::uniform_int_distribution<int>(1, max_ny)(rng);
        BipartiteGraph g(nx, ny);
        if (trial % 2 == 0) {
            // a shuffled Ferrers instance: must be recognized and recovered
            std::vector<int> parts(static_cast<std::size_t>(nx));
            parts[0] = ny;
            for (int i = 1; i < nx; ++i)
                parts[static_cast<std::size_t>(i)] =
                    std::uniform_int_distribution<int>(1, parts[static_cast<std::size_t>(i) - 1])(rng);
            Partition p{parts};
            std::vector<int> rows(static_cast<std::size_t>(nx)), cols(static_cast<std::size_t>(ny));
            for (int i = 0; i < nx; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
            for (int j = 0; j < ny; ++j) cols[static_cast<std::size_t>(j)] = j + 1;
            std::shuffle(rows.begin(), rows.end(), rng);
            std::shuffle(cols.begin(), cols.end(), rng);
            for (int i = 1; i <= nx; ++i)
                for (int j = 1; j <= p.part(i); ++j)
                    g.add_edge(rows[static_cast<std::size_t>(i) - 1], cols[static_cast<std::size_t>(j) - 1]);
            ++result.cases;
            RecognitionResult rec = recognize_ferrers(g);
            if (!rec.ferrers || !(*rec.lambda == p)) {
                check.fail("shuffled chain graph not recovered, lambda=(" + partition_text(p) + ")");
                break;
            }
            std::string why;
            if (!detail::validate_recognition(g, why)) {
                check.fail("shuffled lambda=(" + partition_text(p) + "): " + why);
                break;
            }
        } else {
            for (int i = 1; i <= nx; ++i)
                for (int j = 1; j <= ny; ++j)
                    if (std::bernoulli_distribution(0.5)(rng)) g.add_edge(i, j);
            for (int i = 1; i <= nx; ++i)  // repair isolated vertices
                if (g.row_degree(i) == 0) g.add_edge(i, std::uniform_int_distribution<int>(1, ny)(rng));
            for (int j = 1; j <= ny; ++j)
                if (g.col_degree(j) == 0) g.add_edge(std::uniform_int_distribution<int>(1, nx)(rng), j);
            ++result.cases;
            std::string why;
            if (!detail::validate_recognition(g, why)) {
                std::ostringstream os;
                os << "random graph nx=" << nx << " ny=" << ny << " (trial " << trial << "): " << why;
                check.fail(os.str());
                break;
            }
            // verdict and recovered partition are label-independent
            std::vector<int> rp(static_cast<std::size_t>(nx)), cp(static_cast<std::size_t>(ny));
            for (int i = 0; i < nx; ++i) rp[static_cast<std::size_t>(i)] = i + 1;
            for (int j = 0; j < ny; ++j) cp[static_cast<std::size_t>(j)] = j + 1;
            std::shuffle(rp.begin(), rp.end(), rng);
            std::shuffle(cp.begin(), cp.end(), rng);
            BipartiteGraph shuffled(nx, ny);
            for (int i = 1; i <= nx; ++i)
                for (int j = 1; j <= ny; ++j)
                    if (g.has_edge(rp[static_cast<std::size_t>(i) - 1], cp[static_cast<std::size_t>(j) - 1]))
                        shuffled.add_edge(i, j);
            RecognitionResult before = recognize_ferrers(g);
            RecognitionResult after = recognize_ferrers(shuffled);
            if (before.ferrers != after.ferrers ||
                (before.ferrers && !(before.lambda->parts == after.lambda->parts))) {
                check.fail("recognition verdict changed under relabeling (trial " +
                           std::to_string(trial) + ")");
                break;
            }
        }
    }
    return result;
}

// Closed form vs liaison recursion, regularity formula vs numerator degree,
// multiplicity and a-invariant bookkeeping, palindromy and witnesses in the
// Gorenstein case, and independence of the numerator from lambda_1.
inline SweepResult sweep_toric_consistency(int max_weight) {
    SweepResult result{"toric numerator consistency (|lambda| <= " + std::to_string(max_weight) + ")"};
    detail::Failure check{&result};
    for_each_partition_up_to_weight(max_weight, [&](const Partition& p) {
        if (!result.ok) return;
        ++result.cases;
        std::string tag = "lambda=(" + partition_text(p) + ")";
        HVector rec = h_vector_recursive(p);
        HVector closed = h_vector_closed(p);
        if (rec != closed) {
            check.fail(tag + ": closed form and recursion disagree");
            return;
        }
        check.require(!rec.empty() && rec[0] == 1, tag + ": h_0 != 1");
        for (const Int& h : rec)
            if (h < 0) check.fail(tag + ": negative numerator coefficient");
        int deg = poly_degree(rec);
        if (p.n() >= 2 && p.part(2) >= 2)
            check.require(toric_regularity(p) == deg, tag + ": regularity formula != numerator degree");
        else
            check.require(deg == 0, tag + ": polynomial-ring case has nonzero degree");
        Int e = multiplicity(p);  // internally cross-checks the closed evaluation
        check.require(e == poly_eval_at_one(rec), tag + ": multiplicity != h(1)");
        check.require(a_invariant(p) == deg - (static_cast<long long>(p.n()) + p.m() - 1),
                      tag + ": a-invariant bookkeeping broken");
        long long height = toric_ideal_height(p);
        if (p.s() >= 1)
            check.require(height == p.weight() - (p.n() + p.m() - 1), tag + ": toric height != |lambda| - dim");
        if (p.n() >= 2 && p.part(1) > p.part(2)) {
            std::vector<int> capped = p.parts;
            capped[0] = capped[1];
            check.require(h_vector_closed(Partition{capped}) == closed,
                          tag + ": numerator depends on lambda_1");
        }
        if (is_gorenstein(p)) {
            for (int i = 0; i <= deg; ++i)
                if (rec[static_cast<std::size_t>(i)] != rec[static_cast<std::size_t>(deg - i)]) {
                    check.fail(tag + ": Gorenstein but numerator not palindromic");
                    return;
                }
            try {
                Partition witness = gorenstein_witness(p);  // throws unless unmixed with equal numerator
                check.require(is_unmixed(witness), tag + ": witness not unmixed");
            } catch (const std::exception& ex) {
                check.fail(tag + ": witness construction failed: " + std::string(ex.what()));
            }
        }
    });
    return result;
}

inline SweepResult sweep_toric_oracle(int max_n, int max_m, int max_degree) {
    SweepResult result{"toric Hilbert function vs product enumeration (n <= " + std::to_string(max_n) +
                       ", m <= " + std::to_string(max_m) + ", d <= " + std::to_string(max_degree) + ")"};
    detail::Failure check{&result};
    for_each_partition_in_box(max_n, max_m, [&](const Partition& p) {
        if (!result.ok) return;
        if (h_vector_closed(p) != h_vector_recursive(p)) {
            check.fail("lambda=(" + partition_text(p) + "): closed form and recursion disagree");
            return;
        }
        for (long long d = 0; d <= max_degree; ++d) {
            ++result.cases;
            Int expansion = toric_hilbert_function(p, d);
            Int counted = oracle::toric_hilbert_oracle(p, d);
            if (expansion != counted) {
                check.fail("lambda=(" + partition_text(p) + "), d=" + std::to_string(d) + ": " +
                           expansion.str() + " vs " + counted.str());
                return;
            }
        }
    });
    return result;
}

// Rectangles, the shifted-staircase family lambda_k = m + 1 - k, and the
// Catalan multiplicities of staircases.
inline SweepResult sweep_toric_families(int max_nm) {
    SweepResult result{"toric closed-form families (n, m <= " + std::to_string(max_nm) + ")"};
    detail::Failure check{&result};
    for (int n = 2; n <= max_nm && result.ok; ++n)
        for (int m = 2; m <= max_nm && result.ok; ++m) {
            ++result.cases;
            Partition rect{std::vector<int>(static_cast<std::size_t>(n), m)};
            HVector h = h_vector_recursive(rect);
            HVector expected;
            for (int k = 0; k < n; ++k) expected.push_back(binomial(m - 1, k) * binomial(n - 1, k));
            poly_trim(expected);
            std::string tag = "rectangle n=" + std::to_string(n) + " m=" + std::to_string(m);
            check.require(h == expected, tag + ": numerator mismatch");
            check.require(h == h_vector_closed(rect), tag + ": closed form mismatch");
            check.require(multiplicity(rect) == binomial(n + m - 2, m - 1), tag + ": multiplicity mismatch");
        }
    for (int m = 2; m <= max_nm && result.ok; ++m)
        for (int n = 2; n <= m && result.ok; ++n) {
            ++result.cases;
            std::vector<int> parts;
            for (int k = 1; k <= n; ++k) parts.push_back(m + 1 - k);
            Partition p{parts};
            HVector h = h_vector_recursive(p);
            HVector expected;
            for (int k = 0; k < n; ++k)
                expected.push_back(binomial(n - 1, k) * binomial(m - 2, k) -
                                   binomial(n - 1, k + 1) * binomial(m - 2, k - 1));
            poly_trim(expected);
            std::string tag = "shifted staircase n=" + std::to_string(n) + " m=" + std::to_string(m);
            check.require(h == expected, tag + ": numerator mismatch");
            Int e = (Int(m - n + 1) * binomial(m + n - 2, m - 1));
            check.require(e % m == 0, tag + ": multiplicity formula not integral");
            check.require(multiplicity(p) == e / m, tag + ": multiplicity mismatch");
        }
    for (int n = 2; n <= 6 && result.ok; ++n) {
        ++result.cases;
        std::vector<int> parts;
        for (int k = n; k >= 1; --k) parts.push_back(k);
        Partition staircase{parts};
        Int catalan = binomial(2 * (n - 1), n - 1) / n;
        std::string tag = "staircase n=" + std::to_string(n);
        check.require(multiplicity(staircase) == catalan, tag + ": multiplicity is not Catalan");
        HVector h = h_vector_recursive(staircase);
        HVector expected;
        for (int k = 0; k <= n - 2; ++k)
            expected.push_back(binomial(n - 2, k) * binomial(n - 1, k) / (k + 1));
        poly_trim(expected);
        check.require(h == expected, tag + ": numerator mismatch");
        check.require(is_gorenstein(staircase), tag + ": staircase not Gorenstein");
    }
    return result;
}

// The walk statistic reproduces every numerator coefficient, so the whole
// numerator has the stated combinatorial meaning.
inline SweepResult sweep_lattice_paths(int max_weight) {
    SweepResult result{"lattice-path counts vs numerator (|lambda| <= " + std::to_string(max_weight) + ")"};
    detail::Failure check{&result};
    for_each_partition_up_to_weight(max_weight, [&](const Partition& p) {
        if (!result.ok) return;
        HVector h = h_vector_recursive(p);
        Int total = 0;
        for (int k = 0; k <= p.n(); ++k) {
            ++result.cases;
            Int walks = oracle::lattice_path_count(p, k);
            Int expected = k < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(k)] : Int(0);
            if (walks != expected) {
                check.fail("lambda=(" + partition_text(p) + "), k=" + std::to_string(k) + ": walks " +
                           walks.str() + " vs h_k " + expected.str());
                return;
            }
            total += walks;
        }
        check.require(total == multiplicity(p), "lambda=(" + partition_text(p) +
                                                    "): total walks != multiplicity");
    });
    return result;
}

// f_{i-1} = beta_i ties the face counts to the Betti table; checked here as
// a standalone claim so the series side is exercised against the complex.
inline SweepResult sweep_face_betti(int max_weight) {
    SweepResult result{"face counts vs Betti numbers (|lambda| <= " + std::to_string(max_weight) + ")"};
    detail::Failure check{&result};
    for_each_partition_up_to_weight(max_weight, [&](const Partition& p) {
        if (!result.ok) return;
        ++result.cases;
        CellComplex complex = build_complex(p);
        BettiTable betti = betti_numbers(p);
        if (complex.dim() != betti.projective_dimension() - 1) {
            check.fail("lambda=(" + partition_text(p) + "): dim X != pd - 1");
            return;
        }
        for (int k = 0; k <= complex.dim(); ++k)
            if (Int(complex.f_vector[static_cast<std::size_t>(k)]) !=
                betti.beta[static_cast<std::size_t>(k) + 1]) {
                check.fail("lambda=(" + partition_text(p) + "): f_" + std::to_string(k) +
                           " != beta_" + std::to_string(k + 1));
                return;
            }
    });
    return result;
}

struct SweepOptions {
    bool full = false;
    unsigned seed = 20240501;
    // quick defaults; `full` raises them to the advertised desk-scale bounds
    int betti_weight = 8;
    int resolution_weight = 7;
    int acyclicity_weight = 6;
    int hilbert_nm = 6;
    int hilbert_degree = 4;
    int decomposition_nm = 6;
    int decomposition_degree = 4;
    int recognition_exhaustive = 3;
    int recognition_random = 500;
    int recognition_random_nm = 6;
    int toric_weight = 10;
    int toric_oracle_n = 3, toric_oracle_m = 3, toric_oracle_degree = 3;
    int families_nm = 6;
    int paths_weight = 8;

    static SweepOptions quick() { return SweepOptions{}; }
    static SweepOptions full_scale() {
        SweepOptions o;
        o.full = true;
        o.betti_weight = 12;
        o.resolution_weight = 10;
        o.acyclicity_weight = 8;
        o.hilbert_nm = 8;
        o.hilbert_degree = 6;
        o.decomposition_nm = 8;
        o.decomposition_degree = 6;
        o.recognition_exhaustive = 4;
        o.recognition_random = 10000;
        o.recognition_random_nm = 7;
        o.toric_weight = 14;
        o.toric_oracle_n = 4;
        o.toric_oracle_m = 4;
        o.toric_oracle_degree = 4;
        o.families_nm = 8;
        o.paths_weight = 10;
        return o;
    }
};

inline std::vector<SweepResult> verify_all(const SweepOptions& o) {
    std::vector<SweepResult> results;
    results.push_back(sweep_partition_identities(o.betti_weight));
    results.push_back(sweep_binomial_pascal(52));
    results.push_back(sweep_betti_series(o.betti_weight));
    results.push_back(sweep_hilbert_oracle(o.hilbert_nm, o.hilbert_degree));
    results.push_back(sweep_decompositions(o.decomposition_nm, o.decomposition_degree));
    results.push_back(sweep_face_betti(o.betti_weight));
    results.push_back(sweep_incidence_diamond(o.resolution_weight));
    results.push_back(sweep_resolutions(o.resolution_weight));
    results.push_back(sweep_resolution_acyclicity(o.acyclicity_weight));
    results.push_back(sweep_recognition_exhaustive(o.recognition_exhaustive, o.recognition_exhaustive));
    results.push_back(sweep_recognition_random(o.recognition_random, o.recognition_random_nm,
                                               o.recognition_random_nm, o.seed));
    results.push_back(sweep_toric_consistency(o.toric_weight));
    results.push_back(sweep_toric_oracle(o.toric_oracle_n, o.toric_oracle_m, o.toric_oracle_degree));
    results.push_back(sweep_toric_families(o.families_nm));
    results.push_back(sweep_lattice_paths(o.paths_weight));
    return results;
}

}  // namespace ferrers
