// Acceptance suite: the advertised exact results at desk scale, one
// pass/fail line each. All arithmetic is exact, so every comparison is an
// equality; the only tolerances are the runtime ceilings printed per check.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
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
#include "ferrers/verify.hpp"

using namespace ferrers;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;

    void fail(const std::string& message) {
        if (ok) {
            ok = false;
            detail = message;
        }
    }
    void require(bool condition, const std::string& message) {
        if (!condition) fail(message);
    }
    void absorb(const SweepResult& r) {
        if (!r.ok) fail(r.name + ": " + r.counterexample);
    }
};

int failures = 0;

void run(int number, const std::string& title, double time_limit_seconds,
         const std::function<void(Criterion&)>& body) {
    Criterion criterion;
    auto start = std::chrono::steady_clock::now();
    try {
        body(criterion);
    } catch (const std::exception& e) {
        criterion.fail(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.ok && elapsed > time_limit_seconds) {
        std::ostringstream os;
        os << "runtime " << elapsed << "s exceeds the " << time_limit_seconds << "s ceiling";
        criterion.fail(os.str());
    }
    std::cout << (criterion.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << number << "  " << title
              << "  (" << std::fixed << std::setprecision(2) << elapsed << "s)\n";
    if (!criterion.ok) {
        std::cout << "      " << criterion.detail << "\n";
        ++failures;
    }
}

}  // namespace

int main() {
    std::cout << "acceptance checks (exact arithmetic, desk scale)\n";

    run(1, "decomposition and beta_1 of (6,4,4,2,1)", 1.0, [](Criterion& c) {
        Partition p = validate_partition({6, 4, 4, 2, 1});
        std::vector<PrimeComponent> expected{{0, 6}, {1, 4}, {3, 2}, {4, 1}, {5, 0}};
        c.require(irredundant_decomposition(p) == expected, "component list differs");
        c.require(betti_numbers(p).beta[1] == 17, "beta_1 != 17");
    });

    run(2, "Betti/Hilbert numerator identity, |lambda| <= 12", 60.0, [](Criterion& c) {
        c.absorb(sweep_betti_series(12));
    });

    run(3, "cellular resolutions: |lambda| <= 10 exact, |lambda| <= 8 acyclic", 300.0,
        [](Criterion& c) {
            c.absorb(sweep_resolutions(10));
            c.absorb(sweep_resolution_acyclicity(8));
        });

    run(4, "cell complex of (4,3,2,1): four top cells, f = (10,20,15,4)", 5.0, [](Criterion& c) {
        CellComplex complex = build_complex(validate_partition({4, 3, 2, 1}));
        c.require(complex.f_vector == std::vector<long long>{10, 20, 15, 4}, "f-vector differs");
        for (int i = 1; i <= 4; ++i)
            c.require(Int(complex.f_vector[i - 1]) == Int(i) * binomial(5, i + 1),
                      "f_{i-1} != i*C(5,i+1) at i=" + std::to_string(i));
        const auto& top = complex.faces[3];
        c.require(top.size() == 4, "top cell count differs");
        int simplices = 0, products12 = 0, products21 = 0;
        for (const CellFace& f : top) {
            if (f.rows.size() == 1 || f.cols.size() == 1) ++simplices;
            if (f.rows.size() == 2 && f.cols.size() == 3) ++products12;
            if (f.rows.size() == 3 && f.cols.size() == 2) ++products21;
        }
        c.require(simplices == 2 && products12 == 1 && products21 == 1, "top cell types differ");
    });

    run(5, "Hilbert function vs standard-monomial oracle, n+m <= 8, d <= 6", 60.0,
        [](Criterion& c) { c.absorb(sweep_hilbert_oracle(8, 6)); });

    run(6, "recognition = complement chordality: exhaustive <= 4, 10^4 random <= 7", 300.0,
        [](Criterion& c) {
            c.absorb(sweep_recognition_exhaustive(4, 4));
            c.absorb(sweep_recognition_random(10000, 7, 7, 20240501));
        });

    run(7, "numerator closed form = recursion (|lambda| <= 14) = oracle (n,m <= 4, d <= 4)", 120.0,
        [](Criterion& c) {
            bool mismatch = false;
            std::string where;
            long long cases = 0;
            for_each_partition_up_to_weight(14, [&](const Partition& p) {
                if (mismatch) return;
                ++cases;
                if (h_vector_closed(p) != h_vector_recursive(p)) {
                    mismatch = true;
                    where = partition_text(p);
                }
            });
            c.require(!mismatch, "closed form differs from recursion on (" + where + ")");
            c.require(cases == 507, "partition enumeration incomplete");  // sum of p(1..14)
            c.absorb(sweep_toric_oracle(4, 4, 4));
        });

    run(8, "rectangle / shifted-staircase / Catalan families, n, m <= 8", 60.0,
        [](Criterion& c) { c.absorb(sweep_toric_families(8)); });

    run(9, "regularity formula = numerator degree, |lambda| <= 14; (3,3,3,3,3) -> 2", 60.0,
        [](Criterion& c) {
            for_each_partition_up_to_weight(14, [&](const Partition& p) {
                int deg = poly_degree(h_vector_recursive(p));
                if (p.n() >= 2 && p.part(2) >= 2) {
                    if (toric_regularity(p) != deg)
                        c.fail("formula != degree on (" + partition_text(p) + ")");
                } else if (deg != 0) {
                    c.fail("polynomial-ring case with positive degree on (" + partition_text(p) + ")");
                }
            });
            Partition flagged = validate_partition({3, 3, 3, 3, 3});
            c.require(toric_regularity(flagged) == 2, "(3,3,3,3,3) regularity != 2");
            c.require(poly_degree(h_vector_recursive(flagged)) == 2, "(3,3,3,3,3) numerator degree != 2");
        });
    // the piecewise shortcut "s - 1 when lambda_s >= 3" would give 4 on
    // (3,3,3,3,3); the min-expression (= 2 = numerator degree) is the
    // implemented and verified reading
    std::cout << "      note: (3,3,3,3,3) regularity is 2, not s-1 = 4; expected behavior\n";

    run(10, "Gorenstein => palindromic numerator and unmixed witness, |lambda| <= 14", 60.0,
        [](Criterion& c) {
            for_each_partition_up_to_weight(14, [&](const Partition& p) {
                if (!is_gorenstein(p)) return;
                HVector h = h_vector_recursive(p);
                int deg = poly_degree(h);
                for (int i = 0; i <= deg; ++i)
                    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(deg - i)]) {
                        c.fail("non-palindromic numerator on (" + partition_text(p) + ")");
                        return;
                    }
                try {
                    Partition witness = gorenstein_witness(p);
                    if (!is_unmixed(witness)) c.fail("witness of (" + partition_text(p) + ") not unmixed");
                    if (h_vector_recursive(witness) != h)
                        c.fail("witness numerator differs on (" + partition_text(p) + ")");
                } catch (const std::exception& e) {
                    c.fail("witness of (" + partition_text(p) + ") failed: " + std::string(e.what()));
                }
            });
        });

    run(11, "lattice-path statistic equals the numerator, |lambda| <= 10", 120.0,
        [](Criterion& c) { c.absorb(sweep_lattice_paths(10)); });

    std::cout << (failures == 0 ? "all acceptance checks passed\n"
                                : std::to_string(failures) + " acceptance check(s) failed\n");
    return failures == 0 ? 0 : 1;
}
