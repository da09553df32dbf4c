// Command-line front end: partition and edge-list inputs, text or JSON
// reports, and the cross-module verification sweeps.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
// 3 resource-guard abort.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ferrers/graph.hpp"
#include "ferrers/ideal.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/resolution.hpp"
#include "ferrers/serialize.hpp"
#include "ferrers/series.hpp"
#include "ferrers/toric.hpp"
#include "ferrers/verify.hpp"

namespace {

using namespace ferrers;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;

struct PartitionInput {
    std::string inline_text;
    std::string file;

    Partition resolve() const {
        if (inline_text.empty() == file.empty())
            throw std::invalid_argument("provide exactly one input: an inline partition or --file");
        std::string text = inline_text;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open partition file '" + file + "'");
            std::getline(in, text);
        }
        return validate_partition(parse_partition_text(text));
    }
};

std::string poly_str(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        Int coeff = p[k];
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        Int mag = abs(coeff);
        if (mag != 1 || k == 0) os << mag.str();
        if (k == 1) os << "t";
        if (k >= 2) os << "t^" << k;
    }
    return os.str();
}

std::string series_str(const HilbertSeries& h) {
    std::ostringstream os;
    os << "(" << poly_str(h.numerator) << ") / (1-t)^" << h.denom_power;
    return os.str();
}

std::string component_str(const PrimeComponent& c) {
    std::ostringstream os;
    os << "(";
    if (c.x_prefix == 1) os << "x1";
    if (c.x_prefix >= 2) os << "x1..x" << c.x_prefix;
    if (c.x_prefix > 0 && c.y_prefix > 0) os << ", ";
    if (c.y_prefix == 1) os << "y1";
    if (c.y_prefix >= 2) os << "y1..y" << c.y_prefix;
    os << ")";
    return os.str();
}

void print_tableau(std::ostream& out, const Partition& p) {
    CornerData c = corners(p);
    for (int i = 1; i <= p.n(); ++i) {
        bool corner_row = false;
        for (const auto& [row, col] : c.outer) corner_row = corner_row || row == i;
        out << "  x" << i << (i < 10 ? " " : "") << "|";
        for (int j = 1; j <= p.part(i); ++j)
            out << ' ' << (corner_row && j == p.part(i) ? '*' : '#');
        out << "\n";
    }
}

int with_format(bool as_json, const json& j, const std::function<void()>& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        text();
    return kExitOk;
}

int cmd_invariants(const PartitionInput& input, bool as_json) {
    Partition p = input.resolve();
    auto ideal_inv = ideal_invariants(p);
    auto decomposition = irredundant_decomposition(p);
    auto betti = betti_numbers(p);
    auto series = hilbert_series(p);
    auto toric = toric_invariants(p);
    json j{{"partition", json_partition(p)},
           {"n", p.n()},
           {"m", p.m()},
           {"weight", p.weight()},
           {"s", p.s()},
           {"ideal", json_ideal_invariants(ideal_inv)},
           {"decomposition", json_decomposition(decomposition)},
           {"series", json_series(betti, series)},
           {"toric", json_toric(toric)}};
    return with_format(as_json, j, [&] {
        std::cout << "partition (" << partition_text(p) << "): n=" << p.n() << ", m=" << p.m()
                  << ", |lambda|=" << p.weight() << ", s=" << p.s() << "\n";
        print_tableau(std::cout, p);
        std::cout << "edge ideal: " << p.weight() << " generators\n"
                  << "height " << ideal_inv.height << ", projective dimension "
                  << ideal_inv.projective_dimension << ", regularity " << ideal_inv.regularity << "\n"
                  << "unmixed: " << (ideal_inv.unmixed ? "yes" : "no") << ", Cohen-Macaulay: "
                  << (ideal_inv.cohen_macaulay ? "yes" : "no");
        if (ideal_inv.cm_type) std::cout << " (type " << *ideal_inv.cm_type << ")";
        std::cout << "\nirredundant decomposition (" << decomposition.size() << " components):\n";
        for (const auto& comp : decomposition) std::cout << "  " << component_str(comp) << "\n";
        std::cout << "betti numbers:";
        for (const Int& b : betti.beta) std::cout << " " << b.str();
        std::cout << "\nhilbert series: " << series_str(series) << "\n"
                  << "toric ring: dimension " << toric.dimension << ", multiplicity "
                  << toric.multiplicity.str() << ", regularity " << toric.regularity << ", a-invariant "
                  << toric.a_invariant << ", " << (toric.gorenstein ? "Gorenstein" : "not Gorenstein")
                  << "\n";
    });
}

int cmd_decompose(const PartitionInput& input, bool as_json, bool redundant) {
    Partition p = input.resolve();
    auto comps = redundant ? redundant_decomposition(p) : irredundant_decomposition(p);
    return with_format(as_json, json_decomposition(comps), [&] {
        std::cout << (redundant ? "redundant" : "irredundant") << " decomposition of ("
                  << partition_text(p) << "): " << comps.size() << " components\n";
        for (const auto& comp : comps) std::cout << "  " << component_str(comp) << "\n";
    });
}

int cmd_betti(const PartitionInput& input, bool as_json) {
    Partition p = input.resolve();
    auto betti = betti_numbers(p);
    auto series = hilbert_series(p);
    return with_format(as_json, json_series(betti, series), [&] {
        std::cout << "betti numbers of the quotient, pd = " << betti.projective_dimension() << "\n";
        for (int i = 0; i <= betti.projective_dimension(); ++i)
            std::cout << "  beta_" << i << " = " << betti.beta[static_cast<std::size_t>(i)].str()
                      << "  (degree " << BettiTable::internal_degree(i) << ")\n";
    });
}

int cmd_hilbert(const PartitionInput& input, bool as_json, long long max_degree) {
    Partition p = input.resolve();
    auto betti = betti_numbers(p);
    auto series = hilbert_series(p);
    json j = json_series(betti, series);
    json values = json::array();
    for (long long d = 0; d <= max_degree; ++d) values.push_back(hilbert_function(series, d).str());
    j["values"] = values;
    return with_format(as_json, j, [&] {
        std::cout << "hilbert series: " << series_str(series) << "\n";
        for (long long d = 0; d <= max_degree; ++d)
            std::cout << "  h(" << d << ") = " << hilbert_function(series, d).str() << "\n";
    });
}

int cmd_resolution(const PartitionInput& input, bool as_json, int depth) {
    Partition p = input.resolve();
    ChainComplex chain = build_resolution(p);
    ResolutionReport report = verify_resolution(p, static_cast<VerifyDepth>(depth));
    json j = json_resolution(chain);
    j["verified"] = report.ok;
    j["depth"] = report.depth;
    if (!report.ok) j["failure"] = report.failure;
    int code = with_format(as_json, j, [&] {
        std::cout << "cell complex of (" << partition_text(p) << "): f-vector";
        for (long long f : chain.cells.f_vector) std::cout << " " << f;
        std::cout << "\ngenerators:";
        for (auto [i, jj] : chain.generators()) std::cout << " x" << i << "y" << jj;
        std::cout << "\n";
        for (std::size_t k = 0; k < chain.maps.size(); ++k) {
            std::cout << "map " << k + 1 << " (" << chain.cells.f_vector[k] << " x "
                      << chain.cells.f_vector[k + 1] << "):\n";
            for (const ChainEntry& e : chain.maps[k])
                std::cout << "  [" << e.row << "," << e.col << "] " << (e.sign > 0 ? "+" : "-")
                          << e.var.str() << "\n";
        }
        std::cout << "verification (depth " << report.depth << "): " << (report.ok ? "pass" : "FAIL")
                  << "\n";
        if (!report.ok) std::cout << "  " << report.failure << "\n";
    });
    return report.ok ? code : kExitVerification;
}

int cmd_toric(const PartitionInput& input, bool as_json) {
    Partition p = input.resolve();
    ToricInvariants inv = toric_invariants(p);
    json j = json_toric(inv);
    if (inv.gorenstein) j["gorenstein_witness"] = json_partition(gorenstein_witness(p));
    return with_format(as_json, j, [&] {
        std::cout << "toric ring of (" << partition_text(p) << ")\n"
                  << "  dimension " << inv.dimension << ", toric ideal height " << inv.ideal_height
                  << "\n  numerator " << poly_str(inv.h_vector) << "\n  multiplicity "
                  << inv.multiplicity.str() << ", regularity " << inv.regularity << ", a-invariant "
                  << inv.a_invariant << "\n  ladder:";
        if (inv.ladder.degenerate())
            std::cout << " degenerate (polynomial ring)";
        else
            for (int v : inv.ladder.shape) std::cout << " " << v;
        std::cout << "\n  Gorenstein: " << (inv.gorenstein ? "yes" : "no");
        if (inv.gorenstein) std::cout << ", witness (" << partition_text(gorenstein_witness(p)) << ")";
        std::cout << "\n";
    });
}

int cmd_recognize(const std::string& edges_file, bool as_json) {
    std::ifstream in(edges_file);
    if (!in) throw std::invalid_argument("cannot open edge list '" + edges_file + "'");
    BipartiteGraph raw = parse_edge_list(in);
    StrippedGraph stripped = strip_isolated(raw);
    for (int i : stripped.removed_x) std::cerr << "warning: dropping isolated vertex x" << i << "\n";
    for (int j : stripped.removed_y) std::cerr << "warning: dropping isolated vertex y" << j << "\n";
    if (stripped.graph.nx == 0 || stripped.graph.ny == 0)
        throw std::invalid_argument("graph has no edges");
    RecognitionResult rec = recognize_ferrers(stripped.graph);
    json j = json_recognition(rec);
    j["stripped_x"] = stripped.removed_x;
    j["stripped_y"] = stripped.removed_y;
    j["kept_x"] = stripped.kept_x;
    j["kept_y"] = stripped.kept_y;
    return with_format(as_json, j, [&] {
        if (rec.ferrers) {
            std::cout << "Ferrers graph: yes\npartition (" << partition_text(*rec.lambda) << ")\n";
            std::cout << "row order:";
            for (int r : rec.row_perm) std::cout << " x" << stripped.kept_x[static_cast<std::size_t>(r) - 1];
            std::cout << "\ncolumn order:";
            for (int c : rec.col_perm) std::cout << " y" << stripped.kept_y[static_cast<std::size_t>(c) - 1];
            std::cout << "\n";
        } else {
            const SwitchObstruction& sw = *rec.obstruction;
            std::cout << "Ferrers graph: no\n2x2 switch obstruction: edges (x" << sw.i << ",y" << sw.k
                      << "), (x" << sw.i2 << ",y" << sw.j << "); non-edges (x" << sw.i << ",y" << sw.j
                      << "), (x" << sw.i2 << ",y" << sw.k << ")\n";
        }
    });
}

int cmd_paths(const PartitionInput& input, bool as_json, int max_turns) {
    Partition p = input.resolve();
    if (max_turns < 0) max_turns = p.n();
    json counts = json::array();
    Int total = 0;
    std::vector<Int> values;
    for (int k = 0; k <= max_turns; ++k) {
        values.push_back(oracle::lattice_path_count(p, k));
        total += values.back();
        counts.push_back(values.back().str());
    }
    json j{{"partition", json_partition(p)}, {"counts", counts}, {"total", total.str()}};
    return with_format(as_json, j, [&] {
        std::cout << "monotone walks through the tableau of (" << partition_text(p)
                  << ") by east-north turns\n";
        for (int k = 0; k <= max_turns; ++k)
            std::cout << "  " << k << " turns: " << values[static_cast<std::size_t>(k)].str() << "\n";
        std::cout << "  total: " << total.str() << "\n";
    });
}

int cmd_verify(bool as_json, const std::string& level, int max_weight, int max_degree, unsigned seed) {
    SweepOptions options = level == "full" ? SweepOptions::full_scale() : SweepOptions::quick();
    options.seed = seed;
    if (max_weight > 0) {
        options.betti_weight = max_weight;
        options.toric_weight = max_weight;
        options.paths_weight = std::min(max_weight, 10);
        options.resolution_weight = std::min(max_weight, 10);
        options.acyclicity_weight = std::min(max_weight, 8);
    }
    if (max_degree > 0) {
        options.hilbert_degree = max_degree;
        options.decomposition_degree = max_degree;
        options.toric_oracle_degree = std::min(max_degree, 5);
    }
    std::vector<SweepResult> results = verify_all(options);
    bool all_ok = true;
    json j = json::array();
    for (const SweepResult& r : results) {
        all_ok = all_ok && r.ok;
        j.push_back({{"name", r.name}, {"ok", r.ok}, {"cases", r.cases}, {"counterexample", r.counterexample}});
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const SweepResult& r : results) {
            std::cout << (r.ok ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.cases << " cases]\n";
            if (!r.ok) std::cout << "      counterexample: " << r.counterexample << "\n";
        }
    }
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ferrers graphs and ideals: decompositions, resolutions, and toric invariants"};
    app.require_subcommand(1);
    app.fallthrough();  // app-level flags remain usable after a subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    PartitionInput input;
    auto add_partition_options = [&](CLI::App* cmd) {
        cmd->add_option("partition", input.inline_text, "partition as comma-separated parts, e.g. 6,4,4,2,1");
        cmd->add_option("--file", input.file, "file containing the partition text");
    };

    auto* invariants = app.add_subcommand("invariants", "aggregate ideal, series, and toric summary");
    add_partition_options(invariants);

    auto* decompose = app.add_subcommand("decompose", "primary decomposition of the edge ideal");
    add_partition_options(decompose);
    bool redundant = false;
    decompose->add_flag("--redundant", redundant, "emit the unpruned component list");

    auto* betti = app.add_subcommand("betti", "Betti numbers of the quotient");
    add_partition_options(betti);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and function values");
    add_partition_options(hilbert);
    long long hilbert_degree = 8;
    hilbert->add_option("--max-degree", hilbert_degree, "largest degree to evaluate")->check(CLI::NonNegativeNumber);

    auto* resolution = app.add_subcommand("resolution", "cellular minimal free resolution");
    add_partition_options(resolution);
    int depth = 3;
    resolution->add_option("--depth", depth, "verification depth 1..4")->check(CLI::Range(1, 4));

    auto* toric = app.add_subcommand("toric", "invariants of the toric ring");
    add_partition_options(toric);

    auto* recognize = app.add_subcommand("recognize", "Ferrers recognition for a bipartite edge list");
    std::string edges_file;
    recognize->add_option("--edges", edges_file, "edge-list file")->required();

    auto* paths = app.add_subcommand("paths", "lattice-path counts by east-north turns");
    add_partition_options(paths);
    int max_turns = -1;
    paths->add_option("--max-turns", max_turns, "largest turn count to report");

    auto* verify = app.add_subcommand("verify", "run the cross-module verification sweeps");
    std::string level = "quick";
    int verify_weight = 0, verify_degree = 0;
    unsigned seed = 20240501;
    verify->add_option("--level", level, "sweep bounds")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--max-weight", verify_weight, "override the partition-weight bound")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-degree", verify_degree, "override the degree bound")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed for the randomized recognition instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    bool as_json = format == "json";
    try {
        if (invariants->parsed()) return cmd_invariants(input, as_json);
        if (decompose->parsed()) return cmd_decompose(input, as_json, redundant);
        if (betti->parsed()) return cmd_betti(input, as_json);
        if (hilbert->parsed()) return cmd_hilbert(input, as_json, hilbert_degree);
        if (resolution->parsed()) return cmd_resolution(input, as_json, depth);
        if (toric->parsed()) return cmd_toric(input, as_json);
        if (recognize->parsed()) return cmd_recognize(edges_file, as_json);
        if (paths->parsed()) return cmd_paths(input, as_json, max_turns);
        if (verify->parsed()) return cmd_verify(as_json, level, verify_weight, verify_degree, seed);
    } catch (const ferrers::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
