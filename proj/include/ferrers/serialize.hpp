#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ferrers/graph.hpp"
#include "ferrers/ideal.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/resolution.hpp"
#include "ferrers/series.hpp"
#include "ferrers/toric.hpp"

// JSON report shapes. Big integers are serialized as decimal strings so
// that consumers without 128-bit support cannot silently truncate them.

namespace ferrers {

using json = nlohmann::json;

inline std::string int_str(const Int& v) { return v.str(); }

inline json json_int_list(const std::vector<Int>& values) {
    json list = json::array();
    for (const Int& v : values) list.push_back(int_str(v));
    return list;
}

inline json json_partition(const Partition& p) {
    json list = json::array();
    for (int v : p.parts) list.push_back(v);
    return list;
}

inline json json_decomposition(const std::vector<PrimeComponent>& comps) {
    json list = json::array();
    for (const auto& c : comps) list.push_back({{"x_prefix", c.x_prefix}, {"y_prefix", c.y_prefix}});
    return list;
}

inline json json_ideal_invariants(const IdealInvariants& inv) {
    json j{{"height", inv.height},
           {"projective_dimension", inv.projective_dimension},
           {"regularity", inv.regularity},
           {"unmixed", inv.unmixed},
           {"cohen_macaulay", inv.cohen_macaulay}};
    if (inv.cm_type) j["cm_type"] = *inv.cm_type;
    return j;
}

inline json json_series(const BettiTable& betti, const HilbertSeries& series) {
    return json{{"betti", json_int_list(betti.beta)},
                {"pd", betti.projective_dimension()},
                {"hilbert", {{"numerator", json_int_list(series.numerator)},
                             {"denom_power", series.denom_power}}}};
}

inline json json_face(const CellFace& f) {
    return json{{"S", f.rows}, {"T", f.cols}};
}

inline json json_resolution(const ChainComplex& chain) {
    json maps = json::array();
    for (std::size_t k = 0; k < chain.maps.size(); ++k) {
        json rows = json::array();
        for (const CellFace& f : chain.cells.faces[k]) rows.push_back(json_face(f));
        json cols = json::array();
        for (const CellFace& f : chain.cells.faces[k + 1]) cols.push_back(json_face(f));
        json entries = json::array();
        for (const ChainEntry& e : chain.maps[k])
            entries.push_back(json::array({e.row, e.col, e.sign, e.var.str()}));
        maps.push_back({{"rows", rows}, {"cols", cols}, {"entries", entries}});
    }
    return json{{"f_vector", chain.cells.f_vector}, {"maps", maps}};
}

inline json json_toric(const ToricInvariants& inv) {
    return json{{"h_vector", json_int_list(inv.h_vector)},
                {"multiplicity", int_str(inv.multiplicity)},
                {"dimension", inv.dimension},
                {"toric_ideal_height", inv.ideal_height},
                {"regularity", inv.regularity},
                {"a_invariant", inv.a_invariant},
                {"gorenstein", inv.gorenstein},
                {"ladder", inv.ladder.shape}};
}

inline json json_recognition(const RecognitionResult& r) {
    json j{{"ferrers", r.ferrers}};
    if (r.ferrers) {
        j["row_permutation"] = r.row_perm;
        j["col_permutation"] = r.col_perm;
        j["partition"] = json_partition(*r.lambda);
    } else {
        j["obstruction"] = {{"i", r.obstruction->i},
                            {"i2", r.obstruction->i2},
                            {"j", r.obstruction->j},
                            {"k", r.obstruction->k}};
    }
    return j;
}

}  // namespace ferrers
