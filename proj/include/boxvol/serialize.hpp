#pragma once

// Stable JSON forms for every report type. Field order is fixed (insertion
// order), big integers and rationals are rendered as strings so nothing is
// rounded, and identical inputs produce byte-identical documents.

#include "boxvol/oracle.hpp"
#include "boxvol/partition.hpp"
#include "boxvol/permutation.hpp"
#include "boxvol/polynomial.hpp"
#include "boxvol/volume.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>

namespace boxvol {

using Json = nlohmann::ordered_json;

inline Json permutation_json(const Permutation& p) { return Json(p.word()); }

inline Json partition_json(const Partition& p) { return Json(p.parts()); }

// Term list in display order (descending grlex); exponents are dense up to
// the largest variable of each monomial, so [2] is v1^2 and [1,1] is v1*v2.
inline Json polynomial_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        std::vector<int> exps(static_cast<std::size_t>(mono.max_var()), 0);
        for (const auto& [v, e] : mono.factors()) exps[static_cast<std::size_t>(v - 1)] = e;
        terms.push_back(Json{{"exponents", exps},
                             {"numerator", numerator(coeff).str()},
                             {"denominator", denominator(coeff).str()}});
    }
    return Json{{"basis", basis_name(p.basis())}, {"text", p.str()}, {"terms", terms}};
}

inline Json weights_json(const Weights& w) {
    Json arr = Json::array();
    for (const Rational& x : w.values()) arr.push_back(rational_str(x));
    return arr;
}

inline Json classification_json(const Classification& c, std::size_t members_limit = 1000) {
    Json classes = Json::array();
    for (const VolumeClass& vc : c.classes) {
        Json jc{{"psi", partition_json(vc.psi)},
                {"size", vc.members.size()},
                {"representative", permutation_json(vc.representative)},
                {"volume_a", polynomial_json(vc.volume_a)},
                {"volume_w", polynomial_json(vc.volume_w)}};
        if (vc.members.size() <= members_limit) {
            Json members = Json::array();
            for (const Permutation& m : vc.members) members.push_back(permutation_json(m));
            jc["members"] = members;
        } else {
            jc["members_elided"] = true;
        }
        classes.push_back(std::move(jc));
    }
    Json out{{"n", c.n},
             {"catalan", c.catalan.str()},
             {"class_count", c.classes.size()},
             {"classes", classes},
             {"total_volume_w", polynomial_json(c.total_volume_w)}};
    if (c.paranoid_checked) out["paranoid_ok"] = c.paranoid_ok;
    return out;
}

inline Json theorem_report_json(const TheoremReport& r, std::size_t members_limit = 1000) {
    Json out{{"n", r.n},
             {"agree", r.agree},
             {"class_count", r.class_count},
             {"catalan", r.catalan.str()},
             {"total_volume_ok", r.total_volume_ok},
             {"box_oracle_checked", r.box_oracle_checked},
             {"box_oracle_ok", r.box_oracle_ok},
             {"ok", r.ok()}};
    auto partition_of_sn = [&](const std::vector<std::vector<Permutation>>& classes) {
        Json jc = Json::array();
        for (const auto& cls : classes) {
            Json members = Json::array();
            for (const Permutation& m : cls) members.push_back(permutation_json(m));
            jc.push_back(std::move(members));
        }
        return jc;
    };
    std::size_t group_size = 0;
    for (const auto& cls : r.by_psi) group_size += cls.size();
    if (group_size <= members_limit) {
        out["by_psi"] = partition_of_sn(r.by_psi);
        out["by_polynomial"] = partition_of_sn(r.by_polynomial);
    } else {
        out["members_elided"] = true;
    }
    return out;
}

inline Json sim_report_json(const SimReport& r) {
    Json out{{"permutation", permutation_json(r.permutation)},
             {"weights", weights_json(r.weights)},
             {"samples", r.samples},
             {"seed", r.seed},
             {"workers", r.workers},
             {"hits", r.hits},
             {"estimate", r.estimate},
             {"std_error", r.std_error},
             {"exact", rational_str(r.exact)},
             {"exact_real", r.exact.convert_to<double>()}};
    const double diff = std::abs(r.estimate - r.exact.convert_to<double>());
    if (diff == 0.0)
        out["z_score"] = 0.0;
    else if (r.std_error > 0.0)
        out["z_score"] = diff / r.std_error;
    else
        out["z_score"] = nullptr;  // impossible deviation at zero variance
    return out;
}

}  // namespace boxvol
