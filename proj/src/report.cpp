#include "acy/report.hpp"

namespace acy {

Json to_json(const FieldSpec& F) {
    Json j;
    j["p"] = F.p;
    j["k"] = F.k;
    j["order"] = F.order;
    if (F.k >= 2) {
        Json mod = Json::array();
        for (uint32_t i = 0; i <= F.k; ++i) mod.push_back(F.modulus[i]);
        j["modulus"] = mod;
    }
    return j;
}

Json to_json(const Fq& a) {
    Json j = Json::array();
    for (uint32_t i = 0; i < a.spec()->k; ++i) j.push_back(a.coeff(i));
    return j;
}

Json to_json(const Monomial& m) {
    Json j = Json::array();
    for (uint8_t e : m.e) j.push_back(e);
    return j;
}

Json to_json(const Poly& f) {
    Json terms = Json::array();
    for (const Term& t : f.terms()) {
        Json term;
        term["c"] = to_json(t.c);
        term["e"] = to_json(t.m);
        terms.push_back(term);
    }
    Json j;
    j["nvars"] = f.nvars();
    j["degree"] = f.degree();
    j["terms"] = terms;
    return j;
}

Json to_json(const ProjectivePoint& p) {
    Json j = Json::array();
    for (const Fq& c : p.c) j.push_back(to_json(c));
    return j;
}

Json to_json(const FamilyInstance& inst) {
    Json j;
    j["family"] = traits(inst.id).name;
    j["field"] = to_json(*inst.field);
    j["nvars"] = inst.nvars;
    j["dim"] = inst.dim;
    Json param = Json::array();
    for (const Fq& c : inst.parameter) param.push_back(to_json(c));
    j["parameter"] = param;
    Json gens = Json::array();
    for (const Poly& g : inst.generators) gens.push_back(to_json(g));
    j["generators"] = gens;
    Json nodes;
    if (inst.nodes.total >= 0) nodes["total"] = inst.nodes.total;
    if (inst.nodes.count_a >= 0) {
        nodes["class_a"] = inst.nodes.count_a;
        nodes["class_b"] = inst.nodes.count_b;
        nodes["class_c"] = inst.nodes.count_c;
    }
    if (inst.nodes.orbit_seed) {
        nodes["orbit_seed"] = to_json(*inst.nodes.orbit_seed);
        nodes["orbit_location_confirmed"] = inst.nodes.orbit_location_confirmed;
    }
    if (!inst.nodes.orbit_group.empty()) nodes["orbit_group"] = inst.nodes.orbit_group;
    j["expected_nodes"] = nodes;
    Json grp;
    grp["label"] = inst.group.label;
    grp["n"] = inst.group.n;
    grp["zeta"] = to_json(inst.group.zeta);
    grp["scalar_quotient_order"] = inst.group.scalar_quotient_order;
    j["group"] = grp;
    if (!inst.notes.empty()) j["notes"] = inst.notes;
    return j;
}

Json to_json(const NodeReport& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["jacobian_rank"] = r.jacobian_rank;
    j["tangent_dim"] = r.tangent_dim;
    j["quadric_rank"] = r.quadric_rank;
    j["detail"] = r.detail;
    return j;
}

Json to_json(const SingularPoint& sp) {
    Json j;
    j["point"] = to_json(sp.p);
    j["node"] = to_json(sp.report);
    if (sp.position_class) j["position_class"] = std::string(1, sp.position_class);
    return j;
}

Json to_json(const ScanResult& r) {
    Json j;
    j["points_scanned"] = r.points_scanned;
    j["singular_count"] = r.singular.size();
    Json pts = Json::array();
    for (const SingularPoint& sp : r.singular) pts.push_back(to_json(sp));
    j["singular_points"] = pts;
    return j;
}

Json to_json(const StabilizeResult& r) {
    Json j;
    Json levels = Json::array();
    for (const LevelCount& lc : r.levels) {
        Json l;
        l["k"] = lc.k;
        l["points_scanned"] = lc.points_scanned;
        l["singular_found"] = lc.singular_found;
        l["new_points"] = lc.new_points;
        levels.push_back(l);
    }
    j["levels"] = levels;
    j["cumulative"] = r.cumulative;
    j["stabilized"] = r.stabilized;
    Json pts = Json::array();
    for (size_t i = 0; i < r.points.size(); ++i) {
        Json row;
        row["level"] = r.point_level[i];
        row["point"] = to_json(r.points[i].p);
        row["node"] = to_json(r.points[i].report);
        if (r.points[i].position_class)
            row["position_class"] = std::string(1, r.points[i].position_class);
        pts.push_back(row);
    }
    j["points"] = pts;
    return j;
}

Json to_json(const TranslationCertificate& c) {
    Json j;
    j["d"] = c.d;
    j["span_stable_sigma"] = c.span_stable_sigma;
    j["span_stable_tau"] = c.span_stable_tau;
    j["stabilizer"] = c.stabilizer;
    if (c.sigma_square_stable) j["sigma_square_stable"] = *c.sigma_square_stable;
    if (c.tau5_block_swap) j["tau5_block_swap"] = *c.tau5_block_swap;
    if (c.sigma_translates_contained)
        j["sigma_translates_contained"] = *c.sigma_translates_contained;
    if (c.orbit_quadric_dim) j["orbit_quadric_dim"] = *c.orbit_quadric_dim;
    if (c.sigma_join_dim) j["sigma_join_dim"] = *c.sigma_join_dim;
    j["sigma_power_scalar"] = c.sigma_power_scalar;
    j["tau_power_scalar"] = c.tau_power_scalar;
    j["commutator_order"] = c.commutator_order;
    j["abelian_type_ok"] = c.abelian_type_ok;
    j["ambient_orbit"] = c.ambient_orbit;
    j["variety_point_available"] = c.variety_point_available;
    if (c.variety_point_available) j["variety_orbit"] = c.variety_orbit;
    j["orbit_sizes_ok"] = c.orbit_sizes_ok;
    j["certified"] = c.certified;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

} // namespace acy
