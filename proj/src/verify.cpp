#include "acy/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "acy/errors.hpp"
#include "acy/singular.hpp"

namespace acy {

namespace {

std::string s(uint64_t v) { return std::to_string(v); }

void add_row(VerificationReport& rep, const std::string& name, const std::string& expected,
             const std::string& actual, bool ok) {
    rep.rows.push_back({name, expected, actual, ok ? "pass" : "fail"});
}

void add_info(VerificationReport& rep, const std::string& name, const std::string& expected,
              const std::string& actual) {
    rep.rows.push_back({name, expected, actual, "report-only"});
}

// Genericity condition: violation means "this parameter draw is special",
// so the caller's retry loop draws again rather than failing the report.
void require_generic(bool ok, const std::string& what) {
    if (!ok) fail(Err::DegenerateParameter, what);
}

void common_rows(VerificationReport& rep, const FamilyInstance& inst) {
    const FamilyTraits& tr = traits(inst.id);
    add_row(rep, "generator_count", s(tr.gen_count), s(inst.generators.size()),
            inst.generators.size() == tr.gen_count);
    bool deg_ok = true;
    for (const Poly& g : inst.generators)
        deg_ok = deg_ok && g.degree() == int(tr.gen_degree) && g.is_homogeneous();
    add_row(rep, "generator_degree", s(tr.gen_degree) + " homogeneous",
            deg_ok ? s(tr.gen_degree) + " homogeneous" : "mixed", deg_ok);
}

bool in_span(const std::vector<Poly>& basis, const Poly& f) {
    std::vector<Poly> with = basis;
    with.push_back(f);
    return span_rank(with) == span_rank(basis);
}

std::string verdict_tally(const std::vector<OrbitPointCheck>& pts) {
    std::map<std::string, size_t> tally;
    for (const OrbitPointCheck& o : pts) ++tally[o.verdict];
    std::string out;
    for (const auto& [v, n] : tally) {
        if (!out.empty()) out += ",";
        out += v + "=" + std::to_string(n);
    }
    return out.empty() ? "none" : out;
}

// ---- Horrocks-Mumford -------------------------------------------------------

void check_hm(VerificationReport& rep, const FamilyInstance& inst, const VerifyOptions& opt,
              SeededRng& rng) {
    const Field& F = inst.field;
    const HeisenbergGroup& g = inst.group;
    common_rows(rep, inst);

    std::vector<Poly> basis = invariant_subspace({g.sigma, g.tau}, F, 5, 5);
    add_row(rep, "invariant_quintics_dim", "6", s(basis.size()), basis.size() == 6);
    add_row(rep, "quintic_in_invariant_space", "true",
            in_span(basis, inst.generators[0]) ? "true" : "false",
            in_span(basis, inst.generators[0]));

    LineCheckResult lines = verify_base_locus_lines(g, basis);
    add_row(rep, "base_locus_line_count", "25", s(lines.line_count), lines.line_count == 25);
    add_row(rep, "quintics_vanish_on_lines", "25", s(lines.vanishing_lines),
            lines.vanishing_lines == lines.line_count && lines.line_count == 25);

    const ProjectivePoint& y = *inst.nodes.orbit_seed;
    const std::vector<FqMat> full = {g.sigma, g.tau, g.iota};
    std::vector<ProjectivePoint> seed_orbit = orbit(full, y);
    require_generic(seed_orbit.size() == 50, "seed orbit has " + s(seed_orbit.size()) +
                                                 " points, expected 50");
    add_row(rep, "seed_orbit_size", "50", s(seed_orbit.size()), true);

    bool all_node = true;
    for (const ProjectivePoint& p : seed_orbit) {
        NodeReport nr = node_test(inst, p);
        rep.orbit_points.push_back({p, nr.jacobian_rank, to_string(nr.verdict), true});
        all_node = all_node && nr.verdict == NodeVerdict::Node;
    }
    require_generic(all_node, "seed orbit contains a non-node singular point");
    add_row(rep, "seed_orbit_nodes", "node", verdict_tally(rep.orbit_points), all_node);

    ScanConfig cfg{opt.jobs, opt.max_points()};
    ScanResult sc = find_singular_points(inst, cfg);
    require_generic(sc.singular.size() <= 100,
                    "scan found " + s(sc.singular.size()) + " singular points, cap 100");
    add_row(rep, "scan_singular_total", "<=100", s(sc.singular.size()), true);

    std::set<ProjectivePoint> found;
    for (const SingularPoint& sp : sc.singular) found.insert(sp.p);
    bool contains_seed = true;
    for (const ProjectivePoint& p : seed_orbit) contains_seed = contains_seed && found.count(p) > 0;
    add_row(rep, "scan_contains_seed_orbit", "true", contains_seed ? "true" : "false",
            contains_seed);

    std::set<ProjectivePoint> assigned;
    size_t orbit_classes = 0;
    for (const SingularPoint& sp : sc.singular) {
        if (assigned.count(sp.p)) continue;
        ++orbit_classes;
        for (const ProjectivePoint& q : orbit(full, sp.p)) assigned.insert(q);
    }
    require_generic(orbit_classes <= 2,
                    "singular points fall into " + s(orbit_classes) + " orbits, cap 2");
    add_row(rep, "singular_orbit_count", "<=2", s(orbit_classes), true);
    rep.scan = std::move(sc);

    TranslationCertificate cert = certify_translations(inst, rng);
    add_row(rep, "torsion_order", "5", s(cert.d), cert.d == 5);
    add_row(rep, "translation_certificate", "certified",
            cert.certified ? "certified" : "incomplete", cert.certified);
    rep.certificate = std::move(cert);
}

// ---- type (1,4) -------------------------------------------------------------

void check_t14(VerificationReport& rep, const FamilyInstance& inst, const VerifyOptions& opt) {
    const Field& F = inst.field;
    common_rows(rep, inst);

    ProjectivePoint a{{inst.parameter.begin(), inst.parameter.begin() + 4}};
    ProjectivePoint b{{inst.parameter.begin() + 4, inst.parameter.end()}};
    Poly g_l = t14_line_polynomial(F.get(), a, b);
    add_row(rep, "line_polynomial_degree", "16", s(uint64_t(g_l.degree())), g_l.degree() == 16);
    Poly corner2 = Poly::monomial(F.get(), 4, {2, 2, 2, 2}, Fq::one(F.get()));
    bool division_ok = inst.generators[0] * corner2 == g_l;
    add_row(rep, "corner_division_exact", "true", division_ok ? "true" : "false", division_ok);

    ScanConfig cfg{opt.jobs, opt.max_points()};
    std::vector<const SingularPoint*> pts;
    if (F->k == 1) {
        StabilizeResult st = stabilize_count(inst, traits(inst.id).default_ext, cfg);
        rep.stabilize = std::move(st);
        for (const SingularPoint& sp : rep.stabilize->points) pts.push_back(&sp);
        add_info(rep, "count_stabilized", "report-only",
                 rep.stabilize->stabilized ? "true" : "false");
    } else {
        ScanResult sc = find_singular_points(inst, cfg);
        rep.scan = std::move(sc);
        for (const SingularPoint& sp : rep.scan->singular) pts.push_back(&sp);
    }

    size_t na = 0, nb = 0, nc = 0;
    bool all_node = true;
    for (const SingularPoint* sp : pts) {
        if (sp->position_class == 'A') ++na;
        if (sp->position_class == 'B') ++nb;
        if (sp->position_class == 'C') ++nc;
        all_node = all_node && sp->report.verdict == NodeVerdict::Node;
    }
    require_generic(pts.size() <= 148, "found " + s(pts.size()) + " singular points, cap 148");
    require_generic(na <= 128 && nb <= 16, "class caps exceeded (A=" + s(na) + ", B=" + s(nb) + ")");
    require_generic(nc == 4, "coordinate vertices found " + s(nc) + ", expected 4");
    require_generic(all_node, "a singular point failed the node test");
    add_row(rep, "vertex_nodes", "4", s(nc), true);
    add_row(rep, "class_a_count", "<=128", s(na), true);
    add_row(rep, "class_b_count", "<=16", s(nb), true);
    add_row(rep, "total_nodes", "<=148", s(pts.size()), true);
    add_row(rep, "node_verdicts", "node", all_node ? "node" : "mixed", true);
}

void check_t14_fiber(VerificationReport& rep, const FamilyInstance& inst,
                     const VerifyOptions& opt) {
    common_rows(rep, inst);
    ScanConfig cfg{opt.jobs, opt.max_points()};
    ScanResult sc = find_singular_points(inst, cfg);
    add_info(rep, "scan_singular_total", "report-only", s(sc.singular.size()));
    rep.scan = std::move(sc);
}

// ---- type (1,6) -------------------------------------------------------------

void check_t16(VerificationReport& rep, const FamilyInstance& inst, const VerifyOptions& opt) {
    const Field& F = inst.field;
    const HeisenbergGroup& g = inst.group;
    common_rows(rep, inst);

    HeisenbergGroup sub = make_heisenberg(F, 6, ShiftConvention::Down, 2);
    std::vector<FqMat> mats;
    for (const GroupElement& e : sub.gens) mats.push_back(e.m);
    std::vector<Poly> basis = invariant_subspace(mats, F, 6, 3);
    add_row(rep, "invariant_cubics_dim", "8", s(basis.size()), basis.size() == 8);
    bool members = in_span(basis, inst.generators[0]) && in_span(basis, inst.generators[1]);
    add_row(rep, "generators_in_invariant_space", "true", members ? "true" : "false", members);

    bool stable_sigma = span_stable(inst.generators, g.sigma).has_value();
    bool stable_tau = span_stable(inst.generators, g.tau).has_value();
    add_row(rep, "pencil_stable_sigma", "true", stable_sigma ? "true" : "false", stable_sigma);
    add_row(rep, "pencil_stable_tau", "true", stable_tau ? "true" : "false", stable_tau);

    ScanConfig cfg{opt.jobs, opt.max_points()};
    ScanResult sc = find_singular_points(inst, cfg);
    bool all_node = true;
    for (const SingularPoint& sp : sc.singular)
        all_node = all_node && sp.report.verdict == NodeVerdict::Node;
    require_generic(sc.singular.size() <= 72,
                    "scan found " + s(sc.singular.size()) + " singular points, cap 72");
    require_generic(all_node, "a singular point failed the node test");
    add_row(rep, "scan_singular_total", "<=72", s(sc.singular.size()), true);
    add_row(rep, "node_verdicts", "node", all_node ? "node" : "mixed", true);

    std::set<ProjectivePoint> sing;
    for (const SingularPoint& sp : sc.singular) sing.insert(sp.p);
    bool h6_stable = true;
    for (const SingularPoint& sp : sc.singular)
        h6_stable = h6_stable && sing.count(apply(g.sigma, sp.p)) &&
                    sing.count(apply(g.tau, sp.p));
    add_row(rep, "singular_set_h6_stable", "true", h6_stable ? "true" : "false", h6_stable);
    rep.scan = std::move(sc);
}

// ---- type (1,7) -------------------------------------------------------------

void check_t17(VerificationReport& rep, const FamilyInstance& inst, const VerifyOptions& opt,
               SeededRng& rng) {
    (void)opt;
    const Field& F = inst.field;
    const HeisenbergGroup& g = inst.group;
    common_rows(rep, inst);

    bool alt = is_alternating(t17_matrix_symbolic(F.get()));
    add_row(rep, "matrix_alternating_identity", "true", alt ? "true" : "false", alt);

    std::vector<ProjectivePoint> node_orbit = orbit({g.sigma, g.tau}, *inst.nodes.orbit_seed);
    require_generic(node_orbit.size() == 49,
                    "seed orbit has " + s(node_orbit.size()) + " points, expected 49");
    add_row(rep, "seed_orbit_size", "49", s(node_orbit.size()), true);

    bool vanish = true, rank2 = true;
    for (const ProjectivePoint& p : node_orbit) {
        bool on_v = true;
        for (const Poly& q : inst.generators) on_v = on_v && q.evaluate(p.c).is_zero();
        require_generic(on_v, "a seed orbit point misses the variety");
        vanish = vanish && on_v;
        size_t jr = jacobian_rank_at(inst, p);
        rank2 = rank2 && jr == 2;
        NodeReport nr = node_test(inst, p);
        rep.orbit_points.push_back({p, jr, to_string(nr.verdict), on_v});
    }
    require_generic(rank2, "a seed orbit point has unexpected Jacobian rank");
    add_row(rep, "generators_vanish_on_orbit", "true", vanish ? "true" : "false", vanish);
    add_row(rep, "orbit_jacobian_rank", "2", rank2 ? "2" : "mixed", rank2);
    add_info(rep, "orbit_node_verdicts", "report-only", verdict_tally(rep.orbit_points));

    bool st_sigma = span_stable(inst.generators, g.sigma).has_value();
    bool st_tau = span_stable(inst.generators, g.tau).has_value();
    bool st_iota = span_stable(inst.generators, g.iota).has_value();
    add_row(rep, "span_stable_sigma", "true", st_sigma ? "true" : "false", st_sigma);
    add_row(rep, "span_stable_tau", "true", st_tau ? "true" : "false", st_tau);
    add_row(rep, "span_stable_iota", "true", st_iota ? "true" : "false", st_iota);

    TranslationCertificate cert = certify_translations(inst, rng);
    add_row(rep, "torsion_order", "7", s(cert.d), cert.d == 7);
    add_row(rep, "translation_certificate", "certified",
            cert.certified ? "certified" : "incomplete", cert.certified);
    rep.certificate = std::move(cert);
}

// ---- type (1,8) -------------------------------------------------------------

void check_t18(VerificationReport& rep, const FamilyInstance& inst, const VerifyOptions& opt,
               SeededRng& rng) {
    (void)opt;
    const Field& F = inst.field;
    const HeisenbergGroup& g = inst.group;
    common_rows(rep, inst);

    size_t indep = span_rank(inst.generators);
    add_row(rep, "independent_quadrics", "4", s(indep), indep == 4);

    std::vector<ProjectivePoint> node_orbit = orbit({g.sigma, g.tau}, *inst.nodes.orbit_seed);
    require_generic(node_orbit.size() == 64,
                    "seed orbit has " + s(node_orbit.size()) + " points, expected 64");
    add_row(rep, "seed_orbit_size", "64", s(node_orbit.size()), true);

    bool all_singular = true;
    for (const ProjectivePoint& p : node_orbit) {
        bool on_v = true;
        for (const Poly& q : inst.generators) on_v = on_v && q.evaluate(p.c).is_zero();
        require_generic(on_v, "a seed orbit point misses the variety");
        size_t jr = jacobian_rank_at(inst, p);
        all_singular = all_singular && jr < 4;
        NodeReport nr = node_test(inst, p);
        rep.orbit_points.push_back({p, jr, to_string(nr.verdict), on_v});
    }
    require_generic(all_singular, "a seed orbit point is smooth");
    add_row(rep, "orbit_points_singular", "64", s(node_orbit.size()), all_singular);
    add_info(rep, "orbit_node_verdicts", "report-only", verdict_tally(rep.orbit_points));

    HeisenbergGroup sub = make_heisenberg(F, 8, ShiftConvention::Down, 4);
    std::vector<FqMat> mats;
    for (const GroupElement& e : sub.gens) mats.push_back(e.m);
    std::vector<Poly> inv = invariant_subspace(mats, F, 8, 2);
    // invariant quadrics vanishing on the orbit
    FqMat eval(F.get(), node_orbit.size(), inv.size());
    for (size_t r = 0; r < node_orbit.size(); ++r)
        for (size_t c = 0; c < inv.size(); ++c) eval.at(r, c) = inv[c].evaluate(node_orbit[r].c);
    std::vector<std::vector<Fq>> kern = nullspace(eval);
    add_row(rep, "invariant_vanishing_dim", "4", s(kern.size()), kern.size() == 4);

    std::vector<Poly> w_basis;
    for (const std::vector<Fq>& v : kern) {
        Poly w = Poly::zero(F.get(), 8);
        for (size_t c = 0; c < inv.size(); ++c) w += inv[c].scaled(v[c]);
        w_basis.push_back(std::move(w));
    }
    std::vector<Poly> both = inst.generators;
    both.insert(both.end(), w_basis.begin(), w_basis.end());
    bool span_match = indep == 4 && kern.size() == 4 && span_rank(both) == 4;
    add_row(rep, "quadrics_span_invariant_space", "true", span_match ? "true" : "false",
            span_match);

    TranslationCertificate cert = certify_translations(inst, rng);
    add_row(rep, "torsion_order", "8", s(cert.d), cert.d == 8);
    add_row(rep, "translation_certificate", "certified",
            cert.certified ? "certified" : "incomplete", cert.certified);
    rep.certificate = std::move(cert);
}

// ---- type (1,10) ------------------------------------------------------------

void check_t110(VerificationReport& rep, const FamilyInstance& inst, const VerifyOptions& opt,
                SeededRng& rng) {
    (void)opt;
    const Field& F = inst.field;
    const HeisenbergGroup& g = inst.group;
    common_rows(rep, inst);

    bool alt = is_alternating(t110_matrix_symbolic(F.get()));
    add_row(rep, "matrix_alternating_identity", "true", alt ? "true" : "false", alt);

    std::vector<ProjectivePoint> node_orbit = orbit({g.sigma, g.tau}, *inst.nodes.orbit_seed);
    require_generic(node_orbit.size() == 100,
                    "seed orbit has " + s(node_orbit.size()) + " points, expected 100");
    add_row(rep, "seed_orbit_size", "100", s(node_orbit.size()), true);

    size_t on_variety = 0;
    for (const ProjectivePoint& p : node_orbit) {
        bool on_v = true;
        for (const Poly& q : inst.generators) on_v = on_v && q.evaluate(p.c).is_zero();
        if (on_v) ++on_variety;
        rep.orbit_points.push_back({p, 0, "membership-only", on_v});
    }
    add_info(rep, "orbit_on_variety", "report-only", s(on_variety) + "/" + s(node_orbit.size()));

    TranslationCertificate cert = certify_translations(inst, rng);
    // The ten quadrics span a space stable under the index-2 subgroup
    // <sigma^2, tau>, with tau and tau^5 exchanging the two Pfaffian blocks;
    // sigma moves the span but keeps it inside the (sigma-stable) space of
    // all quadrics through the node orbit. That containment, not raw sigma
    // stability of the span, is the exact witness of the symmetry.
    bool st_sub = cert.sigma_square_stable.value_or(false) && cert.span_stable_tau;
    add_row(rep, "span_stable_subgroup", "sigma^2 and tau", st_sub ? "sigma^2 and tau" : "false",
            st_sub);
    bool swap_ok = cert.tau5_block_swap.value_or(false);
    add_row(rep, "block_swap_tau5", "exchanges Pfaffian blocks",
            swap_ok ? "exchanges Pfaffian blocks" : "false", swap_ok);
    bool contained = cert.sigma_translates_contained.value_or(false);
    add_row(rep, "sigma_translates_in_orbit_quadrics", "true", contained ? "true" : "false",
            contained);
    add_info(rep, "sigma_span_enlargement", "report-only",
             "10 -> " + s(cert.sigma_join_dim.value_or(0)) + " of " +
                 s(cert.orbit_quadric_dim.value_or(0)));
    add_info(rep, "span_stable_sigma_generators", "report-only",
             cert.span_stable_sigma ? "true" : "false");
    add_row(rep, "torsion_order", "10", s(cert.d), cert.d == 10);
    add_row(rep, "translation_certificate", "certified",
            cert.certified ? "certified" : "incomplete", cert.certified);
    rep.certificate = std::move(cert);
}

} // namespace

VerificationReport run_family_checks(FamilyId id, const Field& F, const VerifyOptions& opt) {
    SeededRng rng(opt.seed);
    std::vector<std::string> notes;
    for (uint32_t attempt = 1; attempt <= 10; ++attempt) {
        VerificationReport rep;
        rep.id = id;
        rep.field = F;
        rep.seed = opt.seed;
        rep.attempts = attempt;
        rep.notes = notes;
        try {
            FamilyInstance inst = draw_family(id, F, rng);
            switch (id) {
                case FamilyId::T14_octic: check_t14(rep, inst, opt); break;
                case FamilyId::T14_fiber: check_t14_fiber(rep, inst, opt); break;
                case FamilyId::HM_quintic: check_hm(rep, inst, opt, rng); break;
                case FamilyId::T16_cubics: check_t16(rep, inst, opt); break;
                case FamilyId::T17_pfaffian: check_t17(rep, inst, opt, rng); break;
                case FamilyId::T18_quadrics: check_t18(rep, inst, opt, rng); break;
                case FamilyId::T110_grassmann: check_t110(rep, inst, opt, rng); break;
            }
            rep.passed = std::all_of(rep.rows.begin(), rep.rows.end(),
                                     [](const CheckRow& r) { return r.status != "fail"; });
            rep.instance = std::move(inst);
            return rep;
        } catch (const Error& e) {
            switch (e.code()) {
                case Err::DegenerateParameter:
                case Err::NotSingular:
                case Err::PointNotOnVariety:
                case Err::RankDeficientLine:
                    notes.push_back("attempt " + std::to_string(attempt) + ": " + e.what() +
                                    "; resampled");
                    continue;
                default:
                    throw;
            }
        }
    }
    fail(Err::DegenerateParameter, "parameter draws exhausted after 10 attempts");
}

Json to_json(const CheckRow& r) {
    Json j;
    j["name"] = r.name;
    j["expected"] = r.expected;
    j["actual"] = r.actual;
    j["status"] = r.status;
    return j;
}

Json to_json(const OrbitPointCheck& o) {
    Json j;
    j["point"] = to_json(o.p);
    j["jacobian_rank"] = o.jacobian_rank;
    j["verdict"] = o.verdict;
    j["on_variety"] = o.on_variety;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["family"] = traits(r.id).name;
    j["field"] = to_json(*r.field);
    j["seed"] = r.seed;
    j["attempts"] = r.attempts;
    j["passed"] = r.passed;
    Json rows = Json::array();
    for (const CheckRow& row : r.rows) rows.push_back(to_json(row));
    j["checks"] = rows;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (r.instance) j["instance"] = to_json(*r.instance);
    if (r.certificate) j["translation_certificate"] = to_json(*r.certificate);
    if (r.stabilize) j["count_stabilization"] = to_json(*r.stabilize);
    if (r.scan) j["scan"] = to_json(*r.scan);
    if (!r.orbit_points.empty()) {
        Json pts = Json::array();
        for (const OrbitPointCheck& o : r.orbit_points) pts.push_back(to_json(o));
        j["orbit_points"] = pts;
    }
    return j;
}

} // namespace acy
