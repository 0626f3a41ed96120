// Acceptance gate: ten timed criteria, one [PASS]/[FAIL] line each.
// Exits nonzero when any criterion fails its assertions or its time budget.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acy/errors.hpp"
#include "acy/families.hpp"
#include "acy/field.hpp"
#include "acy/heisenberg.hpp"
#include "acy/mpoly.hpp"
#include "acy/rng.hpp"
#include "acy/scan.hpp"
#include "acy/singular.hpp"
#include "acy/torsion.hpp"
#include "acy/verify.hpp"

using namespace acy;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string s(uint64_t v) { return std::to_string(v); }

void need(bool cond, const std::string& what, Outcome& out) {
    if (cond) return;
    out.ok = false;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what;
}

const CheckRow* row(const VerificationReport& rep, const std::string& name) {
    for (const CheckRow& r : rep.rows)
        if (r.name == name) return &r;
    return nullptr;
}

void need_row(const VerificationReport& rep, const std::string& name, const char* status,
              Outcome& out) {
    const CheckRow* r = row(rep, name);
    std::string tag = std::string(traits(rep.id).name) + "/p" + s(rep.field->p) + " " + name;
    if (!r) {
        need(false, tag + " missing", out);
        return;
    }
    need(r->status == status, tag + "=" + r->actual + " (" + r->status + ")", out);
}

VerificationReport battery(FamilyId id, uint64_t p, uint64_t seed, unsigned jobs, Outcome& out) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.jobs = jobs;
    VerificationReport rep = run_family_checks(id, make_field(p), opt);
    need(rep.passed, std::string(traits(id).name) + "/p" + s(p) + " battery reported failure",
         out);
    return rep;
}

Poly random_linear(const Field& F, SeededRng& rng, uint32_t nvars) {
    Poly f = Poly::zero(F.get(), nvars);
    for (uint32_t v = 0; v < nvars; ++v) {
        std::vector<uint8_t> e(nvars, 0);
        e[v] = 1;
        f += Poly::monomial(F.get(), nvars, e, Fq::decode(F.get(), rng.below(F->order)));
    }
    return f;
}

Poly random_poly(const Field& F, SeededRng& rng, uint32_t nvars, uint32_t max_deg,
                 uint32_t terms) {
    Poly f = Poly::zero(F.get(), nvars);
    for (uint32_t t = 0; t < terms; ++t) {
        std::vector<uint8_t> e(nvars, 0);
        uint32_t budget = rng.below(max_deg + 1);
        for (uint32_t d = 0; d < budget; ++d) e[rng.below(nvars)]++;
        f += Poly::monomial(F.get(), nvars, e, Fq::decode(F.get(), rng.below(F->order)));
    }
    return f;
}

PolyMat random_alternating(const Field& F, SeededRng& rng, size_t n, bool scalar_entries) {
    PolyMat m(n, n, Poly::zero(F.get(), 3));
    Poly zero = Poly::zero(F.get(), 3);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = r + 1; c < n; ++c) {
            Poly e = scalar_entries
                         ? Poly::constant(F.get(), 3, Fq::decode(F.get(), rng.below(F->order)))
                         : random_linear(F, rng, 3);
            m.at(r, c) = e;
            m.at(c, r) = zero - e;
        }
    return m;
}

// Independent determinant oracle: first-row Laplace expansion.
Poly laplace_det(const PolyMat& m) {
    const size_t n = m.rows;
    if (n == 1) return m.at(0, 0);
    Poly acc = Poly::zero(m.at(0, 0).field(), m.at(0, 0).nvars());
    for (size_t c = 0; c < n; ++c) {
        PolyMat minor(n - 1, n - 1, acc);
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        }
        Poly term = m.at(0, c) * laplace_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// ---- criteria ---------------------------------------------------------------

Outcome c1_pfaffian_kernel() {
    Outcome out;
    Field F = make_field(101);
    SeededRng rng(101);
    size_t even = 0, odd = 0;
    for (int i = 0; i < 1000 && out.ok; ++i) {
        size_t n = 2 + rng.below(7);  // 2..8
        bool scalar = rng.below(2) == 0;
        PolyMat m = random_alternating(F, rng, n, scalar);
        if (n % 2 == 0) {
            Poly pf = pfaffian(m);
            need(pf * pf == determinant(m), "pf^2 != det at case " + s(i), out);
            ++even;
        } else {
            // Odd alternating: the determinant vanishes and no Pfaffian exists.
            need(determinant(m).is_zero(), "odd det != 0 at case " + s(i), out);
            bool threw = false;
            try {
                pfaffian(m);
            } catch (const Error& e) {
                threw = e.code() == Err::OddSize;
            }
            need(threw, "odd pfaffian not rejected at case " + s(i), out);
            ++odd;
        }
    }
    if (out.ok) out.detail = s(even) + " even + " + s(odd) + " odd matrices";
    return out;
}

Outcome c2_quintic_suite() {
    Outcome out;
    for (uint64_t p : {11ull, 31ull})
        for (uint64_t seed : {1ull, 2ull, 3ull}) {
            VerificationReport rep = battery(FamilyId::HM_quintic, p, seed, 1, out);
            for (const char* name :
                 {"generator_degree", "invariant_quintics_dim", "quintic_in_invariant_space",
                  "base_locus_line_count", "quintics_vanish_on_lines", "seed_orbit_size",
                  "seed_orbit_nodes", "scan_singular_total", "scan_contains_seed_orbit",
                  "singular_orbit_count", "torsion_order", "translation_certificate"})
                need_row(rep, name, "pass", out);
            need(rep.certificate && rep.certificate->d == 5 && rep.certificate->certified,
                 "p" + s(p) + " seed " + s(seed) + " certificate", out);
        }
    if (out.ok) out.detail = "2 fields x 3 seeds";
    return out;
}

Outcome c3_octic_suite() {
    Outcome out;
    std::string totals;
    for (uint64_t p : {13ull, 17ull}) {
        VerificationReport rep = battery(FamilyId::T14_octic, p, 1, 1, out);
        for (const char* name :
             {"generator_degree", "line_polynomial_degree", "corner_division_exact",
              "vertex_nodes", "class_a_count", "class_b_count", "total_nodes", "node_verdicts"})
            need_row(rep, name, "pass", out);
        need(rep.stabilize.has_value(), "p" + s(p) + " missing stabilization data", out);
        if (rep.stabilize) {
            // Every certified point's class must match its coordinate pattern.
            for (const SingularPoint& sp : rep.stabilize->points) {
                size_t nonzero = 0;
                for (const Fq& c : sp.p.c)
                    if (!c.is_zero()) ++nonzero;
                char want = nonzero == 1 ? 'C' : (nonzero < sp.p.c.size() ? 'B' : 'A');
                need(sp.position_class == want, "p" + s(p) + " class mismatch", out);
            }
            if (!totals.empty()) totals += ", ";
            totals += "p" + s(p) + ": " + s(rep.stabilize->cumulative) + "/148";
        }
    }
    if (out.ok) out.detail = totals;  // achieved counts reported, not asserted
    return out;
}

Outcome c4_cubic_suite() {
    Outcome out;
    for (uint64_t p : {13ull, 19ull}) {
        VerificationReport rep = battery(FamilyId::T16_cubics, p, 1, 1, out);
        for (const char* name :
             {"invariant_cubics_dim", "generators_in_invariant_space", "scan_singular_total",
              "node_verdicts", "singular_set_h6_stable"})
            need_row(rep, name, "pass", out);
    }
    if (out.ok) out.detail = "both fields";
    return out;
}

Outcome c5_pfaffian_suite() {
    Outcome out;
    for (uint64_t p : {29ull, 43ull}) {
        VerificationReport rep = battery(FamilyId::T17_pfaffian, p, 1, 1, out);
        for (const char* name :
             {"matrix_alternating_identity", "seed_orbit_size", "generators_vanish_on_orbit",
              "orbit_jacobian_rank", "span_stable_sigma", "span_stable_tau", "span_stable_iota",
              "torsion_order", "translation_certificate"})
            need_row(rep, name, "pass", out);
        need(rep.certificate && rep.certificate->d == 7, "p" + s(p) + " certificate order", out);
    }
    if (out.ok) out.detail = "both fields";
    return out;
}

Outcome c6_quadric_suite() {
    Outcome out;
    for (uint64_t p : {17ull, 41ull}) {
        VerificationReport rep = battery(FamilyId::T18_quadrics, p, 1, 1, out);
        for (const char* name :
             {"independent_quadrics", "invariant_vanishing_dim", "quadrics_span_invariant_space",
              "seed_orbit_size", "orbit_points_singular", "torsion_order",
              "translation_certificate"})
            need_row(rep, name, "pass", out);
        need(rep.certificate && rep.certificate->d == 8, "p" + s(p) + " certificate order", out);
    }
    if (out.ok) out.detail = "both fields";
    return out;
}

Outcome c7_grassmann_suite() {
    Outcome out;
    for (uint64_t p : {11ull, 31ull}) {
        VerificationReport rep = battery(FamilyId::T110_grassmann, p, 1, 1, out);
        for (const char* name :
             {"matrix_alternating_identity", "generator_count", "span_stable_subgroup",
              "block_swap_tau5", "sigma_translates_in_orbit_quadrics", "seed_orbit_size",
              "torsion_order", "translation_certificate"})
            need_row(rep, name, "pass", out);
        // Orbit membership stays report-only for the over-determined system.
        need_row(rep, "orbit_on_variety", "report-only", out);
        need(rep.certificate && rep.certificate->d == 10, "p" + s(p) + " certificate order", out);
    }
    if (out.ok) out.detail = "both fields";
    return out;
}

Outcome c8_oracle_equivalence() {
    Outcome out;
    Field F = make_field(101);
    SeededRng rng(8);
    for (int i = 0; i < 1000 && out.ok; ++i) {
        size_t n = 2 + rng.below(3);  // 2..4
        bool scalar = rng.below(2) == 0;
        PolyMat m(n, n, Poly::zero(F.get(), 3));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                m.at(r, c) = scalar ? Poly::constant(F.get(), 3,
                                                     Fq::decode(F.get(), rng.below(F->order)))
                                    : random_linear(F, rng, 3);
        need(determinant(m) == laplace_det(m), "det oracle mismatch at case " + s(i), out);
    }
    for (int i = 0; i < 1000 && out.ok; ++i) {
        Poly f = random_poly(F, rng, 3, 3, 4), g = random_poly(F, rng, 3, 3, 4);
        while (f.is_zero()) f = random_poly(F, rng, 3, 3, 4);
        while (g.is_zero()) g = random_poly(F, rng, 3, 3, 4);
        Poly h = f * g;
        need(h.exact_divide(f) == g && h.exact_divide(g) == f,
             "divide roundtrip failed at case " + s(i), out);
    }
    for (int i = 0; i < 1000 && out.ok; ++i) {
        Poly f = random_poly(F, rng, 3, 3, 4);
        FqMat a(F.get(), 3, 3), b(F.get(), 3, 3);
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 3; ++c) {
                a.at(r, c) = Fq::decode(F.get(), rng.below(F->order));
                b.at(r, c) = Fq::decode(F.get(), rng.below(F->order));
            }
        need(f.substitute_linear(a).substitute_linear(b) == f.substitute_linear(a * b),
             "substitution composition failed at case " + s(i), out);
    }
    if (out.ok) out.detail = "1000 cases per identity";
    return out;
}

Outcome c9_node_battery() {
    Outcome out;
    Field F = make_field(13);
    Poly x = Poly::variable(F.get(), 4, 0), y = Poly::variable(F.get(), 4, 1);
    Poly z = Poly::variable(F.get(), 4, 2), w = Poly::variable(F.get(), 4, 3);
    std::vector<Fq> origin(4, Fq::zero(F.get()));
    need(node_test_affine({x * w - y * z}, origin, 3).verdict == NodeVerdict::Node,
         "quadric cone not certified", out);
    need(node_test_affine({x * x + y * y + z * z + w * w * w}, origin, 3).verdict ==
             NodeVerdict::NotNode,
         "degenerate cone not rejected", out);
    bool threw = false;
    try {
        node_test_affine({x}, origin, 3);
    } catch (const Error& e) {
        threw = e.code() == Err::NotSingular;
    }
    need(threw, "smooth point not rejected", out);

    // Verdict constancy across a full symmetry orbit of the quintic family.
    Field F11 = make_field(11);
    SeededRng rng(1);
    FamilyInstance inst = draw_family(FamilyId::HM_quintic, F11, rng);
    std::vector<ProjectivePoint> orb =
        orbit({inst.group.sigma, inst.group.tau, inst.group.iota}, *inst.nodes.orbit_seed);
    need(orb.size() == 50, "orbit size " + s(orb.size()), out);
    for (const ProjectivePoint& p : orb) {
        NodeReport r = node_test(inst, p);
        need(r.verdict == NodeVerdict::Node && r.quadric_rank == 4, "orbit verdict varies", out);
    }
    if (out.ok) out.detail = "germ battery + 50-point orbit";
    return out;
}

Outcome c10_determinism() {
    Outcome out;
    auto render_run = [&](unsigned jobs) {
        VerifyOptions opt;
        opt.jobs = jobs;
        return render(to_json(run_family_checks(FamilyId::HM_quintic, make_field(11), opt)));
    };
    std::string first = render_run(1);
    need(first == render_run(1), "repeat run differs", out);
    need(first == render_run(8), "--jobs 8 differs", out);
    need(!first.empty() && first.back() == '\n', "canonical rendering violated", out);
    if (out.ok) out.detail = s(first.size()) + " bytes reproduced";
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int idx;
        const char* label;
        double cap_seconds;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "pfaffian squares to the determinant", 10, c1_pfaffian_kernel},
        {2, "quintic family suite (2 fields x 3 seeds)", 60, c2_quintic_suite},
        {3, "octic family suite with node census", 120, c3_octic_suite},
        {4, "cubic-pencil family suite", 60, c4_cubic_suite},
        {5, "pfaffian-septic family suite", 60, c5_pfaffian_suite},
        {6, "quadric family suite", 60, c6_quadric_suite},
        {7, "grassmann family suite", 60, c7_grassmann_suite},
        {8, "oracle equivalence (det, divide, substitution)", 10, c8_oracle_equivalence},
        {9, "node-test battery and orbit constancy", 5, c9_node_battery},
        {10, "byte-reproducible verification reports", 60, c10_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_budget = secs < c.cap_seconds;
        bool ok = out.ok && in_budget;
        if (!ok) ++failures;
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << c.idx << ". " << c.label;
        if (!out.detail.empty()) line << " -- " << out.detail;
        line << " [" << std::fixed << std::setprecision(1) << secs << "s / " << c.cap_seconds
             << "s]";
        if (!in_budget) line << " OVER TIME BUDGET";
        std::cout << line.str() << "\n" << std::flush;
    }
    std::cout << (failures == 0 ? "acceptance: all 10 criteria passed"
                                : "acceptance: " + s(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
