#include "acy/torsion.hpp"

#include "acy/errors.hpp"
#include "acy/heisenberg.hpp"
#include "acy/linalg.hpp"
#include "acy/mpoly.hpp"

namespace acy {

namespace {

// Basis of the quadrics vanishing at every given point, as the nullspace of
// the evaluation matrix over the full degree-2 monomial basis.
std::vector<Poly> quadrics_through(const FieldSpec* F, uint32_t nvars,
                                   const std::vector<ProjectivePoint>& pts) {
    std::vector<Monomial> mons = monomial_basis(nvars, 2);
    FqMat cond(F, pts.size(), mons.size());
    for (size_t r = 0; r < pts.size(); ++r)
        for (size_t c = 0; c < mons.size(); ++c) {
            Fq v(F, 1);
            for (uint32_t k = 0; k < nvars; ++k)
                for (uint8_t e = 0; e < mons[c].e[k]; ++e) v = v * pts[r].c[k];
            cond.at(r, c) = v;
        }
    std::vector<Poly> basis;
    for (const std::vector<Fq>& v : nullspace(cond)) {
        Poly q = Poly::zero(F, nvars);
        for (size_t c = 0; c < mons.size(); ++c)
            if (!v[c].is_zero()) q = q + Poly::monomial(F, nvars, mons[c].e, v[c]);
        basis.push_back(q);
    }
    return basis;
}

size_t joint_rank(std::vector<Poly> a, const std::vector<Poly>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return span_rank(a);
}

} // namespace

TranslationCertificate certify_translations(const FamilyInstance& inst, SeededRng& rng) {
    switch (inst.id) {
        case FamilyId::HM_quintic:
        case FamilyId::T17_pfaffian:
        case FamilyId::T18_quadrics:
        case FamilyId::T110_grassmann:
            break;
        default:
            fail(Err::BadArgument, "family carries no translation certificate");
    }
    const FieldSpec* F = inst.field.get();
    const HeisenbergGroup& g = inst.group;
    TranslationCertificate cert;
    cert.d = g.n;
    const uint64_t want = uint64_t(g.n) * g.n;

    cert.span_stable_sigma = span_stable(inst.generators, g.sigma).has_value();
    cert.span_stable_tau = span_stable(inst.generators, g.tau).has_value();
    cert.stabilizer = inst.id == FamilyId::T110_grassmann ? "sigma^2, tau" : "sigma, tau";

    if (inst.id == FamilyId::T110_grassmann && inst.generators.size() == 10) {
        cert.sigma_square_stable =
            span_stable(inst.generators, mat_pow(g.sigma, 2)).has_value();
        std::vector<Poly> blk_a(inst.generators.begin(), inst.generators.begin() + 5);
        std::vector<Poly> blk_b(inst.generators.begin() + 5, inst.generators.end());
        FqMat t5 = mat_pow(g.tau, 5);
        std::vector<Poly> t5a, t5b;
        for (const Poly& p : blk_a) t5a.push_back(act_on_poly(t5, p));
        for (const Poly& p : blk_b) t5b.push_back(act_on_poly(t5, p));
        cert.tau5_block_swap = span_rank(blk_a) == 5 && span_rank(blk_b) == 5 &&
                               joint_rank(blk_b, t5a) == 5 && joint_rank(blk_a, t5b) == 5;
    }

    cert.sigma_power_scalar = mat_pow(g.sigma, g.n).as_scalar().has_value();
    cert.tau_power_scalar = mat_pow(g.tau, g.n).as_scalar().has_value();
    FqMat comm = g.sigma * g.tau * inverse(g.sigma) * inverse(g.tau);
    if (std::optional<Fq> s = comm.as_scalar(); s && !s->is_zero()) {
        cert.commutator_order = element_order(*s);
        cert.abelian_type_ok = cert.commutator_order == g.n;
    }

    const std::vector<FqMat> gens = {g.sigma, g.tau};
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<Fq> coords;
        bool nonzero = false;
        for (uint32_t i = 0; i < inst.nvars; ++i) {
            coords.push_back(Fq::decode(F, rng.below(F->order)));
            nonzero = nonzero || !coords.back().is_zero();
        }
        if (!nonzero) continue;
        uint64_t size = orbit(gens, ProjectivePoint::normalized(coords)).size();
        if (size == want) {
            cert.ambient_orbit = size;
            break;
        }
        cert.ambient_orbit = size;
        cert.notes.push_back("ambient draw " + std::to_string(attempt + 1) + " has orbit " +
                             std::to_string(size) + ", resampled");
    }

    if (inst.nodes.orbit_seed) {
        const ProjectivePoint& y = *inst.nodes.orbit_seed;
        bool on_variety = true;
        for (const Poly& f : inst.generators)
            if (!f.evaluate(y.c).is_zero()) {
                on_variety = false;
                break;
            }
        if (on_variety) {
            cert.variety_point_available = true;
            std::vector<ProjectivePoint> vorb = orbit(gens, y);
            cert.variety_orbit = vorb.size();
            if (inst.id == FamilyId::T110_grassmann) {
                std::vector<Poly> q2 = quadrics_through(F, inst.nvars, vorb);
                std::vector<Poly> joined = inst.generators;
                for (const Poly& p : inst.generators)
                    joined.push_back(act_on_poly(g.sigma, p));
                cert.orbit_quadric_dim = span_rank(q2);
                cert.sigma_join_dim = span_rank(joined);
                cert.sigma_translates_contained =
                    joint_rank(q2, joined) == *cert.orbit_quadric_dim;
            }
        } else {
            cert.notes.push_back("construction parameter does not lie on the variety");
        }
    }

    cert.orbit_sizes_ok = cert.ambient_orbit == want &&
                          (!cert.variety_point_available || cert.variety_orbit == want);
    const bool spans_ok =
        inst.id == FamilyId::T110_grassmann
            ? cert.sigma_square_stable.value_or(false) && cert.span_stable_tau &&
                  cert.tau5_block_swap.value_or(false) &&
                  cert.sigma_translates_contained.value_or(false)
            : cert.span_stable_sigma && cert.span_stable_tau;
    cert.certified = spans_ok && cert.sigma_power_scalar && cert.tau_power_scalar &&
                     cert.abelian_type_ok && cert.orbit_sizes_ok;
    return cert;
}

} // namespace acy
