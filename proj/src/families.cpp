#include "acy/families.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "acy/errors.hpp"

namespace acy {

namespace {

const FamilyTraits k_traits[] = {
    {FamilyId::T14_octic, "t14", 4, 4, 1, 8, 2, 148, {13, 17}, 2},
    {FamilyId::T14_fiber, "t14fiber", 4, 4, 1, 8, 2, -1, {13, 17}, 2},
    {FamilyId::HM_quintic, "hm", 5, 5, 1, 5, 3, 100, {11, 31}, 1},
    {FamilyId::T16_cubics, "t16", 6, 6, 2, 3, 3, 72, {13, 19}, 1},
    {FamilyId::T17_pfaffian, "t17", 7, 7, 7, 3, 3, 49, {29, 43}, 1},
    {FamilyId::T18_quadrics, "t18", 8, 8, 4, 2, 3, 64, {17, 41}, 1},
    {FamilyId::T110_grassmann, "t110", 10, 10, 10, 2, 3, 100, {11, 31}, 1},
};

Fq draw_fq(const Field& F, SeededRng& rng) { return Fq::decode(F.get(), rng.below(F->order)); }

std::vector<Fq> draw_nonzero_vector(const Field& F, SeededRng& rng, size_t len) {
    for (;;) {
        std::vector<Fq> v;
        v.reserve(len);
        bool nonzero = false;
        for (size_t i = 0; i < len; ++i) {
            v.push_back(draw_fq(F, rng));
            nonzero = nonzero || !v.back().is_zero();
        }
        if (nonzero) return v;
    }
}

ProjectivePoint draw_point(const Field& F, SeededRng& rng, size_t len) {
    return ProjectivePoint::normalized(draw_nonzero_vector(F, rng, len));
}

Poly mono(const FieldSpec* F, uint32_t nvars, std::vector<uint8_t> exps, int64_t c = 1) {
    Fq coeff = Fq(F, c < 0 ? uint64_t(-c) : uint64_t(c));
    if (c < 0) coeff = -coeff;
    return Poly::monomial(F, nvars, exps, coeff);
}

FqMat conjugate(const FqMat& c, const FqMat& c_inv, const FqMat& m) { return c * m * c_inv; }

} // namespace

const FamilyTraits& traits(FamilyId id) {
    for (const FamilyTraits& t : k_traits)
        if (t.id == id) return t;
    fail(Err::BadArgument, "unknown family id");
}

std::optional<FamilyId> family_from_name(const std::string& name) {
    for (const FamilyTraits& t : k_traits)
        if (name == t.name) return t.id;
    return std::nullopt;
}

// ---- type (1,4) -------------------------------------------------------------

FqMat t14_coordinate_change(const FieldSpec* F) {
    // z0 = x0 + x1, z1 = x0 - x2, z2 = x3 + x1, z3 = x3 - x1.
    FqMat c(F, 4, 4);
    const Fq one = Fq::one(F);
    c.at(0, 0) = one;
    c.at(0, 1) = one;
    c.at(1, 0) = one;
    c.at(1, 2) = -one;
    c.at(2, 1) = one;
    c.at(2, 3) = one;
    c.at(3, 1) = -one;
    c.at(3, 3) = one;
    return c;
}

PolyMat t14_matrix_n(const FieldSpec* F) {
    auto e = [&](uint8_t a, uint8_t b, uint8_t c, uint8_t d) {
        return mono(F, 4, {a, b, c, d});
    };
    Poly n00 = e(4, 4, 0, 0) + e(0, 0, 4, 4);
    Poly n01 = (e(2, 2, 0, 0) + e(0, 0, 2, 2)) * (e(0, 2, 0, 2) - e(2, 0, 2, 0));
    Poly n02 = (e(2, 2, 0, 0) - e(0, 0, 2, 2)) * (e(2, 0, 0, 2) - e(0, 2, 2, 0));
    Poly n11 = e(4, 0, 4, 0) + e(0, 4, 0, 4);
    Poly n12 = (e(2, 0, 2, 0) + e(0, 2, 0, 2)) * (e(2, 0, 0, 2) + e(0, 2, 2, 0));
    Poly n22 = e(4, 0, 0, 4) + e(0, 4, 4, 0);

    PolyMat n(4, 4, Poly::zero(F, 4));
    n.at(0, 0) = e(2, 2, 2, 2);
    Poly block[3][3] = {{n00, n01, n02}, {n01, n11, n12}, {n02, n12, n22}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) n.at(i + 1, j + 1) = block[i][j];
    return n;
}

HeisenbergGroup t14_group_z(const Field& F) {
    HeisenbergGroup g = make_heisenberg(F, 4, ShiftConvention::Down);
    FqMat c = t14_coordinate_change(F.get());
    FqMat c_inv = inverse(c);
    g.sigma = conjugate(c, c_inv, g.sigma);
    g.tau = conjugate(c, c_inv, g.tau);
    g.iota = conjugate(c, c_inv, g.iota);
    for (GroupElement& e : g.gens) e.m = conjugate(c, c_inv, e.m);
    g.label = "H4(z)";
    return g;
}

std::vector<Poly> t14_pencil_entries(const FieldSpec* F) {
    PolyMat n = t14_matrix_n(F);
    return {n.at(0, 0), n.at(1, 1), n.at(1, 2), n.at(1, 3),
            n.at(2, 2), n.at(2, 3), n.at(3, 3)};
}

Poly t14_line_polynomial(const FieldSpec* F, const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.c.size() != 4 || b.c.size() != 4) fail(Err::ArityMismatch, "t14 line points live in P^3");
    FqMat m(F, 2, 4);
    for (size_t j = 0; j < 4; ++j) {
        m.at(0, j) = a.c[j];
        m.at(1, j) = b.c[j];
    }
    if (rank(m) != 2) fail(Err::RankDeficientLine, "line points are projectively equal");

    PolyMat n = t14_matrix_n(F);
    // (M N M^t)_{rs} = sum_{i,j} m_ri n_ij m_sj
    PolyMat mn(2, 2, Poly::zero(F, 4));
    for (size_t r = 0; r < 2; ++r)
        for (size_t s = 0; s < 2; ++s) {
            Poly acc = Poly::zero(F, 4);
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 4; ++j)
                    acc += n.at(i, j).scaled(m.at(r, i) * m.at(s, j));
            mn.at(r, s) = acc;
        }
    return mn.at(0, 0) * mn.at(1, 1) - mn.at(0, 1) * mn.at(1, 0);
}

FamilyInstance build_t14(const Field& F, const ProjectivePoint& a, const ProjectivePoint& b) {
    Poly g_l = t14_line_polynomial(F.get(), a, b);
    if (g_l.is_zero()) fail(Err::DegenerateParameter, "t14 line determinant vanishes");

    Poly corner = mono(F.get(), 4, {2, 2, 2, 2});
    Poly octic = g_l.exact_divide(corner);
    if (octic.is_zero() || octic.degree() != 8 || !octic.is_homogeneous())
        fail(Err::DegenerateParameter, "t14 quotient is not a homogeneous octic");

    FamilyInstance inst;
    inst.id = FamilyId::T14_octic;
    inst.field = F;
    inst.nvars = 4;
    inst.dim = 2;
    inst.generators = {octic};
    inst.parameter = a.c;
    inst.parameter.insert(inst.parameter.end(), b.c.begin(), b.c.end());
    inst.nodes.total = 148;
    inst.nodes.count_a = 128;
    inst.nodes.count_b = 16;
    inst.nodes.count_c = 4;
    inst.nodes.orbit_group = "H4(z)";
    inst.group = t14_group_z(F);
    return inst;
}

FamilyInstance build_t14_fiber(const Field& F, const ProjectivePoint& lambda) {
    if (lambda.c.size() != 4) fail(Err::ArityMismatch, "t14 fiber parameter lives in P^3");
    PolyMat n = t14_matrix_n(F.get());
    Poly f = Poly::zero(F.get(), 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) f += n.at(i, j).scaled(lambda.c[i] * lambda.c[j]);
    if (f.is_zero()) fail(Err::DegenerateParameter, "t14 fiber octic vanishes");

    FamilyInstance inst;
    inst.id = FamilyId::T14_fiber;
    inst.field = F;
    inst.nvars = 4;
    inst.dim = 2;
    inst.generators = {f};
    inst.parameter = lambda.c;
    inst.nodes.orbit_group = "H4(z)";
    inst.group = t14_group_z(F);
    return inst;
}

// ---- Horrocks-Mumford -------------------------------------------------------

PolyMat hm_matrix(const FieldSpec* F, const ProjectivePoint& y) {
    if (y.c.size() != 5) fail(Err::ArityMismatch, "hm parameter lives in P^4");
    PolyMat m(5, 5, Poly::zero(F, 5));
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) {
            std::vector<uint8_t> exps(5, 0);
            exps[(i + j) % 5] = 1;
            m.at(i, j) = Poly::monomial(F, 5, exps, y.c[(i + 10 - j) % 5]);
        }
    return m;
}

FamilyInstance build_hm(const Field& F, const ProjectivePoint& y) {
    Poly quintic = determinant(hm_matrix(F.get(), y));
    if (quintic.is_zero() || quintic.degree() != 5)
        fail(Err::DegenerateParameter, "hm determinant is not a quintic");

    FamilyInstance inst;
    inst.id = FamilyId::HM_quintic;
    inst.field = F;
    inst.nvars = 5;
    inst.dim = 3;
    inst.generators = {quintic};
    inst.parameter = y.c;
    inst.nodes.total = 100;
    inst.nodes.orbit_seed = y;
    inst.nodes.orbit_group = "H5+iota";
    inst.group = make_heisenberg(F, 5, ShiftConvention::Up, 1, true);
    return inst;
}

// ---- type (1,6) -------------------------------------------------------------

FamilyInstance build_t16(const Field& F, const std::vector<Fq>& t) {
    if (t.size() != 4) fail(Err::ArityMismatch, "t16 parameter has 4 coordinates");
    const FieldSpec* Fp = F.get();
    Poly f0 = mono(Fp, 6, {3, 0, 0, 0, 0, 0}) + mono(Fp, 6, {0, 0, 3, 0, 0, 0}) +
              mono(Fp, 6, {0, 0, 0, 0, 3, 0});
    Poly f1 = mono(Fp, 6, {0, 2, 0, 0, 1, 0}) + mono(Fp, 6, {1, 0, 0, 2, 0, 0}) +
              mono(Fp, 6, {0, 0, 1, 0, 0, 2});
    Poly f2 = mono(Fp, 6, {0, 1, 1, 1, 0, 0}) + mono(Fp, 6, {0, 0, 0, 1, 1, 1}) +
              mono(Fp, 6, {1, 1, 0, 0, 0, 1});
    Poly f3 = mono(Fp, 6, {1, 0, 1, 0, 1, 0});

    HeisenbergGroup g = make_heisenberg(F, 6, ShiftConvention::Down);
    const Poly f[4] = {f0, f1, f2, f3};
    Poly g0 = Poly::zero(Fp, 6), g1 = Poly::zero(Fp, 6);
    for (size_t i = 0; i < 4; ++i) {
        g0 += f[i].scaled(t[i]);
        g1 += act_on_poly(g.sigma, f[i]).scaled(t[i]);
    }
    if (g0.is_zero() || g1.is_zero() || span_rank({g0, g1}) != 2)
        fail(Err::DegenerateParameter, "t16 cubics do not span a pencil");

    FamilyInstance inst;
    inst.id = FamilyId::T16_cubics;
    inst.field = F;
    inst.nvars = 6;
    inst.dim = 3;
    inst.generators = {g0, g1};
    inst.parameter = t;
    inst.nodes.total = 72;
    inst.nodes.orbit_group = "H6";
    inst.group = g;
    return inst;
}

// ---- type (1,7) -------------------------------------------------------------

PolyMat t17_matrix(const FieldSpec* F, const std::vector<Fq>& y) {
    if (y.size() != 7) fail(Err::ArityMismatch, "t17 parameter has 7 coordinates");
    PolyMat m(7, 7, Poly::zero(F, 7));
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j) {
            size_t xs = (4 * (i + j)) % 7;              // (i+j)/2 mod 7
            size_t ys = (4 * ((i + 7 - j) % 7)) % 7;    // (i-j)/2 mod 7
            std::vector<uint8_t> exps(7, 0);
            exps[xs] = 1;
            m.at(i, j) = Poly::monomial(F, 7, exps, y[ys]);
        }
    return m;
}

FamilyInstance build_t17(const Field& F, const std::vector<Fq>& y_free) {
    ProjectivePoint y = vminus_point(F, 7, y_free);
    PolyMat m = t17_matrix(F.get(), y.c);
    if (!is_alternating(m)) fail(Err::NotAlternating, "t17 matrix lost antisymmetry");
    std::vector<Poly> gens = principal_pfaffians(m);
    for (const Poly& p : gens)
        if (p.is_zero()) fail(Err::DegenerateParameter, "t17 sub-Pfaffian vanishes");

    FamilyInstance inst;
    inst.id = FamilyId::T17_pfaffian;
    inst.field = F;
    inst.nvars = 7;
    inst.dim = 3;
    inst.generators = std::move(gens);
    inst.parameter = y.c;
    inst.nodes.total = 49;
    inst.nodes.orbit_seed = y;
    inst.nodes.orbit_group = "H7";
    inst.group = make_heisenberg(F, 7, ShiftConvention::Down);
    return inst;
}

// ---- type (1,8) -------------------------------------------------------------

PolyMat t18_matrix(const FieldSpec* F, const std::vector<Fq>& y) {
    if (y.size() != 8) fail(Err::ArityMismatch, "t18 parameter has 8 coordinates");
    PolyMat m(4, 4, Poly::zero(F, 8));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            std::vector<uint8_t> e1(8, 0), e2(8, 0);
            e1[(i + j) % 8] = 1;
            e2[(i + j + 4) % 8] = 1;
            m.at(i, j) = Poly::monomial(F, 8, e1, y[(i + 8 - j) % 8]) +
                         Poly::monomial(F, 8, e2, y[(i + 12 - j) % 8]);
        }
    return m;
}

FamilyInstance build_t18(const Field& F, const std::vector<Fq>& y_free) {
    ProjectivePoint y = vminus_point(F, 8, y_free);
    PolyMat m = t18_matrix(F.get(), y.c);
    if (!is_alternating(m)) fail(Err::NotAlternating, "t18 matrix lost antisymmetry");
    Poly q0 = pfaffian(m);
    if (q0.is_zero()) fail(Err::DegenerateParameter, "t18 Pfaffian vanishes");

    HeisenbergGroup g = make_heisenberg(F, 8, ShiftConvention::Down);
    FamilyInstance inst;
    inst.id = FamilyId::T18_quadrics;
    inst.field = F;
    inst.nvars = 8;
    inst.dim = 3;
    inst.parameter = y.c;
    inst.nodes.total = 64;
    inst.nodes.orbit_seed = y;
    inst.nodes.orbit_group = "H8";

    // Translates of the Pfaffian under the index-2 subgroup <sigma^4, tau^4>
    // collapse to scalar multiples of one quadric; translating under
    // {1, sigma, tau, sigma tau} fills out the full four-dimensional space.
    FqMat s4 = mat_pow(g.sigma, 4), t4 = mat_pow(g.tau, 4);
    std::vector<Poly> printed = {q0, act_on_poly(s4, q0), act_on_poly(t4, q0),
                                 act_on_poly(s4 * t4, q0)};
    size_t printed_rank = span_rank(printed);
    if (printed_rank == 4) {
        inst.generators = std::move(printed);
        inst.notes.push_back("quadrics: index-2 subgroup translates");
    } else {
        std::vector<Poly> spread = {q0, act_on_poly(g.sigma, q0), act_on_poly(g.tau, q0),
                                    act_on_poly(g.sigma * g.tau, q0)};
        if (span_rank(spread) != 4)
            fail(Err::DegenerateParameter, "t18 translates do not span four quadrics");
        inst.generators = std::move(spread);
        inst.notes.push_back("quadrics: coset translates (subgroup translates span rank " +
                             std::to_string(printed_rank) + ")");
    }
    inst.group = std::move(g);
    return inst;
}

// ---- type (1,10) ------------------------------------------------------------

PolyMat t110_matrix(const FieldSpec* F, const std::vector<Fq>& y) {
    if (y.size() != 10) fail(Err::ArityMismatch, "t110 parameter has 10 coordinates");
    PolyMat m(5, 5, Poly::zero(F, 10));
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) {
            std::vector<uint8_t> e1(10, 0), e2(10, 0);
            e1[(i + j) % 10] = 1;
            e2[(i + j + 5) % 10] = 1;
            m.at(i, j) = Poly::monomial(F, 10, e1, y[(i + 10 - j) % 10]) +
                         Poly::monomial(F, 10, e2, y[(i + 15 - j) % 10]);
        }
    return m;
}

FamilyInstance build_t110(const Field& F, const std::vector<Fq>& y_free) {
    ProjectivePoint y = vminus_point(F, 10, y_free);
    PolyMat m = t110_matrix(F.get(), y.c);
    if (!is_alternating(m)) fail(Err::NotAlternating, "t110 matrix lost antisymmetry");
    std::vector<Poly> pf = principal_pfaffians(m);

    HeisenbergGroup g = make_heisenberg(F, 10, ShiftConvention::Down);
    FqMat t5 = mat_pow(g.tau, 5);  // diag(+1, -1, +1, ...) block swap
    std::vector<Poly> gens = pf;
    for (const Poly& p : pf) gens.push_back(act_on_poly(t5, p));
    for (const Poly& p : gens)
        if (p.is_zero()) fail(Err::DegenerateParameter, "t110 quadric vanishes");

    FamilyInstance inst;
    inst.id = FamilyId::T110_grassmann;
    inst.field = F;
    inst.nvars = 10;
    inst.dim = 3;
    inst.generators = std::move(gens);
    inst.parameter = y.c;
    inst.nodes.total = 100;
    inst.nodes.orbit_seed = y;
    inst.nodes.orbit_location_confirmed = false;
    inst.nodes.orbit_group = "H10";
    inst.group = std::move(g);
    return inst;
}

// ---- symbolic matrices ------------------------------------------------------

namespace {

// y-coordinate of the antisymmetric pattern as a polynomial in the free
// variables Y_1..Y_m appended after the x-block.
Poly sym_y(const FieldSpec* F, uint32_t nvars, uint32_t n, uint32_t m, size_t idx) {
    idx %= n;
    if (idx == 0 || (n % 2 == 0 && idx == n / 2)) return Poly::zero(F, nvars);
    std::vector<uint8_t> exps(nvars, 0);
    if (idx <= m) {
        exps[nvars - m + idx - 1] = 1;
        return Poly::monomial(F, nvars, exps, Fq::one(F));
    }
    exps[nvars - m + (n - idx) - 1] = 1;
    return Poly::monomial(F, nvars, exps, -Fq::one(F));
}

Poly sym_x(const FieldSpec* F, uint32_t nvars, size_t idx) {
    return Poly::variable(F, nvars, uint32_t(idx));
}

} // namespace

PolyMat t17_matrix_symbolic(const FieldSpec* F) {
    const uint32_t nv = 10;  // x0..x6, Y1..Y3
    PolyMat m(7, 7, Poly::zero(F, nv));
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j)
            m.at(i, j) = sym_x(F, nv, (4 * (i + j)) % 7) * sym_y(F, nv, 7, 3, (4 * ((i + 7 - j) % 7)) % 7);
    return m;
}

PolyMat t18_matrix_symbolic(const FieldSpec* F) {
    const uint32_t nv = 11;  // x0..x7, Y1..Y3
    PolyMat m(4, 4, Poly::zero(F, nv));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            m.at(i, j) = sym_x(F, nv, (i + j) % 8) * sym_y(F, nv, 8, 3, (i + 8 - j) % 8) +
                         sym_x(F, nv, (i + j + 4) % 8) * sym_y(F, nv, 8, 3, (i + 12 - j) % 8);
    return m;
}

PolyMat t110_matrix_symbolic(const FieldSpec* F) {
    const uint32_t nv = 14;  // x0..x9, Y1..Y4
    PolyMat m(5, 5, Poly::zero(F, nv));
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            m.at(i, j) = sym_x(F, nv, (i + j) % 10) * sym_y(F, nv, 10, 4, (i + 10 - j) % 10) +
                         sym_x(F, nv, (i + j + 5) % 10) * sym_y(F, nv, 10, 4, (i + 15 - j) % 10);
    return m;
}

// ---- parameter draws --------------------------------------------------------

FamilyInstance draw_family(FamilyId id, const Field& F, SeededRng& rng) {
    switch (id) {
        case FamilyId::T14_octic: {
            ProjectivePoint a = draw_point(F, rng, 4);
            ProjectivePoint b = draw_point(F, rng, 4);
            while (b == a) b = draw_point(F, rng, 4);
            return build_t14(F, a, b);
        }
        case FamilyId::T14_fiber:
            return build_t14_fiber(F, draw_point(F, rng, 4));
        case FamilyId::HM_quintic:
            return build_hm(F, draw_point(F, rng, 5));
        case FamilyId::T16_cubics:
            return build_t16(F, draw_nonzero_vector(F, rng, 4));
        case FamilyId::T17_pfaffian:
            return build_t17(F, draw_nonzero_vector(F, rng, 3));
        case FamilyId::T18_quadrics:
            return build_t18(F, draw_nonzero_vector(F, rng, 3));
        case FamilyId::T110_grassmann:
            return build_t110(F, draw_nonzero_vector(F, rng, 4));
    }
    fail(Err::BadArgument, "unknown family id");
}

// ---- base change ------------------------------------------------------------

namespace {

Poly embed_poly(const Poly& f, const Field& big) {
    Poly r = Poly::zero(big.get(), f.nvars());
    for (const Term& t : f.terms())
        r += Poly::monomial(big.get(), f.nvars(), t.m.e, embed(t.c, big));
    return r;
}

FqMat embed_mat(const FqMat& m, const Field& big) {
    FqMat r(big.get(), m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = embed(m.at(i, j), big);
    return r;
}

} // namespace

FamilyInstance base_change(const FamilyInstance& inst, const Field& big) {
    if (big->p != inst.field->p) fail(Err::FieldMismatch, "base change must keep the characteristic");
    FamilyInstance r = inst;
    r.field = big;
    for (Poly& g : r.generators) g = embed_poly(g, big);
    for (Fq& c : r.parameter) c = embed(c, big);
    if (r.nodes.orbit_seed) {
        std::vector<Fq> coords;
        for (const Fq& c : r.nodes.orbit_seed->c) coords.push_back(embed(c, big));
        r.nodes.orbit_seed = ProjectivePoint::normalized(std::move(coords));
    }
    r.group.F = big.get();
    r.group.zeta = embed(inst.group.zeta, big);
    r.group.sigma = embed_mat(inst.group.sigma, big);
    r.group.tau = embed_mat(inst.group.tau, big);
    r.group.iota = embed_mat(inst.group.iota, big);
    for (GroupElement& e : r.group.gens) e.m = embed_mat(e.m, big);
    return r;
}

// ---- Horrocks-Mumford base locus -------------------------------------------

LineCheckResult verify_base_locus_lines(const HeisenbergGroup& g, const std::vector<Poly>& quintics) {
    const FieldSpec* F = g.F;
    const Fq one = Fq::one(F);
    std::vector<Fq> pa = {Fq::zero(F), one, Fq::zero(F), Fq::zero(F), -one};
    std::vector<Fq> pb = {Fq::zero(F), Fq::zero(F), one, -one, Fq::zero(F)};

    // Canonical line key: flattened RREF of the 2x5 span matrix.
    std::set<std::vector<uint64_t>> seen;
    LineCheckResult res;
    FqMat sig_i = FqMat::identity(F, 5);
    for (uint32_t i = 0; i < 5; ++i) {
        FqMat m = sig_i;
        for (uint32_t j = 0; j < 5; ++j) {
            FqMat span(F, 2, 5);
            for (size_t v = 0; v < 5; ++v) {
                Fq ra = Fq::zero(F), rb = Fq::zero(F);
                for (size_t w = 0; w < 5; ++w) {
                    ra += m.at(v, w) * pa[w];
                    rb += m.at(v, w) * pb[w];
                }
                span.at(0, v) = ra;
                span.at(1, v) = rb;
            }
            FqMat reduced = span;
            if (rref(reduced).size() != 2) fail(Err::RankDeficientLine, "line translate degenerated");
            std::vector<uint64_t> key;
            key.reserve(10);
            for (size_t r = 0; r < 2; ++r)
                for (size_t v = 0; v < 5; ++v) key.push_back(reduced.at(r, v).encode());
            if (seen.insert(key).second) {
                ++res.line_count;
                // Restrict each quintic to the line (s, t) -> s * row0 + t * row1.
                std::vector<Poly> images;
                images.reserve(5);
                for (size_t v = 0; v < 5; ++v) {
                    Poly lin = Poly::zero(F, 2);
                    lin += Poly::variable(F, 2, 0).scaled(reduced.at(0, v));
                    lin += Poly::variable(F, 2, 1).scaled(reduced.at(1, v));
                    images.push_back(lin);
                }
                bool all_zero = true;
                for (const Poly& q : quintics)
                    if (!q.substitute_map(images).is_zero()) {
                        all_zero = false;
                        break;
                    }
                if (all_zero) ++res.vanishing_lines;
            }
            m = m * g.tau;
        }
        sig_i = sig_i * g.sigma;
    }
    res.all_vanish = res.line_count == 25 && res.vanishing_lines == res.line_count;
    return res;
}

} // namespace acy
