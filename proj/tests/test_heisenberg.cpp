#include "doctest.h"

#include <set>
#include <vector>

#include "acy/errors.hpp"
#include "acy/field.hpp"
#include "acy/heisenberg.hpp"
#include "acy/linalg.hpp"
#include "acy/rng.hpp"

using namespace acy;

namespace {

ProjectivePoint random_point(const Field& F, SeededRng& rng, uint32_t n) {
    for (;;) {
        std::vector<Fq> c;
        bool nonzero = false;
        for (uint32_t i = 0; i < n; ++i) {
            c.push_back(Fq::decode(F.get(), rng.below(F->order)));
            nonzero = nonzero || !c.back().is_zero();
        }
        if (nonzero) return ProjectivePoint::normalized(c);
    }
}

} // namespace

TEST_CASE("normalized representatives are scale-invariant") {
    Field F = make_field(11);
    std::vector<Fq> c = {Fq::zero(F.get()), Fq(F.get(), 3), Fq(F.get(), 7)};
    ProjectivePoint p = ProjectivePoint::normalized(c);
    CHECK(p.c[0].is_zero());
    CHECK(p.c[1].is_one());
    for (uint64_t s = 1; s < 11; ++s) {
        std::vector<Fq> scaled;
        for (const Fq& x : c) scaled.push_back(x * Fq(F.get(), s));
        CHECK(ProjectivePoint::normalized(scaled) == p);
    }
}

TEST_CASE("generator relations at level 5") {
    Field F = make_field(11);
    HeisenbergGroup g = make_heisenberg(F, 5, ShiftConvention::Down);
    FqMat id = FqMat::identity(F.get(), 5);
    CHECK(mat_pow(g.sigma, 5) == id);
    CHECK(mat_pow(g.tau, 5) == id);
    CHECK(g.iota * g.iota == id);
    CHECK(element_order(g.zeta) == 5);
    // Commutator is the central scalar zeta (exact order 5).
    FqMat comm = g.sigma * g.tau * inverse(g.sigma) * inverse(g.tau);
    auto s = comm.as_scalar();
    REQUIRE(s.has_value());
    CHECK(element_order(*s) == 5);
    // iota conjugates both generators to their inverses.
    CHECK(g.iota * g.sigma * g.iota == inverse(g.sigma));
    CHECK(g.iota * g.tau * g.iota == inverse(g.tau));
}

TEST_CASE("shift conventions are mutually inverse") {
    Field F = make_field(17);
    HeisenbergGroup down = make_heisenberg(F, 8, ShiftConvention::Down);
    HeisenbergGroup up = make_heisenberg(F, 8, ShiftConvention::Up);
    CHECK(up.sigma == inverse(down.sigma));
    CHECK(down.sigma * up.sigma == FqMat::identity(F.get(), 8));
}

TEST_CASE("power variants take powered generators") {
    Field F = make_field(17);
    HeisenbergGroup g = make_heisenberg(F, 8, ShiftConvention::Down, 4);
    REQUIRE(g.gens.size() == 2);
    HeisenbergGroup base = make_heisenberg(F, 8, ShiftConvention::Down);
    CHECK(g.gens[0].m == mat_pow(base.sigma, 4));
    CHECK(g.gens[1].m == mat_pow(base.tau, 4));
    Field F11 = make_field(11);
    HeisenbergGroup with_inv = make_heisenberg(F11, 5, ShiftConvention::Down, 1, true);
    REQUIRE(with_inv.gens.size() == 3);
    CHECK(with_inv.gens[2].m == with_inv.iota);
}

TEST_CASE("polynomial action is a left group action realizing the shift") {
    Field F = make_field(11);
    HeisenbergGroup g = make_heisenberg(F, 5, ShiftConvention::Down);
    // sigma: x_i -> x_{i-1} on variables (indices mod 5).
    for (uint32_t i = 0; i < 5; ++i)
        CHECK(act_on_poly(g.sigma, Poly::variable(F.get(), 5, i)) ==
              Poly::variable(F.get(), 5, (i + 4) % 5));
    SeededRng rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<uint8_t> e(5, 0);
        for (int d = 0; d < 4; ++d) e[rng.below(5)]++;
        Poly f = Poly::monomial(F.get(), 5, e, Fq::decode(F.get(), 1 + rng.below(10)));
        f += Poly::variable(F.get(), 5, rng.below(5));
        // Homomorphism: (gh).f = g.(h.f).
        CHECK(act_on_poly(g.sigma * g.tau, f) == act_on_poly(g.sigma, act_on_poly(g.tau, f)));
        CHECK(act_on_poly(g.tau * g.sigma, f) == act_on_poly(g.tau, act_on_poly(g.sigma, f)));
        // Compatible with evaluation: (g.f)(p) = f(g^{-1} p).
        ProjectivePoint p = random_point(F, rng, 5);
        std::vector<Fq> gp(5, Fq::zero(F.get()));
        FqMat inv = inverse(g.sigma);
        for (size_t r = 0; r < 5; ++r)
            for (size_t c = 0; c < 5; ++c) gp[r] += inv.at(r, c) * p.c[c];
        CHECK(act_on_poly(g.sigma, f).evaluate(p.c) == f.evaluate(gp));
    }
}

TEST_CASE("generic orbits have n^2 points, doubled by iota") {
    Field F = make_field(11);
    HeisenbergGroup g = make_heisenberg(F, 5, ShiftConvention::Down);
    SeededRng rng(5);
    ProjectivePoint p = random_point(F, rng, 5);
    std::vector<ProjectivePoint> orb = orbit({g.sigma, g.tau}, p);
    CHECK(orb.size() == 25);
    for (size_t i = 1; i < orb.size(); ++i) CHECK(orb[i - 1] < orb[i]);
    std::set<ProjectivePoint> dedup(orb.begin(), orb.end());
    CHECK(dedup.size() == orb.size());
    // Orbit closure: applying a generator lands inside the orbit.
    for (const ProjectivePoint& q : orb)
        CHECK(dedup.count(apply(g.sigma, q)) + dedup.count(apply(g.tau, q)) == 2);
    CHECK(orbit({g.sigma, g.tau, g.iota}, p).size() == 50);
    bool caught = false;
    try {
        orbit({g.sigma, g.tau}, p, 10);
    } catch (const Error& e) {
        caught = e.code() == Err::TooManyPoints;
    }
    CHECK(caught);
}

TEST_CASE("level-5 invariant quintics form the classical 6-dimensional space") {
    Field F = make_field(11);
    HeisenbergGroup g = make_heisenberg(F, 5, ShiftConvention::Down);
    std::vector<Poly> inv = invariant_subspace({g.sigma, g.tau}, F, 5, 5);
    CHECK(inv.size() == 6);
    CHECK(span_rank(inv) == 6);
    for (const Poly& f : inv) {
        CHECK(act_on_poly(g.sigma, f) == f);
        CHECK(act_on_poly(g.tau, f) == f);
    }
}

TEST_CASE("span_stable returns the exact change-of-basis matrix") {
    Field F = make_field(11);
    HeisenbergGroup g = make_heisenberg(F, 5, ShiftConvention::Down);
    std::vector<Poly> vars;
    for (uint32_t i = 0; i < 5; ++i) vars.push_back(Poly::variable(F.get(), 5, i));
    auto t = span_stable(vars, g.sigma);
    REQUIRE(t.has_value());
    for (size_t j = 0; j < 5; ++j) {
        Poly img = act_on_poly(g.sigma, vars[j]);
        Poly recon = Poly::zero(F.get(), 5);
        for (size_t i = 0; i < 5; ++i) recon += vars[i].scaled(t->at(i, j));
        CHECK(img == recon);
    }
    // {x0, x1} is not sigma-stable.
    CHECK(!span_stable({vars[0], vars[1]}, g.sigma).has_value());
}

TEST_CASE("vminus embeddings satisfy the antisymmetric pattern") {
    Field F = make_field(29);
    std::vector<Fq> abc = {Fq(F.get(), 2), Fq(F.get(), 5), Fq(F.get(), 9)};
    ProjectivePoint p7 = vminus_point(F, 7, abc);
    REQUIRE(p7.c.size() == 7);
    CHECK(p7.c[0].is_zero());
    for (uint32_t i = 1; i < 7; ++i) CHECK(p7.c[7 - i] == -p7.c[i]);
    Field F17 = make_field(17);  // level 8 needs an 8th root of unity
    std::vector<Fq> abc17 = {Fq(F17.get(), 2), Fq(F17.get(), 5), Fq(F17.get(), 9)};
    ProjectivePoint p8 = vminus_point(F17, 8, abc17);
    REQUIRE(p8.c.size() == 8);
    CHECK(p8.c[0].is_zero());
    CHECK(p8.c[4].is_zero());
    for (uint32_t i = 1; i < 8; ++i) CHECK(p8.c[8 - i] == -p8.c[i]);
    // iota fixes such points projectively.
    HeisenbergGroup g8 = make_heisenberg(F17, 8, ShiftConvention::Down, 1, true);
    CHECK(apply(g8.iota, p8) == p8);
    bool caught = false;
    try {
        vminus_point(F17, 8, {Fq(F17.get(), 1)});
    } catch (const Error& e) {
        caught = e.code() == Err::ArityMismatch;
    }
    CHECK(caught);
}
