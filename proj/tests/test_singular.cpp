#include "doctest.h"

#include <vector>

#include "acy/errors.hpp"
#include "acy/families.hpp"
#include "acy/field.hpp"
#include "acy/heisenberg.hpp"
#include "acy/mpoly.hpp"
#include "acy/rng.hpp"
#include "acy/singular.hpp"

using namespace acy;

namespace {

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

FamilyInstance draw_with_retry(FamilyId id, const Field& F, SeededRng& rng) {
    for (int attempt = 0; attempt < 10; ++attempt) {
        try {
            return draw_family(id, F, rng);
        } catch (const Error& e) {
            if (e.code() != Err::DegenerateParameter) throw;
        }
    }
    fail(Err::DegenerateParameter, "draws exhausted");
}

} // namespace

TEST_CASE("taylor2_at matches the brute shifted expansion") {
    Field F = make_field(13);
    SeededRng rng(21);
    std::vector<uint32_t> chart = {0, 1, 2};
    for (int rep = 0; rep < 30; ++rep) {
        Poly f = random_poly(F, rng, 3, 4, 6);
        std::vector<Fq> pt;
        for (int i = 0; i < 3; ++i) pt.push_back(Fq::decode(F.get(), rng.below(13)));
        Taylor2 t = taylor2_at(f, pt, chart);
        // Oracle: substitute x_i -> p_i + u_i and read coefficients directly.
        std::vector<Poly> images;
        for (uint32_t i = 0; i < 3; ++i)
            images.push_back(Poly::variable(F.get(), 3, i) +
                             Poly::constant(F.get(), 3, pt[i]));
        Poly shifted = f.substitute_map(images);
        CHECK(t.value == f.evaluate(pt));
        CHECK(t.value == shifted.coeff(Monomial{{0, 0, 0}}));
        Fq two = Fq(F.get(), 2);
        for (uint32_t v = 0; v < 3; ++v) {
            std::vector<uint8_t> e(3, 0);
            e[v] = 1;
            CHECK(t.grad[v] == shifted.coeff(Monomial{e}));
            for (uint32_t w = 0; w < 3; ++w) {
                std::vector<uint8_t> e2(3, 0);
                e2[v]++;
                e2[w]++;
                Fq c = shifted.coeff(Monomial{e2});
                if (v == w) {
                    CHECK(t.quad.at(v, v) == c);
                } else {
                    CHECK(t.quad.at(v, w) * two == c);
                    CHECK(t.quad.at(v, w) == t.quad.at(w, v));
                }
            }
        }
    }
}

TEST_CASE("node battery: the quadric cone certifies as a node") {
    Field F = make_field(13);
    // xw - yz = 0 at the origin of A^4: rank-4 quadric, an ordinary double point.
    Poly x = Poly::variable(F.get(), 4, 0), y = Poly::variable(F.get(), 4, 1);
    Poly z = Poly::variable(F.get(), 4, 2), w = Poly::variable(F.get(), 4, 3);
    std::vector<Fq> origin(4, Fq::zero(F.get()));
    NodeReport r = node_test_affine({x * w - y * z}, origin, 3);
    CHECK(r.verdict == NodeVerdict::Node);
    CHECK(r.jacobian_rank == 0);
    CHECK(r.tangent_dim == 4);
    CHECK(r.quadric_rank == 4);
}

TEST_CASE("node battery: a degenerate quadratic cone is not a node") {
    Field F = make_field(13);
    Poly x = Poly::variable(F.get(), 4, 0), y = Poly::variable(F.get(), 4, 1);
    Poly z = Poly::variable(F.get(), 4, 2), w = Poly::variable(F.get(), 4, 3);
    Poly f = x * x + y * y + z * z + w * w * w;
    std::vector<Fq> origin(4, Fq::zero(F.get()));
    NodeReport r = node_test_affine({f}, origin, 3);
    CHECK(r.verdict == NodeVerdict::NotNode);
    CHECK(r.quadric_rank == 3);
}

TEST_CASE("node battery: smooth points raise NotSingular") {
    Field F = make_field(13);
    Poly x = Poly::variable(F.get(), 4, 0);
    std::vector<Fq> origin(4, Fq::zero(F.get()));
    bool caught = false;
    try {
        node_test_affine({x}, origin, 3);
    } catch (const Error& e) {
        caught = e.code() == Err::NotSingular;
    }
    CHECK(caught);
}

TEST_CASE("node battery: plane curve germs") {
    Field F = make_field(13);
    Poly x = Poly::variable(F.get(), 2, 0), y = Poly::variable(F.get(), 2, 1);
    std::vector<Fq> origin(2, Fq::zero(F.get()));
    CHECK(node_test_affine({x * y}, origin, 1).verdict == NodeVerdict::Node);
    CHECK(node_test_affine({x * x + y * y * y}, origin, 1).verdict == NodeVerdict::NotNode);
}

TEST_CASE("points off the variety are rejected") {
    Field F = make_field(11);
    SeededRng rng(2);
    FamilyInstance inst = draw_with_retry(FamilyId::HM_quintic, F, rng);
    // Hunt a point where the quintic does not vanish.
    std::vector<Fq> pt(5, Fq::zero(F.get()));
    pt[0] = Fq::one(F.get());
    while (inst.generators[0].evaluate(pt).is_zero()) pt[4] += Fq::one(F.get());
    bool caught = false;
    try {
        node_test(inst, ProjectivePoint::normalized(pt));
    } catch (const Error& e) {
        caught = e.code() == Err::PointNotOnVariety;
    }
    CHECK(caught);
}

TEST_CASE("verdicts are constant along a symmetry orbit") {
    Field F = make_field(11);
    SeededRng rng(1);
    FamilyInstance inst = draw_with_retry(FamilyId::HM_quintic, F, rng);
    REQUIRE(inst.nodes.orbit_seed.has_value());
    std::vector<FqMat> gens = {inst.group.sigma, inst.group.tau, inst.group.iota};
    std::vector<ProjectivePoint> orb = orbit(gens, *inst.nodes.orbit_seed);
    CHECK(orb.size() == 50);
    for (const ProjectivePoint& p : orb) {
        NodeReport r = node_test(inst, p);
        CHECK(r.verdict == NodeVerdict::Node);
        CHECK(r.jacobian_rank == 0);
        CHECK(r.quadric_rank == 4);
    }
}

TEST_CASE("jacobian rank distinguishes smooth from singular variety points") {
    Field F = make_field(29);
    SeededRng rng(1);
    FamilyInstance inst = draw_with_retry(FamilyId::T17_pfaffian, F, rng);
    REQUIRE(inst.nodes.orbit_seed.has_value());
    // Codimension 3; at a node of the Pfaffian family the rank drops to 2.
    CHECK(jacobian_rank_at(inst, *inst.nodes.orbit_seed) == 2);
}

TEST_CASE("position classes follow the vanishing pattern of the coordinates") {
    Field F = make_field(13);
    auto mk = [&](std::vector<uint64_t> v) {
        std::vector<Fq> c;
        for (uint64_t x : v) c.push_back(Fq(F.get(), x));
        return ProjectivePoint::normalized(c);
    };
    CHECK(classify_t14(mk({1, 0, 0, 0})) == T14Class::C);
    CHECK(classify_t14(mk({0, 0, 1, 0})) == T14Class::C);
    CHECK(classify_t14(mk({1, 5, 0, 0})) == T14Class::B);
    CHECK(classify_t14(mk({1, 2, 3, 0})) == T14Class::B);
    CHECK(classify_t14(mk({1, 2, 3, 4})) == T14Class::A);
    CHECK(t14_class_letter(T14Class::A) == 'A');
    CHECK(t14_class_letter(T14Class::B) == 'B');
    CHECK(t14_class_letter(T14Class::C) == 'C');
}

TEST_CASE("complete intersection nodes on the quadric family") {
    Field F = make_field(17);
    SeededRng rng(3);
    FamilyInstance inst = draw_with_retry(FamilyId::T18_quadrics, F, rng);
    REQUIRE(inst.nodes.orbit_seed.has_value());
    std::vector<ProjectivePoint> orb =
        orbit({inst.group.sigma, inst.group.tau}, *inst.nodes.orbit_seed);
    if (orb.size() == 64) {  // generic draw; degenerate seeds covered elsewhere
        NodeReport r = node_test(inst, orb.front());
        CHECK(r.verdict == NodeVerdict::Node);
        CHECK(r.detail.find("complete intersection") != std::string::npos);
    }
}
