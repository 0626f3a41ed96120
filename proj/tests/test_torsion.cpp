#include "doctest.h"

#include "acy/errors.hpp"
#include "acy/families.hpp"
#include "acy/field.hpp"
#include "acy/rng.hpp"
#include "acy/torsion.hpp"

using namespace acy;

namespace {

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

TranslationCertificate certify(FamilyId id, const Field& F, uint64_t seed) {
    SeededRng draw(seed);
    FamilyInstance inst = draw_with_retry(id, F, draw);
    SeededRng pts(seed + 100);
    return certify_translations(inst, pts);
}

} // namespace

TEST_CASE("quintic family: order-5 translations with abelian type (5,5)") {
    TranslationCertificate c = certify(FamilyId::HM_quintic, make_field(11), 1);
    CHECK(c.d == 5);
    CHECK(c.stabilizer == "sigma, tau");
    CHECK(c.span_stable_sigma);
    CHECK(c.span_stable_tau);
    CHECK(c.sigma_power_scalar);
    CHECK(c.tau_power_scalar);
    CHECK(c.commutator_order == 5);
    CHECK(c.abelian_type_ok);
    CHECK(c.ambient_orbit == 25);
    CHECK(c.variety_point_available);
    CHECK(c.variety_orbit == 25);
    CHECK(c.orbit_sizes_ok);
    CHECK(c.certified);
    CHECK(!c.sigma_square_stable.has_value());
    CHECK(!c.orbit_quadric_dim.has_value());
}

TEST_CASE("Pfaffian family: order-7 translations") {
    TranslationCertificate c = certify(FamilyId::T17_pfaffian, make_field(29), 1);
    CHECK(c.d == 7);
    CHECK(c.stabilizer == "sigma, tau");
    CHECK(c.commutator_order == 7);
    CHECK(c.ambient_orbit == 49);
    CHECK(c.certified);
}

TEST_CASE("quadric family: order-8 translations from the coset translates") {
    TranslationCertificate c = certify(FamilyId::T18_quadrics, make_field(17), 1);
    CHECK(c.d == 8);
    CHECK(c.stabilizer == "sigma, tau");
    CHECK(c.span_stable_sigma);
    CHECK(c.span_stable_tau);
    CHECK(c.commutator_order == 8);
    CHECK(c.ambient_orbit == 64);
    CHECK(c.certified);
}

TEST_CASE("Grassmann family: the quadric span is stable only under sigma^2 and tau") {
    for (uint64_t p : {11ull, 31ull}) {
        TranslationCertificate c = certify(FamilyId::T110_grassmann, make_field(p), 1);
        CHECK(c.d == 10);
        CHECK(c.stabilizer == "sigma^2, tau");

        // sigma itself moves the ten printed quadrics.
        CHECK_FALSE(c.span_stable_sigma);
        CHECK(c.span_stable_tau);
        REQUIRE(c.sigma_square_stable.has_value());
        CHECK(*c.sigma_square_stable);

        // tau^5 exchanges the two Pfaffian blocks of five quadrics.
        REQUIRE(c.tau5_block_swap.has_value());
        CHECK(*c.tau5_block_swap);

        // The sigma translates stay inside the space of quadrics through the
        // node orbit; joining them fills that space completely.
        REQUIRE(c.variety_point_available);
        REQUIRE(c.orbit_quadric_dim.has_value());
        CHECK(*c.orbit_quadric_dim == 15);
        REQUIRE(c.sigma_join_dim.has_value());
        CHECK(*c.sigma_join_dim == 15);
        REQUIRE(c.sigma_translates_contained.has_value());
        CHECK(*c.sigma_translates_contained);

        CHECK(c.sigma_power_scalar);
        CHECK(c.tau_power_scalar);
        CHECK(c.commutator_order == 10);
        CHECK(c.abelian_type_ok);
        CHECK(c.ambient_orbit == 100);
        CHECK(c.variety_orbit == 100);
        CHECK(c.orbit_sizes_ok);
        CHECK(c.certified);
    }
}

TEST_CASE("families without a translation certificate are rejected") {
    Field F = make_field(13);
    SeededRng rng(1);
    FamilyInstance inst = draw_with_retry(FamilyId::T16_cubics, F, rng);
    SeededRng pts(2);
    bool caught = false;
    try {
        certify_translations(inst, pts);
    } catch (const Error& e) {
        caught = e.code() == Err::BadArgument;
    }
    CHECK(caught);
}

TEST_CASE("certification is deterministic in the seeds") {
    TranslationCertificate a = certify(FamilyId::HM_quintic, make_field(31), 5);
    TranslationCertificate b = certify(FamilyId::HM_quintic, make_field(31), 5);
    CHECK(a.d == b.d);
    CHECK(a.certified == b.certified);
    CHECK(a.ambient_orbit == b.ambient_orbit);
    CHECK(a.variety_orbit == b.variety_orbit);
    CHECK(a.notes == b.notes);
}
