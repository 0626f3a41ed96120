#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "acy/field.hpp"
#include "acy/verify.hpp"

using namespace acy;

namespace {

const CheckRow* find_row(const VerificationReport& rep, const std::string& name) {
    for (const CheckRow& r : rep.rows)
        if (r.name == name) return &r;
    return nullptr;
}

} // namespace

TEST_CASE("quintic check battery passes and records its evidence") {
    VerifyOptions opt;
    VerificationReport rep = run_family_checks(FamilyId::HM_quintic, make_field(11), opt);
    CHECK(rep.passed);
    CHECK(rep.seed == 1);
    REQUIRE(!rep.rows.empty());
    for (const CheckRow& r : rep.rows) {
        CHECK((r.status == "pass" || r.status == "report-only"));
        CHECK(!r.name.empty());
    }
    // Row names are unique: reports are keyed by them.
    std::set<std::string> names;
    for (const CheckRow& r : rep.rows) names.insert(r.name);
    CHECK(names.size() == rep.rows.size());

    const CheckRow* deg = find_row(rep, "generator_degree");
    REQUIRE(deg != nullptr);
    CHECK(deg->expected == "5 homogeneous");
    CHECK(deg->actual == "5 homogeneous");

    CHECK(rep.instance.has_value());
    CHECK(rep.certificate.has_value());
    CHECK(rep.certificate->certified);
    CHECK(rep.scan.has_value());
    CHECK(!rep.orbit_points.empty());
    for (const OrbitPointCheck& o : rep.orbit_points) {
        CHECK(o.on_variety);
        CHECK(o.verdict == "node");
    }
}

TEST_CASE("degenerate draws are resampled and logged") {
    // Over F_13 with seed 1 the first two cubic-family draws violate
    // genericity; the third succeeds. The report keeps the whole story.
    VerifyOptions opt;
    VerificationReport rep = run_family_checks(FamilyId::T16_cubics, make_field(13), opt);
    CHECK(rep.passed);
    CHECK(rep.attempts == 3);
    CHECK(rep.notes.size() == 2);
    for (const std::string& n : rep.notes)
        CHECK(n.find("resample") != std::string::npos);
}

TEST_CASE("reports serialize to identical bytes across runs") {
    VerifyOptions opt;
    VerificationReport a = run_family_checks(FamilyId::HM_quintic, make_field(11), opt);
    VerificationReport b = run_family_checks(FamilyId::HM_quintic, make_field(11), opt);
    std::string sa = render(to_json(a));
    std::string sb = render(to_json(b));
    CHECK(sa == sb);
    CHECK(!sa.empty());
    CHECK(sa.back() == '\n');
}

TEST_CASE("report JSON carries the documented top-level shape") {
    VerifyOptions opt;
    VerificationReport rep = run_family_checks(FamilyId::T18_quadrics, make_field(17), opt);
    Json j = to_json(rep);
    CHECK(j.at("family").get<std::string>() == "t18");
    CHECK(j.at("field").at("p").get<uint64_t>() == 17);
    CHECK(j.at("field").at("k").get<uint32_t>() == 1);
    CHECK(j.at("seed").get<uint64_t>() == 1);
    CHECK(j.at("passed").get<bool>());
    CHECK(j.at("checks").is_array());
    CHECK(!j.at("checks").empty());
    for (const Json& row : j.at("checks")) {
        CHECK(row.contains("name"));
        CHECK(row.contains("expected"));
        CHECK(row.contains("actual"));
        CHECK(row.contains("status"));
    }
    CHECK(j.contains("translation_certificate"));
    CHECK(j.at("translation_certificate").at("d").get<int>() == 8);
    CHECK(j.at("translation_certificate").at("stabilizer").get<std::string>() == "sigma, tau");
    // Grassmann-only fine structure stays absent for the quadric family.
    CHECK(!j.at("translation_certificate").contains("orbit_quadric_dim"));
}

TEST_CASE("the Grassmann report spells out the true span invariance") {
    VerifyOptions opt;
    VerificationReport rep = run_family_checks(FamilyId::T110_grassmann, make_field(11), opt);
    CHECK(rep.passed);
    const CheckRow* sub = find_row(rep, "span_stable_subgroup");
    REQUIRE(sub != nullptr);
    CHECK(sub->status == "pass");
    const CheckRow* raw = find_row(rep, "span_stable_sigma_generators");
    REQUIRE(raw != nullptr);
    CHECK(raw->status == "report-only");
    CHECK(raw->actual == "false");
    const CheckRow* join = find_row(rep, "sigma_span_enlargement");
    REQUIRE(join != nullptr);
    CHECK(join->actual == "10 -> 15 of 15");
    Json j = to_json(rep);
    const Json& cert = j.at("translation_certificate");
    CHECK(cert.at("span_stable_sigma").get<bool>() == false);
    CHECK(cert.at("sigma_square_stable").get<bool>() == true);
    CHECK(cert.at("orbit_quadric_dim").get<int>() == 15);
    CHECK(cert.at("certified").get<bool>() == true);
}
