#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acy/report.hpp"
#include "acy/scan.hpp"
#include "acy/torsion.hpp"

namespace acy {

struct VerifyOptions {
    uint64_t seed = 1;
    unsigned jobs = 1;
    bool deep = false;  // raises the scan cap

    uint64_t max_points() const { return deep ? 2000000000ull : 50000000ull; }
};

struct CheckRow {
    std::string name;
    std::string expected;
    std::string actual;
    std::string status;  // "pass" | "fail" | "report-only"
};

struct OrbitPointCheck {
    ProjectivePoint p;
    uint64_t jacobian_rank = 0;
    std::string verdict;  // node verdict, or "singular" when only membership was tested
    bool on_variety = true;
};

struct VerificationReport {
    FamilyId id{};
    Field field;
    uint64_t seed = 0;
    uint32_t attempts = 1;   // parameter draws consumed (last one succeeded)
    bool passed = false;     // no "fail" rows
    std::vector<CheckRow> rows;
    std::vector<std::string> notes;  // resample log
    std::optional<FamilyInstance> instance;
    std::optional<TranslationCertificate> certificate;
    std::optional<StabilizeResult> stabilize;
    std::optional<ScanResult> scan;
    std::vector<OrbitPointCheck> orbit_points;
};

// Draws a family instance from the seeded stream and runs its full check
// battery. Degenerate draws (including genericity violations discovered
// mid-check) are retried with the next draw, at most 10 attempts, then the
// DegenerateParameter error escapes.
VerificationReport run_family_checks(FamilyId id, const Field& F, const VerifyOptions& opt);

Json to_json(const CheckRow& r);
Json to_json(const OrbitPointCheck& o);
Json to_json(const VerificationReport& r);

} // namespace acy
