#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "acy/families.hpp"
#include "acy/singular.hpp"

namespace acy {

struct ScanConfig {
    unsigned jobs = 1;
    uint64_t max_points = 50000000ull;  // refuse larger scans (TooManyPoints)
};

struct SingularPoint {
    ProjectivePoint p;
    NodeReport report;
    char position_class = 0;  // 'A'/'B'/'C' for the type (1,4) families, else 0
};

struct ScanResult {
    uint64_t points_scanned = 0;
    std::vector<SingularPoint> singular;  // canonical enumeration order
};

// |P^{nvars-1}(F_q)| = (q^nvars - 1)/(q - 1), capped at UINT64_MAX.
uint64_t projective_count(uint64_t q, uint32_t nvars);

// Visits every point of P^{nvars-1}(F) exactly once, canonical representatives
// in canonical order: charts by pivot index ascending, free coordinates in
// odometer order over the element encoding (last coordinate fastest).
void enumerate_projective(const Field& F, uint32_t nvars,
                          const std::function<void(const std::vector<Fq>&)>& visit);

// Exhaustive search for points where the generators' Jacobian drops below
// the family codimension. Each hit carries a node-test report. Points appear
// in canonical enumeration order independent of cfg.jobs.
ScanResult find_singular_points(const FamilyInstance& inst, const ScanConfig& cfg);

struct LevelCount {
    uint32_t k = 0;                // extension degree scanned
    uint64_t points_scanned = 0;
    uint64_t singular_found = 0;   // rational singular points at this level
    uint64_t new_points = 0;       // minimal field of definition exactly F_{p^k}
};

struct StabilizeResult {
    std::vector<LevelCount> levels;
    uint64_t cumulative = 0;       // distinct geometric points over all levels
    bool stabilized = false;       // k_max >= 2 and nothing new at the last level
    std::vector<SingularPoint> points;   // distinct points in discovery order
    std::vector<uint32_t> point_level;   // minimal extension degree per point
};

// Scans F_{p^k} for k = 1..k_max over base changes of a prime-field instance,
// counting geometric singular points by minimal field of definition.
StabilizeResult stabilize_count(const FamilyInstance& inst, uint32_t k_max, const ScanConfig& cfg);

} // namespace acy
