#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "acy/heisenberg.hpp"
#include "acy/mpoly.hpp"
#include "acy/rng.hpp"

namespace acy {

enum class FamilyId {
    T14_octic,
    T14_fiber,
    HM_quintic,
    T16_cubics,
    T17_pfaffian,
    T18_quadrics,
    T110_grassmann,
};

struct FamilyTraits {
    FamilyId id;
    const char* name;          // CLI spelling
    uint32_t nvars;            // homogeneous coordinates of the ambient space
    uint32_t level;            // Heisenberg index n (order of the required root of unity)
    uint32_t gen_count;
    uint32_t gen_degree;
    int dim;                   // expected dimension of the cut variety
    int expected_total;        // expected number of nodes, -1 when unspecified
    std::array<uint64_t, 2> default_primes;
    uint32_t default_ext;      // default k_max for count stabilization
};

const FamilyTraits& traits(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

struct NodeExpectation {
    int total = -1;
    int count_a = -1, count_b = -1, count_c = -1;  // T14 position classes
    std::optional<ProjectivePoint> orbit_seed;
    bool orbit_location_confirmed = true;  // false: seed orbit membership is report-only
    std::string orbit_group;
};

struct FamilyInstance {
    FamilyId id;
    Field field;
    uint32_t nvars = 0;
    int dim = 0;
    std::vector<Poly> generators;
    std::vector<Fq> parameter;  // flattened construction parameter (y / t / line)
    NodeExpectation nodes;
    HeisenbergGroup group;
    std::vector<std::string> notes;
};

// Parameterized builders. All throw DegenerateParameter for draws that
// break a construction invariant; callers resample from the seeded stream.
FamilyInstance build_hm(const Field& F, const ProjectivePoint& y);
FamilyInstance build_t14(const Field& F, const ProjectivePoint& a, const ProjectivePoint& b);
FamilyInstance build_t14_fiber(const Field& F, const ProjectivePoint& lambda);
FamilyInstance build_t16(const Field& F, const std::vector<Fq>& t);
FamilyInstance build_t17(const Field& F, const std::vector<Fq>& y_free);
FamilyInstance build_t18(const Field& F, const std::vector<Fq>& y_free);
FamilyInstance build_t110(const Field& F, const std::vector<Fq>& y_free);

// Draws the family parameter from the deterministic stream and builds.
FamilyInstance draw_family(FamilyId id, const Field& F, SeededRng& rng);

// Re-reads an instance over an extension of its prime field.
FamilyInstance base_change(const FamilyInstance& inst, const Field& big);

// ---- type (1,4) building blocks -------------------------------------------

// z = C x for the printed coordinate change; det C = 2.
FqMat t14_coordinate_change(const FieldSpec* F);

// The 4x4 block matrix N = diag(z0^2 z1^2 z2^2 z3^2, N0) in z-coordinates.
PolyMat t14_matrix_n(const FieldSpec* F);

// H4 transported to z-coordinates: every matrix conjugated by C.
HeisenbergGroup t14_group_z(const Field& F);

// Distinct entries of N (basis of the f_lambda pencil span).
std::vector<Poly> t14_pencil_entries(const FieldSpec* F);

// det(M N M^t) for the 2x4 matrix M spanned by two points: degree 16,
// divisible by the squared corner product z0^2 z1^2 z2^2 z3^2.
Poly t14_line_polynomial(const FieldSpec* F, const ProjectivePoint& a, const ProjectivePoint& b);

// ---- Moore matrices --------------------------------------------------------

PolyMat hm_matrix(const FieldSpec* F, const ProjectivePoint& y);           // 5x5, (i,j) -> x_{i+j} y_{i-j}
PolyMat t17_matrix(const FieldSpec* F, const std::vector<Fq>& y);          // 7x7 alternating
PolyMat t18_matrix(const FieldSpec* F, const std::vector<Fq>& y);          // 4x4 alternating
PolyMat t110_matrix(const FieldSpec* F, const std::vector<Fq>& y);         // 5x5 alternating

// Symbolic variants over x-variables plus free antisymmetric y-variables,
// for identity checks independent of any numeric parameter draw.
PolyMat t17_matrix_symbolic(const FieldSpec* F);   // ring F[x0..x6, Y1..Y3]
PolyMat t18_matrix_symbolic(const FieldSpec* F);   // ring F[x0..x7, Y1..Y3]
PolyMat t110_matrix_symbolic(const FieldSpec* F);  // ring F[x0..x9, Y1..Y4]

// ---- Horrocks-Mumford base locus -------------------------------------------

struct LineCheckResult {
    size_t line_count = 0;        // distinct lines in the sigma^i tau^j sweep
    size_t vanishing_lines = 0;   // lines on which every given quintic vanishes
    bool all_vanish = false;
};

// Sweeps the 25 translates of {x0 = x1 + x4 = x2 + x3 = 0} and restricts
// each given quintic to each line.
LineCheckResult verify_base_locus_lines(const HeisenbergGroup& g, const std::vector<Poly>& quintics);

} // namespace acy
