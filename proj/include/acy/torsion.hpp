#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acy/families.hpp"
#include "acy/rng.hpp"

namespace acy {

// Evidence that the symmetry group acts on the family by order-d translations
// with abelian type (d, d): the generator span is stable, the d-th powers of
// both generators act by scalars, their commutator is a scalar of exact
// order d, and generic orbits have d^2 points.
struct TranslationCertificate {
    uint32_t d = 0;
    bool span_stable_sigma = false;
    bool span_stable_tau = false;
    // Which generators stabilize the span: "sigma, tau" for the quintic,
    // Pfaffian and quadric families; "sigma^2, tau" for the Grassmann
    // intersection, whose ten quadrics are moved by sigma itself. The
    // optional fields below record the Grassmann fine structure: sigma^2
    // stability, the tau^5 exchange of the two Pfaffian blocks, and where the
    // sigma translates land (inside the space of all quadrics through the
    // node orbit, whose dimension is recorded).
    std::string stabilizer;
    std::optional<bool> sigma_square_stable;
    std::optional<bool> tau5_block_swap;
    std::optional<bool> sigma_translates_contained;
    std::optional<uint64_t> orbit_quadric_dim;
    std::optional<uint64_t> sigma_join_dim;
    bool sigma_power_scalar = false;
    bool tau_power_scalar = false;
    uint64_t commutator_order = 0;
    bool abelian_type_ok = false;
    uint64_t ambient_orbit = 0;
    uint64_t variety_orbit = 0;          // 0 when no on-variety point was available
    bool variety_point_available = false;
    bool orbit_sizes_ok = false;
    bool certified = false;
    std::vector<std::string> notes;
};

// Builds the certificate for the families carrying one (the quintic,
// Pfaffian, quadric and Grassmann families). Draws the generic ambient
// point from the given stream; resamples up to 10 times when a draw has a
// small stabilizer. Throws BadArgument for families without a certificate.
TranslationCertificate certify_translations(const FamilyInstance& inst, SeededRng& rng);

} // namespace acy
