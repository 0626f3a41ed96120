#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acy/linalg.hpp"
#include "acy/mpoly.hpp"

namespace acy {

// Point of P^{n-1} with the canonical representative: first nonzero
// coordinate scaled to 1.
struct ProjectivePoint {
    std::vector<Fq> c;

    static ProjectivePoint normalized(std::vector<Fq> coords);

    bool operator==(const ProjectivePoint& o) const { return c == o.c; }
    bool operator<(const ProjectivePoint& o) const;
};

ProjectivePoint apply(const FqMat& g, const ProjectivePoint& p);

// Index-shift direction of the generator sigma. Down shifts basis vectors
// e_j -> e_{j-1} (the convention that makes the induced substitution read
// x_i -> x_{i-1}); Up shifts e_j -> e_{j+1}.
enum class ShiftConvention { Down, Up };

struct GroupElement {
    std::string label;
    FqMat m;  // invertible coordinate action
};

// Finite Heisenberg group H_n of level n acting on P^{n-1}, presented by
// its two standard generators plus the involution iota(e_i) = e_{-i}.
struct HeisenbergGroup {
    uint32_t n = 0;
    const FieldSpec* F = nullptr;
    Fq zeta;                          // primitive n-th root of unity used by tau
    FqMat sigma, tau, iota;           // full-group generators (power 1)
    std::vector<GroupElement> gens;   // generators of the requested variant
    uint64_t scalar_quotient_order = 0;
    std::string label;
};

// Variant selection: `power` a takes generators sigma^a, tau^a (the
// subgroups written <sigma^2,tau^2>, <sigma^4,tau^4>); with_iota appends
// iota to the generator list.
HeisenbergGroup make_heisenberg(const Field& F, uint32_t n, ShiftConvention conv,
                                uint32_t power = 1, bool with_iota = false);

// Left action on polynomials: g.f = f composed with g^{-1}, so
// (gh).f = g.(h.f). For the shift-Down convention this realizes the
// substitution rule sigma: x_i -> x_{i-1}.
Poly act_on_poly(const FqMat& g, const Poly& f);

// Orbit closure of a point under the listed matrices; sorted canonical
// representatives. `cap` guards against runaway closures.
std::vector<ProjectivePoint> orbit(const std::vector<FqMat>& gens, const ProjectivePoint& start,
                                   size_t cap = 1u << 20);

// Basis of the degree-d forms literally fixed by every listed matrix.
std::vector<Poly> invariant_subspace(const std::vector<FqMat>& gens, const Field& F,
                                     uint32_t nvars, uint32_t degree);

// When every g-translate of the given forms lies back in their span,
// returns T with act(g, gens[j]) = sum_i T(i,j) gens[i]; nullopt otherwise.
std::optional<FqMat> span_stable(const std::vector<Poly>& gens, const FqMat& g);

// Embeds free coordinates (y_1, ..., y_m) into the antisymmetric pattern
// y_{-i} = -y_i (indices mod n): y_0 = 0, and y_{n/2} = 0 for even n.
// m = (n-1)/2 for odd n, n/2 - 1 for even n.
ProjectivePoint vminus_point(const Field& F, uint32_t n, const std::vector<Fq>& free_coords);

} // namespace acy
