#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "acy/errors.hpp"

namespace acy {

// Description of F_{p^k}, p an odd prime, 1 <= k <= 4. For k >= 2 arithmetic
// is done modulo `modulus`, the canonical irreducible polynomial: the monic
// degree-k polynomial whose non-leading coefficient tuple encodes to the
// smallest base-p integer among irreducibles.
struct FieldSpec {
    uint64_t p = 0;
    uint32_t k = 1;
    uint64_t order = 0;                     // p^k
    std::array<uint64_t, 5> modulus{};      // little-endian, modulus[k] == 1, meaningful for k >= 2

    bool same_as(const FieldSpec& o) const { return p == o.p && k == o.k; }
};

using Field = std::shared_ptr<const FieldSpec>;

// Validates primality, rejects characteristic 2 (quadratic-part extraction
// divides by 2 downstream), selects the canonical modulus for k >= 2.
Field make_field(uint64_t p, uint32_t k = 1);

// Element of F_{p^k}: k residues in [0, p), little-endian in the generator.
class Fq {
public:
    Fq() = default;
    Fq(const FieldSpec* F, uint64_t value);                       // value reduced mod p, embedded as a constant
    Fq(const FieldSpec* F, const std::vector<uint64_t>& coeffs);  // coeffs reduced mod p

    static Fq zero(const FieldSpec* F) { return Fq(F, uint64_t{0}); }
    static Fq one(const FieldSpec* F) { return Fq(F, uint64_t{1}); }

    const FieldSpec* spec() const { return F_; }
    bool is_zero() const;
    bool is_one() const;
    uint64_t coeff(uint32_t i) const { return c_[i]; }

    // Canonical integer encoding sum(c_i p^i); total order used for
    // deterministic element enumeration.
    uint64_t encode() const;
    static Fq decode(const FieldSpec* F, uint64_t code);

    Fq operator-() const;
    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;  // throws DivisionByZero
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }
    bool operator<(const Fq& o) const { return encode() < o.encode(); }

    Fq inv() const;               // throws DivisionByZero on 0
    Fq pow(uint64_t e) const;     // binary exponentiation; 0^0 = 1

    std::string str() const;      // "c" for k = 1, "[c0,...,c_{k-1}]" otherwise

private:
    void check_same_field(const Fq& o) const;

    const FieldSpec* F_ = nullptr;
    std::array<uint64_t, 4> c_{};
};

// Multiplicative order of a nonzero element (divides order - 1).
uint64_t element_order(const Fq& a);

// Deterministic primitive n-th root of unity: smallest base a in canonical
// encoding order with a^((q-1)/n) of exact order n. Throws NoSuchRoot when
// n does not divide q - 1.
Fq primitive_root_of_unity(const Field& F, uint64_t n);

// Coefficient embedding F_p -> F_{p^k} (also accepts matching specs as identity).
Fq embed(const Fq& a, const Field& target);

// True when a^(p^j) = a, i.e. a lies in the fixed field of Frobenius^j
// (F_{p^gcd(j,k)} inside F_{p^k}).
bool element_in_subfield(const Fq& a, uint32_t j);

} // namespace acy
