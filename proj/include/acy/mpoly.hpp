#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "acy/field.hpp"
#include "acy/linalg.hpp"

namespace acy {

// Exponent vector, one 8-bit slot per variable.
struct Monomial {
    std::vector<uint8_t> e;

    uint32_t degree() const {
        uint32_t d = 0;
        for (uint8_t x : e) d += x;
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool divides(const Monomial& o) const;
};

// Graded-lexicographic comparison (total degree first, then lex with
// variable 0 most significant). The one global order for the project.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

struct Term {
    Monomial m;
    Fq c;
};

// Sparse multivariate polynomial in canonical form: terms sorted in
// descending graded-lex order, no zero coefficients, no duplicate monomials.
class Poly {
public:
    Poly() = default;
    Poly(const FieldSpec* F, uint32_t nvars) : F_(F), nvars_(nvars) {}

    static Poly zero(const FieldSpec* F, uint32_t nvars) { return Poly(F, nvars); }
    static Poly constant(const FieldSpec* F, uint32_t nvars, const Fq& c);
    static Poly variable(const FieldSpec* F, uint32_t nvars, uint32_t i);
    static Poly monomial(const FieldSpec* F, uint32_t nvars, const std::vector<uint8_t>& exps,
                         const Fq& c);

    const FieldSpec* field() const { return F_; }
    uint32_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;  // total degree, -1 for the zero polynomial
    bool is_homogeneous() const;
    const Term& leading_term() const;  // requires nonzero
    Fq coeff(const Monomial& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Fq& s) const;
    Poly pow(uint32_t e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Fq evaluate(const std::vector<Fq>& point) const;

    // Formal partial derivative; characteristic-p cancellation drops terms
    // whose exponent is a multiple of p.
    Poly derivative(uint32_t var) const;

    // Simultaneous substitution x_i -> images[i]; images live in a common
    // ring (same field, same variable count).
    Poly substitute_map(const std::vector<Poly>& images) const;

    // f(A x): variable i is replaced by the linear form given by row i of A.
    Poly substitute_linear(const FqMat& a) const;

    // Pin one variable to a value; the variable slot stays (exponent 0).
    Poly substitute_var(uint32_t var, const Fq& value) const;

    // Exact quotient; throws NotDivisible when no polynomial quotient exists.
    Poly exact_divide(const Poly& divisor) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void canonicalize();

    const FieldSpec* F_ = nullptr;
    uint32_t nvars_ = 0;
    std::vector<Term> t_;
};

// All monomials of exact total degree d in n variables, descending grlex.
std::vector<Monomial> monomial_basis(uint32_t nvars, uint32_t degree);

// Rank of the coefficient matrix of the given polynomials over the union
// of their monomials (the dimension of their linear span).
size_t span_rank(const std::vector<Poly>& polys);

// Rectangular matrix of polynomials over a common ring.
struct PolyMat {
    size_t rows = 0, cols = 0;
    std::vector<Poly> a;

    PolyMat() = default;
    PolyMat(size_t r, size_t c, const Poly& fill) : rows(r), cols(c), a(r * c, fill) {}

    Poly& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Poly& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

bool is_alternating(const PolyMat& m);  // skew-symmetric with zero diagonal

// Determinant by minor expansion memoized on column subsets.
Poly determinant(const PolyMat& m);

// Pfaffian of an alternating even-size matrix, first-row expansion:
// pf[[0,a],[-a,0]] = a. Throws OddSize / NotAlternating.
Poly pfaffian(const PolyMat& m);

// For odd n: the n Pfaffians of the submatrices deleting row and column i,
// in index order, signs fixed +1. Throws EvenSize / NotAlternating.
std::vector<Poly> principal_pfaffians(const PolyMat& m);

} // namespace acy
