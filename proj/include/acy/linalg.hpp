#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acy/field.hpp"

namespace acy {

// Dense matrix over F_{p^k}. Row-major, value semantics.
class FqMat {
public:
    FqMat() = default;
    FqMat(const FieldSpec* F, size_t rows, size_t cols);

    static FqMat identity(const FieldSpec* F, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpec* field() const { return F_; }

    Fq& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Fq& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    FqMat operator*(const FqMat& o) const;
    FqMat operator+(const FqMat& o) const;
    FqMat operator-(const FqMat& o) const;
    FqMat scaled(const Fq& s) const;
    FqMat transpose() const;
    bool operator==(const FqMat& o) const;
    bool operator!=(const FqMat& o) const { return !(*this == o); }

    bool is_zero() const;
    // Scalar matrix test: returns the scalar when the matrix is s * I.
    std::optional<Fq> as_scalar() const;

private:
    size_t rows_ = 0, cols_ = 0;
    const FieldSpec* F_ = nullptr;
    std::vector<Fq> a_;
};

// In-place reduced row echelon form; returns pivot column indices.
// Deterministic: first nonzero entry scanning rows top-down per column.
std::vector<size_t> rref(FqMat& m);

size_t rank(FqMat m);

// Basis of the right nullspace {x : M x = 0}; deterministic reduced basis,
// one vector per free column in column order.
std::vector<std::vector<Fq>> nullspace(const FqMat& m);

// Basis of {y : y M = 0}.
std::vector<std::vector<Fq>> left_nullspace(const FqMat& m);

FqMat inverse(const FqMat& m);  // throws SingularMatrix

FqMat mat_pow(const FqMat& m, uint64_t e);  // square matrix power, e >= 0

// Solves A x = b; nullopt when inconsistent. Free variables set to zero.
std::optional<std::vector<Fq>> solve(const FqMat& a, const std::vector<Fq>& b);

} // namespace acy
