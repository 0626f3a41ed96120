#include "acy/linalg.hpp"

#include <algorithm>

namespace acy {

FqMat::FqMat(const FieldSpec* F, size_t rows, size_t cols)
    : rows_(rows), cols_(cols), F_(F), a_(rows * cols, Fq::zero(F)) {}

FqMat FqMat::identity(const FieldSpec* F, size_t n) {
    FqMat m(F, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Fq::one(F);
    return m;
}

FqMat FqMat::operator*(const FqMat& o) const {
    if (cols_ != o.rows_) fail(Err::ShapeMismatch, "matrix product shape mismatch");
    FqMat r(F_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Fq& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

FqMat FqMat::operator+(const FqMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::ShapeMismatch, "matrix sum shape mismatch");
    FqMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

FqMat FqMat::operator-(const FqMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::ShapeMismatch, "matrix difference shape mismatch");
    FqMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

FqMat FqMat::scaled(const Fq& s) const {
    FqMat r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

FqMat FqMat::transpose() const {
    FqMat r(F_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool FqMat::operator==(const FqMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool FqMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Fq& v) { return v.is_zero(); });
}

std::optional<Fq> FqMat::as_scalar() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    Fq s = at(0, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j) {
                if (at(i, j) != s) return std::nullopt;
            } else if (!at(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    return s;
}

std::vector<size_t> rref(FqMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Fq inv = m.at(row, col).inv();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Fq f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(FqMat m) { return rref(m).size(); }

std::vector<std::vector<Fq>> nullspace(const FqMat& m) {
    FqMat r = m;
    std::vector<size_t> pivots = rref(r);
    const FieldSpec* F = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Fq>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fq> v(m.cols(), Fq::zero(F));
        v[free] = Fq::one(F);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Fq>> left_nullspace(const FqMat& m) { return nullspace(m.transpose()); }

FqMat inverse(const FqMat& m) {
    if (m.rows() != m.cols()) fail(Err::ShapeMismatch, "inverse of non-square matrix");
    size_t n = m.rows();
    const FieldSpec* F = m.field();
    FqMat aug(F, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Fq::one(F);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        fail(Err::SingularMatrix, "matrix is singular");
    FqMat r(F, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

FqMat mat_pow(const FqMat& m, uint64_t e) {
    if (m.rows() != m.cols()) fail(Err::ShapeMismatch, "mat_pow needs a square matrix");
    FqMat r = FqMat::identity(m.field(), m.rows());
    FqMat b = m;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::optional<std::vector<Fq>> solve(const FqMat& a, const std::vector<Fq>& b) {
    if (b.size() != a.rows()) fail(Err::ShapeMismatch, "solve dimension mismatch");
    const FieldSpec* F = a.field();
    FqMat aug(F, a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
    std::vector<Fq> x(a.cols(), Fq::zero(F));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

} // namespace acy
