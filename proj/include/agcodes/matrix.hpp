/**
 * @file matrix.hpp
 * @brief Dense matrices and vectors over a FiniteField with Gaussian elimination.
 *
 * Entries are kept as raw canonical indices; all arithmetic goes through the owning field's tables.
 */
#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace agc {

using Vector = std::vector<FieldElement>;

inline Vector zero_vector(const FiniteField& F, std::size_t n) { return Vector(n, F.zero()); }

inline std::size_t weight(const Vector& v) {
    std::size_t w = 0;
    for (auto& x : v) w += !x.is_zero();
    return w;
}

inline std::size_t hamming_distance(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DomainError("length mismatch");
    std::size_t w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += !(a[i] == b[i]);
    return w;
}

inline Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DomainError("length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DomainError("length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vector operator*(const FieldElement& s, const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

/// Coordinatewise product x ⋆ y.
inline Vector star(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DomainError("length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
    return r;
}

/// Standard bilinear form Σ a_i b_i.
inline FieldElement inner_product(const Vector& a, const Vector& b) {
    if (a.size() != b.size() || a.empty()) {
        if (a.size() != b.size()) throw DomainError("length mismatch");
        throw DomainError("inner product of empty vectors has no field");
    }
    FieldElement s = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<std::size_t> support(const Vector& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back(i);
    return s;
}

class Matrix {
   public:
    Matrix() = default;
    Matrix(FiniteField F, std::size_t rows, std::size_t cols) : F_(std::move(F)), r_(rows), c_(cols), a_(rows * cols, 0) {}

    static Matrix from_rows(const FiniteField& F, const std::vector<Vector>& rows, std::size_t cols = SIZE_MAX) {
        std::size_t nc = cols != SIZE_MAX ? cols : (rows.empty() ? 0 : rows[0].size());
        Matrix M(F, rows.size(), nc);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < nc; ++j) M.set(i, j, rows[i][j]);
        }
        return M;
    }

    static Matrix identity(const FiniteField& F, std::size_t n) {
        Matrix M(F, n, n);
        for (std::size_t i = 0; i < n; ++i) M.a_[i * n + i] = 1;
        return M;
    }

    const FiniteField& field() const { return F_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    FieldElement operator()(std::size_t i, std::size_t j) const { return {F_.data(), a_[i * c_ + j]}; }
    void set(std::size_t i, std::size_t j, const FieldElement& v) {
        a_[i * c_ + j] = (v.data() == F_.data()) ? v.index() : F_.embed(v).index();
    }
    u64 raw(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    u64& raw(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

    Vector row(std::size_t i) const {
        Vector v;
        v.reserve(c_);
        for (std::size_t j = 0; j < c_; ++j) v.emplace_back(F_.data(), a_[i * c_ + j]);
        return v;
    }
    std::vector<Vector> row_list() const {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
        return out;
    }
    Vector column(std::size_t j) const {
        Vector v;
        for (std::size_t i = 0; i < r_; ++i) v.emplace_back(F_.data(), a_[i * c_ + j]);
        return v;
    }

    void append_row(const Vector& v) {
        if (r_ == 0 && c_ == 0) c_ = v.size();
        if (v.size() != c_) throw DomainError("row length mismatch");
        for (auto& x : v) a_.push_back(x.data() == F_.data() ? x.index() : F_.embed(x).index());
        ++r_;
    }

    Matrix transpose() const {
        Matrix T(F_, c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) T.a_[j * r_ + i] = a_[i * c_ + j];
        return T;
    }

    friend Matrix operator*(const Matrix& A, const Matrix& B) {
        if (A.c_ != B.r_) throw DomainError("matrix dimension mismatch");
        const auto* D = A.F_.data();
        Matrix C(A.F_, A.r_, B.c_);
        for (std::size_t i = 0; i < A.r_; ++i)
            for (std::size_t k = 0; k < A.c_; ++k) {
                u64 a = A.a_[i * A.c_ + k];
                if (a == 0) continue;
                for (std::size_t j = 0; j < B.c_; ++j) C.a_[i * C.c_ + j] = D->add(C.a_[i * C.c_ + j], D->mul(a, B.a_[k * B.c_ + j]));
            }
        return C;
    }

    /// M · v^T
    Vector apply(const Vector& v) const {
        if (v.size() != c_) throw DomainError("vector length mismatch");
        const auto* D = F_.data();
        Vector out;
        for (std::size_t i = 0; i < r_; ++i) {
            u64 s = 0;
            for (std::size_t j = 0; j < c_; ++j) s = D->add(s, D->mul(a_[i * c_ + j], v[j].index()));
            out.emplace_back(D, s);
        }
        return out;
    }

    /// v · M
    Vector left_apply(const Vector& v) const {
        if (v.size() != r_) throw DomainError("vector length mismatch");
        const auto* D = F_.data();
        std::vector<u64> acc(c_, 0);
        for (std::size_t i = 0; i < r_; ++i) {
            u64 s = v[i].index();
            if (s == 0) continue;
            for (std::size_t j = 0; j < c_; ++j) acc[j] = D->add(acc[j], D->mul(s, a_[i * c_ + j]));
        }
        Vector out;
        for (u64 x : acc) out.emplace_back(D, x);
        return out;
    }

    Matrix select_columns(const std::vector<std::size_t>& cols) const {
        Matrix M(F_, r_, cols.size());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) M.a_[i * cols.size() + j] = a_[i * c_ + cols[j]];
        return M;
    }

    Matrix select_rows(const std::vector<std::size_t>& rows) const {
        Matrix M(F_, rows.size(), c_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < c_; ++j) M.a_[i * c_ + j] = a_[rows[i] * c_ + j];
        return M;
    }

    /// Reduced row echelon form in place, zero rows removed. Returns pivot columns.
    std::vector<std::size_t> rref() {
        const auto* D = F_.data();
        std::vector<std::size_t> piv;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < c_ && rank < r_; ++col) {
            std::size_t sel = r_;
            for (std::size_t i = rank; i < r_; ++i)
                if (a_[i * c_ + col] != 0) {
                    sel = i;
                    break;
                }
            if (sel == r_) continue;
            if (sel != rank)
                for (std::size_t j = 0; j < c_; ++j) std::swap(a_[sel * c_ + j], a_[rank * c_ + j]);
            u64 inv = D->inv(a_[rank * c_ + col]);
            for (std::size_t j = col; j < c_; ++j) a_[rank * c_ + j] = D->mul(a_[rank * c_ + j], inv);
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == rank) continue;
                u64 f = a_[i * c_ + col];
                if (f == 0) continue;
                u64 nf = D->neg(f);
                for (std::size_t j = col; j < c_; ++j) {
                    u64 v = a_[rank * c_ + j];
                    if (v != 0) a_[i * c_ + j] = D->add(a_[i * c_ + j], D->mul(nf, v));
                }
            }
            piv.push_back(col);
            ++rank;
        }
        r_ = rank;
        a_.resize(r_ * c_);
        return piv;
    }

    std::size_t rank() const {
        Matrix M = *this;
        return M.rref().size();
    }

    /// Rows spanning {x : M x^T = 0}, in RREF.
    Matrix kernel() const {
        Matrix R = *this;
        auto piv = R.rref();
        std::vector<bool> is_piv(c_, false);
        for (auto p : piv) is_piv[p] = true;
        const auto* D = F_.data();
        Matrix K(F_, 0, c_);
        std::vector<Vector> rows;
        for (std::size_t f = 0; f < c_; ++f) {
            if (is_piv[f]) continue;
            std::vector<u64> v(c_, 0);
            v[f] = 1;
            for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = D->neg(R.a_[i * c_ + f]);
            Vector e;
            for (u64 x : v) e.emplace_back(D, x);
            K.append_row(e);
        }
        K.rref();
        return K;
    }

    friend bool operator==(const Matrix& A, const Matrix& B) { return A.r_ == B.r_ && A.c_ == B.c_ && A.a_ == B.a_; }

    /// Vertical concatenation.
    static Matrix stack(const Matrix& A, const Matrix& B) {
        if (A.c_ != B.c_ && A.r_ && B.r_) throw DomainError("column mismatch");
        Matrix M = A.r_ ? A : Matrix(B.F_, 0, B.c_);
        M.a_.insert(M.a_.end(), B.a_.begin(), B.a_.end());
        M.r_ += B.r_;
        return M;
    }

   private:
    FiniteField F_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<u64> a_;
};

enum class SolveStatus { Unique, NoSolution, Ambiguous };

struct SolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    Vector solution;  // a particular solution when one exists
    Matrix kernel;    // homogeneous solutions
};

/// Solve A x^T = b.
inline SolveResult solve(const Matrix& A, const Vector& b) {
    if (b.size() != A.rows()) throw DomainError("right-hand side length mismatch");
    const FiniteField& F = A.field();
    const std::size_t n = A.cols();
    Matrix Aug(F, A.rows(), n + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) Aug.raw(i, j) = A.raw(i, j);
        Aug.set(i, n, b[i]);
    }
    auto piv = Aug.rref();
    SolveResult res;
    if (!piv.empty() && piv.back() == n) {
        res.status = SolveStatus::NoSolution;
        return res;
    }
    res.solution = zero_vector(F, n);
    for (std::size_t i = 0; i < piv.size(); ++i) res.solution[piv[i]] = Aug(i, n);
    res.kernel = A.kernel();
    res.status = res.kernel.rows() == 0 ? SolveStatus::Unique : SolveStatus::Ambiguous;
    return res;
}

}  // namespace agc
