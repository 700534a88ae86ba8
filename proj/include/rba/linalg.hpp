#pragma once

#include "rba/exactreal.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rba {

/// Dense row-major matrix over RadicalNumber.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<RadicalNumber>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<RadicalNumber>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    RadicalNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const RadicalNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<RadicalNumber>& data() const { return data_; }

    Matrix transpose() const;
    RadicalNumber trace() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const RadicalNumber& scalar);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const RadicalNumber& s) { return lhs *= s; }
    friend Matrix operator*(const RadicalNumber& s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    Matrix operator-() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RadicalNumber> data_;
};

/// Frobenius pairing (X, Y) = tr(X Yᵀ).
RadicalNumber frobenius(const Matrix& x, const Matrix& y);

class RankError : public DomainError {
public:
    using DomainError::DomainError;
};

class InconsistentSystem : public DomainError {
public:
    InconsistentSystem(std::size_t rhs_column, const std::string& what)
        : DomainError(what), rhs_column_(rhs_column) {}
    std::size_t rhs_column() const { return rhs_column_; }

private:
    std::size_t rhs_column_;
};

/// In-place fraction-free (Bareiss) row echelon reduction. Pivots are the
/// first nonzero entry in each column among the remaining rows. Returns the
/// pivot columns; `row_order` (if given) receives the original row index of
/// every row after swapping.
std::vector<std::size_t> bareiss_eliminate(Matrix& m, std::size_t pivot_cols,
                                           std::vector<std::size_t>* row_order = nullptr);

std::size_t rank(const Matrix& m);

/// Solves a·x = b for a with full column rank. Throws RankError if the
/// columns of a are dependent and InconsistentSystem if some column of b is
/// outside the column space of a.
Matrix solve_exact(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);

/// Factors a once (choosing a maximal set of independent rows) and then
/// solves a·x = b for many right-hand sides.
class ExactSolver {
public:
    explicit ExactSolver(const Matrix& a);

    std::size_t unknowns() const { return a_.cols(); }

    /// Throws InconsistentSystem (rhs_column 0) if b is outside the column space.
    std::vector<RadicalNumber> solve(const std::vector<RadicalNumber>& b) const;

private:
    Matrix a_;
    std::vector<std::size_t> pivot_rows_;
    std::vector<std::size_t> other_rows_;
    Matrix inverse_;
};

}  // namespace rba
