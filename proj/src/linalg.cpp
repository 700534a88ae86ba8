#include "rba/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace rba {

Matrix::Matrix(std::initializer_list<std::initializer_list<RadicalNumber>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1L;
    return m;
}

Matrix Matrix::diagonal(const std::vector<RadicalNumber>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RadicalNumber Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    RadicalNumber t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const RadicalNumber& scalar) {
    for (auto& x : data_) x = x * scalar;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const RadicalNumber& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const RadicalNumber& b = rhs(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    }
    return out;
}

RadicalNumber frobenius(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix shape mismatch");
    RadicalNumber s;
    for (std::size_t i = 0; i < x.data().size(); ++i) {
        if (!x.data()[i].is_zero() && !y.data()[i].is_zero()) s += x.data()[i] * y.data()[i];
    }
    return s;
}

std::vector<std::size_t> bareiss_eliminate(Matrix& m, std::size_t pivot_cols,
                                           std::vector<std::size_t>* row_order) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> pivots;
    RadicalNumber previous(1L);
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != row) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(m(p, c), m(row, c));
            std::swap(order[p], order[row]);
        }
        const RadicalNumber pivot = m(row, col);
        const RadicalNumber inv_prev = previous.inverse();
        for (std::size_t r = row + 1; r < rows; ++r) {
            const RadicalNumber factor = m(r, col);
            for (std::size_t c = col + 1; c < cols; ++c) {
                RadicalNumber v = pivot * m(r, c);
                if (!factor.is_zero() && !m(row, c).is_zero()) v -= factor * m(row, c);
                m(r, c) = v * inv_prev;
            }
            m(r, col) = RadicalNumber();
        }
        previous = pivot;
        pivots.push_back(col);
        ++row;
    }
    if (row_order != nullptr) *row_order = std::move(order);
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return bareiss_eliminate(work, work.cols()).size();
}

Matrix solve_exact(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: row count mismatch");
    const std::size_t n = a.cols();
    const std::size_t k = b.cols();
    Matrix aug(a.rows(), n + k);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < k; ++c) aug(r, n + c) = b(r, c);
    }
    const auto pivots = bareiss_eliminate(aug, n);
    if (pivots.size() != n) {
        throw RankError("coefficient matrix has rank " + std::to_string(pivots.size()) + " < " +
                        std::to_string(n));
    }
    for (std::size_t r = n; r < aug.rows(); ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            if (!aug(r, n + c).is_zero()) {
                throw InconsistentSystem(c, "right-hand side " + std::to_string(c) +
                                                " is outside the column space");
            }
        }
    }
    Matrix x(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = n; i-- > 0;) {
            RadicalNumber acc = aug(i, n + c);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!aug(i, j).is_zero() && !x(j, c).is_zero()) acc -= aug(i, j) * x(j, c);
            }
            x(i, c) = acc.is_zero() ? acc : acc / aug(i, i);
        }
    }
    return x;
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    try {
        return solve_exact(a, Matrix::identity(a.rows()));
    } catch (const RankError&) {
        throw RankError("matrix is singular");
    }
}

ExactSolver::ExactSolver(const Matrix& a) : a_(a) {
    Matrix work = a;
    std::vector<std::size_t> order;
    const auto pivots = bareiss_eliminate(work, work.cols(), &order);
    if (pivots.size() != a.cols()) {
        throw RankError("columns are linearly dependent (rank " + std::to_string(pivots.size()) + " < " +
                        std::to_string(a.cols()) + ")");
    }
    pivot_rows_.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(a.cols()));
    other_rows_.assign(order.begin() + static_cast<std::ptrdiff_t>(a.cols()), order.end());
    Matrix square(a.cols(), a.cols());
    for (std::size_t i = 0; i < pivot_rows_.size(); ++i)
        for (std::size_t c = 0; c < a.cols(); ++c) square(i, c) = a(pivot_rows_[i], c);
    inverse_ = inverse(square);
}

std::vector<RadicalNumber> ExactSolver::solve(const std::vector<RadicalNumber>& b) const {
    if (b.size() != a_.rows()) throw std::invalid_argument("ExactSolver: rhs length mismatch");
    const std::size_t n = a_.cols();
    std::vector<RadicalNumber> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        const RadicalNumber& bj = b[pivot_rows_[j]];
        if (bj.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (!inverse_(i, j).is_zero()) x[i] += inverse_(i, j) * bj;
        }
    }
    for (const std::size_t r : other_rows_) {
        RadicalNumber acc;
        for (std::size_t c = 0; c < n; ++c) {
            if (!a_(r, c).is_zero() && !x[c].is_zero()) acc += a_(r, c) * x[c];
        }
        if (acc != b[r]) throw InconsistentSystem(0, "vector is outside the column space");
    }
    return x;
}

}  // namespace rba
