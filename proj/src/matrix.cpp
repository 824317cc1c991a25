#include <masscalc/matrix.hpp>

#include <cmath>
#include <ostream>
#include <utility>

namespace masscalc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(rows * cols, field.zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols,
               std::vector<FieldElement> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionMismatchError("matrix entry count does not match shape");
    for (const auto& e : data_)
        if (e.field() != field_)
            throw FieldMismatchError("matrix entry from a different field");
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

bool Matrix::operator==(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != other.data_[i]) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatchError("matrix sum shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] + other.data_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionMismatchError("matrix product shape mismatch");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += at(i, k) * other.at(k, j);
        }
    return out;
}

std::vector<FieldElement> Matrix::operator*(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_)
        throw DimensionMismatchError("matrix-vector shape mismatch");
    std::vector<FieldElement> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::scaled(const FieldElement& s) const {
    Matrix out = *this;
    for (auto& e : out.data_) e *= s;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

void Matrix::require_square() const {
    if (rows_ != cols_)
        throw DimensionMismatchError("operation requires a square matrix");
}

namespace {

// Picks the elimination pivot in rows [row, rows) of column col.
// Exact backends take the first nonzero entry; float takes the largest
// magnitude for stability.
std::size_t pick_pivot(const Matrix& m, std::size_t row, std::size_t col,
                       std::size_t rows, bool* found) {
    *found = false;
    if (m.field().kind() == FieldKind::Float) {
        std::size_t best = row;
        double best_abs = -1.0;
        for (std::size_t r = row; r < rows; ++r) {
            double a = std::fabs(m.at(r, col).to_double());
            if (a > best_abs) { best_abs = a; best = r; }
        }
        if (!m.at(best, col).is_zero()) { *found = true; return best; }
        return row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!m.at(r, col).is_zero()) { *found = true; return r; }
    return row;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

} // namespace

FieldElement Matrix::determinant() const {
    require_square();
    Matrix work = *this;
    FieldElement det = field_.one();
    for (std::size_t col = 0; col < cols_; ++col) {
        bool found = false;
        std::size_t piv = pick_pivot(work, col, col, rows_, &found);
        if (!found) return field_.zero();
        if (piv != col) { swap_rows(work, piv, col); det = -det; }
        det *= work.at(col, col);
        FieldElement inv = work.at(col, col).inverse();
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (work.at(r, col).is_zero()) continue;
            FieldElement f = work.at(r, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                work.at(r, j) -= f * work.at(col, j);
        }
    }
    return det;
}

bool Matrix::is_invertible() const {
    return rows_ == cols_ && !determinant().is_zero();
}

std::size_t Matrix::rank() const {
    Matrix work = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        bool found = false;
        std::size_t piv = pick_pivot(work, r, col, rows_, &found);
        if (!found) continue;
        swap_rows(work, piv, r);
        FieldElement inv = work.at(r, col).inverse();
        for (std::size_t rr = r + 1; rr < rows_; ++rr) {
            if (work.at(rr, col).is_zero()) continue;
            FieldElement f = work.at(rr, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                work.at(rr, j) -= f * work.at(r, j);
        }
        ++r;
    }
    return r;
}

Matrix Matrix::inverse() const {
    require_square();
    // Gauss-Jordan on [A | I].
    Matrix work = *this;
    Matrix inv = identity(field_, rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        bool found = false;
        std::size_t piv = pick_pivot(work, col, col, rows_, &found);
        if (!found) throw SingularMatrixError("matrix is not invertible");
        swap_rows(work, piv, col);
        swap_rows(inv, piv, col);
        FieldElement scale = work.at(col, col).inverse();
        for (std::size_t j = 0; j < cols_; ++j) {
            work.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            FieldElement f = work.at(r, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<FieldElement> Matrix::solve(const std::vector<FieldElement>& b) const {
    require_square();
    if (b.size() != rows_)
        throw DimensionMismatchError("solve: right-hand side size mismatch");
    Matrix work = *this;
    std::vector<FieldElement> rhs = b;
    for (std::size_t col = 0; col < cols_; ++col) {
        bool found = false;
        std::size_t piv = pick_pivot(work, col, col, rows_, &found);
        if (!found) throw SingularMatrixError("singular system");
        swap_rows(work, piv, col);
        std::swap(rhs[piv], rhs[col]);
        FieldElement inv = work.at(col, col).inverse();
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (work.at(r, col).is_zero()) continue;
            FieldElement f = work.at(r, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                work.at(r, j) -= f * work.at(col, j);
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<FieldElement> x(cols_, field_.zero());
    for (std::size_t i = cols_; i-- > 0;) {
        FieldElement acc = rhs[i];
        for (std::size_t j = i + 1; j < cols_; ++j)
            acc -= work.at(i, j) * x[j];
        x[i] = acc / work.at(i, i);
    }
    return x;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

} // namespace masscalc
