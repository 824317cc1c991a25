#pragma once

#include <masscalc/field.hpp>

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace masscalc {

/// Dense matrix over a runtime Field. All elimination is exact for the
/// rational and F_p backends; the float backend pivots on magnitude.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols,
           std::vector<FieldElement> entries);

    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix operator+(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    std::vector<FieldElement> operator*(const std::vector<FieldElement>& v) const;
    Matrix scaled(const FieldElement& s) const;
    Matrix transposed() const;

    FieldElement determinant() const;
    bool is_invertible() const;
    Matrix inverse() const;
    std::size_t rank() const;

    /// Solves A x = b; throws SingularMatrixError when no unique solution
    /// exists. Square systems only.
    std::vector<FieldElement> solve(const std::vector<FieldElement>& b) const;

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
    void require_square() const;

    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

} // namespace masscalc
