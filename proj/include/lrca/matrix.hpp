#pragma once

#include <cstddef>
#include <vector>

#include "lrca/field.hpp"

namespace lrca {

// Row-major dense matrix over a finite field. Elimination uses the first
// nonzero entry as pivot, so all reductions are deterministic.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const FieldPtr& field() const { return f_; }

    Elem at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    void set(std::size_t i, std::size_t j, Elem v) { a_[i * c_ + j] = v; }

    Matrix operator*(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;
    Matrix transpose() const;
    bool is_zero() const;

    std::vector<Elem> row(std::size_t i) const;
    std::vector<Elem> mul_vec(const std::vector<Elem>& v) const; // (*this) * v

    Matrix select_columns(const std::vector<std::size_t>& cols) const;

    std::size_t rank() const;
    // Reduced row echelon form; pivot column indices appended to *pivots if given.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    // Rows form a basis of { x : (*this) x^T = 0 }.
    Matrix null_space() const;
    Matrix inverse() const; // square and nonsingular, else throws

  private:
    FieldPtr f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Elem> a_;
};

} // namespace lrca
