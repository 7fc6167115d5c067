#ifndef GOSPACE_MATRIX_HPP
#define GOSPACE_MATRIX_HPP

#include "gospace/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gospace {

using Vector = std::vector<Scalar>;

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<Vector> &rows);
  static Matrix identity(std::size_t n);
  static Matrix column(const Vector &v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  Matrix transpose() const;
  Matrix conj() const;
  bool is_zero() const;
  bool is_real() const;

  /// Horizontal concatenation [A | B].
  Matrix augment(const Matrix &rhs) const;
  /// Vertical concatenation.
  Matrix stack(const Matrix &below) const;

  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Vector operator*(const Matrix &a, const Vector &x);
  friend Matrix operator+(const Matrix &a, const Matrix &b);
  friend Matrix operator-(const Matrix &a, const Matrix &b);
  friend bool operator==(const Matrix &a, const Matrix &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

bool is_zero(const Vector &v);
Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator*(const Scalar &s, const Vector &v);
/// Unit vector e_k of length n.
Vector unit_vector(std::size_t n, std::size_t k);

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix a);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix &a);

/// Some x with A x = b, or nullopt iff rank([A|b]) > rank(A).
/// Free variables of the reduced echelon form are set to zero.
std::optional<Vector> solve_linear(const Matrix &a, const Vector &b);

/// Basis of {x : A x = 0}. One vector per free column (ascending), carrying a
/// 1 in that free position and zeros in the other free positions.
std::vector<Vector> kernel_basis(const Matrix &a);

/// Determinant by Bareiss elimination; square matrices only.
Scalar determinant(const Matrix &a);

}  // namespace gospace

#endif
