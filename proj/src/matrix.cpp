#include "gospace/matrix.hpp"

#include <utility>

namespace gospace {

Matrix Matrix::from_rows(const std::vector<Vector> &rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Vector &v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto &s : m.data_) s = s.conj();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto &s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto &s : data_)
    if (!s.is_real()) return false;
  return true;
}

Matrix Matrix::augment(const Matrix &rhs) const {
  if (rhs.rows_ != rows_) throw DimensionMismatch("augment: row counts differ");
  Matrix m(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) m(r, cols_ + c) = rhs(r, c);
  }
  return m;
}

Matrix Matrix::stack(const Matrix &below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_) throw DimensionMismatch("stack: column counts differ");
  Matrix m = *this;
  m.rows_ += below.rows_;
  m.data_.insert(m.data_.end(), below.data_.begin(), below.data_.end());
  return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar &aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

Vector operator*(const Matrix &a, const Vector &x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape");
  Vector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!x[k].is_zero()) y[i] += a(i, k) * x[k];
  return y;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool is_zero(const Vector &v) {
  for (const auto &s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector operator+(const Vector &a, const Vector &b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length");
  Vector v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

Vector operator-(const Vector &a, const Vector &b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference length");
  Vector v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
  return v;
}

Vector operator*(const Scalar &s, const Vector &v) {
  Vector out = v;
  for (auto &x : out) x *= s;
  return out;
}

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

Echelon rref(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));

    const Scalar inv = Scalar(1) / a(r, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

namespace {

// Bareiss elimination in place; returns the number of pivots found and the
// sign of the row permutation (for determinants).
std::size_t bareiss(Matrix &m, int &sign) {
  sign = 1;
  Scalar prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
      sign = -sign;
    }
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = (pivot * m(i, k) - f * m(r, k)) / prev;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix &a) {
  Matrix m = a;
  int sign = 1;
  return bareiss(m, sign);
}

Scalar determinant(const Matrix &a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  if (a.rows() == 0) return 1;
  Matrix m = a;
  int sign = 1;
  if (bareiss(m, sign) < a.rows()) return 0;
  // With no skipped columns the last Bareiss pivot equals the determinant.
  Scalar d = m(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? -d : d;
}

std::optional<Vector> solve_linear(const Matrix &a, const Vector &b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_linear: rows != len(b)");
  const Echelon e = rref(a.augment(Matrix::column(b)));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::vector<Vector> kernel_basis(const Matrix &a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gospace
