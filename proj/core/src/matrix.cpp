#include "knotres/matrix.hpp"

#include "knotres/error.hpp"

namespace knotres {

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) fail("NonRectangular", "ragged initializer");
    for (const auto& x : row) data_.push_back(x);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(std::size_t n, const Rational& s) {
  RationalMatrix m(n, n);
  for (auto& x : m.data_) x = s;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) fail("DimensionMismatch", "matrix product");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail("DimensionMismatch", "matrix sum");
  RationalMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail("DimensionMismatch", "matrix difference");
  RationalMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Rational RationalMatrix::trace() const {
  if (!square()) fail("NonSquare", "trace");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

RationalMatrix RationalMatrix::select(
    const std::vector<std::size_t>& rows,
    const std::vector<std::size_t>& cols) const {
  RationalMatrix r(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_)
        fail("IndexOutOfRange", "submatrix selection");
      r.at(i, j) = at(rows[i], cols[j]);
    }
  return r;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

}  // namespace knotres
