#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "knotres/rational.hpp"

namespace knotres {

// Dense matrix of exact rationals. Row-major storage.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init);

  static RationalMatrix identity(std::size_t n);
  // All-ones matrix scaled by s.
  static RationalMatrix ones(std::size_t n, const Rational& s = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator-() const;
  RationalMatrix scaled(const Rational& s) const;

  bool operator==(const RationalMatrix& o) const = default;

  Rational trace() const;

  // Submatrix keeping the given rows/cols, in the given order.
  RationalMatrix select(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const;

  bool is_zero() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace knotres
