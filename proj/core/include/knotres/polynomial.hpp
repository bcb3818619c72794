#pragma once

#include <string>
#include <vector>

#include "knotres/rational.hpp"

namespace knotres {

// Single-variable polynomial with exact rational coefficients.
// coeffs[k] is the degree-k coefficient; leading coefficient nonzero unless
// the polynomial is zero (empty coefficient list).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const = default;

  Rational eval(const Rational& x) const;

  // Divides out the largest power of the variable, i.e. returns p / x^k where
  // x^k is the lowest nonzero term's power. Zero stays zero.
  Polynomial shifted_to_constant() const;

  // Human-readable form in the given variable name, highest degree first.
  std::string str(const std::string& var = "x") const;

private:
  std::vector<Rational> coeffs_;
};

}  // namespace knotres
