#include "knotres/polynomial.hpp"

namespace knotres {

namespace {
void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::shifted_to_constant() const {
  if (is_zero()) return {};
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return Polynomial(
      std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Rational c = coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    if (!out.empty()) {
      out += (c > 0) ? " + " : " - ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    bool unit = (c == 1 && d != 0);
    if (!unit) out += to_string(c);
    if (d > 0) {
      if (!unit) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace knotres
