#pragma once

#include <string>
#include <vector>

#include "kr/rational.hpp"

namespace kr {

// Polynomial in q with exact integer coefficients, index = degree.
// Normalized: no trailing zero coefficients (the zero polynomial is empty).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs);
  static QPolynomial constant(Int c);
  static QPolynomial monomial(Int c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  Int coefficient(int degree) const;

  Int operator()(const Int& q) const;  // exact evaluation

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
    return a += b;
  }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) {
    return a *= b;
  }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;  // e.g. "q^3 + 2*q + 1"

 private:
  void trim();
  std::vector<Int> coeffs_;
};

}  // namespace kr
