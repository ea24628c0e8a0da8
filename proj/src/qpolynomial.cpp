#include "kr/qpolynomial.hpp"

#include <sstream>

namespace kr {

QPolynomial::QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPolynomial QPolynomial::constant(Int c) {
  return QPolynomial(std::vector<Int>{std::move(c)});
}

QPolynomial QPolynomial::monomial(Int c, int degree) {
  std::vector<Int> v(degree + 1, 0);
  v[degree] = std::move(c);
  return QPolynomial(std::move(v));
}

Int QPolynomial::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[degree];
}

Int QPolynomial::operator()(const Int& q) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> prod(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Int& c = coeffs_[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c > 0 ? " + " : " - ");
    }
    Int a = boost::multiprecision::abs(c);
    if (d == 0 || a != 1) {
      os << a;
      if (d > 0) os << "*";
    }
    if (d > 0) {
      os << "q";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace kr
