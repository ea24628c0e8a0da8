#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

// Exact integer and rational arithmetic used throughout the counting code.
// No floating point appears anywhere in the point-count modules; any
// division that fails to be exact aborts with integrality_error rather than
// rounding (a non-integral count signals a convention bug, never data).

namespace kr {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // always canonical

struct integrality_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int to_integer(const Rational& r, const char* what) {
  if (denominator(r) != 1) throw integrality_error(what);
  return numerator(r);
}

inline Int exact_div(const Int& a, const Int& b, const char* what) {
  if (b == 0 || a % b != 0) throw integrality_error(what);
  return a / b;
}

}  // namespace kr
