#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gpow {

// Exact nonnegative rational with cross-multiplied comparisons.
// All theorem verdicts go through this or plain integers; no floating
// point is ever compared.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) {
    if (d <= 0) throw std::invalid_argument("Rational: denominator must be positive");
    if (n < 0) throw std::invalid_argument("Rational: negative values unsupported");
    long long g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double approx() const { return double(num) / double(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace gpow
