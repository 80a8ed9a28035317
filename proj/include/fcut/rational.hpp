#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace fcut {

// Exact rational with int64 components, always normalized (den > 0, gcd 1).
// Bound values stay tiny (slope*n + offset), so overflow is not a concern at
// the orders this toolkit handles.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long v) : num(v), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error(Errc::bad_parameter, "rational with zero denominator");
    normalize();
  }

  static Rational parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
      size_t used = 0;
      if (slash == std::string::npos) {
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw Error(Errc::bad_parameter, "trailing characters in rational '" + text + "'");
        return Rational(v);
      }
      long long n = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw Error(Errc::bad_parameter, "bad numerator in rational '" + text + "'");
      std::string dpart = text.substr(slash + 1);
      long long d = std::stoll(dpart, &used);
      if (used != dpart.size()) throw Error(Errc::bad_parameter, "bad denominator in rational '" + text + "'");
      return Rational(n, d);
    } catch (const std::invalid_argument&) {
      throw Error(Errc::bad_parameter, "cannot parse rational '" + text + "'");
    } catch (const std::out_of_range&) {
      throw Error(Errc::bad_parameter, "rational out of range '" + text + "'");
    }
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num * b.num, a.den * b.den); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  bool is_integer() const { return den == 1; }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace fcut
