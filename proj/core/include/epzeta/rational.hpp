#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "epzeta/errors.hpp"

namespace epzeta {

using BigInt = mpz_class;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// every operation is exact.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  BigRational(int n) : v_(n) {}                             // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& n) : v_(n) {}                   // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw Error("zero denominator");
    v_.canonicalize();
  }

  /// Parses "p/q" (q omitted when 1). Sign may sit on either component.
  static BigRational parse(const std::string& text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational inverse() const {
    if (is_zero()) throw Error("division by zero");
    return BigRational(1 / v_);
  }

  std::string str() const;

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(mpq_class(a.v_ + b.v_));
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(mpq_class(a.v_ - b.v_));
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(mpq_class(a.v_ * b.v_));
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw Error("division by zero");
    return BigRational(mpq_class(a.v_ / b.v_));
  }
  BigRational operator-() const { return BigRational(mpq_class(-v_)); }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

private:
  explicit BigRational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

/// r^e for a (possibly negative) integer exponent; r must be nonzero when e < 0.
BigRational pow(const BigRational& r, long e);

/// b^e for a non-negative integer exponent.
BigInt pow(const BigInt& b, unsigned long e);

inline BigRational BigRational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(text));
    return BigRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational '" + text + "'");
  }
}

inline std::string BigRational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline std::ostream& operator<<(std::ostream& os, const BigRational& r) {
  return os << r.str();
}

inline BigRational pow(const BigRational& r, long e) {
  if (e < 0) return pow(r.inverse(), -e);
  BigRational acc(1), base = r;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline BigInt pow(const BigInt& b, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

}  // namespace epzeta
