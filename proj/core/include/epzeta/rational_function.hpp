#pragma once

#include <string>
#include <vector>

#include "epzeta/polynomial.hpp"

namespace epzeta {

/// Power-series expansion at 0 truncated to a fixed order: coefficients for
/// t^0 ... t^L. Sums and products of series of different orders truncate to
/// the smaller order.
class TruncatedSeries {
public:
  TruncatedSeries(std::vector<BigRational> coeffs, int order);
  static TruncatedSeries zero(int order);
  static TruncatedSeries of_polynomial(const Polynomial& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  BigRational coefficient(int k) const {
    return (k >= 0 && k <= order()) ? coeffs_[static_cast<std::size_t>(k)]
                                    : BigRational(0);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  std::vector<BigRational> coeffs_;  // always exactly order+1 entries
};

/// Quotient of integer-coefficient polynomials in one variable t, kept in a
/// canonical reduced form so that equality of values is structural equality:
///   - numerator and denominator share no polynomial factor,
///   - both have integer coefficients with coprime contents,
///   - the denominator has positive leading coefficient.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(1) {}  // the zero function 0/1
  RationalFunction(const Polynomial& p) : num_(p), den_(1) { canonicalize(); }  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}                 // NOLINT
  RationalFunction(const BigRational& c) : RationalFunction(Polynomial(c)) {}   // NOLINT
  /// Canonical reduced form of num/den; throws on a zero denominator.
  RationalFunction(Polynomial num, Polynomial den);

  /// Parses "num | den" with both sides in polynomial coefficient-list form.
  static RationalFunction parse(const std::string& text);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value at x; throws PoleError (with the multiplicity of the
  /// denominator root) when x is a pole.
  BigRational eval(const BigRational& x) const;

  /// Power-series expansion at 0 to order L; requires den(0) != 0.
  TruncatedSeries expand(int order) const;

  /// g with g(t) = f(1/t), canonicalized. An involution.
  RationalFunction substitute_reciprocal() const;

  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace epzeta
