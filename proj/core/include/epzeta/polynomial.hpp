#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "epzeta/rational.hpp"

namespace epzeta {

/// Univariate polynomial in t with exact rational coefficients, indexed by
/// degree. Trailing zeros are stripped; the zero polynomial has an empty
/// coefficient vector and degree() == -1 (standing in for degree -infinity).
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const BigRational& c) { coeffs_.push_back(c); trim(); }  // NOLINT
  Polynomial(long c) : Polynomial(BigRational(c)) {}                  // NOLINT
  explicit Polynomial(std::vector<BigRational> coeffs)
      : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<BigRational> coeffs)
      : coeffs_(coeffs) { trim(); }

  static Polynomial t() { return Polynomial({BigRational(0), BigRational(1)}); }
  /// 1 + t + ... + t^m
  static Polynomial geometric_sum(int m);

  /// Parses the space-separated coefficient list "c0 c1 c2 ...".
  static Polynomial parse(const std::string& text);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  BigRational coefficient(int k) const {
    if (k < 0 || k > degree()) return BigRational(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  BigRational leading_coefficient() const {
    return is_zero() ? BigRational(0) : coeffs_.back();
  }

  BigRational eval(const BigRational& x) const;

  Polynomial derivative() const;

  /// Euclidean division over Q: *this = q * d + r with deg r < deg d.
  struct DivMod;
  DivMod divmod(const Polynomial& d) const;

  /// Exact quotient; throws if the division leaves a remainder.
  Polynomial exact_div(const Polynomial& d) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigRational& c, const Polynomial& p);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Greatest common divisor over Q[t], computed by a fraction-free primitive
/// pseudo-remainder sequence on the integer models of the inputs. The result
/// is primitive with positive leading coefficient (1 for coprime inputs);
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace epzeta
