#include "epzeta/rational_function.hpp"

#include <algorithm>

namespace epzeta {

namespace {

// lcm of the coefficient denominators.
BigInt denominator_lcm(const Polynomial& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) {
    BigInt m;
    mpz_lcm(m.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    l = m;
  }
  return l;
}

BigInt integer_content(const Polynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    BigInt a;
    mpz_gcd(a.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
    g = a;
  }
  return g;
}

// Multiplicity of x as a root of p (p != 0).
int root_multiplicity(Polynomial p, const BigRational& x) {
  const Polynomial linear({-x, BigRational(1)});
  int m = 0;
  while (p.eval(x).is_zero()) {
    p = p.exact_div(linear);
    ++m;
  }
  return m;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs, int order)
    : coeffs_(std::move(coeffs)) {
  if (order < 0) throw Error("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, BigRational(0));
}

TruncatedSeries TruncatedSeries::zero(int order) {
  return TruncatedSeries({}, order);
}

TruncatedSeries TruncatedSeries::of_polynomial(const Polynomial& p, int order) {
  return TruncatedSeries(p.coefficients(), order);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k)
    c[static_cast<std::size_t>(k)] = a.coefficient(k) + b.coefficient(k);
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1, BigRational(0));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j)
      c[static_cast<std::size_t>(i + j)] += a.coefficient(i) * b.coefficient(j);
  return TruncatedSeries(std::move(c), order);
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].str();
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("division by zero polynomial");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  // Clear rational denominators jointly, then remove the common integer
  // content of the pair; finally fix the denominator's leading sign.
  BigInt l;
  mpz_lcm(l.get_mpz_t(), denominator_lcm(num_).get_mpz_t(),
          denominator_lcm(den_).get_mpz_t());
  num_ = BigRational(l) * num_;
  den_ = BigRational(l) * den_;
  BigInt g2;
  mpz_gcd(g2.get_mpz_t(), integer_content(num_).get_mpz_t(),
          integer_content(den_).get_mpz_t());
  if (g2 > 1) {
    const BigRational inv(BigInt(1), g2);
    num_ = inv * num_;
    den_ = inv * den_;
  }
  if (den_.leading_coefficient().sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::parse(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos)
    return RationalFunction(Polynomial::parse(text), Polynomial(1));
  return RationalFunction(Polynomial::parse(text.substr(0, bar)),
                          Polynomial::parse(text.substr(bar + 1)));
}

BigRational RationalFunction::eval(const BigRational& x) const {
  const BigRational d = den_.eval(x);
  if (d.is_zero()) {
    const int m = root_multiplicity(den_, x);
    throw PoleError("pole at t = " + x.str() + " of multiplicity " +
                        std::to_string(m),
                    m);
  }
  return num_.eval(x) / d;
}

TruncatedSeries RationalFunction::expand(int order) const {
  if (den_.coefficient(0).is_zero())
    throw Error("not expandable at origin");
  const BigRational d0 = den_.coefficient(0);
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1, BigRational(0));
  for (int k = 0; k <= order; ++k) {
    BigRational acc = num_.coefficient(k);
    for (int i = 1; i <= std::min(k, den_.degree()); ++i)
      acc -= den_.coefficient(i) * c[static_cast<std::size_t>(k - i)];
    c[static_cast<std::size_t>(k)] = acc / d0;
  }
  return TruncatedSeries(std::move(c), order);
}

RationalFunction RationalFunction::substitute_reciprocal() const {
  if (is_zero()) return RationalFunction();
  const int d = std::max(num_.degree(), den_.degree());
  auto reverse_pad = [d](const Polynomial& p) {
    std::vector<BigRational> c(static_cast<std::size_t>(d) + 1, BigRational(0));
    for (int k = 0; k <= p.degree(); ++k)
      c[static_cast<std::size_t>(d - k)] = p.coefficient(k);
    return Polynomial(std::move(c));
  };
  return RationalFunction(reverse_pad(num_), reverse_pad(den_));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("division by zero polynomial");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::str() const {
  return num_.str() + " | " + den_.str();
}

}  // namespace epzeta
