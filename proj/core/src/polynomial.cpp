#include "epzeta/polynomial.hpp"

#include <sstream>

namespace epzeta {

namespace {

// Integer model of a polynomial: primitive coefficient vector over Z.
using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt zcontent(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    BigInt a;
    mpz_gcd(a.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    g = a;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  BigInt g = zcontent(p);
  if (g == 0) return;
  if (!p.empty() && p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
}

// Clears rational denominators; the result is primitive up to sign of content.
ZPoly to_integer(const Polynomial& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) {
    BigInt m;
    mpz_lcm(m.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    l = m;
  }
  ZPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients())
    out.push_back(c.numerator() * (l / c.denominator()));
  return out;
}

Polynomial from_integer(const ZPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.size());
  for (const auto& a : p) c.emplace_back(a);
  return Polynomial(std::move(c));
}

// Pseudo-remainder prem(a, b) = (lc(b)^(deg a - deg b + 1) * a) mod b, all in Z.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const auto db = b.size() - 1;
  const BigInt& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const auto da = a.size() - 1;
    const BigInt head = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[da - db + i] -= head * b[i];
    ztrim(a);
  }
  return a;
}

}  // namespace

Polynomial Polynomial::geometric_sum(int m) {
  std::vector<BigRational> c(static_cast<std::size_t>(m) + 1, BigRational(1));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<BigRational> c;
  std::string tok;
  while (in >> tok) c.push_back(BigRational::parse(tok));
  return Polynomial(std::move(c));
}

BigRational Polynomial::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial();
  std::vector<BigRational> c;
  c.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    c.push_back(BigRational(BigInt(static_cast<long>(k))) * coeffs_[k]);
  return Polynomial(std::move(c));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw Error("division by zero polynomial");
  std::vector<BigRational> r = coeffs_;
  const int dd = d.degree();
  const BigRational lead = d.leading_coefficient();
  std::vector<BigRational> q;
  if (degree() >= dd)
    q.assign(static_cast<std::size_t>(degree() - dd) + 1, BigRational(0));
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= dd) {
    if (!r[static_cast<std::size_t>(dr)].is_zero()) {
      const BigRational f = r[static_cast<std::size_t>(dr)] / lead;
      q[static_cast<std::size_t>(dr - dd)] = f;
      for (int i = 0; i <= dd; ++i)
        r[static_cast<std::size_t>(dr - dd + i)] -= f * d.coeffs_[static_cast<std::size_t>(i)];
    }
    --dr;
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                             BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                             BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const BigRational& c, const Polynomial& p) {
  std::vector<BigRational> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<BigRational> out = coeffs_;
  for (auto& x : out) x = -x;
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].str();
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  ZPoly x = to_integer(a);
  ZPoly y = to_integer(b);
  make_primitive(x);
  make_primitive(y);
  if (x.empty()) return from_integer(y);
  if (y.empty()) return from_integer(x);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty() && x.back() < 0)
    for (auto& c : x) c = -c;
  return from_integer(x);
}

}  // namespace epzeta
