#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "epzeta/rational.hpp"

namespace epzeta {

/// Declared commensurability data between named compact open subgroups.
/// Each declared pair (U, V) records the indices |U : U∩V| and |V : U∩V|;
/// the derived ratio |U:V| must be consistent along every cycle, which is
/// validated as declarations arrive. Read-only once built.
class SubgroupContext {
public:
  /// Declares |U:U∩V| = u_over_int and |V:U∩V| = v_over_int. Throws when the
  /// new declaration contradicts the ratios already implied.
  void declare(const std::string& u, const std::string& v,
               const BigInt& u_over_int, const BigInt& v_over_int);

  bool knows(const std::string& name) const { return potential_.count(name) > 0; }
  bool related(const std::string& u, const std::string& v) const;

  /// The commensurability index |U:V| = |U:U∩V| / |V:U∩V| along any declared
  /// path; throws "incommensurable or undeclared pair" when U, V are not
  /// connected by declarations.
  BigRational index(const std::string& u, const std::string& v) const;

  std::vector<std::string> names() const;

  /// Plain text, one directive per line:
  ///   pair U V A B     (A = |U:U∩V|, B = |V:U∩V|)
  static SubgroupContext parse(std::istream& in, const std::string& source = "<input>");

private:
  const std::string& root_of(const std::string& name) const;

  // Potential per name relative to its component root r: pot(X) = |X:r|.
  std::map<std::string, BigRational> potential_;
  std::map<std::string, std::string> root_;
};

/// An element of h_G = Q * mu_O: a rational coefficient against a named base
/// normalization. Two measures are equal when, after rebasing to a common
/// base, the coefficients agree; the sign never depends on the base.
class HaarMeasure {
public:
  HaarMeasure(BigRational coefficient, std::string base)
      : coeff_(std::move(coefficient)), base_(std::move(base)) {}

  const BigRational& coefficient() const { return coeff_; }
  const std::string& base() const { return base_; }

  /// The same element of h_G expressed against the target base.
  HaarMeasure rebase(const std::string& target, const SubgroupContext& ctx) const;

  int sign() const { return coeff_.sign(); }
  bool equals(const HaarMeasure& other, const SubgroupContext& ctx) const;

  HaarMeasure operator-() const { return HaarMeasure(-coeff_, base_); }
  friend HaarMeasure operator*(const BigRational& c, const HaarMeasure& m) {
    return HaarMeasure(c * m.coeff_, m.base_);
  }

  /// Rendered as "c * mu[BASE]" with c in p/q form.
  std::string str() const;

private:
  BigRational coeff_;
  std::string base_;
};

}  // namespace epzeta
