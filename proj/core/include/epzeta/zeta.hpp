#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "epzeta/coxeter.hpp"
#include "epzeta/measures.hpp"

namespace epzeta {

/// Truncated coefficients of a formal Dirichlet series sum |R(n)| n^{-s}:
/// the map n -> |R(n)|, complete for all n <= bound().
class DirichletSeries {
public:
  explicit DirichletSeries(BigInt bound) : bound_(std::move(bound)) {
    if (bound_ < 1) throw Error("Dirichlet truncation bound must be >= 1");
  }

  void add(const BigInt& n, std::uint64_t multiplicity);

  const BigInt& bound() const { return bound_; }
  const std::map<BigInt, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t count(const BigInt& n) const {
    auto it = counts_.find(n);
    return it == counts_.end() ? 0 : it->second;
  }

  friend bool operator==(const DirichletSeries& a, const DirichletSeries& b) {
    return a.bound_ == b.bound_ && a.counts_ == b.counts_;
  }

  /// Lines "n count", ascending in n.
  std::string str() const;

private:
  BigInt bound_;
  std::map<BigInt, std::uint64_t> counts_;
};

/// Chamber-level zeta data: mu_B(B g_w B) = q^{l(w)}, so the coefficient at
/// n = q^m counts the length-m elements and the rational form in t = q^{-s}
/// is the growth series.
struct ChamberZeta {
  DirichletSeries series;
  RationalFunction rational_form;  // in t = q^{-s}
  BigInt q;
  int length_bound;
};

ChamberZeta zeta_chamber(const CoxeterSystem& sys, const BigInt& q, int length_bound);

/// |R(n)| at the chamber level: the number of elements w with q^{l(w)} = n.
std::uint64_t double_coset_count(const CoxeterSystem& sys, const BigInt& q,
                                 const BigInt& n);

/// Combinatorial data behind the parabolic-level series: the minimal double
/// coset representatives x in ^J W^J with their cross sections Q(x) and the
/// parahoric indices |P_J : P_Q| = gamma_{W_J}(q) / gamma_{W_Q}(q).
struct ParabolicZetaData {
  CoxeterSystem sys;
  BigInt q;
  GeneratorSet J;
  int length_bound = 12;

  ParabolicZetaData(CoxeterSystem system, BigInt thickness, GeneratorSet j,
                    int bound = 12);
};

struct ParabolicZeta {
  DirichletSeries series;
  BigRational value_at_minus_one;  // gamma~_W(q) / gamma_{W_J}(q)
  BigInt index_in_chamber_base;    // |P_J : B| = gamma_{W_J}(q)
};

ParabolicZeta zeta_parabolic(const ParabolicZetaData& data);

/// Exact integer |P_J : P_Q| = gamma_{W_J}(q) / gamma_{W_Q}(q) for Q ⊆ J.
BigInt parabolic_index(const CoxeterSystem& sys, const GeneratorSet& J,
                       const GeneratorSet& Q, const BigInt& q);

/// Data for the pro-p radical level: the parabolic data together with the
/// semisimple rank n of the ambient group and the derived reductive quotient
/// orders |P_Q : P1_Q| = q^{N_Q} (q-1)^n gamma_{W_Q}(q).
struct ProPRadicalData {
  ParabolicZetaData parabolic;
  int ss_rank;

  ProPRadicalData(ParabolicZetaData p, int n);
};

struct ProPZeta {
  DirichletSeries series;
  BigRational value_at_minus_one;  // |P_J : P1_J| * zeta~_{G,P_J}(-1)
  BigInt index_pj_p1j;             // |P_J : P1_J|
};

ProPZeta zeta_pro_p(const ProPRadicalData& data);

/// |P_Q : P1_Q| for Q spherical: the order of the reductive quotient over the
/// residue field.
BigInt reductive_quotient_order(const CoxeterSystem& sys, const GeneratorSet& Q,
                                const BigInt& q, int ss_rank);

/// Verification record for the Iwahori-level zeta of an affine system: the
/// rational form in t = q^{-s}, the product-formula identity against the
/// affine growth series, and the functional equation f(1/t) = (-1)^n f(t).
struct IwahoriFunctionalRecord {
  RationalFunction zeta_t;           // = gamma~ of the affine system
  RationalFunction product_form;     // gamma_{W_J}(t) * prod 1/(1 - t^{m_i})
  GeneratorSet spherical_part;       // the recognized J = S \ {s0}
  int rank_n = 0;                    // |S| - 1
  bool product_identity_ok = false;  // zeta_t == product_form
  bool functional_equation_ok = false;
  std::vector<std::string> numeric_checks;  // exact spot checks, "t=v: ok"
};

IwahoriFunctionalRecord zeta_iwahori_functional(const CoxeterSystem& sys,
                                                const BigInt& q);

/// Zeta of the color-preserving automorphism group of the (d+1)-regular tree
/// against a vertex stabilizer: |R(1)| = 1 and |R((d+1) d^{2k-1})| = 1. The
/// closed form mixes (1+d)^{-s} and d^{-s}, so no single-variable rational
/// form is returned; exact values at nonzero integers s are available.
struct TreeZeta {
  DirichletSeries series;
  BigRational value_at_minus_one;
};

TreeZeta zeta_tree_vertex(const BigInt& d, const BigInt& bound);

/// Exact value of the vertex-level zeta at a nonzero integer s.
BigRational zeta_tree_vertex_value(const BigInt& d, long s);

/// Edge-stabilizer level: |R(1)| = 1, |R(d^k)| = 2, rational form
/// (1+t)/(1-t) in t = d^{-s}; coincides with the chamber zeta of the
/// infinite dihedral system at q = d.
struct TreeEdgeZeta {
  DirichletSeries series;
  RationalFunction rational_form;
  BigRational value_at_minus_one;
};

TreeEdgeZeta zeta_tree_edge(const BigInt& d, const BigInt& bound);

}  // namespace epzeta
