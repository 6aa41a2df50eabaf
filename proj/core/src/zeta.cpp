#include "epzeta/zeta.hpp"

#include <algorithm>

#include "epzeta/errors.hpp"

namespace epzeta {

namespace {

GeneratorSet sorted_unique(GeneratorSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Number of positive roots of the (spherical) parabolic W_Q: the degree of
// its growth polynomial.
int positive_roots(const CoxeterSystem& sys, const GeneratorSet& Q) {
  return sys.parabolic_growth_polynomial(Q).degree();
}

Polynomial one_minus_t_pow(int m) {
  std::vector<BigRational> c(static_cast<std::size_t>(m) + 1, BigRational(0));
  c[0] = BigRational(1);
  c[static_cast<std::size_t>(m)] = BigRational(-1);
  return Polynomial(std::move(c));
}

}  // namespace

void DirichletSeries::add(const BigInt& n, std::uint64_t multiplicity) {
  if (n < 1) throw Error("Dirichlet series index must be positive");
  if (n > bound_ || multiplicity == 0) return;
  counts_[n] += multiplicity;
}

std::string DirichletSeries::str() const {
  std::string out;
  for (const auto& [n, c] : counts_) {
    out += n.get_str();
    out += ' ';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

ChamberZeta zeta_chamber(const CoxeterSystem& sys, const BigInt& q,
                         int length_bound) {
  if (q < 2) throw Error("uniform thickness parameter q must be at least 2");
  DirichletSeries series(pow(q, static_cast<unsigned long>(length_bound)));
  const auto counts = sys.counts_by_length(length_bound);
  BigInt n = 1;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    series.add(n, counts[m]);
    n *= q;
  }
  return {std::move(series), sys.growth_series(), q, length_bound};
}

std::uint64_t double_coset_count(const CoxeterSystem& sys, const BigInt& q,
                                 const BigInt& n) {
  if (q < 2) throw Error("uniform thickness parameter q must be at least 2");
  if (n < 1) throw Error("double coset measure must be positive");
  // n must be a power of q.
  BigInt rest = n;
  int m = 0;
  while (rest > 1) {
    if (rest % q != 0) return 0;
    rest /= q;
    ++m;
  }
  const auto counts = sys.counts_by_length(m);
  return counts[static_cast<std::size_t>(m)];
}

ParabolicZetaData::ParabolicZetaData(CoxeterSystem system, BigInt thickness,
                                     GeneratorSet j, int bound)
    : sys(std::move(system)), q(std::move(thickness)),
      J(sorted_unique(std::move(j))), length_bound(bound) {
  if (q < 2) throw Error("uniform thickness parameter q must be at least 2");
  if (length_bound < 0) throw Error("negative length bound");
  for (int s : J)
    if (s < 0 || s >= sys.rank()) throw Error("generator index out of range");
  if (!sys.subsystem(J).is_spherical()) throw Error("parabolic not compact");
}

BigInt parabolic_index(const CoxeterSystem& sys, const GeneratorSet& J,
                       const GeneratorSet& Q, const BigInt& q) {
  const BigRational gj = sys.parabolic_growth_polynomial(J).eval(BigRational(q));
  const BigRational gq = sys.parabolic_growth_polynomial(Q).eval(BigRational(q));
  const BigRational ratio = gj / gq;
  if (!ratio.is_integer() || ratio.sign() <= 0)
    throw Error("parabolic index " + ratio.str() + " is not a positive integer");
  return ratio.numerator();
}

ParabolicZeta zeta_parabolic(const ParabolicZetaData& data) {
  const auto& sys = data.sys;
  const BigInt& q = data.q;

  // Accumulate mu_{P_J}(P_J x P_J) = |P_J : P_{Q(x)}| q^{l(x)} over the
  // enumerated minimal representatives. Every measure <= q^L arises from a
  // representative of length <= L, so the series is complete up to q^L.
  DirichletSeries series(pow(q, static_cast<unsigned long>(data.length_bound)));
  const auto reps = sys.min_double_coset_reps(data.J, data.J, data.length_bound);
  for (const auto& x : reps) {
    const GeneratorSet qx = sys.cross_section(data.J, x);
    const BigInt index = parabolic_index(sys, data.J, qx, q);
    const BigInt n = index * pow(q, static_cast<unsigned long>(x.length()));
    series.add(n, 1);
  }

  const BigRational gamma_w = sys.growth_series().eval(BigRational(q));
  const BigRational gamma_j =
      sys.parabolic_growth_polynomial(data.J).eval(BigRational(q));
  return {std::move(series), gamma_w / gamma_j, gamma_j.numerator()};
}

BigInt reductive_quotient_order(const CoxeterSystem& sys, const GeneratorSet& Q,
                                const BigInt& q, int ss_rank) {
  const Polynomial growth = sys.parabolic_growth_polynomial(Q);
  const int n_roots = growth.degree();
  BigInt order = pow(q, static_cast<unsigned long>(n_roots));
  BigInt torus = 1;
  for (int i = 0; i < ss_rank; ++i) torus *= (q - 1);
  order *= torus;
  const BigRational g = growth.eval(BigRational(q));
  return order * g.numerator();
}

ProPRadicalData::ProPRadicalData(ParabolicZetaData p, int n)
    : parabolic(std::move(p)), ss_rank(n) {
  if (ss_rank < 1) throw Error("semisimple rank must be positive");
  // The derived indices |P1_Q : P1_J| must be positive integers (powers of q).
  const auto& sys = parabolic.sys;
  const BigInt pj_p1j =
      reductive_quotient_order(sys, parabolic.J, parabolic.q, ss_rank);
  for (unsigned mask = 0; mask < (1u << parabolic.J.size()); ++mask) {
    GeneratorSet Q;
    for (std::size_t i = 0; i < parabolic.J.size(); ++i)
      if (mask & (1u << i)) Q.push_back(parabolic.J[i]);
    const BigInt pj_pq = parabolic_index(sys, parabolic.J, Q, parabolic.q);
    const BigInt pq_p1q = reductive_quotient_order(sys, Q, parabolic.q, ss_rank);
    const BigInt pj_p1q = pj_pq * pq_p1q;
    if (pj_p1j % pj_p1q != 0)
      throw Error("inconsistent index table: |P1_Q:P1_J| is not an integer");
    BigInt p1q_p1j = pj_p1j / pj_p1q;
    while (p1q_p1j > 1) {
      if (p1q_p1j % parabolic.q != 0)
        throw Error("inconsistent index table: |P1_Q:P1_J| is not a power of q");
      p1q_p1j /= parabolic.q;
    }
  }
}

ProPZeta zeta_pro_p(const ProPRadicalData& data) {
  const auto& sys = data.parabolic.sys;
  const BigInt& q = data.parabolic.q;
  const GeneratorSet& J = data.parabolic.J;

  const BigInt pj_p1j = reductive_quotient_order(sys, J, q, data.ss_rank);
  const int n_j = positive_roots(sys, J);

  // Each P_J-double coset P_J g_x P_J splits into |P_J:P_{Q(x)}| |P_J:P1_{Q(x)}|
  // cosets of the pro-p radical, all of measure |P1_{Q(x)}:P1_J| q^{l(x)}.
  DirichletSeries series(pow(q, static_cast<unsigned long>(data.parabolic.length_bound)));
  const auto reps =
      sys.min_double_coset_reps(J, J, data.parabolic.length_bound);
  for (const auto& x : reps) {
    const GeneratorSet qx = sys.cross_section(J, x);
    const BigInt pj_pq = parabolic_index(sys, J, qx, q);
    const BigInt pj_p1q = pj_pq * reductive_quotient_order(sys, qx, q, data.ss_rank);
    const int n_q = positive_roots(sys, qx);
    const BigInt p1q_p1j = pow(q, static_cast<unsigned long>(n_j - n_q));
    if (pj_p1q * p1q_p1j != pj_p1j)
      throw Error("inconsistent index table for Q(x)");
    const BigInt measure = p1q_p1j * pow(q, static_cast<unsigned long>(x.length()));
    const BigInt mult = pj_pq * pj_p1q;
    if (mult <= 0 || !mult.fits_ulong_p())
      throw Error("inconsistent multiplicity");
    series.add(measure, mult.get_ui());
  }

  const ParabolicZeta base = zeta_parabolic(data.parabolic);
  return {std::move(series), BigRational(pj_p1j) * base.value_at_minus_one,
          pj_p1j};
}

IwahoriFunctionalRecord zeta_iwahori_functional(const CoxeterSystem& sys,
                                                const BigInt& q) {
  if (q < 2) throw Error("uniform thickness parameter q must be at least 2");
  if (sys.rank() < 2) throw Error("not affine: rank too small");
  if (sys.is_spherical()) throw Error("not affine: system is spherical");

  const RationalFunction gamma = sys.growth_series();

  // Recognize the spherical part: some maximal proper J must be spherical
  // with gamma~_W(t) = gamma_{W_J}(t) * prod_i 1/(1 - t^{m_i}).
  for (int drop = 0; drop < sys.rank(); ++drop) {
    GeneratorSet J;
    for (int s = 0; s < sys.rank(); ++s)
      if (s != drop) J.push_back(s);
    const CoxeterSystem spherical = sys.subsystem(J);
    const auto desc = spherical.classify_finite();
    if (!desc) continue;

    RationalFunction product(spherical.growth_polynomial());
    for (int m : desc->exponents())
      product = product * RationalFunction(Polynomial(1), one_minus_t_pow(m));
    if (product != gamma) continue;

    IwahoriFunctionalRecord rec;
    rec.zeta_t = gamma;
    rec.product_form = product;
    rec.spherical_part = J;
    rec.rank_n = sys.rank() - 1;
    rec.product_identity_ok = true;

    RationalFunction reflected = gamma.substitute_reciprocal();
    RationalFunction expected = (rec.rank_n % 2 == 0) ? gamma : -gamma;
    rec.functional_equation_ok = (reflected == expected);

    for (const BigRational& t : {BigRational(BigInt(1), BigInt(2)),
                                 BigRational(BigInt(1), BigInt(3)),
                                 BigRational(2)}) {
      const BigRational lhs = gamma.eval(BigRational(1) / t);
      BigRational rhs = gamma.eval(t);
      if (rec.rank_n % 2 != 0) rhs = -rhs;
      rec.numeric_checks.push_back("t=" + t.str() + ": " +
                                   (lhs == rhs ? "ok" : "mismatch"));
      if (lhs != rhs) rec.functional_equation_ok = false;
    }
    return rec;
  }
  throw Error("not affine: no spherical part satisfies the product identity");
}

TreeZeta zeta_tree_vertex(const BigInt& d, const BigInt& bound) {
  if (d < 2) throw Error("tree degree parameter d must be at least 2");
  DirichletSeries series(bound);
  series.add(1, 1);
  // mu(O g O) = (d+1) d^{2k-1} for the sphere of radius 2k.
  BigInt n = (d + 1) * d;
  while (n <= bound) {
    series.add(n, 1);
    n *= d * d;
  }
  return {std::move(series), zeta_tree_vertex_value(d, -1)};
}

BigRational zeta_tree_vertex_value(const BigInt& d, long s) {
  if (s == 0) throw Error("pole at s = 0");
  // 1 + (1+d)^{-s} / (d^s - d^{-s}), exact at integer s.
  const BigRational dp = pow(BigRational(d), s);
  const BigRational dm = pow(BigRational(d), -s);
  return BigRational(1) + pow(BigRational(BigInt(d + 1)), -s) / (dp - dm);
}

TreeEdgeZeta zeta_tree_edge(const BigInt& d, const BigInt& bound) {
  if (d < 2) throw Error("tree degree parameter d must be at least 2");
  DirichletSeries series(bound);
  series.add(1, 1);
  BigInt n = d;
  while (n <= bound) {
    series.add(n, 2);
    n *= d;
  }
  // (1 + t)/(1 - t) under t = d^{-s}; at s = -1 this is (1+d)/(1-d).
  const RationalFunction form(Polynomial({BigRational(1), BigRational(1)}),
                              Polynomial({BigRational(1), BigRational(-1)}));
  return {std::move(series), form, form.eval(BigRational(d))};
}

}  // namespace epzeta
