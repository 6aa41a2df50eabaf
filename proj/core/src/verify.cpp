#include "epzeta/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "epzeta/hecke.hpp"
#include "epzeta/zeta.hpp"

namespace epzeta {

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail = "") {
  out.push_back({name, pass, pass ? "" : detail});
}

struct NamedSystem {
  std::string name;
  CoxeterSystem sys;
};

std::vector<NamedSystem> growth_test_systems() {
  std::vector<NamedSystem> out;
  out.push_back({"A1", CoxeterSystem::type_a(1)});
  out.push_back({"A2", CoxeterSystem::type_a(2)});
  out.push_back({"A3", CoxeterSystem::type_a(3)});
  out.push_back({"I2(5)", CoxeterSystem::dihedral(5)});
  out.push_back({"A1xA1", system_a1xa1()});
  out.push_back({"affine A1", system_affine_a1()});
  out.push_back({"affine A2", system_affine_a2()});
  out.push_back({"free triangle", system_infinite_triangle()});
  return out;
}

// --- literal convolution oracle on the order-6 group with an order-2 Borel --

using Perm3 = std::array<int, 3>;

Perm3 compose(const Perm3& a, const Perm3& b) {
  // (a b)(x) = a(b(x))
  return {a[b[0]], a[b[1]], a[b[2]]};
}

Perm3 invert(const Perm3& a) {
  Perm3 out{};
  for (int i = 0; i < 3; ++i) out[a[static_cast<std::size_t>(i)]] = i;
  return out;
}

struct ConvolutionOracle {
  std::vector<Perm3> group;
  std::vector<Perm3> borel;
  std::vector<int> coset_of;  // index into reps per group element
  std::vector<Perm3> reps;    // double coset representatives: {e, s}

  ConvolutionOracle() {
    const Perm3 e{0, 1, 2};
    group = {e};
    // generate S3 from the two adjacent transpositions
    const std::vector<Perm3> gens = {{1, 0, 2}, {0, 2, 1}};
    for (std::size_t i = 0; i < group.size(); ++i)
      for (const auto& s : gens) {
        const Perm3 h = compose(group[i], s);
        if (std::find(group.begin(), group.end(), h) == group.end())
          group.push_back(h);
      }
    std::sort(group.begin(), group.end());
    borel = {e, Perm3{1, 0, 2}};

    // B-double cosets
    coset_of.assign(group.size(), -1);
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (coset_of[i] != -1) continue;
      const int id = static_cast<int>(reps.size());
      reps.push_back(group[i]);
      for (const auto& b1 : borel)
        for (const auto& b2 : borel) {
          const Perm3 x = compose(compose(b1, group[i]), b2);
          coset_of[static_cast<std::size_t>(index_of(x))] = id;
        }
    }
  }

  int index_of(const Perm3& x) const {
    return static_cast<int>(
        std::find(group.begin(), group.end(), x) - group.begin());
  }

  // coefficient vector over reps of the convolution of two double-coset
  // indicators, with the Haar measure normalized by mu(B) = 1
  std::vector<BigRational> convolve(int rep_a, int rep_b) const {
    std::vector<BigRational> values(group.size(), BigRational(0));
    for (std::size_t x = 0; x < group.size(); ++x) {
      long count = 0;
      for (std::size_t g = 0; g < group.size(); ++g) {
        if (coset_of[g] != rep_a) continue;
        const Perm3 gx = compose(invert(group[g]), group[x]);
        if (coset_of[static_cast<std::size_t>(index_of(gx))] == rep_b) ++count;
      }
      values[x] = BigRational(count) / BigRational(static_cast<long>(borel.size()));
    }
    // read off one value per double coset (constant on each by construction)
    std::vector<BigRational> out(reps.size(), BigRational(0));
    for (std::size_t r = 0; r < reps.size(); ++r)
      out[r] = values[static_cast<std::size_t>(index_of(reps[r]))];
    return out;
  }
};

// --- randomized helpers ------------------------------------------------------

long rand_in(std::mt19937& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

HeckeElement<BigRational> random_element(const HeckeAlgebraQ& alg,
                                         std::mt19937& rng, int max_len) {
  HeckeElement<BigRational> out = alg.zero();
  const int terms = static_cast<int>(rand_in(rng, 1, 3));
  for (int i = 0; i < terms; ++i) {
    Word w;
    const int len = static_cast<int>(rand_in(rng, 0, max_len));
    for (int k = 0; k < len; ++k)
      w.push_back(static_cast<int>(rand_in(rng, 0, alg.system().rank() - 1)));
    const BigRational c(rand_in(rng, -3, 3));
    out = alg.add(out, alg.scale(c, alg.basis(w)));
  }
  return out;
}

std::string coeffs_str(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

CoxeterSystem system_affine_a1() { return CoxeterSystem::dihedral(CoxeterSystem::kInfiniteBond); }

CoxeterSystem system_affine_a2() {
  return CoxeterSystem(3, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
}

CoxeterSystem system_a1xa1() { return CoxeterSystem::dihedral(2); }

CoxeterSystem system_infinite_triangle() {
  const int inf = CoxeterSystem::kInfiniteBond;
  return CoxeterSystem(3, {{1, inf, inf}, {inf, 1, inf}, {inf, inf, 1}});
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> verify_growth() {
  std::vector<CheckResult> out;
  const int order = 12;

  for (const auto& [name, sys] : growth_test_systems()) {
    const auto counts = sys.counts_by_length(order);
    const TruncatedSeries expansion = sys.growth_series().expand(order);
    bool ok = true;
    for (int k = 0; k <= order; ++k)
      if (expansion.coefficient(k) != BigRational(static_cast<long>(counts[static_cast<std::size_t>(k)])))
        ok = false;
    check(out, "growth series expansion = enumeration to order 12 (" + name + ")",
          ok, "expansion " + expansion.str() + " vs counts " + coeffs_str(counts));
  }

  {
    const RationalFunction lhs = system_affine_a1().growth_series();
    const RationalFunction rhs =
        RationalFunction(Polynomial({1, 1})) *
        RationalFunction(Polynomial(1), Polynomial({1, -1}));
    check(out, "Bott factorization: affine A1 growth = (1+t)/(1-t)", lhs == rhs,
          lhs.str() + " != " + rhs.str());
  }
  {
    const RationalFunction lhs = system_affine_a2().growth_series();
    const RationalFunction rhs =
        RationalFunction(Polynomial({1, 1}) * Polynomial({1, 1, 1}),
                         Polynomial({1, -1}) * Polynomial({1, 0, -1}));
    check(out, "Bott factorization: affine A2 growth = (1+t)(1+t+t^2)/((1-t)(1-t^2))",
          lhs == rhs, lhs.str() + " != " + rhs.str());
  }

  // gamma_W = gamma_{W_J} * gamma_{^J W} to order 12.
  {
    struct Case { std::string name; CoxeterSystem sys; GeneratorSet J; };
    const std::vector<Case> cases = {
        {"affine A1, J={1}", system_affine_a1(), {0}},
        {"affine A2, J={1,2}", system_affine_a2(), {0, 1}},
        {"A3, J={1,3}", CoxeterSystem::type_a(3), {0, 2}},
    };
    for (const auto& c : cases) {
      const TruncatedSeries whole = c.sys.growth_series().expand(order);
      const TruncatedSeries left = TruncatedSeries::of_polynomial(
          c.sys.parabolic_growth_polynomial(c.J), order);
      std::vector<BigRational> coset(static_cast<std::size_t>(order) + 1,
                                     BigRational(0));
      for (const auto& x : c.sys.min_double_coset_reps(c.J, {}, order))
        coset[static_cast<std::size_t>(x.length())] += BigRational(1);
      const TruncatedSeries rhs = left * TruncatedSeries(coset, order);
      check(out, "coset factorization gamma_W = gamma_{W_J} * gamma_{^JW} (" + c.name + ")",
            whole == rhs, whole.str() + " != " + rhs.str());
    }
  }
  return out;
}

std::vector<CheckResult> verify_euler() {
  std::vector<CheckResult> out;

  // (d+1)-regular tree through its one-edge graph of groups.
  for (long d : {2L, 3L, 5L, 10L}) {
    GraphOfGroups g;
    g.vertices = {{"Gr", std::nullopt}, {"Gb", std::nullopt}};
    g.edges = {{"e", 0, 1, BigInt(d + 1), BigInt(d + 1), std::nullopt}};
    const auto res = euler_graph_of_groups(g);
    const HaarMeasure expected(BigRational(BigInt(1 - d), BigInt(1 + d)), "e");
    check(out,
          "chi of the (" + std::to_string(d + 1) + ")-regular tree group = (1-d)/(1+d) * mu[edge]",
          res.chi.coefficient() == expected.coefficient() && res.chi.base() == "e",
          res.chi.str());
  }

  // The order-(2,3,1) amalgam.
  {
    GraphOfGroups g;
    g.vertices = {{"A", BigInt(2)}, {"B", BigInt(3)}};
    g.edges = {{"e", 0, 1, BigInt(3), BigInt(2), BigInt(1)}};
    const auto res = euler_graph_of_groups(g);
    check(out, "amalgam of orders (2,3) over 1: chi = -1/6 * mu[1]",
          res.chi.base() == "1" && res.chi.coefficient() == BigRational(BigInt(-1), BigInt(6)),
          res.chi.str());
  }

  // Chevalley closed form against the building route.
  for (long q : {2L, 3L, 5L}) {
    const HaarMeasure chev = euler_chevalley({"A", 1, BigInt(q)});
    const HaarMeasure build = euler_building(system_affine_a1(), BigInt(q));
    check(out, "Chevalley A1 = building route (q=" + std::to_string(q) + ")",
          chev.coefficient() == build.coefficient() &&
              chev.coefficient() == BigRational(BigInt(1 - q), BigInt(1 + q)),
          chev.str() + " vs " + build.str());
  }
  {
    const HaarMeasure chev = euler_chevalley({"A", 2, BigInt(2)});
    const HaarMeasure build = euler_building(system_affine_a2(), BigInt(2));
    check(out, "Chevalley A2 at q=2 = 1/7 * mu[I] = building route",
          chev.coefficient() == BigRational(BigInt(1), BigInt(7)) &&
              build.coefficient() == chev.coefficient(),
          chev.str() + " vs " + build.str());
  }

  // Route independence: chamber-orbit data of the flag complex.
  for (long q : {2L, 3L}) {
    for (const auto& [name, sys] :
         {std::pair<std::string, CoxeterSystem>{"affine A1", system_affine_a1()},
          std::pair<std::string, CoxeterSystem>{"affine A2", system_affine_a2()}}) {
      const auto [data, ctx] = davis_chamber_data(sys, BigInt(q));
      const HaarMeasure via_orbits = euler_from_orbits(data, ctx, "B");
      const HaarMeasure via_growth = euler_building(sys, BigInt(q));
      check(out, "orbit route = growth route (" + name + ", q=" + std::to_string(q) + ")",
            via_orbits.coefficient() == via_growth.coefficient(),
            via_orbits.str() + " vs " + via_growth.str());
    }
  }

  // Compact degenerations.
  {
    GraphOfGroups g;
    g.vertices = {{"O", std::nullopt}};
    const auto res = euler_graph_of_groups(g);
    check(out, "single profinite vertex: chi = 1 * mu[G_v]",
          res.chi.coefficient() == BigRational(1) && res.chi.base() == "O",
          res.chi.str());
    check(out, "compact normalization chi = 1 * mu[G]",
          euler_compact("O").coefficient() == BigRational(1), "");
  }

  // Non-positivity on randomized unimodular multi-vertex inputs, and the
  // exact counting-measure coefficient.
  {
    std::mt19937 rng(20240511);
    bool signs_ok = true, coeff_ok = true, trees_ok = true;
    std::string detail;
    for (int trial = 0; trial < 50; ++trial) {
      const GraphOfGroups g = random_unimodular_gog(rng);
      if (unimodularity_violation(g)) {
        trees_ok = false;
        detail = "generated instance flagged non-unimodular";
        break;
      }
      const auto cert = check_nonpositive(g);
      if (!cert.applicable || !cert.nonpositive) {
        signs_ok = false;
        detail = "chi = " + cert.chi.str();
        break;
      }
      const auto res = euler_graph_of_groups(g);
      BigRational direct(0);
      for (const auto& v : g.vertices)
        direct += BigRational(BigInt(1), *v.order);
      for (const auto& e : g.edges) {
        const BigInt edge_order =
            *g.vertices[static_cast<std::size_t>(e.terminal)].order / e.index_terminal;
        direct -= BigRational(BigInt(1), edge_order);
      }
      if (res.chi.base() != "1" || res.chi.coefficient() != direct) {
        coeff_ok = false;
        detail = res.chi.str() + " vs direct " + direct.str();
        break;
      }
    }
    check(out, "50 randomized unimodular graphs of finite groups: chi <= 0 after collapse",
          signs_ok && trees_ok, detail);
    check(out, "counting-measure coefficient = sum 1/|G_v| - sum 1/|G_e| exactly",
          coeff_ok, detail);
  }

  // Tree-shaped inputs always pass the unimodularity check.
  {
    std::mt19937 rng(77);
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      GraphOfGroups g = random_unimodular_gog(rng);
      // strip the non-tree edges (keep the first nv-1, which form the tree)
      g.edges.resize(g.vertices.size() - 1);
      ok = !unimodularity_violation(g).has_value();
    }
    check(out, "tree inputs are unimodular", ok, "");
  }

  // A deliberately inconsistent cycle is rejected.
  {
    GraphOfGroups g;
    g.vertices = {{"A", std::nullopt}, {"B", std::nullopt}, {"C", std::nullopt}};
    g.edges = {{"ab", 0, 1, BigInt(2), BigInt(2), std::nullopt},
               {"bc", 1, 2, BigInt(2), BigInt(2), std::nullopt},
               {"ca", 2, 0, BigInt(2), BigInt(3), std::nullopt}};
    bool rejected = false;
    std::string which;
    try {
      euler_graph_of_groups(g);
    } catch (const Error& e) {
      rejected = true;
      which = e.what();
    }
    check(out, "inconsistent commensurability cycle is rejected", rejected, which);
  }

  // Lattice route.
  {
    const HaarMeasure m = euler_from_lattice(BigRational(BigInt(-1), BigInt(6)),
                                             BigRational(BigInt(1), BigInt(2)), "O");
    check(out, "lattice route: chi_Gamma / covolume",
          m.coefficient() == BigRational(BigInt(-1), BigInt(3)), m.str());
  }
  return out;
}

std::vector<CheckResult> verify_zeta() {
  std::vector<CheckResult> out;

  // Regular trees: coefficients and special values at both subgroup levels.
  for (long d : {2L, 3L, 5L, 10L}) {
    const BigInt bound = pow(BigInt(d), 12);
    const auto edge = zeta_tree_edge(BigInt(d), bound);
    bool coeffs_ok = edge.series.count(1) == 1;
    BigInt n = d;
    while (n <= bound) {
      if (edge.series.count(n) != 2) coeffs_ok = false;
      n *= d;
    }
    coeffs_ok = coeffs_ok &&
                edge.series.counts().size() ==
                    static_cast<std::size_t>(1 + 12);
    check(out, "tree edge level (d=" + std::to_string(d) + "): counts {1:1, d^k:2}",
          coeffs_ok, edge.series.str());
    check(out, "tree edge level (d=" + std::to_string(d) + "): value at s=-1 = (1+d)/(1-d)",
          edge.value_at_minus_one == BigRational(BigInt(1 + d), BigInt(1 - d)),
          edge.value_at_minus_one.str());

    const auto vertex = zeta_tree_vertex(BigInt(d), bound);
    bool v_ok = vertex.series.count(1) == 1;
    std::size_t expected_terms = 1;
    BigInt m = (d + 1) * d;
    while (m <= bound) {
      if (vertex.series.count(m) != 1) v_ok = false;
      ++expected_terms;
      m *= d * d;
    }
    v_ok = v_ok && vertex.series.counts().size() == expected_terms;
    check(out, "tree vertex level (d=" + std::to_string(d) + "): counts {1:1, (d+1)d^(2k-1):1}",
          v_ok, vertex.series.str());
    check(out, "tree vertex level (d=" + std::to_string(d) + "): value at s=-1 = 1/(1-d)",
          vertex.value_at_minus_one == BigRational(BigInt(1), BigInt(1 - d)),
          vertex.value_at_minus_one.str());

    // chi identity: zeta(-1)^{-1} * mu_e = chi of the tree group.
    GraphOfGroups g;
    g.vertices = {{"Gr", std::nullopt}, {"Gb", std::nullopt}};
    g.edges = {{"e", 0, 1, BigInt(d + 1), BigInt(d + 1), std::nullopt}};
    const auto chi = euler_graph_of_groups(g).chi;
    check(out, "tree (d=" + std::to_string(d) + "): zeta(-1)^{-1} * mu[edge] = chi",
          chi.coefficient() == edge.value_at_minus_one.inverse(),
          chi.str() + " vs 1/(" + edge.value_at_minus_one.str() + ")");
  }

  // Tree/building coincidence: the edge-level series is the chamber zeta of
  // the infinite dihedral system.
  for (long d : {2L, 3L}) {
    const auto chamber = zeta_chamber(system_affine_a1(), BigInt(d), 12);
    const auto edge = zeta_tree_edge(BigInt(d), pow(BigInt(d), 12));
    check(out, "tree edge series = chamber series of affine A1 (d=" + std::to_string(d) + ")",
          chamber.series == edge.series &&
              chamber.rational_form == edge.rational_form,
          "");
  }

  // Chamber level: the Dirichlet coefficients are the growth coefficients
  // under n = q^m, and chi * gamma(q) = mu_B.
  for (long q : {2L, 3L}) {
    for (const auto& [name, sys] :
         {std::pair<std::string, CoxeterSystem>{"affine A1", system_affine_a1()},
          std::pair<std::string, CoxeterSystem>{"affine A2", system_affine_a2()}}) {
      const auto z = zeta_chamber(sys, BigInt(q), 12);
      const TruncatedSeries expansion = z.rational_form.expand(12);
      bool ok = true;
      BigInt n = 1;
      for (int m = 0; m <= 12; ++m) {
        if (BigRational(BigInt(static_cast<long>(z.series.count(n)))) !=
            expansion.coefficient(m))
          ok = false;
        n *= q;
      }
      check(out, "chamber series = growth expansion under n=q^m (" + name +
                     ", q=" + std::to_string(q) + ")",
            ok, "");

      const HaarMeasure chi = euler_building(sys, BigInt(q));
      const BigRational gamma_q = z.rational_form.eval(BigRational(BigInt(q)));
      check(out, "chi * gamma(q) = mu_B (" + name + ", q=" + std::to_string(q) + ")",
            chi.coefficient() * gamma_q == BigRational(1), "");
    }
  }

  // Parabolic level: the factorization identity
  //   gamma_W = gamma_{W_J} * sum_Q gamma_{^Q W_J} * gamma_{p_{Q,J}}
  // to order 12, the closed special value, and chi across bases.
  {
    struct Case { std::string name; CoxeterSystem sys; GeneratorSet J; };
    std::vector<Case> cases = {{"affine A1, J={1}", system_affine_a1(), {0}},
                               {"affine A2, J={1}", system_affine_a2(), {0}},
                               {"affine A2, J={2}", system_affine_a2(), {1}},
                               {"affine A2, J={3}", system_affine_a2(), {2}},
                               {"affine A2, J={1,2}", system_affine_a2(), {0, 1}},
                               {"affine A2, J={1,3}", system_affine_a2(), {0, 2}},
                               {"affine A2, J={2,3}", system_affine_a2(), {1, 2}}};
    const int order = 12;
    for (const auto& c : cases) {
      for (long q : {2L, 3L}) {
        const ParabolicZetaData data(c.sys, BigInt(q), c.J, order);
        const auto z = zeta_parabolic(data);

        const BigRational gamma_w = c.sys.growth_series().eval(BigRational(BigInt(q)));
        const BigRational gamma_j =
            c.sys.parabolic_growth_polynomial(c.J).eval(BigRational(BigInt(q)));
        check(out, "parabolic value zeta(-1) = gamma_W(q)/gamma_{W_J}(q) (" +
                       c.name + ", q=" + std::to_string(q) + ")",
              z.value_at_minus_one == gamma_w / gamma_j,
              z.value_at_minus_one.str());

        // chi equality across the bases B and P_J.
        const HaarMeasure chi_b = euler_building(c.sys, BigInt(q));
        SubgroupContext ctx;
        ctx.declare(parabolic_name(c.J), "B", gamma_j.numerator(), 1);
        const HaarMeasure chi_pj =
            HaarMeasure(z.value_at_minus_one.inverse(), parabolic_name(c.J));
        check(out, "chi agrees in bases B and P_J (" + c.name + ", q=" +
                       std::to_string(q) + ")",
              chi_pj.rebase("B", ctx).coefficient() == chi_b.coefficient(),
              chi_pj.str() + " vs " + chi_b.str());
      }

      // Factorization of the growth series through the enumerated double
      // coset data (independent of q).
      const TruncatedSeries whole = c.sys.growth_series().expand(order);
      std::map<GeneratorSet, std::vector<BigRational>> p_series;
      for (const auto& x : c.sys.min_double_coset_reps(c.J, c.J, order)) {
        const GeneratorSet q_of_x = c.sys.cross_section(c.J, x);
        auto& coeffs = p_series[q_of_x];
        coeffs.resize(static_cast<std::size_t>(order) + 1, BigRational(0));
        coeffs[static_cast<std::size_t>(x.length())] += BigRational(1);
      }
      TruncatedSeries rhs = TruncatedSeries::zero(order);
      for (const auto& [Q, coeffs] : p_series) {
        std::vector<BigRational> minreps(static_cast<std::size_t>(order) + 1,
                                         BigRational(0));
        const CoxeterSystem wj = c.sys.subsystem(c.J);
        GeneratorSet q_local;
        for (int s : Q)
          q_local.push_back(static_cast<int>(
              std::lower_bound(c.J.begin(), c.J.end(), s) - c.J.begin()));
        for (const auto& v : wj.min_double_coset_reps(q_local, {}, order))
          minreps[static_cast<std::size_t>(v.length())] += BigRational(1);
        rhs = rhs + TruncatedSeries(minreps, order) * TruncatedSeries(coeffs, order);
      }
      rhs = TruncatedSeries::of_polynomial(c.sys.parabolic_growth_polynomial(c.J),
                                           order) *
            rhs;
      check(out, "parabolic factorization of gamma_W to order 12 (" + c.name + ")",
            whole == rhs, whole.str() + " != " + rhs.str());
    }
  }

  // Pro-p radical level: the scaling identity and chi consistency.
  {
    struct Case {
      std::string name;
      CoxeterSystem sys;
      GeneratorSet J;
      int ss_rank;
    };
    std::vector<Case> cases = {{"affine A1, J={1}", system_affine_a1(), {0}, 1},
                               {"affine A1, J={}", system_affine_a1(), {}, 1},
                               {"affine A2, J={1}", system_affine_a2(), {0}, 2},
                               {"affine A2, J={1,2}", system_affine_a2(), {0, 1}, 2},
                               {"affine A2, J={}", system_affine_a2(), {}, 2}};
    for (const auto& c : cases) {
      for (long q : {2L, 3L}) {
        const ProPRadicalData data(ParabolicZetaData(c.sys, BigInt(q), c.J, 12),
                                   c.ss_rank);
        const auto zp = zeta_pro_p(data);
        const auto z = zeta_parabolic(data.parabolic);
        check(out, "pro-p scaling zeta_{P1_J}(-1) = |P_J:P1_J| * zeta_{P_J}(-1) (" +
                       c.name + ", q=" + std::to_string(q) + ")",
              zp.value_at_minus_one ==
                  BigRational(zp.index_pj_p1j) * z.value_at_minus_one,
              zp.value_at_minus_one.str());

        const HaarMeasure chi_b = euler_building(c.sys, BigInt(q));
        SubgroupContext ctx;
        const BigRational gamma_j =
            c.sys.parabolic_growth_polynomial(c.J).eval(BigRational(BigInt(q)));
        const std::string pj = parabolic_name(c.J);
        if (!c.J.empty()) ctx.declare(pj, "B", gamma_j.numerator(), 1);
        ctx.declare(pj + "^1", pj, 1, zp.index_pj_p1j);
        const HaarMeasure chi_p1 =
            HaarMeasure(zp.value_at_minus_one.inverse(), pj + "^1");
        check(out, "chi = zeta(-1)^{-1} * mu[P1_J] matches the chamber level (" +
                       c.name + ", q=" + std::to_string(q) + ")",
              chi_p1.rebase("B", ctx).coefficient() == chi_b.coefficient(),
              chi_p1.str() + " vs " + chi_b.str());
      }
    }

    // Independent closed-form route for affine A1, J={1}: the minimal
    // representatives are the odd alternating words, so
    //   zeta(-1) = 1 * gamma~_{p_J}(q) + (1+q) * |B:B^1|-scaled geometric sum,
    // with gamma~_{p_empty}(t) = t/(1-t^2) and gamma~_{p_J}(t) = 1.
    for (long q : {2L, 3L}) {
      const CoxeterSystem sys = system_affine_a1();
      const BigRational t{BigInt(q)};
      const BigRational geo = t / (BigRational(1) - t * t);  // gamma~_{p_empty}(q)
      const BigRational pj_pq(BigInt(1 + q));
      const BigRational expected = BigRational(1) + pj_pq * geo;  // eq at s=-1
      const auto z = zeta_parabolic(ParabolicZetaData(sys, BigInt(q), {0}, 12));
      check(out, "affine A1 parabolic value via the p_{Q,J} closed forms (q=" +
                     std::to_string(q) + ")",
            z.value_at_minus_one == expected,
            z.value_at_minus_one.str() + " vs " + expected.str());
    }
  }

  // Iwahori functional equation.
  {
    for (const auto& [name, sys, n] :
         {std::tuple<std::string, CoxeterSystem, int>{"affine A1", system_affine_a1(), 1},
          std::tuple<std::string, CoxeterSystem, int>{"affine A2", system_affine_a2(), 2}}) {
      const auto rec = zeta_iwahori_functional(sys, 2);
      check(out, "Iwahori zeta product identity (" + name + ")",
            rec.product_identity_ok && rec.rank_n == n, "");
      check(out, "functional equation f(1/t) = (-1)^n f(t) (" + name + ")",
            rec.functional_equation_ok, rec.zeta_t.str());
    }
    bool rejected = false;
    try {
      zeta_iwahori_functional(CoxeterSystem::type_a(2), 2);
    } catch (const Error&) {
      rejected = true;
    }
    check(out, "spherical input rejected by the Iwahori functional check",
          rejected, "");
  }

  // Chamber-level point counts.
  {
    const CoxeterSystem sys = system_affine_a1();
    check(out, "double coset count |R(8)| at q=2 on affine A1",
          double_coset_count(sys, 2, 8) == 2, "");
    check(out, "double coset count |R(1)| = 1",
          double_coset_count(sys, 2, 1) == 1, "");
    check(out, "double coset count |R(6)| = 0 at q=2 (not a power of q)",
          double_coset_count(sys, 2, 6) == 0, "");
  }
  return out;
}

std::vector<CheckResult> verify_hecke() {
  std::vector<CheckResult> out;

  // Literal convolution in the order-6 group with its order-2 Borel against
  // the quadratic presentation at q = 2.
  {
    const ConvolutionOracle oracle;
    const HeckeAlgebraQ alg(CoxeterSystem::type_a(1), BigRational(2));
    const std::vector<HeckeElement<BigRational>> basis = {alg.basis({}),
                                                          alg.basis({0})};
    const std::vector<NormalForm> names = {alg.system().normal_form({}),
                                           alg.system().normal_form({0})};
    bool ok = oracle.reps.size() == 2;
    for (std::size_t a = 0; a < 2 && ok; ++a)
      for (std::size_t b = 0; b < 2 && ok; ++b) {
        const auto literal = oracle.convolve(static_cast<int>(a), static_cast<int>(b));
        const auto presented = alg.mult(basis[a], basis[b]);
        for (std::size_t r = 0; r < 2; ++r)
          if (presented.coefficient(names[r]) != literal[r]) ok = false;
      }
    check(out, "convolution oracle equivalence on the order-6 group (q=2, all basis pairs)",
          ok, "");
  }

  std::mt19937 rng(987654321);
  const std::vector<std::pair<std::string, CoxeterSystem>> systems = {
      {"affine A1", system_affine_a1()},
      {"A2", CoxeterSystem::type_a(2)},
      {"affine A2", system_affine_a2()}};

  // Associativity on random triples.
  {
    bool ok = true;
    for (const auto& [name, sys] : systems) {
      const HeckeAlgebraQ alg(sys, BigRational(2));
      for (int i = 0; i < 67 && ok; ++i) {
        const auto a = random_element(alg, rng, 4);
        const auto b = random_element(alg, rng, 4);
        const auto c = random_element(alg, rng, 4);
        ok = alg.mult(alg.mult(a, b), c) == alg.mult(a, alg.mult(b, c));
      }
    }
    check(out, "associativity of the Hecke product on 200 random triples", ok, "");
  }

  // Trace property tau(ab) = tau(ba).
  {
    bool ok = true;
    for (const auto& [name, sys] : systems) {
      const HeckeAlgebraQ alg(sys, BigRational(2));
      for (int i = 0; i < 67 && ok; ++i) {
        const auto a = random_element(alg, rng, 4);
        const auto b = random_element(alg, rng, 4);
        ok = alg.mult(a, b).trace() == alg.mult(b, a).trace();
      }
    }
    check(out, "trace property tau(ab) = tau(ba) on 200 random pairs", ok, "");
  }

  // Positivity: tau(a* a) > 0 for nonzero a, at q in {2, 3}.
  {
    bool ok = true;
    for (long q : {2L, 3L}) {
      for (const auto& [name, sys] : systems) {
        const HeckeAlgebraQ alg(sys, BigRational(q));
        for (int i = 0; i < 34 && ok; ++i) {
          const auto a = random_element(alg, rng, 4);
          const BigRational v = alg.mult(alg.star(a), a).trace();
          ok = a.is_zero() ? v.is_zero() : v.sign() > 0;
        }
      }
    }
    check(out, "positivity tau(a* a) > 0 for random nonzero a (q in {2,3})", ok, "");
  }

  // The star involution is an anti-homomorphism.
  {
    bool ok = true;
    const HeckeAlgebraQ alg(system_affine_a2(), BigRational(2));
    for (int i = 0; i < 50 && ok; ++i) {
      const auto a = random_element(alg, rng, 4);
      const auto b = random_element(alg, rng, 4);
      ok = alg.star(alg.mult(a, b)) == alg.mult(alg.star(b), alg.star(a)) &&
           alg.star(alg.star(a)) == a;
    }
    check(out, "star involution: (ab)* = b* a* and a** = a", ok, "");
  }

  // The index character is multiplicative and matches the chamber measures.
  {
    bool ok = true;
    const HeckeAlgebraQ alg(system_affine_a1(), BigRational(2));
    for (int i = 0; i < 50 && ok; ++i) {
      const auto a = random_element(alg, rng, 3);
      const auto b = random_element(alg, rng, 3);
      ok = alg.eps(alg.mult(a, b)) == alg.eps(a) * alg.eps(b);
    }
    for (int len = 0; len <= 4 && ok; ++len) {
      Word w;
      for (int k = 0; k < len; ++k) w.push_back(k % 2);
      ok = alg.eps(alg.basis(w)) == pow(BigRational(2), len);
    }
    check(out, "index character: eps multiplicative, eps(T_w) = q^{l(w)}", ok, "");
  }

  // Idempotents, formally in q and numerically.
  {
    const RationalFunction qf(Polynomial::t());
    const HeckeAlgebraF alg(system_affine_a2(), qf);
    bool ok = true;
    std::string detail;
    for (const GeneratorSet& J :
         {GeneratorSet{}, GeneratorSet{0}, GeneratorSet{1}, GeneratorSet{0, 1}}) {
      const auto e = alg.standard_idempotent(J);
      if (alg.mult(e, e) != e) { ok = false; detail = "e_J^2 != e_J"; }
      const RationalFunction gamma(
          alg.system().parabolic_growth_polynomial(J));
      if (e.trace() != RationalFunction(1) / gamma) {
        ok = false;
        detail = "tau(e_J) != 1/gamma_{W_J}(q)";
      }
      for (int s : J) {
        const auto lhs = alg.mult(alg.basis({s}), e);
        if (lhs != alg.scale(qf, e)) { ok = false; detail = "T_s e_J != q e_J"; }
      }
    }
    check(out, "standard idempotents: e_J^2 = e_J, tau(e_J) = 1/gamma_{W_J}(q), T_s e_J = q e_J (formal q)",
          ok, detail);
  }
  {
    bool ok = true;
    for (long q : {2L, 3L}) {
      const HeckeAlgebraQ alg(CoxeterSystem::type_a(2), BigRational(q));
      for (const GeneratorSet& J :
           {GeneratorSet{}, GeneratorSet{0}, GeneratorSet{1}, GeneratorSet{0, 1}}) {
        const auto e = alg.standard_idempotent(J);
        const BigRational t = e.trace();
        if (!(t.sign() > 0) || t > BigRational(1)) ok = false;
        if (alg.mult(e, e) != e) ok = false;
      }
    }
    check(out, "idempotent traces lie in (0, 1] at q in {2,3}", ok, "");
  }

  // Hattori-Stallings ranks.
  {
    const HeckeAlgebraQ alg(system_affine_a1(), BigRational(2));
    HeckeMatrix<BigRational> e(2);
    e.at(0, 0) = alg.standard_idempotent({0});
    const HaarMeasure rank = hattori_stallings_rank(alg, e, "B");
    SubgroupContext ctx;
    ctx.declare("P_{1}", "B", 3, 1);  // |P_{s}:B| = 1 + q = 3
    const HaarMeasure rebased = rank.rebase("P_{1}", ctx);
    check(out, "rank(diag(e_s, 0)) = 1/(1+q) * mu[B] = 1 * mu[P_s]",
          rank.coefficient() == BigRational(BigInt(1), BigInt(3)) &&
              rebased.coefficient() == BigRational(1),
          rank.str() + " -> " + rebased.str());

    HeckeMatrix<BigRational> id(3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = alg.unit();
    check(out, "rank(identity_3) = 3 * mu[B]",
          hattori_stallings_rank(alg, id, "B").coefficient() == BigRational(3), "");

    HeckeMatrix<BigRational> zero(2);
    check(out, "rank(0) = 0",
          hattori_stallings_rank(alg, zero, "B").coefficient().is_zero(), "");

    HeckeMatrix<BigRational> bad(1);
    bad.at(0, 0) = alg.basis({0});
    bool rejected = false;
    try {
      hattori_stallings_rank(alg, bad, "B");
    } catch (const Error&) {
      rejected = true;
    }
    check(out, "non-idempotent input rejected by the rank computation", rejected, "");

    // Sign contract on every constructed idempotent matrix.
    bool signs = true;
    for (const GeneratorSet& J : {GeneratorSet{}, GeneratorSet{0}, GeneratorSet{1}}) {
      HeckeMatrix<BigRational> m(2);
      m.at(0, 0) = alg.standard_idempotent(J);
      m.at(1, 1) = alg.unit();
      const HaarMeasure r = hattori_stallings_rank(alg, m, "B");
      if (r.sign() <= 0) signs = false;
    }
    check(out, "rank positivity: rank > 0 for nonzero idempotents, 0 only at 0",
          signs, "");
  }
  return out;
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out;
  for (auto* fn : {&verify_growth, &verify_euler, &verify_zeta, &verify_hecke}) {
    auto part = fn();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

GraphOfGroups random_unimodular_gog(std::mt19937& rng) {
  GraphOfGroups g;
  const int nv = static_cast<int>(rand_in(rng, 2, 5));
  std::vector<long> orders(static_cast<std::size_t>(nv));
  // Highly divisible root order keeps the divisor choices rich.
  orders[0] = (1L << rand_in(rng, 2, 5)) * (rand_in(rng, 0, 1) ? 3 : 9);
  g.vertices.push_back({"v0", BigInt(orders[0])});
  for (int v = 1; v < nv; ++v) {
    const int parent = static_cast<int>(rand_in(rng, 0, v - 1));
    // Edge group: a proper divisor of the parent order (index >= 2).
    const auto divs = divisors(orders[static_cast<std::size_t>(parent)]);
    std::vector<long> proper;
    for (long d : divs)
      if (orders[static_cast<std::size_t>(parent)] / d >= 2) proper.push_back(d);
    const long edge_order =
        proper[static_cast<std::size_t>(rand_in(rng, 0, static_cast<long>(proper.size()) - 1))];
    const long index_child = rand_in(rng, 2, 4);
    orders[static_cast<std::size_t>(v)] = edge_order * index_child;
    g.vertices.push_back({"v" + std::to_string(v), BigInt(orders[static_cast<std::size_t>(v)])});
    GraphOfGroups::Edge e;
    e.name = "e" + std::to_string(g.edges.size());
    e.origin = parent;
    e.terminal = v;
    e.index_origin = BigInt(orders[static_cast<std::size_t>(parent)] / edge_order);
    e.index_terminal = BigInt(index_child);
    e.order = BigInt(edge_order);
    g.edges.push_back(std::move(e));
  }
  // Occasionally close a cycle, keeping both indices >= 2.
  const int extra = static_cast<int>(rand_in(rng, 0, 2));
  for (int i = 0; i < extra; ++i) {
    const int a = static_cast<int>(rand_in(rng, 0, nv - 1));
    const int b = static_cast<int>(rand_in(rng, 0, nv - 1));
    if (a == b) continue;
    long gcd_ab = std::gcd(orders[static_cast<std::size_t>(a)],
                           orders[static_cast<std::size_t>(b)]);
    std::vector<long> candidates;
    for (long d : divisors(gcd_ab))
      if (orders[static_cast<std::size_t>(a)] / d >= 2 &&
          orders[static_cast<std::size_t>(b)] / d >= 2)
        candidates.push_back(d);
    if (candidates.empty()) continue;
    const long edge_order = candidates[static_cast<std::size_t>(
        rand_in(rng, 0, static_cast<long>(candidates.size()) - 1))];
    GraphOfGroups::Edge e;
    e.name = "e" + std::to_string(g.edges.size());
    e.origin = a;
    e.terminal = b;
    e.index_origin = BigInt(orders[static_cast<std::size_t>(a)] / edge_order);
    e.index_terminal = BigInt(orders[static_cast<std::size_t>(b)] / edge_order);
    e.order = BigInt(edge_order);
    g.edges.push_back(std::move(e));
  }
  return g;
}

}  // namespace epzeta
