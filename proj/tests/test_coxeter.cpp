#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "epzeta/verify.hpp"
#include "oracles.hpp"

using namespace epzeta;

namespace {

Word random_word(std::mt19937& rng, int rank, int max_len) {
  Word w;
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int i = 0; i < len; ++i)
    w.push_back(static_cast<int>(rng() % static_cast<unsigned>(rank)));
  return w;
}

}  // namespace

TEST_CASE("normal forms in A2 match the permutation oracle") {
  const CoxeterSystem a2 = CoxeterSystem::type_a(2);
  CHECK(a2.normal_form({0, 1, 0, 1}).word() == Word{1, 0});
  CHECK(a2.normal_form({}).word() == Word{});

  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 2, 8);
    const Word v = random_word(rng, 2, 8);
    const bool lib = a2.normal_form(u) == a2.normal_form(v);
    CHECK(lib == oracles::symmetric_equal(u, v, 2));
  }
}

TEST_CASE("normal forms match the oracles across systems") {
  std::mt19937 rng(2);
  struct Case {
    CoxeterSystem sys;
    std::function<bool(const Word&, const Word&)> equal;
  };
  std::vector<Case> cases;
  cases.push_back({CoxeterSystem::type_a(1),
                   [](const Word& u, const Word& v) {
                     return oracles::symmetric_equal(u, v, 1);
                   }});
  cases.push_back({CoxeterSystem::type_a(3),
                   [](const Word& u, const Word& v) {
                     return oracles::symmetric_equal(u, v, 3);
                   }});
  cases.push_back({system_a1xa1(),
                   [](const Word& u, const Word& v) {
                     return oracles::dihedral_equal(u, v, 2);
                   }});
  cases.push_back({CoxeterSystem::dihedral(5),
                   [](const Word& u, const Word& v) {
                     return oracles::dihedral_equal(u, v, 5);
                   }});
  cases.push_back({CoxeterSystem::dihedral(7),
                   [](const Word& u, const Word& v) {
                     return oracles::dihedral_equal(u, v, 7);
                   }});
  cases.push_back({system_affine_a1(),
                   [](const Word& u, const Word& v) {
                     return oracles::dihedral_equal(u, v, 0);
                   }});
  for (const auto& c : cases) {
    for (int i = 0; i < 200; ++i) {
      const Word u = random_word(rng, c.sys.rank(), 9);
      const Word v = random_word(rng, c.sys.rank(), 9);
      const bool lib = c.sys.normal_form(u) == c.sys.normal_form(v);
      REQUIRE(lib == c.equal(u, v));
    }
  }
}

TEST_CASE("normal form is idempotent and ShortLex minimal") {
  std::mt19937 rng(3);
  const CoxeterSystem sys = system_affine_a2();
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 3, 10);
    const NormalForm nf = sys.normal_form(w);
    CHECK(sys.normal_form(nf.word()) == nf);
  }
  // A1 x A1: commuting generators order in ShortLex
  CHECK(system_a1xa1().normal_form({1, 0}).word() == Word{0, 1});
}

TEST_CASE("length changes by exactly one under a generator") {
  std::mt19937 rng(4);
  for (const CoxeterSystem& sys :
       {CoxeterSystem::type_a(3), system_affine_a2(), system_infinite_triangle()}) {
    for (int i = 0; i < 60; ++i) {
      const Word w = random_word(rng, sys.rank(), 8);
      const NormalForm nf = sys.normal_form(w);
      for (int s = 0; s < sys.rank(); ++s) {
        Word ws = nf.word();
        ws.push_back(s);
        const int delta = sys.length(ws) - nf.length();
        CHECK((delta == 1 || delta == -1));
      }
    }
  }
}

TEST_CASE("enumeration counts of the shipped systems") {
  CHECK(CoxeterSystem::type_a(2).counts_by_length(3) ==
        std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(system_affine_a1().counts_by_length(4) ==
        std::vector<std::size_t>{1, 2, 2, 2, 2});
  CHECK(CoxeterSystem::type_a(1).counts_by_length(5) ==
        std::vector<std::size_t>{1, 1, 0, 0, 0, 0});
  CHECK(CoxeterSystem::type_a(3).counts_by_length(6) ==
        std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1});
  CHECK(CoxeterSystem::dihedral(5).counts_by_length(5) ==
        std::vector<std::size_t>{1, 2, 2, 2, 2, 1});
  CHECK(system_infinite_triangle().counts_by_length(4) ==
        std::vector<std::size_t>{1, 3, 6, 12, 24});
}

TEST_CASE("finite type classification") {
  const auto a2 = CoxeterSystem::type_a(2).classify_finite();
  REQUIRE(a2.has_value());
  CHECK(a2->exponents() == std::vector<int>{1, 2});
  CHECK(a2->order() == 6);

  CHECK_FALSE(system_affine_a2().classify_finite().has_value());
  CHECK_FALSE(system_affine_a1().classify_finite().has_value());

  const auto i27 = CoxeterSystem::dihedral(7).classify_finite();
  REQUIRE(i27.has_value());
  CHECK(i27->exponents() == std::vector<int>{1, 6});
  CHECK(i27->components[0].type == "I2(7)");
  CHECK(i27->order() == 14);

  // B3, D4, F4, H3 and an affine lookalike
  const CoxeterSystem b3(3, {{1, 4, 2}, {4, 1, 3}, {2, 3, 1}});
  REQUIRE(b3.classify_finite().has_value());
  CHECK(b3.classify_finite()->exponents() == std::vector<int>{1, 3, 5});
  CHECK(b3.classify_finite()->order() == 48);

  const CoxeterSystem d4(4, {{1, 2, 3, 2}, {2, 1, 3, 2}, {3, 3, 1, 3}, {2, 2, 3, 1}});
  REQUIRE(d4.classify_finite().has_value());
  CHECK(d4.classify_finite()->order() == 192);
  CHECK(d4.classify_finite()->components[0].type == "D4");

  const CoxeterSystem f4(4, {{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}});
  REQUIRE(f4.classify_finite().has_value());
  CHECK(f4.classify_finite()->order() == 1152);

  const CoxeterSystem h3(3, {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
  REQUIRE(h3.classify_finite().has_value());
  CHECK(h3.classify_finite()->order() == 120);

  // affine C2 = path with two 4s: infinite
  const CoxeterSystem c2t(3, {{1, 4, 2}, {4, 1, 4}, {2, 4, 1}});
  CHECK_FALSE(c2t.classify_finite().has_value());

  // a cycle of 3s: infinite (affine A2)
  CHECK_FALSE(system_affine_a2().classify_finite().has_value());

  // order cross-check against enumeration for A3 and I2(5)
  const auto a3 = CoxeterSystem::type_a(3).classify_finite();
  const auto counts = CoxeterSystem::type_a(3).counts_by_length(6);
  std::size_t total = 0;
  for (auto c : counts) total += c;
  CHECK(BigInt(static_cast<long>(total)) == a3->order());
}

TEST_CASE("exceptional-type orders from the exponent tables") {
  // |W| = prod (m_i + 1) against the classical orders
  auto order_of = [](const CoxeterSystem& sys) {
    const auto d = sys.classify_finite();
    REQUIRE(d.has_value());
    return d->order();
  };
  // E6: path 1-2-3-4-5 with 6 attached to vertex 3
  std::vector<std::vector<int>> e6(6, std::vector<int>(6, 2));
  for (int i = 0; i < 6; ++i) e6[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  auto join = [](std::vector<std::vector<int>>& m, int a, int b) {
    m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 3;
    m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 3;
  };
  join(e6, 0, 1); join(e6, 1, 2); join(e6, 2, 3); join(e6, 3, 4); join(e6, 2, 5);
  CHECK(order_of(CoxeterSystem(6, e6)) == 51840);

  auto e7 = e6;
  for (auto& row : e7) row.push_back(2);
  e7.push_back(std::vector<int>(7, 2));
  e7[6][6] = 1;
  join(e7, 4, 6);
  CHECK(order_of(CoxeterSystem(7, e7)) == 2903040);

  auto e8 = e7;
  for (auto& row : e8) row.push_back(2);
  e8.push_back(std::vector<int>(8, 2));
  e8[7][7] = 1;
  join(e8, 6, 7);
  CHECK(order_of(CoxeterSystem(8, e8)) == BigInt(696729600));

  const CoxeterSystem h4(4, {{1, 5, 2, 2}, {5, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}});
  CHECK(order_of(h4) == 14400);

  const CoxeterSystem b4(4, {{1, 4, 2, 2}, {4, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}});
  CHECK(order_of(b4) == 384);

  // affine lookalikes stay infinite: E6~ = E6 with one more leg on vertex 5
  auto e6t = e6;
  for (auto& row : e6t) row.push_back(2);
  e6t.push_back(std::vector<int>(7, 2));
  e6t[6][6] = 1;
  join(e6t, 5, 6);
  CHECK_FALSE(CoxeterSystem(7, e6t).classify_finite().has_value());
}

TEST_CASE("enumeration agrees with the exponent-table growth polynomials") {
  // Exercises the braid rewriting at bond orders 4 and 5 on full groups.
  for (const CoxeterSystem& sys :
       {CoxeterSystem(3, {{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}),     // B3
        CoxeterSystem(3, {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}),     // H3
        CoxeterSystem::dihedral(7)}) {
    const Polynomial growth = sys.growth_polynomial();
    const auto counts = sys.counts_by_length(growth.degree());
    for (int k = 0; k <= growth.degree(); ++k)
      CHECK(growth.coefficient(k) ==
            BigRational(static_cast<long>(counts[static_cast<std::size_t>(k)])));
  }
}

TEST_CASE("rank-0 degenerate system") {
  const CoxeterSystem trivial(0, {});
  CHECK(trivial.counts_by_length(3) == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(trivial.growth_polynomial() == Polynomial(1));
  CHECK(trivial.classify_finite().has_value());
  CHECK(trivial.classify_finite()->order() == 1);
}

TEST_CASE("growth polynomial of finite systems") {
  CHECK(CoxeterSystem::type_a(2).growth_polynomial().str() == "1 2 2 1");
  CHECK(CoxeterSystem::type_a(1).growth_polynomial().str() == "1 1");
  CHECK(system_a1xa1().growth_polynomial().str() == "1 2 1");
  CHECK(CoxeterSystem::type_a(2).growth_polynomial().eval(BigRational(1)) ==
        BigRational(6));
  CHECK_THROWS_WITH_AS(system_affine_a1().growth_polynomial(), "not spherical",
                       Error);
}

TEST_CASE("growth series rational forms") {
  CHECK(system_affine_a1().growth_series() ==
        RationalFunction(Polynomial({BigRational(1), BigRational(1)}),
                         Polynomial({BigRational(1), BigRational(-1)})));
  CHECK(CoxeterSystem::type_a(2).growth_series() ==
        RationalFunction(Polynomial::parse("1 2 2 1")));
  const RationalFunction bott(
      Polynomial::parse("1 1") * Polynomial::parse("1 1 1"),
      Polynomial::parse("1 -1") * Polynomial::parse("1 0 -1"));
  CHECK(system_affine_a2().growth_series() == bott);
}

TEST_CASE("minimal double coset representatives") {
  const CoxeterSystem a2 = CoxeterSystem::type_a(2);
  const auto reps = a2.min_double_coset_reps({0}, {0}, 3);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].is_identity());
  CHECK(reps[1].word() == Word{1});

  // no constraints: everything
  const auto all = a2.min_double_coset_reps({}, {}, 3);
  CHECK(all.size() == 6);

  // infinite dihedral: alternating words starting and ending in s2
  const auto dreps = system_affine_a1().min_double_coset_reps({0}, {0}, 5);
  REQUIRE(dreps.size() == 4);
  CHECK(dreps[0].is_identity());
  CHECK(dreps[1].word() == Word{1});
  CHECK(dreps[2].word() == Word{1, 0, 1});
  CHECK(dreps[3].word() == Word{1, 0, 1, 0, 1});

  // exhaustive oracle in S4: one representative per double coset, minimal
  const CoxeterSystem a3 = CoxeterSystem::type_a(3);
  const auto model = oracles::symmetric_group_model(3);
  const auto lengths = model.word_lengths(6);
  const GeneratorSet J{0, 1}, K{1, 2};
  const auto xs = a3.min_double_coset_reps(J, K, 6);
  std::set<oracles::Permutation> wj, wk;
  {
    oracles::PermutationGroup sub;
    sub.points = 4;
    sub.generators = {model.generators[0], model.generators[1]};
    wj = sub.elements();
    sub.generators = {model.generators[1], model.generators[2]};
    wk = sub.elements();
  }
  std::set<oracles::Permutation> seen;
  int expected_cosets = 0;
  std::vector<int> min_lengths;
  for (const auto& [g, len] : lengths) {
    if (seen.count(g)) continue;
    ++expected_cosets;
    int best = 100;
    for (const auto& a : wj)
      for (const auto& b : wk) {
        const auto x = oracles::perm_compose(oracles::perm_compose(a, g), b);
        seen.insert(x);
        best = std::min(best, lengths.at(x));
      }
    min_lengths.push_back(best);
  }
  CHECK(static_cast<int>(xs.size()) == expected_cosets);
  std::multiset<int> got, want(min_lengths.begin(), min_lengths.end());
  for (const auto& x : xs) got.insert(x.length());
  CHECK(got == want);
}

TEST_CASE("cross sections Q(x)") {
  const CoxeterSystem a2 = CoxeterSystem::type_a(2);
  CHECK(a2.cross_section({0}, a2.normal_form({1})).empty());
  CHECK(a2.cross_section({0}, a2.identity()) == GeneratorSet{0});

  const CoxeterSystem aff = system_affine_a1();
  CHECK(aff.cross_section({0}, aff.normal_form({1, 0, 1})).empty());
  CHECK_THROWS_WITH_AS(aff.cross_section({0}, aff.normal_form({0})),
                       "not a minimal representative", Error);

  // length preservation under conjugation by x for w in W_{Q(x)}
  const CoxeterSystem af2 = system_affine_a2();
  for (const auto& x : af2.min_double_coset_reps({0, 1}, {0, 1}, 8)) {
    const GeneratorSet q = af2.cross_section({0, 1}, x);
    const CoxeterSystem wq = af2.subsystem(q);
    const int bound = std::min(6, wq.is_spherical()
                                      ? wq.growth_polynomial().degree()
                                      : 6);
    for (const auto& layer : wq.elements_by_length(bound))
      for (const auto& w : layer) {
        Word parent;
        for (int s : w.word()) parent.push_back(q[static_cast<std::size_t>(s)]);
        Word conj = x.word();
        conj.insert(conj.end(), parent.begin(), parent.end());
        conj.insert(conj.end(), x.word().rbegin(), x.word().rend());
        CHECK(af2.length(conj) == w.length());
      }
  }
}

TEST_CASE("parabolic decomposition w = y x z") {
  const CoxeterSystem a2 = CoxeterSystem::type_a(2);
  {
    const auto f = a2.parabolic_decompose({0}, {0}, a2.identity());
    CHECK(f.left.is_identity());
    CHECK(f.middle.is_identity());
    CHECK(f.right.is_identity());
  }
  {
    const auto f = a2.parabolic_decompose({0}, {0}, a2.normal_form({0, 1}));
    CHECK(f.left.word() == Word{0});
    CHECK(f.middle.word() == Word{1});
    CHECK(f.right.is_identity());
  }
  {
    const auto f = a2.parabolic_decompose({0}, {0}, a2.normal_form({0, 1, 0}));
    CHECK(f.left.word() == Word{0});
    CHECK(f.middle.word() == Word{1});
    CHECK(f.right.word() == Word{0});
  }

  // uniqueness contract on random elements: lengths additive, the middle is
  // a minimal representative, recombination returns w, and the right factor
  // has no left descent from K ∩ x^{-1} J x.
  std::mt19937 rng(5);
  for (const CoxeterSystem& sys : {CoxeterSystem::type_a(3), system_affine_a2()}) {
    const GeneratorSet J{0, 1}, K{sys.rank() - 2, sys.rank() - 1};
    for (int i = 0; i < 80; ++i) {
      const NormalForm w = sys.normal_form(random_word(rng, sys.rank(), 9));
      const auto f = sys.parabolic_decompose(J, K, w);
      CHECK(f.left.length() + f.middle.length() + f.right.length() == w.length());
      CHECK(sys.mul(sys.mul(f.left, f.middle), f.right) == w);
      for (int s : J) CHECK_FALSE(sys.has_left_descent(f.middle, s));
      for (int s : K) CHECK_FALSE(sys.has_right_descent(f.middle, s));
      const GeneratorSet q = [&] {
        GeneratorSet out;
        for (int r : K) {
          Word conj = f.middle.word();
          conj.push_back(r);
          conj.insert(conj.end(), f.middle.word().rbegin(), f.middle.word().rend());
          const NormalForm c = sys.normal_form(conj);
          if (c.length() == 1 &&
              std::find(J.begin(), J.end(), c.word()[0]) != J.end())
            out.push_back(r);
        }
        return out;
      }();
      for (int s : q) CHECK_FALSE(sys.has_left_descent(f.right, s));
    }
  }
}

TEST_CASE("input format") {
  std::istringstream in(
      "rank 3\n"
      "labels a b c\n"
      "m 1 2 3\n"
      "m 2 3 inf\n");
  const CoxeterSystem sys = CoxeterSystem::parse(in, "test");
  CHECK(sys.rank() == 3);
  CHECK(sys.bond(0, 1) == 3);
  CHECK(sys.bond(1, 2) == CoxeterSystem::kInfiniteBond);
  CHECK(sys.bond(0, 2) == 2);
  CHECK(sys.label(0) == "a");

  std::istringstream bad("rank 2\nm 1 5 3\n");
  CHECK_THROWS_AS(CoxeterSystem::parse(bad, "test"), ParseError);
  std::istringstream bad2("m 1 2 3\n");
  CHECK_THROWS_AS(CoxeterSystem::parse(bad2, "test"), ParseError);
  std::istringstream bad3("rank 2\nm 1 2 1\n");
  CHECK_THROWS_AS(CoxeterSystem::parse(bad3, "test"), ParseError);
}

TEST_CASE("concurrent normal-form queries") {
  const CoxeterSystem sys = system_affine_a2();
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&sys, &ok, t] {
      std::mt19937 rng(static_cast<unsigned>(100 + t));
      for (int i = 0; i < 50; ++i) {
        Word w;
        for (int k = 0; k < 8; ++k)
          w.push_back(static_cast<int>(rng() % 3));
        const NormalForm nf = sys.normal_form(w);
        if (sys.normal_form(nf.word()) != nf) ok = false;
      }
    });
  for (auto& th : workers) th.join();
  CHECK(ok.load());
}
