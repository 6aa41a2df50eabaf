#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "epzeta/measures.hpp"

using namespace epzeta;

TEST_CASE("rebase follows mu_O = |U:O| mu_U") {
  SubgroupContext ctx;
  ctx.declare("U", "O", 5, 1);  // O <= U with index 5
  const HaarMeasure m(BigRational(1), "O");
  const HaarMeasure r = m.rebase("U", ctx);
  CHECK(r.coefficient() == BigRational(5));
  CHECK(r.base() == "U");
  CHECK(r.rebase("O", ctx).coefficient() == BigRational(1));

  // rebase to the own base is the identity
  CHECK(m.rebase("O", ctx).coefficient() == BigRational(1));
}

TEST_CASE("overlapping pair orientation") {
  // |U:U∩V| = 6 and |V:U∩V| = 4: mu_U assigns U∩V measure 1/6, mu_V assigns
  // it 1/4, so 1*mu_U = (2/3)*mu_V.
  SubgroupContext ctx;
  ctx.declare("U", "V", 6, 4);
  const HaarMeasure m(BigRational(1), "U");
  CHECK(m.rebase("V", ctx).coefficient() == BigRational(BigInt(2), BigInt(3)));
  CHECK(m.rebase("V", ctx).rebase("U", ctx).coefficient() == BigRational(1));
}

TEST_CASE("sign classification is rebase invariant") {
  SubgroupContext ctx;
  ctx.declare("A", "B", 3, 2);
  for (long c : {-7L, 0L, 9L}) {
    const HaarMeasure m(BigRational(BigInt(c), BigInt(5)), "A");
    CHECK(m.sign() == m.rebase("B", ctx).sign());
  }
  const HaarMeasure neg(BigRational(BigInt(1 - 3), BigInt(1 + 3)), "e");
  CHECK(neg.sign() < 0);
  CHECK(HaarMeasure(BigRational(0), "e").sign() == 0);
  CHECK(HaarMeasure(BigRational(1), "G").sign() > 0);
}

TEST_CASE("groupoid consistency on randomized contexts") {
  std::mt19937 rng(31415);
  for (int trial = 0; trial < 40; ++trial) {
    // assign hidden potentials, declare a random consistent set of pairs
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<BigRational> pot;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
      pot.emplace_back(BigInt(1 + static_cast<long>(rng() % 12)),
                       BigInt(1 + static_cast<long>(rng() % 12)));
      names.push_back("S" + std::to_string(i));
    }
    SubgroupContext ctx;
    for (int i = 1; i < n; ++i) {
      const int j = static_cast<int>(rng() % static_cast<unsigned>(i));
      const BigRational ratio = pot[static_cast<std::size_t>(i)] /
                                pot[static_cast<std::size_t>(j)];
      ctx.declare(names[static_cast<std::size_t>(i)],
                  names[static_cast<std::size_t>(j)], ratio.numerator(),
                  ratio.denominator());
    }
    // extra consistent chords
    for (int extra = 0; extra < 2; ++extra) {
      const int a = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int b = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (a == b) continue;
      const BigRational ratio = pot[static_cast<std::size_t>(a)] /
                                pot[static_cast<std::size_t>(b)];
      ctx.declare(names[static_cast<std::size_t>(a)],
                  names[static_cast<std::size_t>(b)], ratio.numerator(),
                  ratio.denominator());
    }
    // all pairwise indices agree with the hidden potentials
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        CHECK(ctx.index(names[static_cast<std::size_t>(a)],
                        names[static_cast<std::size_t>(b)]) ==
              pot[static_cast<std::size_t>(a)] / pot[static_cast<std::size_t>(b)]);
  }
}

TEST_CASE("inconsistent declarations are rejected") {
  SubgroupContext ctx;
  ctx.declare("A", "B", 2, 1);
  ctx.declare("B", "C", 2, 1);
  CHECK_THROWS_AS(ctx.declare("A", "C", 3, 1), Error);
  // consistent closure accepted
  ctx.declare("A", "C", 4, 1);
  CHECK(ctx.index("A", "C") == BigRational(4));
}

TEST_CASE("undeclared pairs fail loudly") {
  SubgroupContext ctx;
  ctx.declare("A", "B", 2, 1);
  ctx.declare("X", "Y", 3, 1);
  const HaarMeasure m(BigRational(1), "A");
  CHECK_THROWS_AS(m.rebase("X", ctx), Error);
  CHECK_THROWS_AS(m.rebase("unknown", ctx), Error);
  CHECK(ctx.related("A", "B"));
  CHECK_FALSE(ctx.related("A", "X"));
}

TEST_CASE("equality after rebasing is an equivalence") {
  SubgroupContext ctx;
  ctx.declare("U", "V", 4, 1);
  const HaarMeasure a(BigRational(1), "U");
  const HaarMeasure b(BigRational(BigInt(1), BigInt(4)), "V");
  CHECK(a.equals(b, ctx));
  CHECK(b.equals(a, ctx));
  CHECK(a.equals(a, ctx));
}

TEST_CASE("rendering and context parsing") {
  CHECK(HaarMeasure(BigRational(BigInt(-1), BigInt(2)), "I").str() == "-1/2 * mu[I]");
  CHECK(HaarMeasure(BigRational(3), "B").str() == "3 * mu[B]");

  std::istringstream in("pair U O 5 1\npair V O 2 1\n");
  const SubgroupContext ctx = SubgroupContext::parse(in, "test");
  CHECK(ctx.index("U", "V") == BigRational(BigInt(5), BigInt(2)));

  std::istringstream bad("pair U O five 1\n");
  CHECK_THROWS_AS(SubgroupContext::parse(bad, "test"), ParseError);
}
