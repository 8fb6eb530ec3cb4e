#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "parkfrob/errors.hpp"
#include "parkfrob/laurent.hpp"
#include "parkfrob/partition.hpp"
#include "parkfrob/ratqt.hpp"

using namespace parkfrob;
using testutil::q;
using testutil::t;

TEST_CASE("laurent arithmetic") {
  CHECK((q + t) + (q - t) == 2 * q);
  CHECK((1 + q) * (1 + t) == 1 + q + t + q * t);
  CHECK((q + t).eval(1, 1) == 2);
  CHECK((q - q).is_zero());
  CHECK((q - q).terms().empty());
  CHECK(LaurentQT::monomial(3, -1, 2).shifted(1, -2) == LaurentQT(3));
  CHECK((q + 2 * t * t).swapped() == t + 2 * q * q);
  CHECK((1 + q).to_string() == "1 + q");
}

TEST_CASE("laurent ring axioms on random triples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentQT a = testutil::random_poly(rng, 3, 3);
    const LaurentQT b = testutil::random_poly(rng, 3, 3);
    const LaurentQT c = testutil::random_poly(rng, 3, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentQT());
  }
}

TEST_CASE("laurent big coefficients stay exact") {
  LaurentQT f = 1 + q;
  LaurentQT p = 1;
  for (int i = 0; i < 80; ++i) p *= f;
  // Binomial coefficient C(80, 40) does not fit in 64 bits.
  CHECK(p.coeff(40, 0) == BigInt("107507208733336176461620"));
  CHECK(p.eval(1, 1) == BigInt(1) << 80);
}

TEST_CASE("laurent exact division") {
  const LaurentQT a = (1 + q) * (q - t);
  REQUIRE(a.divide_exact(q - t).has_value());
  CHECK(*a.divide_exact(q - t) == 1 + q);
  CHECK_FALSE((1 + q).divide_exact(1 + t).has_value());
}

TEST_CASE("rev_q") {
  CHECK(rev_q(q * q, 2) == LaurentQT(1));
  CHECK(rev_q(1 + q * t, 1) == q + t);
  CHECK_THROWS_WITH(rev_q(q * q * q, 2), doctest::Contains("degree bound violated"));
  CHECK_THROWS_WITH(rev_q(LaurentQT::monomial(1, -1, 0), 2), doctest::Contains("degree bound violated"));
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const LaurentQT f = testutil::random_poly(rng, 4, 3);
    CHECK(rev_q(rev_q(f, 4), 4) == f);
  }
}

TEST_CASE("partition basics") {
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(dominance_leq(Partition{2, 2, 1}, Partition{3, 1, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1, 1}, Partition{2, 2, 1}));
  CHECK(Partition{2, 1}.n_stat() == 1);
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{1}), Error);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK(Partition::rectangle(2, 3) == Partition{3, 3});
  CHECK(Partition::rectangle(0, 3).empty());
  CHECK(Partition::from_composition({1, 0, 3, 2}) == Partition{3, 2, 1});
}

TEST_CASE("partition counts and conjugation") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int m = 0; m <= 8; ++m) {
    const auto ps = partitions_of(m);
    CHECK(static_cast<int>(ps.size()) == p[m]);
    for (const Partition& l : ps) CHECK(l.conjugate().conjugate() == l);
  }
  CHECK(compositions_of(4).size() == 8);
}

TEST_CASE("dominance is a partial order") {
  for (int m = 1; m <= 8; ++m) {
    const auto ps = partitions_of(m);
    for (const auto& a : ps) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (a != b && dominance_leq(a, b)) CHECK_FALSE(dominance_leq(b, a));
        for (const auto& c : ps) {
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
      }
    }
  }
}

TEST_CASE("partitions_of extends dominance") {
  for (int m = 1; m <= 8; ++m) {
    const auto ps = partitions_of(m);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK_FALSE(dominance_leq(ps[i], ps[j]));
    }
  }
}

TEST_CASE("ratqt equality by cross multiplication") {
  const RatQT a(q * q - t * t, q - t);
  CHECK(a == RatQT(q + t));
  CHECK(a.as_laurent() == q + t);
  CHECK_FALSE(RatQT(1, q - t).as_laurent().has_value());
  CHECK(RatQT(1, q - t) + RatQT(1, t - q) == RatQT(0));
  CHECK(RatQT(q, 1 + t) * RatQT(1 + t, q) == RatQT(1));
}

TEST_CASE("rat_solve") {
  const RatQT zero;
  SUBCASE("identity") {
    RatMatrix id{{1, zero}, {zero, 1}};
    const std::vector<RatQT> v{RatQT(q), RatQT(1 + t)};
    CHECK(rat_solve(id, v) == v);
  }
  SUBCASE("one by one") {
    const auto x = rat_solve({{RatQT(t - q)}}, {RatQT(t - q)});
    CHECK(x[0] == RatQT(1));
  }
  SUBCASE("e_2 in the modified Macdonald basis") {
    // Columns hold the Schur coefficients of H~_(2) = s2 + q s11 and
    // H~_(1,1) = s2 + t s11; the right side is e_2 = s11.
    RatMatrix m{{1, 1}, {RatQT(q), RatQT(t)}};
    const auto x = rat_solve(m, {zero, RatQT(1)});
    CHECK(x[0] == RatQT(-1, t - q));
    CHECK(x[1] == RatQT(1, t - q));
  }
  SUBCASE("singular") {
    RatMatrix m{{RatQT(q), RatQT(q)}, {1, 1}};
    CHECK_THROWS_WITH(rat_solve(m, {1, 1}), doctest::Contains("basis change singular"));
  }
  SUBCASE("random residual vanishes") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 3;
      RatMatrix m(n, std::vector<RatQT>(n));
      std::vector<RatQT> b(n);
      for (int i = 0; i < n; ++i) {
        b[i] = testutil::random_poly(rng, 2, 2, 3);
        for (int j = 0; j < n; ++j) m[i][j] = testutil::random_poly(rng, 2, 2, 3);
      }
      LaurentMatrix lm(n, std::vector<LaurentQT>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) lm[i][j] = m[i][j].numerator();
      }
      if (bareiss_determinant(lm).is_zero()) continue;
      const auto x = rat_solve(m, b);
      for (int i = 0; i < n; ++i) {
        RatQT r;
        for (int j = 0; j < n; ++j) r += m[i][j] * x[j];
        CHECK(r == b[i]);
      }
    }
  }
}

TEST_CASE("bareiss determinant") {
  LaurentMatrix m{{q, 1}, {1, t}};
  CHECK(bareiss_determinant(m) == q * t - 1);
  LaurentMatrix v{{1, 1, 1}, {1, q, q * q}, {1, t, t * t}};
  CHECK(bareiss_determinant(v) == (q - 1) * (t - 1) * (t - q));
}
