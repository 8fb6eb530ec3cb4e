#include "doctest.h"
#include "helpers.hpp"
#include "parkfrob/errors.hpp"
#include "parkfrob/macdonald.hpp"

using namespace parkfrob;
using testutil::q;
using testutil::t;

namespace {

SymFunc s(std::initializer_list<int> p) { return SymFunc::s(Partition(p)); }

SymFunc at_one(const SymFunc& f) {
  return f.map_coeffs([](const LaurentQT& c) { return LaurentQT(c.eval(1, 1)); });
}

SymFunc swap_qt(const SymFunc& f) {
  return f.map_coeffs([](const LaurentQT& c) { return c.swapped(); });
}

SymFunc e1_power(int n) {
  SymFunc r = SymFunc::one();
  for (int i = 0; i < n; ++i) r = mult(r, SymFunc::e(Partition{1}));
  return r;
}

}  // namespace

TEST_CASE("cell statistics") {
  const auto cells = cell_stats(Partition{3, 1});
  REQUIRE(cells.size() == 4);
  for (const auto& c : cells) {
    const int row_len = Partition{3, 1}[c.row];
    const int col_len = Partition{3, 1}.conjugate()[c.col];
    CHECK(c.arm + c.coarm + 1 == row_len);
    CHECK(c.leg + c.coleg + 1 == col_len);
  }
}

TEST_CASE("htilde small cases") {
  CHECK(htilde(Partition{1}) == s({1}));
  CHECK(htilde(Partition{2}) == s({2}) + q * s({1, 1}));
  CHECK(htilde(Partition{1, 1}) == s({2}) + t * s({1, 1}));
  CHECK(htilde(Partition{2, 1}) == s({3}) + (q + t) * s({2, 1}) + q * t * s({1, 1, 1}));
  CHECK(htilde(Partition{3}) == s({3}) + (q + q * q) * s({2, 1}) + q * q * q * s({1, 1, 1}));
  CHECK(htilde(Partition{2, 1}) == swap_qt(htilde(Partition{2, 1})));
}

TEST_CASE("htilde monomial coefficients are symmetric in the content order") {
  for (const auto& mu : partitions_of(4)) {
    const LaurentQT a = htilde_monomial_coefficient(mu, {2, 1, 1});
    CHECK(a == htilde_monomial_coefficient(mu, {1, 2, 1}));
    CHECK(a == htilde_monomial_coefficient(mu, {1, 1, 2}));
    CHECK(a == hall_inner(htilde(mu), SymFunc::h(Partition{2, 1, 1})));
  }
}

TEST_CASE("htilde properties up to size 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const SymFunc h = htilde(mu);
      CHECK(h.degree() == n);
      CHECK(h == swap_qt(htilde(mu.conjugate())));
      CHECK(at_one(h) == e1_power(n));
    }
  }
}

TEST_CASE("b_mu") {
  CHECK(b_mu(Partition{1}) == LaurentQT(1));
  CHECK(b_mu(Partition{2, 1}) == 1 + q + t);
  CHECK(b_mu(Partition{3}) == 1 + q + q * q);
  CHECK(b_mu(Partition{}).is_zero());
  for (const auto& mu : partitions_of(5)) {
    CHECK(b_mu(mu).coeff(0, 0) == 1);
    CHECK(b_mu(mu).eval(1, 1) == 5);
  }
}

TEST_CASE("delta' eigenvalues") {
  for (const auto& mu : partitions_of(4)) CHECK(delta_prime_eigenvalue(1, mu) == LaurentQT(1));
  CHECK(delta_prime_eigenvalue(2, Partition{2}) == q);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      CHECK(delta_prime_eigenvalue(n, mu) == nabla_eigenvalue(mu));
      CHECK(nabla_eigenvalue(mu) ==
            LaurentQT::monomial(1, mu.conjugate().n_stat(), mu.n_stat()));
    }
  }
  CHECK_THROWS_AS(delta_prime_eigenvalue(0, Partition{2}), Error);
  CHECK_THROWS_AS(delta_prime_eigenvalue(3, Partition{2}), Error);
}

TEST_CASE("expand_in_htilde") {
  const auto c1 = expand_in_htilde(SymFunc::e(Partition{1}));
  REQUIRE(c1.size() == 1);
  CHECK(c1.at(Partition{1}) == RatQT(1));

  const auto c2 = expand_in_htilde(SymFunc::e(Partition{2}));
  CHECK(c2.at(Partition{1, 1}) == RatQT(1, t - q));
  CHECK(c2.at(Partition{2}) == RatQT(-1, t - q));

  for (int n = 1; n <= 5; ++n) {
    const SymFunc en = SymFunc::e(Partition{n});
    const auto c = expand_in_htilde(en);
    // Reconstruct every Schur coefficient over Q(q,t).
    for (const auto& lam : partitions_of(n)) {
      RatQT sum;
      for (const auto& [mu, cm] : c) sum += cm * RatQT(htilde(mu).coeff(lam));
      CHECK(sum == RatQT(change_basis(en, Basis::schur).coeff(lam)));
    }
  }
}

TEST_CASE("apply_delta_prime") {
  for (int n = 1; n <= 5; ++n) CHECK(apply_delta_prime(1, n) == SymFunc::e(Partition{n}));
  CHECK(apply_delta_prime(2, 2) == s({2}) + (q + t) * s({1, 1}));
  for (int n = 1; n <= 5; ++n) CHECK(apply_delta_prime(n, n) == apply_nabla(n));
  // nabla e_3 by its classical Schur expansion.
  CHECK(apply_nabla(3) == s({3}) + (q + t + q * q + q * t + t * t) * s({2, 1}) +
                              (q * t + q * q * q + q * q * t + q * t * t + t * t * t) * s({1, 1, 1}));
  CHECK_THROWS_AS(apply_delta_prime(4, 3), Error);
}

TEST_CASE("macdonald cap") {
  CHECK(macdonald_cap() == 7);
  CHECK_THROWS_AS(htilde(Partition{8}), Error);
}
