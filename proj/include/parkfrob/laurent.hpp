#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace parkfrob {

using BigInt = mpz_class;

/// Exponent pair of a monomial q^q t^t.
struct Exponent {
  int q = 0;
  int t = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Exact Laurent polynomial in q and t with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so the term map is the
/// canonical form and structural equality is value equality.
class LaurentQT {
 public:
  using Terms = std::map<Exponent, BigInt>;

  LaurentQT() = default;
  LaurentQT(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentQT(const BigInt& c);

  static LaurentQT monomial(const BigInt& c, int q_exp, int t_exp);
  static LaurentQT q() { return monomial(1, 1, 0); }
  static LaurentQT t() { return monomial(1, 0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of q^a t^b (zero when absent).
  BigInt coeff(int q_exp, int t_exp) const;

  void add_term(Exponent e, const BigInt& c);

  LaurentQT& operator+=(const LaurentQT& rhs);
  LaurentQT& operator-=(const LaurentQT& rhs);
  LaurentQT& operator*=(const LaurentQT& rhs);
  LaurentQT& operator*=(const BigInt& c);

  friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
  friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
  friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
  friend LaurentQT operator-(LaurentQT a);
  friend bool operator==(const LaurentQT& a, const LaurentQT& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplies by q^dq t^dt.
  LaurentQT shifted(int dq, int dt) const;
  /// f(q,t) -> f(t,q).
  LaurentQT swapped() const;
  /// Evaluation at integer points. Negative exponents require the matching
  /// point to be +1 or -1 so that the result stays integral.
  BigInt eval(const BigInt& q_val, const BigInt& t_val) const;

  int min_q() const;
  int max_q() const;
  int min_t() const;
  int max_t() const;

  bool has_nonnegative_coefficients() const;
  bool is_polynomial() const;  // no negative exponents

  /// Exact quotient when `divisor` divides *this in Z[q^±, t^±]; nullopt
  /// otherwise. Divisor must be nonzero.
  std::optional<LaurentQT> divide_exact(const LaurentQT& divisor) const;

  /// Human-readable form, e.g. "1 + q + 2*q^2*t".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// q^d * f(q^{-1}, t). Every q-exponent of f must lie in [0, d].
LaurentQT rev_q(const LaurentQT& f, int d);

}  // namespace parkfrob
