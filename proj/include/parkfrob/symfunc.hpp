#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parkfrob/laurent.hpp"
#include "parkfrob/partition.hpp"

namespace parkfrob {

enum class Basis { schur, monomial, homogeneous, elementary };

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

/// Homogeneous symmetric function of a fixed degree with LaurentQT
/// coefficients, expanded in one of the four classical bases.
class SymFunc {
 public:
  using Terms = std::map<Partition, LaurentQT>;

  SymFunc() = default;
  SymFunc(int degree, Basis basis);

  static SymFunc basis_element(Basis b, const Partition& p, LaurentQT c = 1);
  static SymFunc s(const Partition& p) { return basis_element(Basis::schur, p); }
  static SymFunc m(const Partition& p) { return basis_element(Basis::monomial, p); }
  static SymFunc h(const Partition& p) { return basis_element(Basis::homogeneous, p); }
  static SymFunc e(const Partition& p) { return basis_element(Basis::elementary, p); }
  static SymFunc one() { return s(Partition{}); }

  int degree() const noexcept { return degree_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentQT coeff(const Partition& p) const;

  /// Adds c to the coefficient of p; p must have size degree().
  void add_term(const Partition& p, const LaurentQT& c);

  SymFunc& operator+=(const SymFunc& rhs);
  SymFunc& operator-=(const SymFunc& rhs);
  SymFunc& operator*=(const LaurentQT& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const LaurentQT& c) { return a *= c; }
  friend SymFunc operator*(const LaurentQT& c, SymFunc a) { return a *= c; }

  /// Value equality: compares Schur expansions, so bases may differ.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

  /// Applies fn to every coefficient, dropping results that vanish.
  SymFunc map_coeffs(const std::function<LaurentQT(const LaurentQT&)>& fn) const;

  std::string to_string() const;

 private:
  int degree_ = 0;
  Basis basis_ = Basis::schur;
  Terms terms_;
};

/// Largest degree the symmetric-function layer accepts (default 14).
int degree_cap();
void set_degree_cap(int cap);

/// Number of semistandard tableaux of shape lambda and content mu.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

SymFunc change_basis(const SymFunc& f, Basis target);
LaurentQT hall_inner(const SymFunc& f, const SymFunc& g);
/// Product, reported in the Schur basis.
SymFunc mult(const SymFunc& f, const SymFunc& g);
/// Adjoint of multiplication by s_lambda under the Hall pairing. When
/// |lambda| exceeds the degree the zero function of degree 0 is returned.
SymFunc skew_perp(const Partition& lambda, const SymFunc& f);
SymFunc omega_involution(const SymFunc& f);

}  // namespace parkfrob
