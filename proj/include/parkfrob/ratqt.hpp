#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parkfrob/laurent.hpp"

namespace parkfrob {

/// Element of the fraction field Q(q,t), kept as an unreduced quotient of
/// Laurent polynomials. Equality is decided by cross-multiplication, so no
/// gcd is ever needed.
class RatQT {
 public:
  RatQT() : num_(0), den_(1) {}
  RatQT(const LaurentQT& num);  // NOLINT(google-explicit-constructor)
  RatQT(long c) : RatQT(LaurentQT(c)) {}  // NOLINT(google-explicit-constructor)
  RatQT(LaurentQT num, LaurentQT den);

  const LaurentQT& numerator() const noexcept { return num_; }
  const LaurentQT& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// The value as a Laurent polynomial when the denominator divides exactly.
  std::optional<LaurentQT> as_laurent() const;

  friend RatQT operator+(const RatQT& a, const RatQT& b);
  friend RatQT operator-(const RatQT& a, const RatQT& b);
  friend RatQT operator*(const RatQT& a, const RatQT& b);
  friend RatQT operator/(const RatQT& a, const RatQT& b);
  friend RatQT operator-(const RatQT& a) { return RatQT(-a.num_, a.den_); }
  RatQT& operator+=(const RatQT& b) { return *this = *this + b; }
  RatQT& operator*=(const RatQT& b) { return *this = *this * b; }

  friend bool operator==(const RatQT& a, const RatQT& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const;

 private:
  LaurentQT num_;
  LaurentQT den_;
};

using RatMatrix = std::vector<std::vector<RatQT>>;
using LaurentMatrix = std::vector<std::vector<LaurentQT>>;

/// Determinant by fraction-free (Bareiss) elimination with exact division.
LaurentQT bareiss_determinant(LaurentMatrix m);

/// Exact solution of a square nonsingular system over Q(q,t). Throws
/// "basis change singular" when the matrix is singular.
std::vector<RatQT> rat_solve(const RatMatrix& matrix, const std::vector<RatQT>& rhs);

}  // namespace parkfrob
