#include "parkfrob/ratqt.hpp"

#include <utility>

#include "parkfrob/errors.hpp"

namespace parkfrob {

RatQT::RatQT(const LaurentQT& num) : num_(num), den_(1) {}

RatQT::RatQT(LaurentQT num, LaurentQT den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw input_error("rational function with zero denominator");
}

std::optional<LaurentQT> RatQT::as_laurent() const { return num_.divide_exact(den_); }

RatQT operator+(const RatQT& a, const RatQT& b) {
  if (a.den_ == b.den_) return RatQT(a.num_ + b.num_, a.den_);
  return RatQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatQT operator-(const RatQT& a, const RatQT& b) { return a + (-b); }

RatQT operator*(const RatQT& a, const RatQT& b) {
  return RatQT(a.num_ * b.num_, a.den_ * b.den_);
}

RatQT operator/(const RatQT& a, const RatQT& b) {
  if (b.is_zero()) throw input_error("division by zero rational function");
  return RatQT(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatQT::to_string() const {
  if (den_ == LaurentQT(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

LaurentQT must_divide(const LaurentQT& a, const LaurentQT& b) {
  auto r = a.divide_exact(b);
  if (!r) throw identity_error("fraction-free elimination: inexact division");
  return *std::move(r);
}

// In-place fraction-free elimination to upper triangular form; `extra`
// trailing columns are carried along. Returns false when singular.
bool bareiss_eliminate(LaurentMatrix& m, std::size_t n, int& sign) {
  LaurentQT prev(1);
  sign = 1;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return false;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = must_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = LaurentQT{};
    }
    prev = m[k][k];
  }
  return true;
}

}  // namespace

LaurentQT bareiss_determinant(LaurentMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentQT(1);
  for (const auto& row : m) {
    if (row.size() != n) throw input_error("determinant of a non-square matrix");
  }
  int sign = 1;
  if (!bareiss_eliminate(m, n, sign)) return LaurentQT{};
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<RatQT> rat_solve(const RatMatrix& matrix, const std::vector<RatQT>& rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) throw input_error("rat_solve: dimension mismatch");
  if (n == 0) return {};

  // Clear denominators row by row, then solve over the polynomial ring.
  LaurentMatrix m(n, std::vector<LaurentQT>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw input_error("rat_solve: matrix is not square");
    LaurentQT row_den(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(matrix[i][j].denominator() == LaurentQT(1))) row_den *= matrix[i][j].denominator();
    }
    if (!(rhs[i].denominator() == LaurentQT(1))) row_den *= rhs[i].denominator();
    for (std::size_t j = 0; j <= n; ++j) {
      const RatQT& e = j < n ? matrix[i][j] : rhs[i];
      m[i][j] = must_divide(e.numerator() * row_den, e.denominator());
    }
  }

  int sign = 1;
  if (!bareiss_eliminate(m, n, sign)) throw identity_error("basis change singular");
  const LaurentQT d = m[n - 1][n - 1];

  // Back substitution for X_i = d * x_i, which are polynomials by Cramer.
  std::vector<LaurentQT> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    LaurentQT acc = d * m[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= m[ii][j] * x[j];
    x[ii] = must_divide(acc, m[ii][ii]);
  }
  std::vector<RatQT> out;
  out.reserve(n);
  for (auto& xi : x) out.emplace_back(std::move(xi), d);
  return out;
}

}  // namespace parkfrob
