#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "parkfrob/parking.hpp"

namespace parkfrob {

/// Affine permutation of Z with period K, kept in window notation
/// w(1), ..., w(K). Residues are validated on construction.
class AffinePermutation {
 public:
  explicit AffinePermutation(std::vector<int> window);
  static AffinePermutation identity(int K);

  int K() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const noexcept { return window_; }
  /// Value at any integer i.
  int operator()(int i) const;

  AffinePermutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b);
  int degree() const;
  bool is_positive() const;
  bool is_normalized() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  std::vector<int> window_;
};

/// w = t_lambda w with w in S_K: lambda indexed by values of w.
struct Decomposition {
  std::vector<int> lambda;
  std::vector<int> w;
};
Decomposition decompose(const AffinePermutation& w);

/// inv(w): pairs (i, j) with i in the window, j < i and w(j) > w(i).
std::int64_t inversions(const AffinePermutation& w);

AffinePermutation gamma_build(const Grid& g);
/// Orbit of 1 under the projection of gamma to S_K.
std::vector<int> gamma_cycle(const Grid& g);
bool is_gamma_restricted(const AffinePermutation& w, const Grid& g);

/// w_pi(label) is the rank of the label cell carrying that label.
AffinePermutation pf_to_affine(const ParkingFunction& pf);
ParkingFunction affine_to_pf(const AffinePermutation& w, const Grid& g);

using IndexPair = std::pair<int, int>;

struct ABSets {
  std::vector<IndexPair> A;
  std::vector<IndexPair> B;
};

/// Pair sets of the inverse of a gamma-restricted permutation `rho`.
ABSets ab_sets(const AffinePermutation& rho, const Grid& g);

/// Pairs (a, b) with a in the window of rho, a < b <= a + k and
/// rho^{-1}(b) < rho^{-1}(a).
std::vector<IndexPair> dinv_defect_pairs(const AffinePermutation& rho, const Grid& g);

struct PhiWeight {
  int phi0 = 0;
  int phi_inf = 0;
  auto operator<=>(const PhiWeight&) const = default;
};

PhiWeight phi(const Grid& g, int alpha);
/// phi0 + N * phi_inf.
std::int64_t theta(const Grid& g, int alpha, int N);
/// Compares the weights phi(b) - phi(a) of two pairs lexicographically.
std::strong_ordering phi_order(const Grid& g, IndexPair p1, IndexPair p2);

/// Minimal-length representative of w S_eta: window values sorted
/// increasingly inside each block of positions.
AffinePermutation min_coset_rep(const AffinePermutation& w, const std::vector<int>& eta);

/// Every gamma-restricted permutation, found by backtracking along the
/// gamma-cycle without reference to parking functions.
void for_each_gamma_restricted(const Grid& g,
                               const std::function<void(const AffinePermutation&)>& fn);

}  // namespace parkfrob
