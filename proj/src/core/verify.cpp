#include "parkfrob/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "parkfrob/affine.hpp"
#include "parkfrob/errors.hpp"
#include "parkfrob/macdonald.hpp"

namespace parkfrob {

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::shuffle: return "shuffle";
    case Suite::skewing: return "skewing";
    case Suite::cells: return "cells";
    case Suite::census: return "census";
    case Suite::all: return "all";
  }
  return "all";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::shuffle, Suite::skewing, Suite::cells, Suite::census, Suite::all}) {
    if (suite_name(s) == name) return s;
  }
  throw input_error("unknown suite '" + std::string(name) +
                    "' (expected shuffle, skewing, cells, census or all)");
}

Json to_json(const Verdict& v) {
  return Json{{"suite", v.suite},
              {"identity", v.identity},
              {"params", Json{{"n", v.grid.n}, {"k", v.grid.k}, {"K", v.grid.K()}}},
              {"lhs", v.lhs},
              {"rhs", v.rhs},
              {"equal", v.equal}};
}

std::vector<Grid> grids_in_range(const VerifyRange& r) {
  const int K_max = r.K_max > 0 ? r.K_max : k_cap();
  const int n_max = r.n_max > 0 ? r.n_max : K_max;
  std::vector<Grid> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Grid g = Grid::from_nk(n, k);
      if (g.K() <= K_max) out.push_back(g);
    }
  }
  return out;
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Per-grid tables for the cell check: one call to ab_sets, affine_to_pf and
// statistics per permutation is dominated by revalidation, so the same
// quantities are computed here straight from the windows.
class CellChecker {
 public:
  explicit CellChecker(const Grid& g) : g_(g), K_(g.K()), gamma_(gamma_build(g).window()) {
    for (int j = 1; j <= K_; ++j) {
      for (int i = 1; i <= g.k; ++i) {
        const int r = rank(g, i, j);
        if (r <= 0) continue;
        if (r >= static_cast<int>(box_of_rank_.size())) box_of_rank_.resize(r + 1, Box{0, 0});
        box_of_rank_[r] = Box{i, j};
      }
    }
  }

  // Fills the per-path statistics cache; call before checking in parallel.
  void warm() {
    for_each_path(g_, [&](const DyckPath& p) { stats_.emplace(p.runs(), path_statistics(p)); });
  }

  bool check(const AffinePermutation& w) const {
    const std::vector<int>& win = w.window();
    std::vector<int> inv(K_);
    for (int i = 1; i <= K_; ++i) {
      const int v = win[i - 1];
      const int m = floor_div(v - 1, K_);
      inv[v - m * K_ - 1] = i - m * K_;
    }
    auto om = [&](int x) {
      const int m = floor_div(x - 1, K_);
      return inv[x - 1 - m * K_] + m * K_;
    };
    auto gm = [&](int x) {
      const int m = floor_div(x - 1, K_);
      return gamma_[x - 1 - m * K_] + m * K_;
    };

    const int top = *std::max_element(win.begin(), win.end());
    std::int64_t a_count = 0;
    std::int64_t b_count = 0;
    for (int a : win) {
      const int oa = om(a);
      for (int b = a + 1; b <= top; ++b) {
        if (om(gm(b)) < oa) ++a_count;
        if (b > a + g_.k && om(b) < oa) ++b_count;
      }
    }

    std::int64_t inversions_of_inverse = 0;
    for (int i = 1; i <= K_; ++i) {
      for (int j0 = 1; j0 <= K_; ++j0) {
        const int hi = floor_div(i - j0 - 1, K_);
        const int lo = floor_div(inv[i - 1] - inv[j0 - 1], K_) + 1;
        if (hi >= lo) inversions_of_inverse += hi - lo + 1;
      }
    }

    std::vector<int> runs(g_.k, 0);
    std::vector<int> labels(K_, 0);
    for (int label = 1; label <= K_; ++label) {
      const Box b = box_of_rank_.at(win[label - 1]);
      ++runs[b.col - 1];
      labels[b.row - 1] = label;
    }
    const PathStats& ps = stats_.at(runs);
    const int dinv = ps.pathdinv + tdinv(ps, labels) - ps.maxtdinv;
    const std::int64_t want = inversions_of_inverse - (g_.delta() - dinv);
    return a_count == want && b_count == want;
  }

 private:
  Grid g_;
  int K_;
  std::vector<int> gamma_;
  std::vector<Box> box_of_rank_;
  std::map<std::vector<int>, PathStats> stats_;
};

}  // namespace

std::pair<std::int64_t, std::int64_t> check_cells(const Grid& g, int workers) {
  CellChecker checker(g);
  checker.warm();
  std::atomic<std::int64_t> checked{0};
  std::atomic<std::int64_t> failed{0};
  auto check = [&](const AffinePermutation& w) {
    if (!checker.check(w)) ++failed;
    ++checked;
  };
  if (workers <= 1) {
    for_each_gamma_restricted(g, check);
  } else {
    std::vector<AffinePermutation> batch;
    auto flush = [&] {
      parallel_for(batch.size(), workers, [&](std::size_t i) { check(batch[i]); });
      batch.clear();
    };
    for_each_gamma_restricted(g, [&](const AffinePermutation& w) {
      batch.push_back(w);
      if (batch.size() == 4096) flush();
    });
    flush();
  }
  return {checked.load(), failed.load()};
}

namespace {

Verdict symfunc_verdict(std::string suite, std::string identity, const Grid& g, const SymFunc& lhs,
                        const SymFunc& rhs) {
  return Verdict{std::move(suite), std::move(identity), g, to_json(lhs), to_json(rhs), lhs == rhs};
}

bool schur_positive_polynomial(const SymFunc& f) {
  const SymFunc s = change_basis(f, Basis::schur);
  for (const auto& [p, c] : s.terms()) {
    if (!c.is_polynomial() || !c.has_nonnegative_coefficients()) return false;
  }
  return true;
}

void shuffle_suite(const VerifyRange& r, const ComputeOptions& opt, std::vector<Verdict>& out) {
  for (const Grid& g : grids_in_range(r)) {
    const SymFunc strict = e_shuffle(g, DinvVariant::dinv, opt);
    const SymFunc weak = e_shuffle(g, DinvVariant::dinv_prime, opt);
    out.push_back(symfunc_verdict("shuffle", "omega E_{K,k} (strict) = E_{K,k} (weak, dinv')", g,
                                  omega_involution(strict), weak));
    if (g.k == g.n && g.n <= macdonald_cap()) {
      out.push_back(symfunc_verdict("shuffle", "nabla e_n = E_{n,n}", g, apply_nabla(g.n), strict));
    }
  }
}

void skewing_suite(const VerifyRange& r, const ComputeOptions& opt, std::vector<Verdict>& out) {
  ComputeOptions unchecked = opt;
  unchecked.check = false;
  for (const Grid& g : grids_in_range(r)) {
    if (g.n > macdonald_cap()) continue;
    for (IdentityReport& rep : verify_skewing(g.n, g.k, unchecked)) {
      out.push_back(Verdict{"skewing", rep.identity, g, to_json(rep.lhs), to_json(rep.rhs), rep.equal});
    }
    // Y character through the skew of X against the eigenoperator route.
    const SymFunc y = frob_Y(g.n, g.k, unchecked).value;
    const int d = g.k * (g.k - 1) / 2 + (g.k - 1) * (g.n - g.k);
    const SymFunc alt = omega_involution(apply_delta_prime(g.k, g.n))
                            .map_coeffs([d](const LaurentQT& c) { return rev_q(c, d); });
    out.push_back(symfunc_verdict("skewing", "shifted s^perp frob_X = rev_q omega Delta'_{e_{k-1}} e_n",
                                  g, y, alt));
    const SymFunc x = frob_X(g.n, g.k, unchecked).value;
    const bool pos = schur_positive_polynomial(x) && schur_positive_polynomial(y);
    out.push_back(Verdict{"skewing", "frob_X and frob_Y Schur coefficients in N[q,t]", g, pos, true, pos});
  }
}

void cells_suite(const VerifyRange& r, const ComputeOptions& opt, std::vector<Verdict>& out) {
  for (const Grid& g : grids_in_range(r)) {
    const auto [checked, failed] = check_cells(g, opt.workers);
    out.push_back(Verdict{"cells", "|A_w| = |B_w| = inv(w^-1) - (delta - dinv)", g, checked - failed,
                          checked, failed == 0});
  }
}

void census_suite(const VerifyRange& r, const ComputeOptions& opt, std::vector<Verdict>& out) {
  for (const Grid& g : grids_in_range(r)) {
    const Census c = fixed_point_census(g.n, g.k, opt);
    out.push_back(Verdict{"census", "#PF_{K,k} = #gamma-restricted", g, c.parking_functions,
                          c.gamma_restricted, c.parking_functions == c.gamma_restricted});
    out.push_back(Verdict{"census", "#admissible orbits = #stacked PF_{n,k}", g, c.admissible_orbits,
                          c.stacked_pfs, c.admissible_orbits == c.stacked_pfs});
  }
}

}  // namespace

std::vector<Verdict> run_suite(Suite s, const VerifyRange& r, const ComputeOptions& opt) {
  std::vector<Verdict> out;
  if (s == Suite::shuffle || s == Suite::all) shuffle_suite(r, opt, out);
  if (s == Suite::skewing || s == Suite::all) skewing_suite(r, opt, out);
  if (s == Suite::cells || s == Suite::all) cells_suite(r, opt, out);
  if (s == Suite::census || s == Suite::all) census_suite(r, opt, out);
  return out;
}

}  // namespace parkfrob
