#include "parkfrob/affine.hpp"

#include <algorithm>
#include <numeric>

#include "parkfrob/errors.hpp"

namespace parkfrob {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int residue(int i, int K) { return i - K * floor_div(i - 1, K); }  // in 1..K

void check_period(const AffinePermutation& w, const Grid& g) {
  if (w.K() != g.K()) {
    throw input_error("permutation period " + std::to_string(w.K()) + " does not match K=" +
                      std::to_string(g.K()));
  }
}

}  // namespace

AffinePermutation::AffinePermutation(std::vector<int> window) : window_(std::move(window)) {
  const int K = this->K();
  if (K == 0) throw input_error("empty window");
  std::vector<bool> seen(K + 1, false);
  for (int v : window_) {
    const int r = residue(v, K);
    if (seen[r]) throw input_error("not a permutation: repeated residue mod " + std::to_string(K));
    seen[r] = true;
  }
}

AffinePermutation AffinePermutation::identity(int K) {
  std::vector<int> w(K);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(std::move(w));
}

int AffinePermutation::operator()(int i) const {
  const int K = this->K();
  const int m = floor_div(i - 1, K);
  return window_[i - 1 - m * K] + m * K;
}

AffinePermutation AffinePermutation::inverse() const {
  const int K = this->K();
  std::vector<int> inv(K);
  for (int i = 1; i <= K; ++i) {
    const int v = window_[i - 1];
    const int m = floor_div(v - 1, K);
    inv[v - m * K - 1] = i - m * K;
  }
  return AffinePermutation(std::move(inv));
}

AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.K() != b.K()) throw input_error("compose: periods differ");
  std::vector<int> w(a.K());
  for (int i = 1; i <= a.K(); ++i) w[i - 1] = a(b(i));
  return AffinePermutation(std::move(w));
}

int AffinePermutation::degree() const {
  const int K = this->K();
  const long sum = std::accumulate(window_.begin(), window_.end(), 0L);
  return static_cast<int>((sum - static_cast<long>(K) * (K + 1) / 2) / K);
}

bool AffinePermutation::is_positive() const {
  return std::all_of(window_.begin(), window_.end(), [](int v) { return v > 0; });
}

bool AffinePermutation::is_normalized() const {
  return std::find(window_.begin(), window_.end(), 1) != window_.end();
}

Decomposition decompose(const AffinePermutation& w) {
  const int K = w.K();
  Decomposition d{std::vector<int>(K, 0), std::vector<int>(K, 0)};
  for (int i = 1; i <= K; ++i) {
    const int v = w(i);
    const int r = residue(v, K);
    d.w[i - 1] = r;
    d.lambda[r - 1] = (v - r) / K;
  }
  return d;
}

std::int64_t inversions(const AffinePermutation& w) {
  const int K = w.K();
  std::int64_t count = 0;
  for (int i = 1; i <= K; ++i) {
    for (int j0 = 1; j0 <= K; ++j0) {
      // shifts m with j0 + mK < i and w(j0) + mK > w(i)
      const int hi = floor_div(i - j0 - 1, K);
      const int lo = floor_div(w(i) - w(j0), K) + 1;
      if (hi >= lo) count += hi - lo + 1;
    }
  }
  return count;
}

AffinePermutation gamma_build(const Grid& g) {
  const int K = g.K();
  const int k = g.k;
  std::vector<int> w(K);
  for (int x = 1; x <= K; ++x) {
    if (x <= (g.n - k) * k) {
      w[x - 1] = x + k;
    } else if (x < K) {
      w[x - 1] = x + k + 1;
    } else {
      w[x - 1] = 1 + K * (g.N + 1);
    }
  }
  return AffinePermutation(std::move(w));
}

std::vector<int> gamma_cycle(const Grid& g) {
  const AffinePermutation gm = gamma_build(g);
  const int K = g.K();
  std::vector<int> cyc;
  int x = 1;
  do {
    cyc.push_back(x);
    x = residue(gm(x), K);
  } while (x != 1 && static_cast<int>(cyc.size()) <= K);
  return cyc;
}

bool is_gamma_restricted(const AffinePermutation& w, const Grid& g) {
  check_period(w, g);
  if (!w.is_positive() || !w.is_normalized()) return false;
  const int K = g.K();
  // inv[x-1] = w^{-1}(x) for x in 1..K; every window value is positive.
  thread_local std::vector<int> inv;
  inv.assign(K, 0);
  for (int i = 1; i <= K; ++i) {
    const int v = w.window()[i - 1];
    const int m = (v - 1) / K;
    inv[v - m * K - 1] = i - m * K;
  }
  const int small = (g.n - g.k) * g.k;
  for (int x = 1; x <= K; ++x) {
    // gamma(x) from gamma_build, with w^{-1}(y + mK) = w^{-1}(y) + mK.
    int target;
    if (x <= small) {
      target = x + g.k;
    } else if (x < K) {
      target = x + g.k + 1;
    } else {
      target = 1 + K * (g.N + 1);
    }
    const int m = (target - 1) / K;
    if (!(inv[x - 1] < inv[target - m * K - 1] + m * K)) return false;
  }
  return true;
}

AffinePermutation pf_to_affine(const ParkingFunction& pf) {
  validate(pf);
  const Grid& g = pf.path.grid();
  std::vector<int> w(g.K());
  for (int j = 1; j <= g.K(); ++j) w[pf.labels[j - 1] - 1] = rank(g, pf.path.step_column(j) + 1, j);
  return AffinePermutation(std::move(w));
}

ParkingFunction affine_to_pf(const AffinePermutation& w, const Grid& g) {
  check_period(w, g);
  if (!is_gamma_restricted(w, g)) throw input_error("permutation is not gamma-restricted");
  const int K = g.K();
  // Box of each positive rank; ranks are at most kK.
  thread_local int table_n = 0;
  thread_local int table_k = 0;
  thread_local std::vector<Box> box_of_rank;
  if (table_n != g.n || table_k != g.k) {
    box_of_rank.assign(static_cast<std::size_t>(g.k) * K + 1, Box{0, 0});
    for (int j = 1; j <= K; ++j) {
      for (int i = 1; i <= g.k; ++i) {
        const int r = rank(g, i, j);
        if (r > 0) box_of_rank[r] = Box{i, j};
      }
    }
    table_n = g.n;
    table_k = g.k;
  }
  std::vector<int> step(K, -1);
  std::vector<int> labels(K, 0);
  for (int label = 1; label <= K; ++label) {
    const int r = w.window()[label - 1];
    if (r < 1 || r >= static_cast<int>(box_of_rank.size()) || box_of_rank[r].col == 0) {
      throw input_error("window value is not an above-diagonal rank");
    }
    const Box b = box_of_rank[r];
    if (step[b.row - 1] >= 0) throw input_error("two window values land in the same row");
    step[b.row - 1] = b.col - 1;
    labels[b.row - 1] = label;
  }
  std::vector<int> runs(g.k, 0);
  for (int c : step) ++runs[c];
  DyckPath path(g, runs);
  if (path.step_columns() != step) throw input_error("vertical steps do not form a lattice path");
  ParkingFunction pf{path, labels};
  validate(pf);
  return pf;
}

ABSets ab_sets(const AffinePermutation& rho, const Grid& g) {
  check_period(rho, g);
  if (!is_gamma_restricted(rho, g)) throw input_error("ab_sets requires a gamma-restricted permutation");
  const AffinePermutation om = rho.inverse();
  const AffinePermutation gm = gamma_build(g);
  const int top = *std::max_element(rho.window().begin(), rho.window().end());
  std::vector<int> alphas = rho.window();
  std::sort(alphas.begin(), alphas.end());
  ABSets out;
  for (int a : alphas) {
    for (int b = a + 1; b <= top; ++b) {
      if (om(gm(b)) < om(a)) out.A.emplace_back(a, b);
      if (om(b) < om(a) && a + g.k < b) out.B.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<IndexPair> dinv_defect_pairs(const AffinePermutation& rho, const Grid& g) {
  check_period(rho, g);
  const AffinePermutation om = rho.inverse();
  std::vector<int> alphas = rho.window();
  std::sort(alphas.begin(), alphas.end());
  std::vector<IndexPair> out;
  for (int a : alphas) {
    for (int b = a + 1; b <= a + g.k; ++b) {
      if (om(b) < om(a)) out.emplace_back(a, b);
    }
  }
  return out;
}

PhiWeight phi(const Grid& g, int alpha) {
  const int K = g.K();
  const int k = g.k;
  const int m = floor_div(alpha - 1, K);
  const int rest = alpha - 1 - m * K;  // q*k + (r-1)
  const int q = rest / k;
  const int r = rest % k + 1;
  return PhiWeight{m * K + q * k, q + g.slope() * (r - 1)};
}

std::int64_t theta(const Grid& g, int alpha, int N) {
  const PhiWeight p = phi(g, alpha);
  return p.phi0 + static_cast<std::int64_t>(N) * p.phi_inf;
}

std::strong_ordering phi_order(const Grid& g, IndexPair p1, IndexPair p2) {
  auto weight = [&](IndexPair p) {
    const PhiWeight a = phi(g, p.first);
    const PhiWeight b = phi(g, p.second);
    return PhiWeight{b.phi0 - a.phi0, b.phi_inf - a.phi_inf};
  };
  return weight(p1) <=> weight(p2);
}

AffinePermutation min_coset_rep(const AffinePermutation& w, const std::vector<int>& eta) {
  if (std::accumulate(eta.begin(), eta.end(), 0) != w.K() ||
      std::any_of(eta.begin(), eta.end(), [](int e) { return e < 0; })) {
    throw input_error("composition does not sum to the period");
  }
  std::vector<int> win = w.window();
  auto it = win.begin();
  for (int len : eta) {
    std::sort(it, it + len);
    it += len;
  }
  return AffinePermutation(std::move(win));
}

void for_each_gamma_restricted(const Grid& g,
                               const std::function<void(const AffinePermutation&)>& fn) {
  check_k_cap(g);
  const int K = g.K();
  const AffinePermutation gm = gamma_build(g);
  // Orbit x_0 = 1, x_{t+1} = gamma(x_t); residue r_t and shift m_t of each.
  std::vector<int> res(K + 1);
  std::vector<int> shift(K + 1);
  int x = 1;
  for (int t = 0; t <= K; ++t) {
    res[t] = residue(x, K);
    shift[t] = floor_div(x - 1, K);
    if (t < K) x = gm(x);
  }
  if (res[K] != 1) throw identity_error("gamma does not project to a single K-cycle");

  // p[r] = w^{-1}(r); along the orbit P_t = p[r_t] + m_t K must increase.
  std::vector<int> p(K + 1, 0);
  std::vector<bool> used(K + 1, false);
  std::vector<int> window(K);
  auto rec = [&](auto&& self, int t, int prev) -> void {
    if (t == K) {
      if (p[1] + shift[K] * K <= prev) return;
      for (int r = 1; r <= K; ++r) {
        const int m = floor_div(p[r] - 1, K);
        window[p[r] - m * K - 1] = r - m * K;
      }
      fn(AffinePermutation(window));
      return;
    }
    const int r = res[t];
    const int lo = t == 0 ? 1 : prev - shift[t] * K + 1;
    for (int v = lo; v <= K; ++v) {
      const int rv = residue(v, K);
      if (used[rv]) continue;
      used[rv] = true;
      p[r] = v;
      self(self, t + 1, v + shift[t] * K);
      used[rv] = false;
    }
  };
  rec(rec, 0, 0);
}

}  // namespace parkfrob
