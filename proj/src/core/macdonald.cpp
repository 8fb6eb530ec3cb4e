#include "parkfrob/macdonald.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <utility>

#include "parkfrob/errors.hpp"

namespace parkfrob {

namespace {

std::atomic<int> g_macdonald_cap{7};

void check_cap(int n) {
  if (n > g_macdonald_cap.load()) {
    throw input_error("degree " + std::to_string(n) + " exceeds the Macdonald cap " +
                      std::to_string(g_macdonald_cap.load()));
  }
}

struct FillingData {
  std::vector<CellStats> cells;  // reading order: top row first, left to right
  std::vector<int> below;        // index of the cell directly below, or -1
  std::vector<std::pair<int, int>> attacks;  // (u, v) with u read before v
};

FillingData filling_data(const Partition& mu) {
  FillingData fd;
  auto cells = cell_stats(mu);
  std::stable_sort(cells.begin(), cells.end(), [](const CellStats& a, const CellStats& b) {
    return a.row != b.row ? a.row > b.row : a.col < b.col;
  });
  fd.cells = cells;
  const int n = static_cast<int>(cells.size());
  fd.below.assign(n, -1);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const auto& a = cells[u];
      const auto& b = cells[v];
      if (b.col == a.col && b.row + 1 == a.row) fd.below[u] = v;
      if (u < v) {
        const bool same_row = a.row == b.row;
        const bool next_row = a.row == b.row + 1 && a.col > b.col;
        if (same_row || next_row) fd.attacks.emplace_back(u, v);
      }
    }
  }
  return fd;
}

LaurentQT fillings_sum(const FillingData& fd, const std::vector<int>& content) {
  std::vector<int> word;
  for (std::size_t i = 0; i < content.size(); ++i) word.insert(word.end(), content[i], int(i) + 1);
  if (word.size() != fd.cells.size()) throw input_error("content size does not match shape");
  std::sort(word.begin(), word.end());
  LaurentQT sum;
  do {
    int inv = 0;
    int maj = 0;
    for (const auto& [u, v] : fd.attacks) {
      if (word[u] > word[v]) ++inv;
    }
    for (std::size_t u = 0; u < word.size(); ++u) {
      const int b = fd.below[u];
      if (b >= 0 && word[u] > word[b]) {
        inv -= fd.cells[u].arm;
        maj += fd.cells[u].leg + 1;
      }
    }
    sum.add_term({inv, maj}, 1);
  } while (std::next_permutation(word.begin(), word.end()));
  return sum;
}

}  // namespace

std::vector<CellStats> cell_stats(const Partition& mu) {
  const Partition conj = mu.conjugate();
  std::vector<CellStats> out;
  for (int r = 0; r < mu.length(); ++r) {
    for (int c = 0; c < mu[r]; ++c) {
      out.push_back({r, c, mu[r] - c - 1, conj[c] - r - 1, c, r});
    }
  }
  return out;
}

int macdonald_cap() { return g_macdonald_cap.load(); }

void set_macdonald_cap(int cap) {
  if (cap < 1) throw input_error("Macdonald cap must be positive");
  g_macdonald_cap.store(cap);
}

LaurentQT htilde_monomial_coefficient(const Partition& mu, const std::vector<int>& content) {
  check_cap(mu.size());
  if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; })) {
    throw input_error("negative content");
  }
  return fillings_sum(filling_data(mu), content);
}

SymFunc htilde(const Partition& mu) {
  check_cap(mu.size());
  static std::mutex m;
  static std::map<Partition, SymFunc> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(mu); it != cache.end()) return it->second;
  }
  const FillingData fd = filling_data(mu);
  SymFunc mono(mu.size(), Basis::monomial);
  for (const Partition& nu : partitions_of(mu.size())) {
    mono.add_term(nu, fillings_sum(fd, nu.parts()));
  }
  SymFunc out = change_basis(mono, Basis::schur);
  std::lock_guard lock(m);
  cache.emplace(mu, out);
  return out;
}

LaurentQT b_mu(const Partition& mu) {
  LaurentQT b;
  for (const auto& c : cell_stats(mu)) b.add_term({c.coarm, c.coleg}, 1);
  return b;
}

LaurentQT delta_prime_eigenvalue(int k, const Partition& mu) {
  if (k < 1 || k > mu.size()) {
    throw input_error("delta_prime_eigenvalue: k=" + std::to_string(k) + " outside [1, " +
                      std::to_string(mu.size()) + "]");
  }
  // Coefficients of prod (1 + z x) over the monomials x of B_mu - 1.
  std::vector<LaurentQT> e(1, LaurentQT(1));
  for (const auto& c : cell_stats(mu)) {
    if (c.coarm == 0 && c.coleg == 0) continue;
    const LaurentQT x = LaurentQT::monomial(1, c.coarm, c.coleg);
    e.emplace_back();
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += e[j - 1] * x;
  }
  return e[k - 1];
}

LaurentQT nabla_eigenvalue(const Partition& mu) {
  return LaurentQT::monomial(1, mu.conjugate().n_stat(), mu.n_stat());
}

std::map<Partition, RatQT> expand_in_htilde(const SymFunc& f) {
  const int d = f.degree();
  check_cap(d);
  const std::vector<Partition> parts = partitions_of(d);
  const std::size_t np = parts.size();
  const SymFunc fs = change_basis(f, Basis::schur);

  RatMatrix a(np, std::vector<RatQT>(np));
  std::vector<RatQT> rhs(np);
  for (std::size_t j = 0; j < np; ++j) {
    const SymFunc h = htilde(parts[j]);
    for (std::size_t i = 0; i < np; ++i) a[i][j] = RatQT(h.coeff(parts[i]));
  }
  for (std::size_t i = 0; i < np; ++i) rhs[i] = RatQT(fs.coeff(parts[i]));

  const std::vector<RatQT> x = rat_solve(a, rhs);
  std::map<Partition, RatQT> out;
  for (std::size_t j = 0; j < np; ++j) {
    if (!x[j].is_zero()) out.emplace(parts[j], x[j]);
  }
  return out;
}

namespace {

SymFunc apply_eigen(int n, const std::function<LaurentQT(const Partition&)>& eigen) {
  const auto coeffs = expand_in_htilde(SymFunc::e(Partition{n}));
  std::map<Partition, RatQT> acc;
  for (const auto& [mu, c] : coeffs) {
    const RatQT scaled = c * RatQT(eigen(mu));
    const SymFunc h = htilde(mu);
    for (const auto& [lambda, k] : h.terms()) {
      auto [it, inserted] = acc.try_emplace(lambda, scaled * RatQT(k));
      if (!inserted) it->second += scaled * RatQT(k);
    }
  }
  SymFunc out(n, Basis::schur);
  for (const auto& [lambda, r] : acc) {
    auto poly = r.as_laurent();
    if (!poly) throw identity_error("eigen-expansion inconsistent");
    out.add_term(lambda, *poly);
  }
  return out;
}

}  // namespace

SymFunc apply_delta_prime(int k, int n) {
  if (n < 1 || k < 1 || k > n) {
    throw input_error("apply_delta_prime requires 1 <= k <= n");
  }
  check_cap(n);
  static std::mutex m;
  static std::map<std::pair<int, int>, SymFunc> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find({k, n}); it != cache.end()) return it->second;
  }
  SymFunc out = apply_eigen(n, [k](const Partition& mu) { return delta_prime_eigenvalue(k, mu); });
  std::lock_guard lock(m);
  cache.emplace(std::make_pair(k, n), out);
  return out;
}

SymFunc apply_nabla(int n) {
  if (n < 1) throw input_error("apply_nabla requires n >= 1");
  check_cap(n);
  return apply_eigen(n, nabla_eigenvalue);
}

}  // namespace parkfrob
