#include "parkfrob/parking.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "parkfrob/errors.hpp"

namespace parkfrob {

namespace {

std::atomic<int> g_k_cap{12};

std::string grid_str(const Grid& g) {
  return "(n,k)=(" + std::to_string(g.n) + "," + std::to_string(g.k) + ")";
}

}  // namespace

Grid Grid::from_nk(int n, int k, int N) {
  if (k < 1 || n < k) {
    throw input_error("grid requires 1 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  if (N < 0) N = k;
  return Grid{n, k, N};
}

Grid Grid::from_Kk(int K, int k, int N) {
  if (k < 1 || K < k || K % k != 0) {
    throw input_error("K=" + std::to_string(K) + " is not a positive multiple of k=" +
                      std::to_string(k));
  }
  return from_nk(K / k + k - 1, k, N);
}

int k_cap() { return g_k_cap.load(); }

void set_k_cap(int cap) {
  if (cap < 1 || cap > 60) throw input_error("K cap must lie in [1, 60]");
  g_k_cap.store(cap);
}

void check_k_cap(const Grid& g) {
  if (g.K() > g_k_cap.load()) {
    throw input_error("K=" + std::to_string(g.K()) + " for " + grid_str(g) +
                      " exceeds the K cap " + std::to_string(g_k_cap.load()));
  }
}

int rank(const Grid& g, int i, int j) {
  if (i < 1 || i > g.k || j < 1 || j > g.K()) {
    throw input_error("box (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside the grid " + grid_str(g));
  }
  return 1 + (j - 1) * g.k + (j - 1) / g.slope() - g.K() * (i - 1);
}

bool attacks_by_rank(const Grid& g, Box a, Box b) {
  const int ra = rank(g, a.col, a.row);
  const int rb = rank(g, b.col, b.row);
  return ra < rb && rb <= ra + g.k;
}

bool attacks_by_geometry(const Grid& g, Box a, Box b) {
  const int s = g.slope();
  const int da = (a.row - 1) - s * (a.col - 1);
  const int db = (b.row - 1) - s * (b.col - 1);
  if (da == db) return a.col < b.col;
  if (db == da + 1) {
    if (a.col > b.col) return true;
    if (a.col == b.col) return a.row % s != 0;
  }
  return false;
}

bool is_attacking(const Grid& g, Box a, Box b) {
  const bool by_rank = attacks_by_rank(g, a, b);
  if (by_rank != attacks_by_geometry(g, a, b)) {
    throw identity_error("attacking predicates disagree on boxes (" + std::to_string(a.col) +
                         "," + std::to_string(a.row) + ") and (" + std::to_string(b.col) + "," +
                         std::to_string(b.row) + ")");
  }
  return by_rank;
}

DyckPath::DyckPath(const Grid& g, std::vector<int> runs) : grid_(g), runs_(std::move(runs)) {
  if (static_cast<int>(runs_.size()) != g.k) {
    throw input_error("path needs " + std::to_string(g.k) + " runs, got " +
                      std::to_string(runs_.size()));
  }
  int h = 0;
  for (int i = 0; i < g.k; ++i) {
    if (runs_[i] < 0) throw input_error("negative run length");
    h += runs_[i];
    if (i + 1 < g.k && h < g.slope() * (i + 1)) {
      throw input_error("path dips below the diagonal after column " + std::to_string(i + 1));
    }
    for (int r = 0; r < runs_[i]; ++r) step_col_.push_back(i);
  }
  if (h != g.K()) {
    throw input_error("runs sum to " + std::to_string(h) + ", expected K=" +
                      std::to_string(g.K()));
  }
}

DyckPath DyckPath::from_heights(const Grid& g, const std::vector<int>& heights) {
  std::vector<int> runs(heights.size());
  int prev = 0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    runs[i] = heights[i] - prev;
    prev = heights[i];
  }
  return DyckPath(g, std::move(runs));
}

std::vector<int> DyckPath::heights() const {
  std::vector<int> h(runs_.size());
  std::partial_sum(runs_.begin(), runs_.end(), h.begin());
  return h;
}

std::vector<int> WordParkingFunction::content() const {
  const int mx = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  std::vector<int> c(std::max(mx, 0), 0);
  for (int l : labels) {
    if (l >= 1) ++c[l - 1];
  }
  return c;
}

void validate(const ParkingFunction& pf) {
  const int K = pf.path.grid().K();
  if (static_cast<int>(pf.labels.size()) != K) throw input_error("parking function needs K labels");
  std::vector<bool> seen(K + 1, false);
  for (int l : pf.labels) {
    if (l < 1 || l > K || seen[l]) throw input_error("labels must be a permutation of 1..K");
    seen[l] = true;
  }
  for (int j = 2; j <= K; ++j) {
    if (pf.path.step_column(j) == pf.path.step_column(j - 1) &&
        pf.labels[j - 1] <= pf.labels[j - 2]) {
      throw input_error("labels must increase up each vertical run");
    }
  }
}

void validate(const WordParkingFunction& wpf) {
  const int K = wpf.path.grid().K();
  if (static_cast<int>(wpf.labels.size()) != K) {
    throw input_error("word parking function needs K labels");
  }
  for (int l : wpf.labels) {
    if (l < 1) throw input_error("word labels must be positive");
  }
  for (int j = 2; j <= K; ++j) {
    if (wpf.path.step_column(j) != wpf.path.step_column(j - 1)) continue;
    const int lo = wpf.labels[j - 2];
    const int hi = wpf.labels[j - 1];
    if (wpf.weak ? hi < lo : hi <= lo) {
      throw input_error(wpf.weak ? "word labels must weakly increase up each run"
                                 : "word labels must strictly increase up each run");
    }
  }
}

int area(const DyckPath& p) {
  const Grid& g = p.grid();
  const int s = g.slope();
  int a = 0;
  for (int j = 1; j <= g.K(); ++j) {
    for (int col = p.step_column(j) + 1; col <= g.k; ++col) {
      if (j - 1 >= s * col) ++a;
    }
  }
  return a;
}

int pathdinv_by_ratio(const DyckPath& p) {
  const Grid& g = p.grid();
  const int K = g.K();
  const int k = g.k;
  int count = 0;
  for (int j = 1; j <= K; ++j) {
    const int c = p.step_column(j);
    for (int col = 1; col <= c; ++col) {
      const int arm = c - col;
      int leg = 0;
      for (int jj = 1; jj < j; ++jj) {
        if (p.step_column(jj) >= col) ++leg;
      }
      if (arm * K <= k * (leg + 1) && k * leg < K * (arm + 1)) ++count;
    }
  }
  return count;
}

int pathdinv_by_legs(const DyckPath& p) {
  const Grid& g = p.grid();
  const int s = g.slope();
  const std::vector<int> h = p.heights();
  int count = 0;
  for (int j = 1; j <= g.K(); ++j) {
    const int c = p.step_column(j);
    for (int col = 1; col <= c; ++col) {
      const int arm = c - col;
      const int leg = (j - 1) - h[col - 1];
      if (s * arm - 1 <= leg && leg <= s * arm + s - 1) ++count;
    }
  }
  return count;
}

namespace {

Box label_box(const DyckPath& p, int j) { return Box{p.step_column(j) + 1, j}; }

}  // namespace

int maxtdinv_by_pairs(const DyckPath& p) {
  const Grid& g = p.grid();
  int count = 0;
  for (int a = 1; a <= g.K(); ++a) {
    for (int b = 1; b <= g.K(); ++b) {
      if (a != b && attacks_by_rank(g, label_box(p, a), label_box(p, b))) ++count;
    }
  }
  return count;
}

int maxtdinv_by_greedy(const DyckPath& p) {
  const Grid& g = p.grid();
  const int K = g.K();
  // Hand out labels in increasing rank order; this labeling realises every
  // attacking pair as a tdinv pair.
  std::vector<int> rows(K);
  std::iota(rows.begin(), rows.end(), 1);
  std::sort(rows.begin(), rows.end(), [&](int a, int b) {
    const Box ba = label_box(p, a);
    const Box bb = label_box(p, b);
    return rank(g, ba.col, ba.row) < rank(g, bb.col, bb.row);
  });
  ParkingFunction pf{p, std::vector<int>(K)};
  for (int l = 0; l < K; ++l) pf.labels[rows[l] - 1] = l + 1;
  validate(pf);
  int count = 0;
  for (int a = 1; a <= K; ++a) {
    for (int b = 1; b <= K; ++b) {
      if (a != b && pf.labels[a - 1] < pf.labels[b - 1] &&
          attacks_by_geometry(g, label_box(p, a), label_box(p, b))) {
        ++count;
      }
    }
  }
  return count;
}

PathStats path_statistics(const DyckPath& p) {
  const Grid& g = p.grid();
  const int K = g.K();
  PathStats ps;
  ps.area = area(p);
  ps.pathdinv = pathdinv_by_ratio(p);
  if (const int alt = pathdinv_by_legs(p); alt != ps.pathdinv) {
    throw identity_error("pathdinv routes disagree: " + std::to_string(ps.pathdinv) + " vs " +
                         std::to_string(alt));
  }
  ps.row_rank.resize(K);
  for (int j = 1; j <= K; ++j) ps.row_rank[j - 1] = rank(g, p.step_column(j) + 1, j);
  for (int a = 0; a < K; ++a) {
    for (int b = 0; b < K; ++b) {
      const int ra = ps.row_rank[a];
      const int rb = ps.row_rank[b];
      if (ra < rb && rb <= ra + g.k) ps.attack_rows.emplace_back(a, b);
    }
  }
  ps.maxtdinv = static_cast<int>(ps.attack_rows.size());
  if (const int alt = maxtdinv_by_greedy(p); alt != ps.maxtdinv) {
    throw identity_error("maxtdinv routes disagree: " + std::to_string(ps.maxtdinv) + " vs " +
                         std::to_string(alt));
  }
  return ps;
}

int codinv_pairs(const DyckPath& p) {
  const Grid& g = p.grid();
  const int K = g.K();
  int count = 0;
  for (int ja = 1; ja <= K; ++ja) {
    const Box a = label_box(p, ja);
    for (int jb = 1; jb <= K; ++jb) {
      for (int col = p.step_column(jb) + 2; col <= g.k; ++col) {
        if (rank(g, col, jb) <= 0) continue;
        if (attacks_by_rank(g, a, Box{col, jb})) ++count;
      }
    }
  }
  return count;
}

int tdinv(const PathStats& ps, const std::vector<int>& labels, bool count_ties) {
  int count = 0;
  for (const auto& [a, b] : ps.attack_rows) {
    if (labels[a] < labels[b] || (count_ties && labels[a] == labels[b])) ++count;
  }
  return count;
}

PfStatistics statistics(const PathStats& ps, const std::vector<int>& labels) {
  PfStatistics st;
  st.area = ps.area;
  st.pathdinv = ps.pathdinv;
  st.maxtdinv = ps.maxtdinv;
  st.tdinv = tdinv(ps, labels);
  st.dinv = st.pathdinv + st.tdinv - st.maxtdinv;
  return st;
}

PfStatistics statistics(const ParkingFunction& pf) {
  validate(pf);
  return statistics(path_statistics(pf.path), pf.labels);
}

PfStatistics word_statistics(const WordParkingFunction& wpf) {
  validate(wpf);
  return statistics(path_statistics(wpf.path), wpf.labels);
}

int dinv_prime(const PathStats& ps, const std::vector<int>& labels) {
  return ps.pathdinv + tdinv(ps, labels, true) - ps.maxtdinv;
}

int dinv_prime(const WordParkingFunction& wpf) {
  validate(wpf);
  return dinv_prime(path_statistics(wpf.path), wpf.labels);
}

std::vector<int> standardize_labels(const PathStats& ps, const std::vector<int>& labels) {
  const int K = static_cast<int>(labels.size());
  std::vector<int> rows(K);
  std::iota(rows.begin(), rows.end(), 0);
  std::sort(rows.begin(), rows.end(), [&](int a, int b) {
    if (labels[a] != labels[b]) return labels[a] < labels[b];
    return ps.row_rank[a] < ps.row_rank[b];
  });
  std::vector<int> out(K);
  for (int l = 0; l < K; ++l) out[rows[l]] = l + 1;
  return out;
}

ParkingFunction standardize(const WordParkingFunction& wpf) {
  validate(wpf);
  ParkingFunction pf{wpf.path, standardize_labels(path_statistics(wpf.path), wpf.labels)};
  validate(pf);
  return pf;
}

void for_each_path(const Grid& g, const std::function<void(const DyckPath&)>& fn) {
  check_k_cap(g);
  const int k = g.k;
  const int K = g.K();
  const int s = g.slope();
  std::vector<int> runs(k, 0);
  auto rec = [&](auto&& self, int col, int height) -> void {
    if (col == k - 1) {
      runs[col] = K - height;
      fn(DyckPath(g, runs));
      return;
    }
    for (int r = std::max(0, s * (col + 1) - height); height + r <= K; ++r) {
      runs[col] = r;
      self(self, col + 1, height + r);
    }
  };
  rec(rec, 0, 0);
}

std::int64_t count_paths(const Grid& g) {
  std::int64_t c = 0;
  for_each_path(g, [&](const DyckPath&) { ++c; });
  return c;
}

void for_each_labeling(const DyckPath& p, const std::function<void(const std::vector<int>&)>& fn) {
  const int K = p.grid().K();
  std::vector<int> labels(K, 0);
  std::vector<bool> used(K + 1, false);
  auto rec = [&](auto&& self, int row) -> void {
    if (row == K) {
      fn(labels);
      return;
    }
    int lo = 1;
    if (row > 0 && p.step_columns()[row] == p.step_columns()[row - 1]) lo = labels[row - 1] + 1;
    for (int l = lo; l <= K; ++l) {
      if (used[l]) continue;
      used[l] = true;
      labels[row] = l;
      self(self, row + 1);
      used[l] = false;
    }
  };
  rec(rec, 0);
}

void for_each_word_labeling(const DyckPath& p, const std::vector<int>& eta, bool weak,
                            const std::function<void(const std::vector<int>&)>& fn) {
  const int K = p.grid().K();
  if (std::accumulate(eta.begin(), eta.end(), 0) != K ||
      std::any_of(eta.begin(), eta.end(), [](int e) { return e < 0; })) {
    throw input_error("content must be a composition of K=" + std::to_string(K));
  }
  const int L = static_cast<int>(eta.size());
  std::vector<int> left = eta;
  std::vector<int> labels(K, 0);
  auto rec = [&](auto&& self, int row) -> void {
    if (row == K) {
      fn(labels);
      return;
    }
    int lo = 1;
    if (row > 0 && p.step_columns()[row] == p.step_columns()[row - 1]) {
      lo = weak ? labels[row - 1] : labels[row - 1] + 1;
    }
    for (int v = lo; v <= L; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      labels[row] = v;
      self(self, row + 1);
      ++left[v - 1];
    }
  };
  rec(rec, 0);
}

void for_each_pf(const Grid& g, const std::function<void(const ParkingFunction&)>& fn) {
  for_each_path(g, [&](const DyckPath& p) {
    ParkingFunction pf{p, {}};
    for_each_labeling(p, [&](const std::vector<int>& labels) {
      pf.labels = labels;
      fn(pf);
    });
  });
}

std::int64_t count_pfs(const Grid& g) {
  std::int64_t total = 0;
  for_each_path(g, [&](const DyckPath& p) {
    // K! / prod(run!) computed incrementally as a product of binomials.
    std::int64_t ways = 1;
    int placed = 0;
    for (int r : p.runs()) {
      for (int i = 1; i <= r; ++i) ways = ways * (placed + i) / i;
      placed += r;
    }
    total += ways;
  });
  return total;
}

void for_each_wpf(const Grid& g, const std::vector<int>& eta, bool weak,
                  const std::function<void(const WordParkingFunction&)>& fn) {
  for_each_path(g, [&](const DyckPath& p) {
    WordParkingFunction w{p, {}, weak};
    for_each_word_labeling(p, eta, weak, [&](const std::vector<int>& labels) {
      w.labels = labels;
      fn(w);
    });
  });
}

}  // namespace parkfrob
