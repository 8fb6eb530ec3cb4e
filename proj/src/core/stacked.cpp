#include "parkfrob/stacked.hpp"

#include <algorithm>
#include <numeric>

#include "parkfrob/errors.hpp"

namespace parkfrob {

std::vector<int> Stack::heights() const {
  std::vector<int> h(k, 0);
  for (int c : cols) {
    if (c >= 1 && c <= k) ++h[c - 1];
  }
  return h;
}

Stack Stack::from_heights(int n, int k, const std::vector<int>& heights) {
  Stack s{n, k, {}};
  for (int i = 0; i < static_cast<int>(heights.size()); ++i) {
    for (int r = 0; r < heights[i]; ++r) s.cols.push_back(i + 1);
  }
  validate(s);
  return s;
}

void validate(const Stack& s) {
  if (s.k < 1 || s.n < s.k) throw input_error("stack requires 1 <= k <= n");
  if (static_cast<int>(s.cols.size()) != s.n) throw input_error("stack needs one box per row");
  for (int j = 0; j < s.n; ++j) {
    if (s.cols[j] < 1 || s.cols[j] > s.k) throw input_error("stack column out of range");
    if (j > 0 && s.cols[j] < s.cols[j - 1]) throw input_error("stack must move weakly right going up");
  }
  for (int h : s.heights()) {
    if (h == 0) throw input_error("stack must use every column");
  }
}

namespace {

std::vector<int> step_columns(const std::vector<int>& runs) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(runs.size()); ++i) out.insert(out.end(), runs[i], i);
  return out;
}

bool path_fits(const Stack& s, const std::vector<int>& runs) {
  const auto steps = step_columns(runs);
  for (int j = 0; j < s.n; ++j) {
    if (!(steps[j] < s.cols[j])) return false;
  }
  return true;
}

}  // namespace

void validate(const StackedPF& spf) {
  validate(spf.stack);
  const int n = spf.stack.n;
  if (static_cast<int>(spf.runs.size()) != spf.stack.k ||
      std::any_of(spf.runs.begin(), spf.runs.end(), [](int r) { return r < 0; }) ||
      std::accumulate(spf.runs.begin(), spf.runs.end(), 0) != n) {
    throw input_error("stacked path must have k nonnegative runs summing to n");
  }
  if (!path_fits(spf.stack, spf.runs)) throw input_error("a stack box is not right of the path");
  if (static_cast<int>(spf.labels.size()) != n) throw input_error("stacked labels need n entries");
  std::vector<bool> seen(n + 1, false);
  for (int l : spf.labels) {
    if (l < 1 || l > n || seen[l]) throw input_error("stacked labels must be a permutation of 1..n");
    seen[l] = true;
  }
  const auto steps = step_columns(spf.runs);
  for (int j = 1; j < n; ++j) {
    if (steps[j] == steps[j - 1] && spf.labels[j] <= spf.labels[j - 1]) {
      throw input_error("stacked labels must increase up each column");
    }
  }
}

std::vector<Stack> enumerate_stacks(int n, int k) {
  if (k < 1 || n < k) throw input_error("stacks require 1 <= k <= n");
  std::vector<Stack> out;
  std::vector<int> h(k, 0);
  auto rec = [&](auto&& self, int col, int left) -> void {
    if (col == k - 1) {
      if (left < 1) return;
      h[col] = left;
      out.push_back(Stack::from_heights(n, k, h));
      return;
    }
    for (int v = 1; v <= left - (k - 1 - col); ++v) {
      h[col] = v;
      self(self, col + 1, left - v);
    }
  };
  rec(rec, 0, n);
  // Row-wise column words in lexicographic order.
  std::sort(out.begin(), out.end(), [](const Stack& a, const Stack& b) { return a.cols < b.cols; });
  return out;
}

void for_each_stacked_pf(const Stack& s, const std::function<void(const StackedPF&)>& fn) {
  validate(s);
  const int n = s.n;
  const int k = s.k;
  StackedPF spf{s, std::vector<int>(k, 0), std::vector<int>(n, 0)};
  std::vector<bool> used(n + 1, false);
  std::vector<int> steps;

  auto label_rec = [&](auto&& self, int row) -> void {
    if (row == n) {
      fn(spf);
      return;
    }
    const int lo = (row > 0 && steps[row] == steps[row - 1]) ? spf.labels[row - 1] + 1 : 1;
    for (int l = lo; l <= n; ++l) {
      if (used[l]) continue;
      used[l] = true;
      spf.labels[row] = l;
      self(self, row + 1);
      used[l] = false;
    }
  };
  auto path_rec = [&](auto&& self, int col, int left) -> void {
    if (col == k - 1) {
      spf.runs[col] = left;
      if (!path_fits(s, spf.runs)) return;
      steps = step_columns(spf.runs);
      label_rec(label_rec, 0);
      return;
    }
    for (int r = 0; r <= left; ++r) {
      spf.runs[col] = r;
      self(self, col + 1, left - r);
    }
  };
  path_rec(path_rec, 0, n);
}

void for_each_stacked_pf(int n, int k, const std::function<void(const StackedPF&)>& fn) {
  for (const Stack& s : enumerate_stacks(n, k)) for_each_stacked_pf(s, fn);
}

std::int64_t count_stacked_pfs(int n, int k) {
  std::int64_t c = 0;
  for_each_stacked_pf(n, k, [&](const StackedPF&) { ++c; });
  return c;
}

std::vector<int> big_label_counts(const ParkingFunction& pf) {
  const Grid& g = pf.path.grid();
  std::vector<int> b(g.k, 0);
  for (int j = 1; j <= g.K(); ++j) {
    if (pf.labels[j - 1] > g.n) ++b[pf.path.step_column(j)];
  }
  return b;
}

bool is_admissible(const ParkingFunction& pf) {
  validate(pf);
  const Grid& g = pf.path.grid();
  const auto b = big_label_counts(pf);
  int big = 0;
  int small = 0;
  for (int i = 0; i < g.k; ++i) {
    big += b[i];
    small += pf.path.runs()[i] - b[i];
  }
  if (big != g.K() - g.n || small != g.n) {
    throw identity_error("label census does not split as n small and K-n big labels");
  }
  return std::all_of(b.begin(), b.end(), [&](int bi) { return bi <= g.n - g.k; });
}

StackedPF shrink_F(const ParkingFunction& pf) {
  if (!is_admissible(pf)) throw input_error("shrink_F requires an admissible parking function");
  const Grid& g = pf.path.grid();
  const auto b = big_label_counts(pf);
  std::vector<int> h(g.k);
  std::vector<int> runs(g.k);
  for (int i = 0; i < g.k; ++i) {
    h[i] = g.n - g.k + 1 - b[i];
    runs[i] = pf.path.runs()[i] - b[i];
  }
  StackedPF out{Stack::from_heights(g.n, g.k, h), runs, {}};
  for (int j = 1; j <= g.K(); ++j) {
    if (pf.labels[j - 1] <= g.n) out.labels.push_back(pf.labels[j - 1]);
  }
  validate(out);
  return out;
}

bool is_canonical_orbit_rep(const ParkingFunction& pf, const PathStats& ps) {
  const int n = pf.path.grid().n;
  std::vector<int> big_rows;
  for (int j = 0; j < static_cast<int>(pf.labels.size()); ++j) {
    if (pf.labels[j] > n) big_rows.push_back(j);
  }
  std::sort(big_rows.begin(), big_rows.end(),
            [&](int a, int b) { return ps.row_rank[a] < ps.row_rank[b]; });
  for (int i = 0; i < static_cast<int>(big_rows.size()); ++i) {
    if (pf.labels[big_rows[i]] != n + 1 + i) return false;
  }
  return true;
}

std::int64_t orbit_count(const Grid& g) {
  std::int64_t c = 0;
  for_each_path(g, [&](const DyckPath& p) {
    const PathStats ps = path_statistics(p);
    ParkingFunction pf{p, {}};
    for_each_labeling(p, [&](const std::vector<int>& labels) {
      pf.labels = labels;
      if (is_canonical_orbit_rep(pf, ps) && is_admissible(pf)) ++c;
    });
  });
  return c;
}

}  // namespace parkfrob
