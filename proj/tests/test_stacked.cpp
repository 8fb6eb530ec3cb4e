#include <map>
#include <set>

#include "doctest.h"
#include "parkfrob/errors.hpp"
#include "parkfrob/serialize.hpp"
#include "parkfrob/stacked.hpp"

using namespace parkfrob;

namespace {

std::int64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Small labels kept, big ones blanked: identifies an orbit of the big labels.
std::pair<std::vector<int>, std::vector<int>> orbit_key(const ParkingFunction& pf) {
  std::vector<int> l = pf.labels;
  for (int& x : l) {
    if (x > pf.path.grid().n) x = 0;
  }
  return {pf.path.runs(), l};
}

}  // namespace

TEST_CASE("stack enumeration") {
  CHECK(enumerate_stacks(2, 1).size() == 1);
  const auto s22 = enumerate_stacks(2, 2);
  REQUIRE(s22.size() == 1);
  CHECK(s22[0].cols == std::vector<int>{1, 2});
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto stacks = enumerate_stacks(n, k);
      CHECK(static_cast<std::int64_t>(stacks.size()) == binom(n - 1, k - 1));
      std::set<std::vector<int>> distinct;
      for (const Stack& s : stacks) {
        CHECK_NOTHROW(validate(s));
        distinct.insert(s.cols);
      }
      CHECK(distinct.size() == stacks.size());
    }
  }
  CHECK_THROWS_AS(enumerate_stacks(2, 3), Error);
}

TEST_CASE("stack validation") {
  CHECK_THROWS_AS(validate(Stack{3, 2, {2, 1, 2}}), Error);
  CHECK_THROWS_AS(validate(Stack{3, 2, {1, 1, 1}}), Error);
  CHECK_THROWS_AS(validate(Stack{3, 2, {1, 2}}), Error);
  CHECK_NOTHROW(validate(Stack{3, 2, {1, 1, 2}}));
  CHECK(Stack::from_heights(6, 3, {3, 2, 1}).cols == std::vector<int>{1, 1, 1, 2, 2, 3});
}

TEST_CASE("stacked parking functions") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_stacked_pfs(n, 1) == 1);
    CHECK(count_stacked_pfs(n, n) == ipow(n + 1, n - 1));
  }
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_stacked_pf(n, k, [&](const StackedPF& spf) {
        CHECK_NOTHROW(validate(spf));
        const Json j = to_json(spf);
        CHECK(j["stack"].get<std::vector<int>>() == spf.stack.cols);
        CHECK(j["labels"].get<std::vector<int>>() == spf.labels);
      });
    }
  }
  const Stack s{2, 2, {1, 2}};
  CHECK_THROWS_AS(validate(StackedPF{s, {0, 2}, {1, 2}}), Error);  // box in row 1 left of path
  CHECK_THROWS_AS(validate(StackedPF{s, {2, 0}, {2, 1}}), Error);
  CHECK_NOTHROW(validate(StackedPF{s, {2, 0}, {1, 2}}));
  CHECK_NOTHROW(validate(StackedPF{s, {1, 1}, {2, 1}}));
}

TEST_CASE("admissibility") {
  // k = n: no big labels.
  for (int n = 1; n <= 4; ++n) {
    for_each_pf(Grid::from_nk(n, n), [&](const ParkingFunction& pf) { CHECK(is_admissible(pf)); });
  }
  // (3,2): one big label, any placement is admissible.
  int c = 0;
  for_each_pf(Grid::from_nk(3, 2), [&](const ParkingFunction& pf) {
    CHECK(is_admissible(pf));
    ++c;
  });
  CHECK(c == count_pfs(Grid::from_nk(3, 2)));
  // (5,3): K = 9, four big labels, at most 2 per column.
  const Grid g = Grid::from_nk(5, 3);
  const DyckPath top(g, {9, 0, 0});
  CHECK_FALSE(is_admissible(ParkingFunction{top, {1, 2, 3, 4, 5, 6, 7, 8, 9}}));
  CHECK_THROWS_AS(shrink_F(ParkingFunction{top, {1, 2, 3, 4, 5, 6, 7, 8, 9}}), Error);
}

TEST_CASE("shrink_F heights") {
  // b = (2,1,3) in the (6,3) grid gives heights 4 - b.
  const Grid g = Grid::from_nk(6, 3);
  const std::vector<int> b{2, 1, 3};
  bool found = false;
  for_each_path(g, [&](const DyckPath& p) {
    if (found) return;
    const auto& r = p.runs();
    for (int i = 0; i < 3; ++i) {
      if (r[i] < b[i]) return;
    }
    std::vector<int> labels;
    int small = 1;
    int big = 7;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < r[i] - b[i]; ++j) labels.push_back(small++);
      for (int j = 0; j < b[i]; ++j) labels.push_back(big++);
    }
    const ParkingFunction pf{p, labels};
    CHECK(big_label_counts(pf) == b);
    REQUIRE(is_admissible(pf));
    const StackedPF spf = shrink_F(pf);
    CHECK(spf.stack.heights() == std::vector<int>{2, 3, 1});
    found = true;
  });
  CHECK(found);

  // k = n: the full staircase stack, paths and labels unchanged.
  for_each_pf(Grid::from_nk(3, 3), [&](const ParkingFunction& pf) {
    const StackedPF spf = shrink_F(pf);
    CHECK(spf.stack.cols == std::vector<int>{1, 2, 3});
    CHECK(spf.runs == pf.path.runs());
    CHECK(spf.labels == pf.labels);
  });
}

TEST_CASE("F on orbits, K <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Grid g = Grid::from_nk(n, k);
      if (g.K() > 8) continue;
      std::map<std::pair<std::vector<int>, std::vector<int>>, StackedPF> image;
      for_each_pf(g, [&](const ParkingFunction& pf) {
        if (!is_admissible(pf)) return;
        const StackedPF spf = shrink_F(pf);
        CHECK(spf.runs.size() == static_cast<std::size_t>(k));
        int hsum = 0;
        for (int h : spf.stack.heights()) hsum += h;
        CHECK(hsum == n);
        const auto key = orbit_key(pf);
        auto [it, fresh] = image.emplace(key, spf);
        if (!fresh) CHECK(it->second == spf);
      });
      // Injective on orbits, and onto the stacked parking functions.
      std::set<std::vector<int>> seen;
      for (const auto& [key, spf] : image) {
        std::vector<int> flat = spf.stack.cols;
        flat.insert(flat.end(), spf.runs.begin(), spf.runs.end());
        flat.insert(flat.end(), spf.labels.begin(), spf.labels.end());
        CHECK(seen.insert(flat).second);
      }
      CHECK(static_cast<std::int64_t>(image.size()) == count_stacked_pfs(n, k));
      CHECK(orbit_count(g) == static_cast<std::int64_t>(image.size()));
    }
  }
}

TEST_CASE("orbit counts") {
  CHECK(orbit_count(Grid::from_nk(2, 2)) == 3);
  CHECK(orbit_count(Grid::from_nk(2, 1)) == count_stacked_pfs(2, 1));
  CHECK(orbit_count(Grid::from_nk(3, 2)) == count_stacked_pfs(3, 2));
}
