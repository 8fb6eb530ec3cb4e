#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "parkfrob/parking.hpp"

namespace parkfrob {

/// One box per row 1..n; cols[j-1] is the column (1..k) of row j's box.
/// Columns move weakly right going up and every column is used.
struct Stack {
  int n = 1;
  int k = 1;
  std::vector<int> cols;

  /// Number of boxes in each column.
  std::vector<int> heights() const;
  static Stack from_heights(int n, int k, const std::vector<int>& heights);
  friend bool operator==(const Stack&, const Stack&) = default;
};

/// Lattice path (0,0) -> (k,n) given by vertical run lengths, with labels
/// 1..n per row increasing up each run; every stack box lies right of the
/// path in its row.
struct StackedPF {
  Stack stack;
  std::vector<int> runs;
  std::vector<int> labels;
  friend bool operator==(const StackedPF&, const StackedPF&) = default;
};

void validate(const Stack& s);
void validate(const StackedPF& spf);

std::vector<Stack> enumerate_stacks(int n, int k);
void for_each_stacked_pf(const Stack& s, const std::function<void(const StackedPF&)>& fn);
void for_each_stacked_pf(int n, int k, const std::function<void(const StackedPF&)>& fn);
std::int64_t count_stacked_pfs(int n, int k);

/// Number of labels greater than n in each column.
std::vector<int> big_label_counts(const ParkingFunction& pf);
bool is_admissible(const ParkingFunction& pf);
/// Erases the big labels; stack heights are n-k+1-b_i.
StackedPF shrink_F(const ParkingFunction& pf);
/// Big labels n+1..K sit on their rows in increasing rank order.
bool is_canonical_orbit_rep(const ParkingFunction& pf, const PathStats& ps);

/// Canonical admissible parking functions, one per orbit of the big labels.
std::int64_t orbit_count(const Grid& g);

}  // namespace parkfrob
