#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace parkfrob {

/// Grid parameters: K = k(n-k+1) rows, k columns, slope s = n-k+1. N only
/// matters to the affine element gamma and defaults to k.
struct Grid {
  int n = 1;
  int k = 1;
  int N = 1;

  static Grid from_nk(int n, int k, int N = -1);
  /// Inverse of K = k(n-k+1); K must be a positive multiple of k.
  static Grid from_Kk(int K, int k, int N = -1);

  int K() const noexcept { return k * (n - k + 1); }
  int slope() const noexcept { return n - k + 1; }
  int delta() const noexcept { return (k - 1) * K() / 2; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Largest K accepted by enumerations (default 12).
int k_cap();
void set_k_cap(int cap);
void check_k_cap(const Grid& g);

/// Box in rank coordinates: column i in 1..k, row j in 1..K. Column i is
/// the unit box just left of the vertical line x = i-1.
struct Box {
  int col = 1;
  int row = 1;
};

int rank(const Grid& g, int i, int j);
/// rk(a) < rk(b) <= rk(a) + k.
bool attacks_by_rank(const Grid& g, Box a, Box b);
/// Same diagonal with a left of b; or a one diagonal below b and to its
/// right; or a directly below b when the row of a is not a multiple of s.
bool attacks_by_geometry(const Grid& g, Box a, Box b);
/// Both predicates; throws an identity error if they disagree.
bool is_attacking(const Grid& g, Box a, Box b);

/// Rational Dyck path in the K x k grid, stored as vertical run lengths per
/// column (column i runs along x = i-1).
class DyckPath {
 public:
  DyckPath(const Grid& g, std::vector<int> runs);
  static DyckPath from_heights(const Grid& g, const std::vector<int>& heights);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<int>& runs() const noexcept { return runs_; }
  std::vector<int> heights() const;
  /// x-coordinate of the vertical step in row j (1-based).
  int step_column(int j) const { return step_col_[j - 1]; }
  const std::vector<int>& step_columns() const noexcept { return step_col_; }

  friend bool operator==(const DyckPath& a, const DyckPath& b) {
    return a.grid_ == b.grid_ && a.runs_ == b.runs_;
  }

 private:
  Grid grid_;
  std::vector<int> runs_;
  std::vector<int> step_col_;
};

/// Labels indexed by row (labels[j-1] is the label of row j).
struct ParkingFunction {
  DyckPath path;
  std::vector<int> labels;
};

/// Labels are positive integers; `weak` allows equal labels inside a run.
struct WordParkingFunction {
  DyckPath path;
  std::vector<int> labels;
  bool weak = true;

  /// Multiplicity of each label value 1..max.
  std::vector<int> content() const;
};

void validate(const ParkingFunction& pf);
void validate(const WordParkingFunction& wpf);

/// Per-path data shared by every labeling of the path.
struct PathStats {
  int area = 0;
  int pathdinv = 0;
  int maxtdinv = 0;
  std::vector<int> row_rank;                      // rank of each row's label cell
  std::vector<std::pair<int, int>> attack_rows;   // 0-based rows (a, b), rk(a) < rk(b)
};

struct PfStatistics {
  int area = 0;
  int pathdinv = 0;
  int tdinv = 0;
  int maxtdinv = 0;
  int dinv = 0;
};

int area(const DyckPath& p);
int pathdinv_by_ratio(const DyckPath& p);
int pathdinv_by_legs(const DyckPath& p);
int maxtdinv_by_pairs(const DyckPath& p);
int maxtdinv_by_greedy(const DyckPath& p);
/// Computes every per-path statistic; cross-checks the two pathdinv and
/// maxtdinv routes.
PathStats path_statistics(const DyckPath& p);
int codinv_pairs(const DyckPath& p);

/// Attacking pairs with a strictly smaller label below; ties count when
/// `count_ties` is set.
int tdinv(const PathStats& ps, const std::vector<int>& labels, bool count_ties = false);

PfStatistics statistics(const ParkingFunction& pf);
PfStatistics statistics(const PathStats& ps, const std::vector<int>& labels);
/// Statistics of a word parking function; ties do not count.
PfStatistics word_statistics(const WordParkingFunction& wpf);
/// dinv with attacking ties counted.
int dinv_prime(const WordParkingFunction& wpf);
int dinv_prime(const PathStats& ps, const std::vector<int>& labels);

/// Replaces equal labels by consecutive ones in increasing rank order.
ParkingFunction standardize(const WordParkingFunction& wpf);
std::vector<int> standardize_labels(const PathStats& ps, const std::vector<int>& labels);

/// Paths in lexicographic order of heights.
void for_each_path(const Grid& g, const std::function<void(const DyckPath&)>& fn);
std::int64_t count_paths(const Grid& g);
/// Labelings strictly increasing up runs, lexicographic by label word.
void for_each_labeling(const DyckPath& p, const std::function<void(const std::vector<int>&)>& fn);
/// Labelings with the given content (eta[v-1] copies of v).
void for_each_word_labeling(const DyckPath& p, const std::vector<int>& eta, bool weak,
                            const std::function<void(const std::vector<int>&)>& fn);

void for_each_pf(const Grid& g, const std::function<void(const ParkingFunction&)>& fn);
std::int64_t count_pfs(const Grid& g);
void for_each_wpf(const Grid& g, const std::vector<int>& eta, bool weak,
                  const std::function<void(const WordParkingFunction&)>& fn);

}  // namespace parkfrob
