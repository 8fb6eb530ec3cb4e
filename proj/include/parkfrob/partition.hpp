#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace parkfrob {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts and drops zeros; accepts any composition.
  static Partition from_composition(std::vector<int> parts);
  /// rows copies of cols: (cols)^rows. Either argument may be zero.
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// n(mu) = sum (i-1) mu_i.
  int n_stat() const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Dominance order a <= b (partial sums). Sizes must agree.
bool dominance_leq(const Partition& a, const Partition& b);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
/// This is a linear extension of dominance with larger elements first.
std::vector<Partition> partitions_of(int n);

/// All compositions (positive parts) of n, lexicographic order.
std::vector<std::vector<int>> compositions_of(int n);

}  // namespace parkfrob
