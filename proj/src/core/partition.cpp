#include "parkfrob/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "parkfrob/errors.hpp"

namespace parkfrob {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw input_error("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw input_error("partition parts must be weakly decreasing: " + to_string());
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_composition(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw input_error("rectangle dimensions must be nonnegative");
  if (rows == 0 || cols == 0) return Partition{};
  return Partition(std::vector<int>(rows, cols));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_.front(), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

int Partition::n_stat() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts_[i];
  return s;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw input_error("dominance_leq: partitions of different sizes " + a.to_string() +
                      " and " + b.to_string());
  }
  int sa = 0;
  int sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void gen_compositions(int remaining, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= remaining; ++p) {
    cur.push_back(p);
    gen_compositions(remaining - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw input_error("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
  if (n < 0) throw input_error("compositions_of: negative size");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_compositions(n, cur, out);
  return out;
}

}  // namespace parkfrob
