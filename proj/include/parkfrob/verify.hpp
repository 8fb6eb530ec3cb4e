#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parkfrob/frobenius.hpp"
#include "parkfrob/serialize.hpp"

namespace parkfrob {

enum class Suite { shuffle, skewing, cells, census, all };

std::string_view suite_name(Suite s);
Suite parse_suite(std::string_view name);

/// One checked identity. lhs and rhs hold symmetric functions or counts.
struct Verdict {
  std::string suite;
  std::string identity;
  Grid grid;
  Json lhs;
  Json rhs;
  bool equal = false;
};

Json to_json(const Verdict& v);

struct VerifyRange {
  int n_max = 0;  // 0: bounded by K_max only
  int K_max = 0;  // 0: the K cap
};

/// Grids (n, k) with 1 <= k <= n <= n_max and K <= K_max, in (n, k) order.
std::vector<Grid> grids_in_range(const VerifyRange& r);

/// Runs a suite; identity errors raised by the routes propagate.
std::vector<Verdict> run_suite(Suite s, const VerifyRange& r, const ComputeOptions& opt = {});

/// |A| = |B| = inv(w^-1) - (delta - dinv) over every gamma-restricted w of g.
/// Returns the number of permutations checked and of those that failed.
std::pair<std::int64_t, std::int64_t> check_cells(const Grid& g, int workers = 1);

}  // namespace parkfrob
