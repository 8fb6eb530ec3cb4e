#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "parkfrob/parking.hpp"
#include "parkfrob/symfunc.hpp"

namespace parkfrob {

enum class Side { X, Y, E, Delta };
enum class DinvVariant { dinv, dinv_prime };

std::string_view side_name(Side s);
Side parse_side(std::string_view name);

struct ComputeOptions {
  int workers = 1;
  /// Directory for cached results; empty disables caching.
  std::string cache_dir;
  /// Run the second computation route and compare.
  bool check = true;
};

struct FrobResult {
  Grid grid;
  Side side = Side::X;
  SymFunc value;
  std::string provenance;
};

/// Runs fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

/// Symmetric function whose monomial coefficient at eta is the sum of
/// t^area q^dinv over strict word parking functions of content eta, or of
/// t^area q^dinv' over weak ones for the primed variant.
SymFunc e_shuffle(const Grid& g, DinvVariant variant, const ComputeOptions& opt = {});

/// rev_q(omega E, delta); with opt.check also the weak word parking
/// function sum of t^area q^(delta - dinv'), asserted equal.
FrobResult frob_X(int n, int k, const ComputeOptions& opt = {});
/// q^(-binom(k-1,2)(n-k)) s^perp_{(n-k)^(k-1)} frob_X; with opt.check also
/// rev_q(omega Delta'_{e_{k-1}} e_n) when n is within the Macdonald cap.
FrobResult frob_Y(int n, int k, const ComputeOptions& opt = {});
FrobResult frob(Side side, int n, int k, const ComputeOptions& opt = {});

struct IdentityReport {
  std::string identity;
  Grid grid;
  SymFunc lhs;
  SymFunc rhs;
  bool equal = false;
};

/// Both skewing identities at (n, k).
std::vector<IdentityReport> verify_skewing(int n, int k, const ComputeOptions& opt = {});

struct Census {
  Grid grid;
  std::int64_t parking_functions = 0;
  std::int64_t gamma_restricted = 0;
  std::int64_t admissible_orbits = 0;
  std::int64_t stacked_pfs = 0;
  bool consistent() const {
    return parking_functions == gamma_restricted && admissible_orbits == stacked_pfs;
  }
};

Census fixed_point_census(int n, int k, const ComputeOptions& opt = {});

/// Removes every cached file in dir; returns the number removed.
int clear_cache(const std::string& dir);

}  // namespace parkfrob
