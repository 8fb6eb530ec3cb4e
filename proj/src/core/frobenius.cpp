#include "parkfrob/frobenius.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "parkfrob/affine.hpp"
#include "parkfrob/errors.hpp"
#include "parkfrob/macdonald.hpp"
#include "parkfrob/serialize.hpp"
#include "parkfrob/stacked.hpp"

namespace parkfrob {

namespace fs = std::filesystem;

std::string_view side_name(Side s) {
  switch (s) {
    case Side::X: return "X";
    case Side::Y: return "Y";
    case Side::E: return "E";
    case Side::Delta: return "Delta";
  }
  return "X";
}

Side parse_side(std::string_view name) {
  if (name == "X") return Side::X;
  if (name == "Y") return Side::Y;
  if (name == "E") return Side::E;
  if (name == "Delta") return Side::Delta;
  throw input_error("unknown side '" + std::string(name) + "' (expected X, Y, E or Delta)");
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  const std::size_t nthreads = std::min<std::size_t>(std::max(workers, 1), count);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!first_error) first_error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

// ---- result cache -------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

fs::path cache_file(const std::string& dir, const std::string& key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return fs::path(dir) / (std::string(buf) + ".json");
}

std::optional<FrobResult> cache_load(const ComputeOptions& opt, const std::string& key,
                                     const Grid& g, Side side) {
  if (opt.cache_dir.empty()) return std::nullopt;
  std::ifstream in(cache_file(opt.cache_dir, key));
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return FrobResult{g, side, symfunc_from_json(j.at("value")),
                      j.at("provenance").get<std::string>()};
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void cache_store(const ComputeOptions& opt, const std::string& key, const FrobResult& r) {
  if (opt.cache_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(opt.cache_dir, ec);
  const fs::path target = cache_file(opt.cache_dir, key);
  std::ostringstream tag;
  tag << std::this_thread::get_id();
  const fs::path tmp = target.string() + ".tmp" + tag.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << Json{{"key", key}, {"provenance", r.provenance}, {"value", to_json(r.value)}}.dump();
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

std::string cache_key(std::string_view what, int n, int k, const ComputeOptions& opt) {
  return std::string(what) + "|n=" + std::to_string(n) + "|k=" + std::to_string(k) +
         "|check=" + (opt.check ? "1" : "0");
}

// ---- assembly -----------------------------------------------------------

int binom2(int a) { return a * (a - 1) / 2; }

SymFunc rev_q_coeffs(const SymFunc& f, int d) {
  return f.map_coeffs([d](const LaurentQT& c) { return rev_q(c, d); });
}

SymFunc shift_q(const SymFunc& f, int dq) {
  return f.map_coeffs([dq](const LaurentQT& c) { return c.shifted(dq, 0); });
}

std::string mismatch(const std::string& what, const SymFunc& a, const SymFunc& b) {
  return what + ": " + a.to_string() + " vs " + b.to_string();
}

}  // namespace

SymFunc e_shuffle(const Grid& g, DinvVariant variant, const ComputeOptions& opt) {
  check_k_cap(g);
  const int K = g.K();
  if (K > degree_cap()) {
    throw input_error("K=" + std::to_string(K) + " exceeds the degree cap " +
                      std::to_string(degree_cap()));
  }
  const bool weak = variant == DinvVariant::dinv_prime;
  std::vector<DyckPath> paths;
  for_each_path(g, [&](const DyckPath& p) { paths.push_back(p); });
  const std::vector<Partition> etas = partitions_of(K);

  // hist[path][eta][d]: number of labelings with (d)inv = d; area is per path.
  const int span = g.delta() + 1;
  std::vector<std::vector<std::vector<std::int64_t>>> hist(
      paths.size(), std::vector<std::vector<std::int64_t>>(etas.size()));
  std::vector<int> areas(paths.size());
  parallel_for(paths.size(), opt.workers, [&](std::size_t pi) {
    const PathStats ps = path_statistics(paths[pi]);
    areas[pi] = ps.area;
    for (std::size_t e = 0; e < etas.size(); ++e) {
      auto& h = hist[pi][e];
      h.assign(span, 0);
      for_each_word_labeling(paths[pi], etas[e].parts(), weak, [&](const std::vector<int>& labels) {
        const int d = weak ? dinv_prime(ps, labels) : statistics(ps, labels).dinv;
        if (d < 0 || d >= span) throw identity_error("dinv outside [0, delta]");
        ++h[d];
      });
    }
  });

  SymFunc mono(K, Basis::monomial);
  for (std::size_t e = 0; e < etas.size(); ++e) {
    LaurentQT c;
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
      for (int d = 0; d < span; ++d) {
        if (hist[pi][e][d] != 0) c.add_term({d, areas[pi]}, BigInt(static_cast<long>(hist[pi][e][d])));
      }
    }
    mono.add_term(etas[e], c);
  }
  return change_basis(mono, Basis::schur);
}

FrobResult frob_X(int n, int k, const ComputeOptions& opt) {
  const Grid g = Grid::from_nk(n, k);
  const std::string key = cache_key("X", n, k, opt);
  if (auto hit = cache_load(opt, key, g, Side::X)) return *hit;

  const int delta = g.delta();
  FrobResult r{g, Side::X, rev_q_coeffs(omega_involution(e_shuffle(g, DinvVariant::dinv, opt)), delta),
               "rev_q omega of the strict word parking function expansion"};
  if (opt.check) {
    const SymFunc alt = rev_q_coeffs(e_shuffle(g, DinvVariant::dinv_prime, opt), delta);
    if (!(alt == r.value)) throw identity_error(mismatch("identity violated (X routes)", r.value, alt));
    r.provenance += "; matches the weak word parking function sum of t^area q^(delta-dinv')";
  }
  cache_store(opt, key, r);
  return r;
}

FrobResult frob_Y(int n, int k, const ComputeOptions& opt) {
  const Grid g = Grid::from_nk(n, k);
  const std::string key = cache_key("Y", n, k, opt);
  if (auto hit = cache_load(opt, key, g, Side::Y)) return *hit;

  const FrobResult x = frob_X(n, k, opt);
  const SymFunc skewed = skew_perp(Partition::rectangle(k - 1, n - k), x.value);
  const SymFunc y = shift_q(skewed, -binom2(k - 1) * (n - k));
  for (const auto& [p, c] : y.terms()) {
    if (!c.is_polynomial()) {
      throw identity_error("grading shift violated: negative exponent in coefficient of s" +
                           p.to_string());
    }
  }
  FrobResult r{g, Side::Y, y, "shifted skew of the X character"};
  if (opt.check && n <= macdonald_cap()) {
    const int d = binom2(k) + (k - 1) * (n - k);
    SymFunc alt;
    try {
      alt = rev_q_coeffs(omega_involution(apply_delta_prime(k, n)), d);
    } catch (const Error& e) {
      throw identity_error(std::string("identity violated (Y routes): ") + e.what());
    }
    if (!(alt == y)) throw identity_error(mismatch("identity violated (Y routes)", y, alt));
    r.provenance += "; matches rev_q omega of the Delta' eigenoperator image";
  }
  cache_store(opt, key, r);
  return r;
}

FrobResult frob(Side side, int n, int k, const ComputeOptions& opt) {
  switch (side) {
    case Side::X: return frob_X(n, k, opt);
    case Side::Y: return frob_Y(n, k, opt);
    case Side::E: {
      const Grid g = Grid::from_nk(n, k);
      const std::string key = cache_key("E", n, k, opt);
      if (auto hit = cache_load(opt, key, g, Side::E)) return *hit;
      FrobResult r{g, Side::E, e_shuffle(g, DinvVariant::dinv, opt),
                   "strict word parking functions, t^area q^dinv"};
      if (opt.check) {
        const SymFunc alt = omega_involution(e_shuffle(g, DinvVariant::dinv_prime, opt));
        if (!(alt == r.value)) throw identity_error(mismatch("identity violated (E routes)", r.value, alt));
        r.provenance += "; matches omega of the weak expansion";
      }
      cache_store(opt, key, r);
      return r;
    }
    case Side::Delta: {
      const Grid g = Grid::from_nk(n, k);
      return FrobResult{g, Side::Delta, apply_delta_prime(k, n),
                        "Delta' eigenvalues on the modified Macdonald expansion of e_n"};
    }
  }
  throw input_error("unknown side");
}

std::vector<IdentityReport> verify_skewing(int n, int k, const ComputeOptions& opt) {
  const Grid g = Grid::from_nk(n, k);
  const SymFunc E = frob(Side::E, n, k, opt).value;
  const SymFunc D = apply_delta_prime(k, n);
  std::vector<IdentityReport> out;
  {
    IdentityReport r{"Delta'_{e_{k-1}} e_n = s^perp_{(k-1)^(n-k)} E_{K,k}", g, D,
                     skew_perp(Partition::rectangle(n - k, k - 1), E), false};
    r.equal = r.lhs == r.rhs;
    out.push_back(std::move(r));
  }
  {
    IdentityReport r{"s^perp_{(n-k)^(k-1)} omega E_{K,k} = omega Delta'_{e_{k-1}} e_n", g,
                     skew_perp(Partition::rectangle(k - 1, n - k), omega_involution(E)),
                     omega_involution(D), false};
    r.equal = r.lhs == r.rhs;
    out.push_back(std::move(r));
  }
  return out;
}

Census fixed_point_census(int n, int k, const ComputeOptions& opt) {
  const Grid g = Grid::from_nk(n, k);
  check_k_cap(g);
  Census c;
  c.grid = g;
  std::atomic<std::int64_t> gamma{0};
  std::atomic<std::int64_t> orbits{0};
  std::atomic<std::int64_t> stacked{0};
  std::atomic<std::int64_t> pfs{0};
  parallel_for(4, opt.workers, [&](std::size_t task) {
    switch (task) {
      case 0:
        for_each_gamma_restricted(g, [&](const AffinePermutation&) { ++gamma; });
        break;
      case 1: orbits = orbit_count(g); break;
      case 2: stacked = count_stacked_pfs(n, k); break;
      case 3: pfs = count_pfs(g); break;
    }
  });
  c.parking_functions = pfs;
  c.gamma_restricted = gamma;
  c.admissible_orbits = orbits;
  c.stacked_pfs = stacked;
  return c;
}

int clear_cache(const std::string& dir) {
  if (dir.empty()) throw input_error("no cache directory configured");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return 0;
  int removed = 0;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      if (fs::remove(entry.path(), ec)) ++removed;
    }
  }
  return removed;
}

}  // namespace parkfrob
