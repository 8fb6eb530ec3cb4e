#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace parkfrob {

enum class Format { json, csv };

Format parse_format(std::string_view name);

/// Settings shared by the library entry points and the command line.
struct RunConfig {
  int k_cap = 12;
  int macdonald_cap = 7;
  int degree_cap = 14;
  Format format = Format::json;
  std::string cache_dir;
  int workers = 1;
  std::uint64_t seed = 0;
  bool check = false;

  /// Sets one key (k_cap, macdonald_cap, degree_cap, format, cache, workers,
  /// seed, check); rejects unknown keys and invalid values.
  void set(std::string_view key, std::string_view value);
  /// Installs the caps process-wide.
  void apply_caps() const;
};

/// key = value lines; blank lines and lines starting with '#' are skipped.
void load_config_file(RunConfig& cfg, const std::string& path);

}  // namespace parkfrob
