#include "parkfrob/config.hpp"

#include <charconv>
#include <fstream>

#include "parkfrob/errors.hpp"
#include "parkfrob/macdonald.hpp"
#include "parkfrob/parking.hpp"
#include "parkfrob/symfunc.hpp"

namespace parkfrob {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw input_error("unknown format '" + std::string(name) + "' (expected json or csv)");
}

namespace {

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw input_error("config key '" + std::string(key) + "' needs an integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

int parse_positive(std::string_view key, std::string_view value) {
  const int v = parse_number<int>(key, value);
  if (v < 1) throw input_error("config key '" + std::string(key) + "' must be positive");
  return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw input_error("config key '" + std::string(key) + "' needs a boolean");
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view value) {
  if (key == "k_cap") {
    k_cap = parse_positive(key, value);
  } else if (key == "macdonald_cap") {
    macdonald_cap = parse_positive(key, value);
  } else if (key == "degree_cap") {
    degree_cap = parse_positive(key, value);
  } else if (key == "format") {
    format = parse_format(value);
  } else if (key == "cache") {
    cache_dir = std::string(value);
  } else if (key == "workers") {
    workers = parse_positive(key, value);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "check") {
    check = parse_bool(key, value);
  } else {
    throw input_error("unknown config key '" + std::string(key) + "'");
  }
}

void RunConfig::apply_caps() const {
  set_k_cap(k_cap);
  set_macdonald_cap(macdonald_cap);
  set_degree_cap(degree_cap);
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw input_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    cfg.set(trim(l.substr(0, eq)), trim(l.substr(eq + 1)));
  }
}

}  // namespace parkfrob
