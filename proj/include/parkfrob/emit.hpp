#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "parkfrob/config.hpp"
#include "parkfrob/frobenius.hpp"
#include "parkfrob/verify.hpp"

namespace parkfrob {

/// Receives one output line (no trailing newline); returning false stops.
using LineSink = std::function<bool(const std::string&)>;

enum class Kind { path, pf, wpf, wpf_weak, stacks, stacked_pf, gamma };

std::string_view kind_name(Kind k);
Kind parse_kind(std::string_view name);

/// Streams objects of the given kind with their statistics. CSV output
/// starts with a header row; JSON output is one object per line. eta is the
/// content for the word kinds and must be empty otherwise.
void emit_enumeration(const Grid& g, Kind kind, const std::vector<int>& eta, Format fmt,
                      const LineSink& sink);

std::string format_frob(const FrobResult& r, Format fmt);
std::string format_verdicts(const std::vector<Verdict>& vs, Format fmt);

}  // namespace parkfrob
