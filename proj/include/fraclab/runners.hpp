#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fraclab {

/// Flat key/value config: "key = value" lines, '#' comments, optional
/// [section] headers flattened to "section.key".
std::map<std::string, std::string> parse_config(const std::string& text);

/// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

/// FNV-1a 64-bit digest, hex encoded.
std::string fnv1a_hex(const std::string& text);

struct RunOptions {
  std::string subcommand;
  std::string config_text;  // flat key/value payload
  std::string out_dir = ".";
  std::uint64_t seed = 1;
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 2 config, 3 tolerance, 4 budget
  std::string message;
  std::vector<std::string> outputs;  // files written, relative to out_dir
};

/// Dispatches one subcommand: spectral-table | tails | levy-exponent |
/// pde-limit | mc-charfn | mc-clock | mc-hydro | verify-all. Writes the
/// subcommand outputs plus a RunManifest JSON into out_dir. Never throws;
/// errors are encoded in the exit code and message.
RunOutcome run_subcommand(const RunOptions& options);

}  // namespace fraclab
