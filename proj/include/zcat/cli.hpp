#pragma once

// Command-line front end. `main_entry` parses arguments with CLI11 and calls
// `run`; both write reports to `out` and diagnostics to `err`.
//
// Exit codes: 0 success, 1 usage or input error, 2 a theorem check failed on
// a concrete instance.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zcat/fincat.hpp"

namespace zcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum class Format { Json, Text };

struct RunConfig {
  std::string command;     // validate, center, ..., braid, catalog
  std::string subcommand;  // braid: nf, equal, braiding, theorems, export, cofree
  std::string input;       // category file, or "catalog:NAME"
  std::string diagram;     // colimit --diagram
  std::string in;          // colimit --in: center, zx, zh, weak
  std::string param;       // object (zx) or morphism (zh) for --in
  std::string object;      // centralizer --object, cofree --over, quotients --of
  std::string morphism;    // centralizer --morphism
  std::vector<std::string> members;  // generators --check
  bool lift = false;                 // generators --lift
  std::vector<std::string> words;    // braid nf / equal
  int strands = 0;
  int m = 0;
  int n = 0;
  int max_n = 6;
  int max_letters = 2;
  Format format = Format::Json;
  std::uint64_t seed = kDefaultSeed;
  Limits limits = Limits::from_env();
};

[[nodiscard]] int run(const RunConfig& config, std::ostream& out, std::ostream& err);
[[nodiscard]] int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zcat::cli
