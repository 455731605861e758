#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace modloc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::uint64_t seed = 0;
  bool deterministic = false;
  int jobs = 1;
};

// MODLOC_SEED when set and numeric, else 0.
std::uint64_t default_seed();

// Runs the modloc command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modloc::cli
