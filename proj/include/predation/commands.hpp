#pragma once

// Command implementations behind the `predation` tool. Each writes to the
// given streams and returns the process exit code:
//   0  success / classifier and oracle agree
//   1  verification disagreement
//   2  input or validation error

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace predation::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitInputError = 2;

inline constexpr std::string_view kVersion = "1.0.0";

struct SolveOptions {
  bool json = false;
};

int cmd_solve(const std::string& file, const SolveOptions& options,
              std::ostream& out, std::ostream& err);

int cmd_sweep(const std::string& file, const std::string& csv_path,
              const std::optional<std::string>& svg_path, std::ostream& out,
              std::ostream& err);

int cmd_verify(const std::string& file, std::ostream& out, std::ostream& err);

int cmd_trace(const std::string& file, std::size_t periods, std::ostream& out,
              std::ostream& err);

}  // namespace predation::cli
