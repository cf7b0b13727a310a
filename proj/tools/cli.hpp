#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dyadic::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  // non-dyadic input, pole, value out of range
  kUsageError = 2,
};

/// Runs one invocation. args excludes the program name.
///
///   eval  --fn F --x n/2^k [--turns]
///   inv   --fn F --v V [--eps E] [--depth D]
///   table [--k K] [--csv]
///   sweep --fn F (--k K [--ref R] | --depth D [--samples N]) [--depth D] [--eps E] [--csv]
///   bench --fn F --k K [--reps N] [--impl I] [--csv]
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Table of the fractions n/2^k, n = 1..2^k-1, with their signature columns.
void write_table(std::ostream& out, int k, bool csv);

}  // namespace dyadic::cli
