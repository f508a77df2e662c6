#pragma once

// Command-line front end: count, series, enumerate, verify, asympt, bdpp.

#include <iosfwd>
#include <string>
#include <vector>

#include "parabolic/combinatorics.hpp"

namespace parabolic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failed or methods disagreed
inline constexpr int kExitUsage = 2;    // bad arguments, refused brute force

// Runs one invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "n a(n)" per line.
std::string format_bfile(const std::vector<Rational>& values);
// Throws std::invalid_argument on malformed lines or non-consecutive indices.
std::vector<Rational> parse_bfile(const std::string& text);

// --ceiling if given, else PARABOLIC_AVOID_BF_CEILING, else 12.
int resolve_ceiling(int flag_value);

}  // namespace parabolic::cli
