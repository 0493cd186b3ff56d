#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "schottky_lab/mobius.hpp"

namespace schottky_lab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBadInput = 2;

// args excludes the program name. Reports go to out (or --output), verdict
// lines and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3+4i", "-i", "2.5", "inf". Throws SchottkyError(ParseError).
ExtendedComplex parse_point(const std::string& text);

// "0.5", "1/8", "pi/6", "-pi/4", "2pi/3". Throws SchottkyError(ParseError).
double parse_real(const std::string& text);

}  // namespace schottky_lab::cli
