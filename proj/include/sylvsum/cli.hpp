#pragma once

// Command line front end. Subcommands:
//
//   apery | frobenius | genus | power-sum | weighted-sum | gaps | verify
//
// Input is either --gens 13,16,19,22,25 or --ap a=13,d=3,k=5. See README.md
// for the full flag list.

#include <iosfwd>
#include <string>
#include <vector>

namespace sylvsum::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_disagreement = 3;

/// args[0] is the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sylvsum::cli
