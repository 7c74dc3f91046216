#ifndef DNPOLY_CLI_HPP
#define DNPOLY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dnpoly {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// The dnpoly command line. args excludes the program name. JSON (or SVG for
/// render) goes to out unless --out names a file; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dnpoly

#endif  // DNPOLY_CLI_HPP
