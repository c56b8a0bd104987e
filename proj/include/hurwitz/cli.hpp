#ifndef HURWITZ_CLI_HPP
#define HURWITZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs the `hurwitz` command line on `args` (program name excluded).
///
/// Subcommands: decide, realize, verify, search, census, belyi, probe.
/// Branch data comes inline as `-d D "(k1,k2,...) (…)"`, from `--input FILE`
/// or from `in` as JSON. Returns 0 for a positive answer, 1 for a negative
/// one and 2 for malformed input or unsupported data.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hurwitz

#endif  // HURWITZ_CLI_HPP
