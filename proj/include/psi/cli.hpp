#ifndef PSI_CLI_HPP
#define PSI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace psi {

/// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `psi` tool; args excludes the program name. The
/// report goes to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psi

#endif  // PSI_CLI_HPP
