#ifndef GIE_CLI_HPP
#define GIE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gie {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFailure = 2;

// args excludes the program name. Documents go to `out` (or --output files),
// diagnostics and one-line summaries to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gie

#endif
