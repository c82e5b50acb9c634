#ifndef HYPCOUNT_TOOLS_CLI_HPP
#define HYPCOUNT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hypcount::cli
{

enum exit_code : int { ok = 0, verification_failed = 1, usage_error = 2 };

// Runs the hypcount command line. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// Cache file name for a named form, e.g. "A_k2_o32.json" or "E_o32.json".
std::string cache_file_name(const std::string &name, const std::vector<int> &params, int order);

} // namespace hypcount::cli

#endif
