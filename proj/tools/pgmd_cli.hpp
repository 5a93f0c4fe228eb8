#ifndef PGMD_CLI_HPP
#define PGMD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pgmd::cli {

// Full command-line entry point. Returns the process exit code:
// 0 success, 1 computation or verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pgmd::cli

#endif  // PGMD_CLI_HPP
