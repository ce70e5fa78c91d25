#ifndef MMV_CLI_HPP
#define MMV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mmv::cli {

// Exit codes: 0 success, 1 domain error, 2 insufficient precision,
// 3 failed verification, 64 malformed arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mmv::cli

#endif
