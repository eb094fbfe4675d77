#ifndef JACRING_CLI_HPP
#define JACRING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jacring::cli {

// Exit codes: 0 success with all checks passing, 1 a check failed
// (non-perfect pairing, failed calibration, false certificate, oracle
// mismatch), 2 usage or contract error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacring::cli

#endif
