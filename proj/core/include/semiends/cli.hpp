#ifndef SEMIENDS_CLI_HPP_
#define SEMIENDS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace semiends::cli {

//! Runs one CLI invocation. Exit status 0 on success, 1 on a failed
//! verification, 2 on a usage or input error. All output is deterministic
//! byte-for-byte given the same arguments and input files.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace semiends::cli

#endif  // SEMIENDS_CLI_HPP_
