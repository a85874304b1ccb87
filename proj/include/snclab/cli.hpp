#ifndef SNCLAB_CLI_HPP
#define SNCLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace snclab::cli {

/**
 * Full command-line front end. args excludes the program name. Exit codes:
 * 0 the checked property holds / the verification passed, 1 the property
 * fails or a counterexample was found, 2 malformed input or usage error.
 */
int run(std::vector<std::string> args, std::ostream & out, std::ostream & err);

} // namespace snclab::cli

#endif
