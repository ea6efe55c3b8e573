#ifndef ALGZ_CLI_HPP
#define ALGZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace algz::cli
{

enum ExitCode { ok = 0, mismatch = 1, invalid_input = 2 };

/// Runs one command line. JSON goes to out, including the {"error": ...}
/// object of an invalid invocation; in supplies input when neither --input
/// nor --file is given. args excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out);

int run(int argc, const char *const *argv, std::istream &in, std::ostream &out);

} // namespace algz::cli

#endif
