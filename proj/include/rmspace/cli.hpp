#ifndef RMSPACE_CLI_HPP
#define RMSPACE_CLI_HPP

namespace rmspace {

/// Command-line entry point. Exit codes: 0 success, 1 usage or I/O error,
/// 2 a mathematical check failed beyond tolerance.
int run(int argc, const char* const* argv);

}  // namespace rmspace

#endif
