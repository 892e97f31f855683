#ifndef POPMAX_CLI_HPP_
#define POPMAX_CLI_HPP_

#include <iosfwd>

namespace popmax::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;     // verification failed, witness printed
inline constexpr int kInputError = 2;   // malformed input or precondition
inline constexpr int kBoundExceeded = 3;
inline constexpr int kInternalError = 4;

// Runs the popmax command line. "-" as a file name reads `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace popmax::cli

#endif  // POPMAX_CLI_HPP_
