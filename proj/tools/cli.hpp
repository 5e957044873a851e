#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotxor::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kKey = 2,
  kDecode = 3,  // decode, block-size and padding failures
  kIo = 4,
  kVerification = 5,  // analyze self-check failed (linearity, attack)
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool out_is_terminal = false;
};

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, Streams streams);

}  // namespace rotxor::cli
