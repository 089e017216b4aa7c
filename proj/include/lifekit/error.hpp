#pragma once

#include <stdexcept>
#include <string>

namespace lifekit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coordinate would leave the int64 range.
struct OverflowError : Error {
  using Error::Error;
};

// Malformed user input: bad RLE, bad config, out-of-range argument.
struct InputError : Error {
  using Error::Error;
};

// A pattern failed simulation checks it was required to pass.
struct VerificationError : Error {
  using Error::Error;
};

// Simulation budget ran out before a cycle was found.
struct UnresolvedError : Error {
  UnresolvedError(const std::string& what, long long gens)
      : Error(what), generations(gens) {}
  long long generations;
};

}  // namespace lifekit
