#pragma once

#include <stdexcept>
#include <string>

namespace floercas {

/// A structural claim about the rings failed to hold on exact data.
///
/// Distinct from programming errors and bad input: the CLI maps it to exit code 2.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace floercas
