#ifndef TURAN_ERRORS_HPP
#define TURAN_ERRORS_HPP

#include <stdexcept>

namespace turan {

/// Input is valid but larger than an exact method's configured limit.
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition on the input graph does not hold.
struct PreconditionFailed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace turan

#endif  // TURAN_ERRORS_HPP
