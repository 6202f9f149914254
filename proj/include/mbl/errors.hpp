#ifndef MBL_ERRORS_HPP
#define MBL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mbl {

// Validation failures: bad parameters, domain violations, malformed input.
class invalid_argument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failures: non-convergence, contour through a singularity,
// insufficient decay at a truncation cutoff.
class numeric_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Enumeration or quadrature budget exceeded.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace mbl

#endif
