#ifndef DSC_ERRORS_HPP
#define DSC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsc {

// Thrown when an exhaustive scan would exceed the configured enumeration cap.
// Exceeding a cap is an error, never a silent truncation.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a bound's stated precondition fails, e.g. a codeword length
// below the minimum required by the concentration argument. Carries the
// value that would make the call valid.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace dsc

#endif
