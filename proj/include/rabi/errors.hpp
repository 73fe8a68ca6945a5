#ifndef RABI_ERRORS_HPP
#define RABI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rabi {

/// Exact construction was asked for a degree above the configured cap.
class CapExceeded : public std::out_of_range {
 public:
  CapExceeded(unsigned requested, unsigned cap)
      : std::out_of_range("exact construction of degree " + std::to_string(requested) +
                          " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  unsigned requested() const noexcept { return requested_; }
  unsigned cap() const noexcept { return cap_; }

 private:
  unsigned requested_;
  unsigned cap_;
};

/// An iterative method ran out of budget. `index()` names the offending
/// eigenvalue / zero / branch when there is one.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t index)
      : std::runtime_error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace rabi

#endif
