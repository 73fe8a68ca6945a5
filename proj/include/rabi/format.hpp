#ifndef RABI_FORMAT_HPP
#define RABI_FORMAT_HPP

#include <cstdio>
#include <string>

namespace rabi {

/// Fixed 17-significant-digit rendering used by every emitter, so output is
/// byte-stable across runs and platforms.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace rabi

#endif
