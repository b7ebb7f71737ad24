#include "qf/config.hpp"

#include <cstdlib>
#include <string>

namespace qf {

Caps caps_from_env() {
  Caps caps;
  if (const char* env = std::getenv("QF_CAP")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) caps.carrier = v;
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return caps;
}

}  // namespace qf
