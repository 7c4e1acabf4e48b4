#include "sprime/config.hpp"

#include <cstdlib>
#include <string>

namespace sprime {

Caps Caps::defaults() {
  static const Caps cached = [] {
    Caps c;
    if (const char* env = std::getenv("SPRIME_ORDER_CAP")) {
      try {
        int v = std::stoi(env);
        if (v > 0) {
          c.ring_order_cap = v;
          c.module_order_cap = v;
          c.enumeration_order_cap = v;
        }
      } catch (...) {
        // Unparseable override is ignored; defaults stand.
      }
    }
    return c;
  }();
  return cached;
}

}  // namespace sprime
