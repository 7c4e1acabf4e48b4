#pragma once

namespace sprime {

// Size limits for table-backed structures. Exhaustive checks are polynomial
// in the order, but corpus sweeps multiply, so constructors and enumerators
// refuse anything above these caps.
//
// The environment variable SPRIME_ORDER_CAP overrides all three defaults.
struct Caps {
  int ring_order_cap = 256;
  int module_order_cap = 256;
  int enumeration_order_cap = 256;

  static Caps defaults();
};

}  // namespace sprime
