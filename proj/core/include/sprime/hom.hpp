#pragma once

#include "sprime/subsets.hpp"

namespace sprime {

// A module homomorphism as an explicit table from source indices to target
// indices. Source and target must share a ring.
struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Elem> map;

  Elem operator()(int x) const { return map[std::size_t(x)]; }
};

// Exhaustive linearity check: f(0) = 0, f(m + m') = f(m) + f(m'),
// f(act(m, r)) = act(f(m), r). Ring mismatch is a precondition error.
VerdictReport validate_hom(const ModuleHom& f);

// Preimage of {0}.
Submodule kernel(const ModuleHom& f);

bool is_epimorphism(const ModuleHom& f);

// Pointwise image of a subset; not a submodule in general.
Bitset image_bits(const ModuleHom& f, const Bitset& bits);

// Image of a submodule, validated closed (throws ValidationError if the
// image is not a submodule of the target; it always is when f is an
// epimorphism with ker(f) contained in p).
Submodule image_submodule(const ModuleHom& f, const Submodule& p);

// Preimage of a submodule; always a submodule.
Submodule preimage_submodule(const ModuleHom& f, const Submodule& p);

struct Projection {
  ModuleHom hom;      // m -> m + L
  ModulePtr quotient; // hom.target
};

// Canonical projection M -> M/L.
Projection canonical_projection(const ModulePtr& m, const Bitset& submodule_bits);

// A submodule materialized as a module in its own right; elements are the
// submodule's elements in ascending parent order, and to_parent maps new
// indices back for report readability.
struct Materialized {
  ModulePtr module;
  std::vector<Elem> to_parent;
  ModuleHom inclusion;  // materialized module -> parent
};

Materialized materialize_submodule(const Submodule& n);

}  // namespace sprime
