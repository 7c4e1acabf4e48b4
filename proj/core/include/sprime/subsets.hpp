#pragma once

#include <vector>

#include "sprime/module.hpp"
#include "sprime/ring.hpp"

namespace sprime {

enum class IdealKind { TwoSided, Right };

// Closed subsets carry their owner so operations can be checked for
// compatible owners. Properness is enforced at predicate entry points, not
// here: improper subsets are representable.
struct Ideal {
  RingPtr ring;
  Bitset bits;
  IdealKind kind = IdealKind::TwoSided;

  bool proper() const { return bits.count() < ring->order(); }
};

struct Submodule {
  ModulePtr module;
  Bitset bits;

  bool proper() const { return bits.count() < module->order(); }
};

// A nonempty subset S of a ring such that for all a, b in S there is some r
// with arb in S.
struct MSystem {
  RingPtr ring;
  Bitset bits;
};

// Fixpoint closures. generate(generate(X)) = generate(X), X subset of
// generate(X), and X subset of Y implies generate(X) subset of generate(Y).
Ideal generate_two_sided_ideal(const RingPtr& r, const Bitset& gens);
Ideal generate_right_ideal(const RingPtr& r, const Bitset& gens);
Submodule generate_submodule(const ModulePtr& m, const Bitset& gens);

// The two-sided ideal generated by s: all finite sums of products x*s*y.
Ideal principal_ideal(const RingPtr& r, int s);

// (P :_R M) = { r : Mr subset of P }, always a two-sided ideal.
Ideal colon_ring(const Submodule& p);
// (P :_R N) for a subset N of the same module: { r : Nr subset of P }.
Ideal colon_ring_relative(const Submodule& p, const Bitset& n_bits);
// (P :_M J) = { m : mJ subset of P }.
Submodule colon_module(const Submodule& p, const Ideal& j);

// Additive closure of all pairwise products.
Ideal ideal_product(const Ideal& a, const Ideal& b);
Submodule submodule_ideal_product(const Submodule& n, const Ideal& j);

// Ann(M) = ({0} :_R M).
Ideal annihilator(const ModulePtr& m);

// Complete duplicate-free enumerations in the deterministic bitset order,
// computed as the join-closure of all cyclic substructures. The owner order
// must be within caps.enumeration_order_cap.
std::vector<Submodule> enumerate_submodules(const ModulePtr& m,
                                            const Caps& caps = Caps::defaults());
std::vector<Ideal> enumerate_two_sided_ideals(const RingPtr& r,
                                              const Caps& caps = Caps::defaults());
std::vector<Ideal> enumerate_right_ideals(const RingPtr& r,
                                          const Caps& caps = Caps::defaults());

// All m-systems of size <= max_size, ordered by size then lexicographically
// by element tuple.
std::vector<MSystem> enumerate_msystems(const RingPtr& r, int max_size);

// Verdict with the failing pair (a, b) on failure. Empty subsets are a
// precondition error, not a false verdict.
VerdictReport is_msystem(const RingPtr& r, const Bitset& s);

// Condition only, no guards: nonempty and closed under the m-system law.
bool msystem_condition(const FiniteRing& r, const Bitset& s);

// Subsets of product carriers: { pair_index(o2, a, b) : a in s1, b in s2 }.
Bitset subset_product(const Bitset& s1, const Bitset& s2);

}  // namespace sprime
