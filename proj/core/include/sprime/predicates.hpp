#pragma once

#include "sprime/context.hpp"
#include "sprime/subsets.hpp"

namespace sprime {

// Quantifier placement for the S-prime definitions: uniform demands one
// s in S serving all test pairs, per-pair lets s vary with the pair.
enum class WitnessMode { Uniform, PerPair };

// P is prime: aRb subset of P forces a in P or b in P. P must be a proper
// two-sided ideal; violations of that are PreconditionError, not verdicts.
VerdictReport is_prime_ideal(const Ideal& p);
VerdictReport is_prime_ideal(RingContext& rc, const Ideal& p);

// Def-2.1-style right S-prime ideal test (element form). Preconditions:
// P proper two-sided and P disjoint from S.
VerdictReport is_s_prime_ideal(const Ideal& p, const MSystem& s,
                               WitnessMode mode = WitnessMode::Uniform);
VerdictReport is_s_prime_ideal(RingContext& rc, const Ideal& p, const MSystem& s,
                               WitnessMode mode);

// P is a prime submodule: mRa subset of P forces a in (P :_R M) or m in P.
VerdictReport is_prime_submodule(const Submodule& p);
VerdictReport is_prime_submodule(ModuleContext& ctx, const Submodule& p);

// S-prime submodule test. Preconditions: P proper and (P :_R M) disjoint
// from S.
VerdictReport is_s_prime_submodule(const Submodule& p, const MSystem& s,
                                   WitnessMode mode = WitnessMode::Uniform);
VerdictReport is_s_prime_submodule(ModuleContext& ctx, const Submodule& p,
                                   const MSystem& s, WitnessMode mode);

// The ideal/submodule form at a fixed associated s, quantified over every
// enumerated submodule N and two-sided ideal J: NJ subset of P implies
// J<s> subset of (P :_R M) or N<s> subset of P.
VerdictReport is_s_prime_submodule_by_ideals(const Submodule& p, const MSystem& s,
                                             int fixed_s,
                                             const Caps& caps = Caps::defaults());
VerdictReport is_s_prime_submodule_by_ideals(ModuleContext& ctx, const Submodule& p,
                                             const MSystem& s, int fixed_s);

// Colon characterization: P is S-prime iff (P :_M <s>) is a proper prime
// submodule for some s in S. Returns that witness s.
VerdictReport is_s_prime_via_colon(const Submodule& p, const MSystem& s);
VerdictReport is_s_prime_via_colon(ModuleContext& ctx, const Submodule& p,
                                   const MSystem& s);

// Every enumerated submodule P satisfies P = M*(P :_R M).
VerdictReport is_multiplication_module(const ModulePtr& m,
                                       const Caps& caps = Caps::defaults());
VerdictReport is_multiplication_module(ModuleContext& ctx);

// For every submodule N there is s in S with N<s> subset of M*(N :_R M).
VerdictReport is_s_multiplication_module(const ModulePtr& m, const MSystem& s,
                                         const Caps& caps = Caps::defaults());
VerdictReport is_s_multiplication_module(ModuleContext& ctx, const MSystem& s);

// N<s> subset of F subset of N for some s in S and F generated by at most
// max_gens elements of N. Search order: generator count, then lexicographic
// tuples, then s; the first certificate found is reported.
VerdictReport is_s_finite(const Submodule& n, const MSystem& s, int max_gens);
VerdictReport is_s_finite(ModuleContext& ctx, const Submodule& n, const MSystem& s,
                          int max_gens);
VerdictReport is_s_principal(const Submodule& n, const MSystem& s);

// Every enumerated submodule is S-finite (first failure reported).
VerdictReport is_s_noetherian_module(const ModulePtr& m, const MSystem& s, int max_gens,
                                     const Caps& caps = Caps::defaults());
VerdictReport is_s_noetherian_module(ModuleContext& ctx, const MSystem& s,
                                     int max_gens);

// Every right ideal of R is S-finite as a submodule of the regular module.
VerdictReport is_right_s_noetherian_ring(const RingPtr& r, const MSystem& s,
                                         int max_gens,
                                         const Caps& caps = Caps::defaults());

}  // namespace sprime
