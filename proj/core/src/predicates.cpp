#include "sprime/predicates.hpp"

#include <algorithm>

#include "sprime/errors.hpp"

namespace sprime {

namespace {

void require_proper_two_sided(const Ideal& p) {
  if (p.kind != IdealKind::TwoSided)
    throw PreconditionError("predicate requires a two-sided ideal");
  if (!p.proper())
    throw PreconditionError("predicate requires a proper ideal (P != R)");
}

void require_proper(const Submodule& p) {
  if (!p.proper())
    throw PreconditionError("predicate requires a proper submodule (P != M)");
}

void require_disjoint_ideal(const Ideal& p, const MSystem& s) {
  if (p.bits.intersects(s.bits))
    throw PreconditionError("S-prime predicate requires P and S disjoint");
}

std::string render_set(const FiniteRing& r, const Bitset& b) {
  std::string out = "{";
  bool first = true;
  b.for_each([&](int x) {
    if (!first) out += ",";
    out += render_ring_element(r, x);
    first = false;
  });
  return out + "}";
}

std::string render_mset(const FiniteRightModule& m, const Bitset& b) {
  std::string out = "{";
  bool first = true;
  b.for_each([&](int x) {
    if (!first) out += ",";
    out += render_module_element(m, x);
    first = false;
  });
  return out + "}";
}

}  // namespace

VerdictReport is_prime_ideal(RingContext& rc, const Ideal& p) {
  require_proper_two_sided(p);
  const auto& pairs = rc.test_pairs(p.bits);
  if (pairs.empty()) return VerdictReport::pass();
  auto [a, b] = pairs.front();
  const FiniteRing& R = *rc.ring();
  return VerdictReport::fail_with(
      {NamedValue::elem("a", a, render_ring_element(R, a)),
       NamedValue::elem("b", b, render_ring_element(R, b))});
}

VerdictReport is_prime_ideal(const Ideal& p) {
  RingContext rc(p.ring);
  return is_prime_ideal(rc, p);
}

VerdictReport is_s_prime_ideal(RingContext& rc, const Ideal& p, const MSystem& s,
                               WitnessMode mode) {
  require_proper_two_sided(p);
  require_disjoint_ideal(p, s);
  const FiniteRing& R = *rc.ring();
  if (mode == WitnessMode::Uniform) {
    int witness = -1;
    if (rc.s_prime_condition_uniform(p.bits, s.bits, &witness))
      return VerdictReport::pass_with(
          {NamedValue::elem("s", witness, render_ring_element(R, witness))});
    std::pair<int, int> failing{-1, -1};
    if (!rc.s_prime_condition_per_pair(p.bits, s.bits, &failing))
      return VerdictReport::fail_with(
          {NamedValue::elem("a", failing.first, render_ring_element(R, failing.first)),
           NamedValue::elem("b", failing.second,
                            render_ring_element(R, failing.second))});
    // Every pair is served individually but no single s serves all of them.
    auto [a, b] = rc.test_pairs(p.bits).front();
    return VerdictReport::fail_with(
        {NamedValue::text("note", "no single s serves all pairs"),
         NamedValue::elem("a", a), NamedValue::elem("b", b)});
  }
  std::pair<int, int> failing{-1, -1};
  if (rc.s_prime_condition_per_pair(p.bits, s.bits, &failing))
    return VerdictReport::pass();
  return VerdictReport::fail_with(
      {NamedValue::elem("a", failing.first, render_ring_element(R, failing.first)),
       NamedValue::elem("b", failing.second, render_ring_element(R, failing.second))});
}

VerdictReport is_s_prime_ideal(const Ideal& p, const MSystem& s, WitnessMode mode) {
  RingContext rc(p.ring);
  return is_s_prime_ideal(rc, p, s, mode);
}

VerdictReport is_prime_submodule(ModuleContext& ctx, const Submodule& p) {
  require_proper(p);
  const auto& pairs = ctx.test_pairs(p.bits);
  if (pairs.empty()) return VerdictReport::pass();
  auto [m, a] = pairs.front();
  const FiniteRightModule& M = *ctx.module();
  return VerdictReport::fail_with(
      {NamedValue::elem("m", m, render_module_element(M, m)),
       NamedValue::elem("a", a, render_ring_element(*M.ring(), a))});
}

VerdictReport is_prime_submodule(const Submodule& p) {
  ModuleContext ctx(p.module);
  return is_prime_submodule(ctx, p);
}

namespace {

void require_colon_disjoint(ModuleContext& ctx, const Submodule& p, const MSystem& s) {
  if (ctx.colon(p.bits).intersects(s.bits))
    throw PreconditionError("S-prime predicate requires (P :_R M) and S disjoint");
}

}  // namespace

VerdictReport is_s_prime_submodule(ModuleContext& ctx, const Submodule& p,
                                   const MSystem& s, WitnessMode mode) {
  require_proper(p);
  require_colon_disjoint(ctx, p, s);
  const FiniteRightModule& M = *ctx.module();
  if (mode == WitnessMode::Uniform) {
    int witness = -1;
    if (ctx.s_prime_condition_uniform(p.bits, s.bits, &witness))
      return VerdictReport::pass_with(
          {NamedValue::elem("s", witness, render_ring_element(*M.ring(), witness))});
    std::pair<int, int> failing{-1, -1};
    if (!ctx.s_prime_condition_per_pair(p.bits, s.bits, &failing))
      return VerdictReport::fail_with(
          {NamedValue::elem("m", failing.first,
                            render_module_element(M, failing.first)),
           NamedValue::elem("a", failing.second,
                            render_ring_element(*M.ring(), failing.second))});
    auto [m, a] = ctx.test_pairs(p.bits).front();
    return VerdictReport::fail_with(
        {NamedValue::text("note", "no single s serves all pairs"),
         NamedValue::elem("m", m), NamedValue::elem("a", a)});
  }
  std::pair<int, int> failing{-1, -1};
  if (ctx.s_prime_condition_per_pair(p.bits, s.bits, &failing))
    return VerdictReport::pass();
  return VerdictReport::fail_with(
      {NamedValue::elem("m", failing.first, render_module_element(M, failing.first)),
       NamedValue::elem("a", failing.second,
                        render_ring_element(*M.ring(), failing.second))});
}

VerdictReport is_s_prime_submodule(const Submodule& p, const MSystem& s,
                                   WitnessMode mode) {
  ModuleContext ctx(p.module);
  return is_s_prime_submodule(ctx, p, s, mode);
}

VerdictReport is_s_prime_submodule_by_ideals(ModuleContext& ctx, const Submodule& p,
                                             const MSystem& s, int fixed_s) {
  require_proper(p);
  require_colon_disjoint(ctx, p, s);
  if (!s.bits.test(fixed_s))
    throw PreconditionError("is_s_prime_submodule_by_ideals: s must belong to S");
  std::pair<int, int> failing{-1, -1};
  if (ctx.ideal_form_condition_at(p.bits, fixed_s, &failing))
    return VerdictReport::pass_with({NamedValue::elem("s", fixed_s)});
  const Bitset& n = ctx.submodules()[std::size_t(failing.first)];
  const Bitset& j = ctx.rc().two_sided_ideals()[std::size_t(failing.second)];
  return VerdictReport::fail_with({NamedValue::elems("N", n.elements()),
                                   NamedValue::elems("J", j.elements()),
                                   NamedValue::elem("s", fixed_s)});
}

VerdictReport is_s_prime_submodule_by_ideals(const Submodule& p, const MSystem& s,
                                             int fixed_s, const Caps& caps) {
  ModuleContext ctx(p.module, caps);
  return is_s_prime_submodule_by_ideals(ctx, p, s, fixed_s);
}

VerdictReport is_s_prime_via_colon(ModuleContext& ctx, const Submodule& p,
                                   const MSystem& s) {
  require_proper(p);
  require_colon_disjoint(ctx, p, s);
  const FiniteRightModule& M = *ctx.module();
  VerdictReport out = VerdictReport::fail_with(
      {NamedValue::text("note", "no s in S makes (P :_M <s>) a proper prime submodule")});
  bool found = false;
  s.bits.for_each([&](int sv) {
    if (found) return;
    const Bitset& q = ctx.serve_m(p.bits, sv);  // (P :_M <s>)
    if (q.count() < M.order() && ctx.prime_condition(q)) {
      out = VerdictReport::pass_with(
          {NamedValue::elem("s", sv, render_ring_element(*M.ring(), sv)),
           NamedValue::elems("colon", q.elements(), render_mset(M, q))});
      found = true;
    }
  });
  return out;
}

VerdictReport is_s_prime_via_colon(const Submodule& p, const MSystem& s) {
  ModuleContext ctx(p.module);
  return is_s_prime_via_colon(ctx, p, s);
}

VerdictReport is_multiplication_module(ModuleContext& ctx) {
  const Bitset* failing = nullptr;
  if (ctx.multiplication_condition(&failing)) return VerdictReport::pass();
  return VerdictReport::fail_with(
      {NamedValue::elems("P", failing->elements(),
                         render_mset(*ctx.module(), *failing))});
}

VerdictReport is_multiplication_module(const ModulePtr& m, const Caps& caps) {
  ModuleContext ctx(m, caps);
  return is_multiplication_module(ctx);
}

VerdictReport is_s_multiplication_module(ModuleContext& ctx, const MSystem& s) {
  std::vector<int> per_n_witness;
  const std::vector<Bitset>& subs = ctx.submodules();
  for (const Bitset& n : subs) {
    const Bitset& good = ctx.smult_good_s(n);
    Bitset hit = good.intersected(s.bits);
    if (hit.empty())
      return VerdictReport::fail_with(
          {NamedValue::elems("N", n.elements(), render_mset(*ctx.module(), n))});
    per_n_witness.push_back(hit.first());
  }
  return VerdictReport::pass_with(
      {NamedValue::elems("s_per_submodule", std::move(per_n_witness))});
}

VerdictReport is_s_multiplication_module(const ModulePtr& m, const MSystem& s,
                                         const Caps& caps) {
  ModuleContext ctx(m, caps);
  return is_s_multiplication_module(ctx, s);
}

VerdictReport is_s_finite(ModuleContext& ctx, const Submodule& n, const MSystem& s,
                          int max_gens) {
  if (max_gens < 0) throw PreconditionError("is_s_finite: max_gens must be >= 0");
  int best_k = -1;
  std::vector<Elem> best_gens;
  int best_s = -1;
  s.bits.for_each([&](int sv) {
    const auto& cell = ctx.s_finite_cell(n.bits, sv, max_gens);
    if (cell.found_k < 0 || cell.found_k > max_gens) return;
    bool better = false;
    if (best_k < 0 || cell.found_k < best_k)
      better = true;
    else if (cell.found_k == best_k &&
             std::lexicographical_compare(cell.gens.begin(), cell.gens.end(),
                                          best_gens.begin(), best_gens.end()))
      better = true;
    if (better) {
      best_k = cell.found_k;
      best_gens = cell.gens;
      best_s = sv;
    }
  });
  if (best_k < 0)
    return VerdictReport::fail_with({NamedValue::text(
        "note", "no F with at most " + std::to_string(max_gens) + " generators")});
  std::vector<int> gens(best_gens.begin(), best_gens.end());
  return VerdictReport::pass_with(
      {NamedValue::elem("s", best_s, render_ring_element(*ctx.module()->ring(), best_s)),
       NamedValue::elems("generators", std::move(gens))});
}

VerdictReport is_s_finite(const Submodule& n, const MSystem& s, int max_gens) {
  ModuleContext ctx(n.module);
  return is_s_finite(ctx, n, s, max_gens);
}

VerdictReport is_s_principal(const Submodule& n, const MSystem& s) {
  return is_s_finite(n, s, 1);
}

VerdictReport is_s_noetherian_module(ModuleContext& ctx, const MSystem& s,
                                     int max_gens) {
  for (const Bitset& n : ctx.submodules()) {
    VerdictReport v = is_s_finite(ctx, Submodule{ctx.module(), n}, s, max_gens);
    if (!v.holds)
      return VerdictReport::fail_with(
          {NamedValue::elems("N", n.elements(), render_mset(*ctx.module(), n))});
  }
  return VerdictReport::pass();
}

VerdictReport is_s_noetherian_module(const ModulePtr& m, const MSystem& s, int max_gens,
                                     const Caps& caps) {
  ModuleContext ctx(m, caps);
  return is_s_noetherian_module(ctx, s, max_gens);
}

VerdictReport is_right_s_noetherian_ring(const RingPtr& r, const MSystem& s,
                                         int max_gens, const Caps& caps) {
  ModuleContext ctx(regular_module(r), caps);
  return is_s_noetherian_module(ctx, s, max_gens);
}

}  // namespace sprime
