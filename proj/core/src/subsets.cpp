#include "sprime/subsets.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "sprime/errors.hpp"

namespace sprime {

namespace {

// Additive closure in place: repeatedly add all pairwise sums until stable.
template <typename AddFn>
void additive_close(Bitset& s, AddFn&& add) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> elems = s.elements();
    for (int a : elems)
      for (int b : elems) {
        int c = add(a, b);
        if (!s.test(c)) {
          s.set(c);
          changed = true;
        }
      }
  }
}

// Worklist fixpoint: absorb (negation and the given multiplicative ops),
// then close additively, until stable.
template <typename AbsorbFn, typename AddFn>
Bitset closure(int width, Bitset start, int zero, AbsorbFn&& absorb, AddFn&& add) {
  start.set(zero);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> elems = start.elements();
    for (int a : elems) changed |= absorb(start, a);
    Bitset before = start;
    additive_close(start, add);
    changed |= !(before == start);
  }
  return start;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (a == b) return;
  if (a->same_tables(*b)) return;
  throw PreconditionError(std::string(what) + ": operands live over different rings");
}

}  // namespace

Ideal generate_two_sided_ideal(const RingPtr& r, const Bitset& gens) {
  assert(gens.width() == r->order());
  const FiniteRing& R = *r;
  Bitset bits = closure(
      R.order(), gens, R.zero(),
      [&](Bitset& s, int a) {
        bool ch = false;
        int na = R.neg(a);
        if (!s.test(na)) s.set(na), ch = true;
        for (int x = 0; x < R.order(); ++x) {
          int l = R.mul(x, a), rr = R.mul(a, x);
          if (!s.test(l)) s.set(l), ch = true;
          if (!s.test(rr)) s.set(rr), ch = true;
        }
        return ch;
      },
      [&](int a, int b) { return int(R.add(a, b)); });
  return Ideal{r, bits, IdealKind::TwoSided};
}

Ideal generate_right_ideal(const RingPtr& r, const Bitset& gens) {
  assert(gens.width() == r->order());
  const FiniteRing& R = *r;
  Bitset bits = closure(
      R.order(), gens, R.zero(),
      [&](Bitset& s, int a) {
        bool ch = false;
        int na = R.neg(a);
        if (!s.test(na)) s.set(na), ch = true;
        for (int x = 0; x < R.order(); ++x) {
          int rr = R.mul(a, x);
          if (!s.test(rr)) s.set(rr), ch = true;
        }
        return ch;
      },
      [&](int a, int b) { return int(R.add(a, b)); });
  return Ideal{r, bits, IdealKind::Right};
}

Submodule generate_submodule(const ModulePtr& m, const Bitset& gens) {
  assert(gens.width() == m->order());
  const FiniteRightModule& M = *m;
  Bitset bits = closure(
      M.order(), gens, M.zero(),
      [&](Bitset& s, int a) {
        bool ch = false;
        int na = M.neg(a);
        if (!s.test(na)) s.set(na), ch = true;
        for (int x = 0; x < M.ring_order(); ++x) {
          int v = M.act(a, x);
          if (!s.test(v)) s.set(v), ch = true;
        }
        return ch;
      },
      [&](int a, int b) { return int(M.add(a, b)); });
  return Submodule{m, bits};
}

Ideal principal_ideal(const RingPtr& r, int s) {
  Bitset gens(r->order());
  gens.set(s);
  return generate_two_sided_ideal(r, gens);
}

namespace {

void debug_check_two_sided(const FiniteRing& r, const Bitset& bits, const char* what) {
#ifndef NDEBUG
  assert(validate_ideal_bits(r, bits, true).holds && what);
#else
  (void)r;
  (void)bits;
  (void)what;
#endif
}

void debug_check_submodule(const FiniteRightModule& m, const Bitset& bits,
                           const char* what) {
#ifndef NDEBUG
  assert(validate_submodule_bits(m, bits).holds && what);
#else
  (void)m;
  (void)bits;
  (void)what;
#endif
}

}  // namespace

Ideal colon_ring(const Submodule& p) {
  const FiniteRightModule& M = *p.module;
  Bitset bits(M.ring_order());
  for (int r = 0; r < M.ring_order(); ++r) {
    bool in = true;
    for (int x = 0; x < M.order() && in; ++x)
      if (!p.bits.test(M.act(x, r))) in = false;
    if (in) bits.set(r);
  }
  debug_check_two_sided(*M.ring(), bits, "colon_ring result must be a two-sided ideal");
  return Ideal{M.ring(), bits, IdealKind::TwoSided};
}

Ideal colon_ring_relative(const Submodule& p, const Bitset& n_bits) {
  const FiniteRightModule& M = *p.module;
  assert(n_bits.width() == M.order());
  Bitset bits(M.ring_order());
  for (int r = 0; r < M.ring_order(); ++r) {
    bool in = true;
    n_bits.for_each([&](int x) {
      if (in && !p.bits.test(M.act(x, r))) in = false;
    });
    if (in) bits.set(r);
  }
  return Ideal{M.ring(), bits, IdealKind::TwoSided};
}

Submodule colon_module(const Submodule& p, const Ideal& j) {
  require_same_ring(p.module->ring(), j.ring, "colon_module");
  const FiniteRightModule& M = *p.module;
  Bitset bits(M.order());
  for (int m = 0; m < M.order(); ++m) {
    bool in = true;
    j.bits.for_each([&](int a) {
      if (in && !p.bits.test(M.act(m, a))) in = false;
    });
    if (in) bits.set(m);
  }
  debug_check_submodule(M, bits, "colon_module result must be a submodule");
  return Submodule{p.module, bits};
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring, b.ring, "ideal_product");
  const FiniteRing& R = *a.ring;
  Bitset bits(R.order());
  bits.set(R.zero());
  a.bits.for_each([&](int x) {
    b.bits.for_each([&](int y) { bits.set(R.mul(x, y)); });
  });
  additive_close(bits, [&](int x, int y) { return int(R.add(x, y)); });
  IdealKind kind = (a.kind == IdealKind::TwoSided && b.kind == IdealKind::TwoSided)
                       ? IdealKind::TwoSided
                       : IdealKind::Right;
  if (kind == IdealKind::TwoSided)
    debug_check_two_sided(R, bits, "ideal_product of two-sided ideals");
  return Ideal{a.ring, bits, kind};
}

Submodule submodule_ideal_product(const Submodule& n, const Ideal& j) {
  require_same_ring(n.module->ring(), j.ring, "submodule_ideal_product");
  const FiniteRightModule& M = *n.module;
  Bitset bits(M.order());
  bits.set(M.zero());
  n.bits.for_each([&](int x) {
    j.bits.for_each([&](int a) { bits.set(M.act(x, a)); });
  });
  additive_close(bits, [&](int x, int y) { return int(M.add(x, y)); });
  debug_check_submodule(M, bits, "submodule_ideal_product result");
  return Submodule{n.module, bits};
}

Ideal annihilator(const ModulePtr& m) {
  Bitset zero_sub(m->order());
  zero_sub.set(m->zero());
  return colon_ring(Submodule{m, zero_sub});
}

namespace {

// Join-closure of a seed family: repeatedly unite pairs and re-close
// additively (the union of two closed subsets is closed under the absorbing
// ops, so only sums are missing).
template <typename AddFn>
std::vector<Bitset> join_closure(std::vector<Bitset> seeds, AddFn&& add) {
  std::set<Bitset> all(seeds.begin(), seeds.end());
  std::vector<Bitset> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& f : frontier)
      for (const Bitset& g : all) {
        Bitset j = f.united(g);
        additive_close(j, add);
        if (!all.count(j)) next.push_back(j);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (const Bitset& j : next) all.insert(j);
    frontier = std::move(next);
  }
  return std::vector<Bitset>(all.begin(), all.end());
}

void require_enumerable(int order, const Caps& caps, const char* what) {
  if (order > caps.enumeration_order_cap)
    throw CapExceeded(std::string(what) + ": order " + std::to_string(order) +
                      " exceeds enumeration cap " +
                      std::to_string(caps.enumeration_order_cap));
}

}  // namespace

std::vector<Submodule> enumerate_submodules(const ModulePtr& m, const Caps& caps) {
  require_enumerable(m->order(), caps, "enumerate_submodules");
  const FiniteRightModule& M = *m;
  std::vector<Bitset> seeds;
  Bitset zero(M.order());
  zero.set(M.zero());
  seeds.push_back(zero);
  for (int x = 0; x < M.order(); ++x) {
    Bitset g(M.order());
    g.set(x);
    seeds.push_back(generate_submodule(m, g).bits);
  }
  std::vector<Bitset> all =
      join_closure(std::move(seeds), [&](int a, int b) { return int(M.add(a, b)); });
  std::vector<Submodule> out;
  out.reserve(all.size());
  for (Bitset& b : all) out.push_back(Submodule{m, std::move(b)});
  return out;
}

std::vector<Ideal> enumerate_two_sided_ideals(const RingPtr& r, const Caps& caps) {
  require_enumerable(r->order(), caps, "enumerate_two_sided_ideals");
  const FiniteRing& R = *r;
  std::vector<Bitset> seeds;
  Bitset zero(R.order());
  zero.set(R.zero());
  seeds.push_back(zero);
  for (int x = 0; x < R.order(); ++x) seeds.push_back(principal_ideal(r, x).bits);
  std::vector<Bitset> all =
      join_closure(std::move(seeds), [&](int a, int b) { return int(R.add(a, b)); });
  std::vector<Ideal> out;
  out.reserve(all.size());
  for (Bitset& b : all) out.push_back(Ideal{r, std::move(b), IdealKind::TwoSided});
  return out;
}

std::vector<Ideal> enumerate_right_ideals(const RingPtr& r, const Caps& caps) {
  require_enumerable(r->order(), caps, "enumerate_right_ideals");
  const FiniteRing& R = *r;
  std::vector<Bitset> seeds;
  Bitset zero(R.order());
  zero.set(R.zero());
  seeds.push_back(zero);
  for (int x = 0; x < R.order(); ++x) {
    Bitset g(R.order());
    g.set(x);
    seeds.push_back(generate_right_ideal(r, g).bits);
  }
  std::vector<Bitset> all =
      join_closure(std::move(seeds), [&](int a, int b) { return int(R.add(a, b)); });
  std::vector<Ideal> out;
  out.reserve(all.size());
  for (Bitset& b : all) out.push_back(Ideal{r, std::move(b), IdealKind::Right});
  return out;
}

bool msystem_condition(const FiniteRing& r, const Bitset& s) {
  if (s.empty()) return false;
  std::vector<int> elems = s.elements();
  for (int a : elems)
    for (int b : elems) {
      bool found = false;
      for (int x = 0; x < r.order() && !found; ++x)
        if (s.test(r.mul(r.mul(a, x), b))) found = true;
      if (!found) return false;
    }
  return true;
}

VerdictReport is_msystem(const RingPtr& r, const Bitset& s) {
  if (s.empty()) throw PreconditionError("is_msystem: the empty set is rejected");
  std::vector<int> elems = s.elements();
  for (int a : elems)
    for (int b : elems) {
      bool found = false;
      for (int x = 0; x < r->order() && !found; ++x)
        if (s.test(r->mul(r->mul(a, x), b))) found = true;
      if (!found)
        return VerdictReport::fail_with(
            {NamedValue::elem("a", a, render_ring_element(*r, a)),
             NamedValue::elem("b", b, render_ring_element(*r, b))});
    }
  return VerdictReport::pass();
}

namespace {

void msystems_rec(const RingPtr& r, int max_size, int start, Bitset& cur,
                  std::vector<MSystem>& out, int size_target, int depth) {
  if (depth == size_target) {
    if (msystem_condition(*r, cur)) out.push_back(MSystem{r, cur});
    return;
  }
  for (int x = start; x < r->order(); ++x) {
    cur.set(x);
    msystems_rec(r, max_size, x + 1, cur, out, size_target, depth + 1);
    cur.reset(x);
  }
}

}  // namespace

std::vector<MSystem> enumerate_msystems(const RingPtr& r, int max_size) {
  if (max_size < 1) throw PreconditionError("enumerate_msystems: max_size must be >= 1");
  std::vector<MSystem> out;
  Bitset cur(r->order());
  for (int size = 1; size <= max_size; ++size)
    msystems_rec(r, max_size, 0, cur, out, size, 0);
  return out;
}

Bitset subset_product(const Bitset& s1, const Bitset& s2) {
  Bitset out(s1.width() * s2.width());
  s1.for_each([&](int a) {
    s2.for_each([&](int b) { out.set(pair_index(s2.width(), a, b)); });
  });
  return out;
}

}  // namespace sprime
