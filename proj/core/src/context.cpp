#include "sprime/context.hpp"

#include <algorithm>

#include "sprime/errors.hpp"

namespace sprime {

RingContext::RingContext(RingPtr r, Caps caps)
    : ring_(std::move(r)), caps_(caps), principal_(std::size_t(ring_->order())) {}

const Bitset& RingContext::principal(int s) {
  auto& slot = principal_[std::size_t(s)];
  if (!slot) slot = principal_ideal(ring_, s).bits;
  return *slot;
}

const std::vector<Bitset>& RingContext::two_sided_ideals() {
  if (!two_sided_) {
    std::vector<Bitset> out;
    for (Ideal& i : enumerate_two_sided_ideals(ring_, caps_)) out.push_back(i.bits);
    two_sided_ = std::move(out);
  }
  return *two_sided_;
}

const std::vector<Bitset>& RingContext::right_ideals() {
  if (!right_) {
    std::vector<Bitset> out;
    for (Ideal& i : enumerate_right_ideals(ring_, caps_)) out.push_back(i.bits);
    right_ = std::move(out);
  }
  return *right_;
}

const Bitset& RingContext::units() {
  if (!units_) units_ = unit_elements(*ring_);
  return *units_;
}

const std::vector<std::pair<Elem, Elem>>& RingContext::test_pairs(const Bitset& p) {
  auto it = pairs_.find(p);
  if (it != pairs_.end()) return it->second;
  const FiniteRing& R = *ring_;
  std::vector<std::pair<Elem, Elem>> out;
  for (int a = 0; a < R.order(); ++a) {
    if (p.test(a)) continue;
    for (int b = 0; b < R.order(); ++b) {
      if (p.test(b)) continue;
      if (!p.test(R.mul(a, b))) continue;  // r = 1 shortcut
      bool contained = true;
      for (int x = 0; x < R.order() && contained; ++x)
        if (!p.test(R.mul(R.mul(a, x), b))) contained = false;
      if (contained) out.emplace_back(Elem(a), Elem(b));
    }
  }
  return pairs_.emplace(p, std::move(out)).first->second;
}

const Bitset& RingContext::serve_set(const Bitset& p, int s) {
  auto key = std::make_pair(p, s);
  auto it = serve_.find(key);
  if (it != serve_.end()) return it->second;
  const FiniteRing& R = *ring_;
  const Bitset& ps = principal(s);
  Bitset out(R.order());
  for (int x = 0; x < R.order(); ++x) {
    bool in = true;
    ps.for_each([&](int t) {
      if (in && !p.test(R.mul(x, t))) in = false;
    });
    if (in) out.set(x);
  }
  return serve_.emplace(std::move(key), std::move(out)).first->second;
}

const Bitset& RingContext::times_principal(const Bitset& bits, int s) {
  auto key = std::make_pair(bits, s);
  auto it = times_.find(key);
  if (it != times_.end()) return it->second;
  const FiniteRing& R = *ring_;
  const Bitset& ps = principal(s);
  Bitset out(R.order());
  bits.for_each([&](int j) {
    ps.for_each([&](int t) { out.set(R.mul(j, t)); });
  });
  return times_.emplace(std::move(key), std::move(out)).first->second;
}

bool RingContext::prime_condition(const Bitset& p) { return test_pairs(p).empty(); }

bool RingContext::s_prime_condition_at(const Bitset& p, int s) {
  const Bitset& serve = serve_set(p, s);
  for (auto [a, b] : test_pairs(p))
    if (!serve.test(a) && !serve.test(b)) return false;
  return true;
}

bool RingContext::s_prime_condition_uniform(const Bitset& p, const Bitset& s_bits,
                                            int* witness) {
  bool ok = false;
  s_bits.for_each([&](int s) {
    if (ok) return;
    if (s_prime_condition_at(p, s)) {
      ok = true;
      if (witness) *witness = s;
    }
  });
  return ok;
}

bool RingContext::s_prime_condition_per_pair(const Bitset& p, const Bitset& s_bits,
                                             std::pair<int, int>* failing) {
  for (auto [a, b] : test_pairs(p)) {
    bool served = false;
    s_bits.for_each([&](int s) {
      if (served) return;
      const Bitset& serve = serve_set(p, s);
      if (serve.test(a) || serve.test(b)) served = true;
    });
    if (!served) {
      if (failing) *failing = {a, b};
      return false;
    }
  }
  return true;
}

ModuleContext::ModuleContext(ModulePtr m, Caps caps)
    : ModuleContext(m, std::make_shared<RingContext>(m->ring(), caps), caps) {}

ModuleContext::ModuleContext(ModulePtr m, std::shared_ptr<RingContext> rc, Caps caps)
    : module_(std::move(m)),
      rc_(std::move(rc)),
      caps_(caps),
      cyclic_(std::size_t(module_->order())) {}

const std::vector<Bitset>& ModuleContext::submodules() {
  if (!submodules_) {
    std::vector<Bitset> out;
    for (Submodule& s : enumerate_submodules(module_, caps_)) out.push_back(s.bits);
    submodules_ = std::move(out);
  }
  return *submodules_;
}

const Bitset& ModuleContext::colon(const Bitset& p) {
  auto it = colon_.find(p);
  if (it != colon_.end()) return it->second;
  const FiniteRightModule& M = *module_;
  Bitset out(M.ring_order());
  for (int r = 0; r < M.ring_order(); ++r) {
    bool in = true;
    for (int x = 0; x < M.order() && in; ++x)
      if (!p.test(M.act(x, r))) in = false;
    if (in) out.set(r);
  }
  return colon_.emplace(p, std::move(out)).first->second;
}

const std::vector<std::pair<Elem, Elem>>& ModuleContext::test_pairs(const Bitset& p) {
  auto it = pairs_.find(p);
  if (it != pairs_.end()) return it->second;
  const FiniteRightModule& M = *module_;
  const Bitset& col = colon(p);
  std::vector<std::pair<Elem, Elem>> out;
  for (int m = 0; m < M.order(); ++m) {
    if (p.test(m)) continue;
    for (int a = 0; a < M.ring_order(); ++a) {
      if (col.test(a)) continue;
      if (!p.test(M.act(m, a))) continue;  // r = 1 shortcut
      bool contained = true;
      for (int x = 0; x < M.ring_order() && contained; ++x)
        if (!p.test(M.act(M.act(m, x), a))) contained = false;
      if (contained) out.emplace_back(Elem(m), Elem(a));
    }
  }
  return pairs_.emplace(p, std::move(out)).first->second;
}

const Bitset& ModuleContext::serve_a(const Bitset& p, int s) {
  auto key = std::make_pair(p, s);
  auto it = serve_a_.find(key);
  if (it != serve_a_.end()) return it->second;
  const FiniteRightModule& M = *module_;
  const Bitset& col = colon(p);
  const Bitset& ps = rc_->principal(s);
  Bitset out(M.ring_order());
  for (int a = 0; a < M.ring_order(); ++a) {
    bool in = true;
    ps.for_each([&](int t) {
      if (in && !col.test(M.ring()->mul(a, t))) in = false;
    });
    if (in) out.set(a);
  }
  return serve_a_.emplace(std::move(key), std::move(out)).first->second;
}

const Bitset& ModuleContext::serve_m(const Bitset& p, int s) {
  auto key = std::make_pair(p, s);
  auto it = serve_m_.find(key);
  if (it != serve_m_.end()) return it->second;
  const FiniteRightModule& M = *module_;
  const Bitset& ps = rc_->principal(s);
  Bitset out(M.order());
  for (int m = 0; m < M.order(); ++m) {
    bool in = true;
    ps.for_each([&](int t) {
      if (in && !p.test(M.act(m, t))) in = false;
    });
    if (in) out.set(m);
  }
  return serve_m_.emplace(std::move(key), std::move(out)).first->second;
}

const Bitset& ModuleContext::act_principal(const Bitset& n, int s) {
  auto key = std::make_pair(n, s);
  auto it = act_principal_.find(key);
  if (it != act_principal_.end()) return it->second;
  const FiniteRightModule& M = *module_;
  const Bitset& ps = rc_->principal(s);
  Bitset out(M.order());
  n.for_each([&](int x) {
    ps.for_each([&](int t) { out.set(M.act(x, t)); });
  });
  return act_principal_.emplace(std::move(key), std::move(out)).first->second;
}

const Bitset& ModuleContext::module_times_ideal(const Bitset& ideal_bits) {
  auto it = mtimes_.find(ideal_bits);
  if (it != mtimes_.end()) return it->second;
  Bitset full = Bitset::full_set(module_->order());
  Submodule whole{module_, full};
  Ideal j{module_->ring(), ideal_bits, IdealKind::Right};
  Bitset out = submodule_ideal_product(whole, j).bits;
  return mtimes_.emplace(ideal_bits, std::move(out)).first->second;
}

bool ModuleContext::prime_condition(const Bitset& p) { return test_pairs(p).empty(); }

bool ModuleContext::def22_condition_at(const Bitset& p, int s) {
  const Bitset& sa = serve_a(p, s);
  const Bitset& sm = serve_m(p, s);
  for (auto [m, a] : test_pairs(p))
    if (!sa.test(a) && !sm.test(m)) return false;
  return true;
}

bool ModuleContext::s_prime_condition_uniform(const Bitset& p, const Bitset& s_bits,
                                              int* witness) {
  bool ok = false;
  s_bits.for_each([&](int s) {
    if (ok) return;
    if (def22_condition_at(p, s)) {
      ok = true;
      if (witness) *witness = s;
    }
  });
  return ok;
}

bool ModuleContext::s_prime_condition_per_pair(const Bitset& p, const Bitset& s_bits,
                                               std::pair<int, int>* failing) {
  for (auto [m, a] : test_pairs(p)) {
    bool served = false;
    s_bits.for_each([&](int s) {
      if (served) return;
      if (serve_a(p, s).test(a) || serve_m(p, s).test(m)) served = true;
    });
    if (!served) {
      if (failing) *failing = {m, a};
      return false;
    }
  }
  return true;
}

const Bitset& ModuleContext::raw_product(const Bitset& n, int j_idx) {
  auto key = std::make_pair(n, j_idx);
  auto it = nj_products_.find(key);
  if (it != nj_products_.end()) return it->second;
  const FiniteRightModule& M = *module_;
  const Bitset& j = rc_->two_sided_ideals()[std::size_t(j_idx)];
  Bitset out(M.order());
  n.for_each([&](int x) {
    j.for_each([&](int a) { out.set(M.act(x, a)); });
  });
  return nj_products_.emplace(std::move(key), std::move(out)).first->second;
}

bool ModuleContext::ideal_form_condition_at(const Bitset& p, int s,
                                            std::pair<int, int>* failing_nj) {
  const Bitset& col = colon(p);
  const std::vector<Bitset>& subs = submodules();
  const std::vector<Bitset>& ideals = rc_->two_sided_ideals();
  for (std::size_t ni = 0; ni < subs.size(); ++ni) {
    const Bitset& raw_ns = act_principal(subs[ni], s);
    bool ns_in_p = raw_ns.subset_of(p);
    for (std::size_t ji = 0; ji < ideals.size(); ++ji) {
      if (!raw_product(subs[ni], int(ji)).subset_of(p)) continue;  // NJ not in P
      if (ns_in_p) continue;
      if (!rc_->times_principal(ideals[ji], s).subset_of(col)) {
        if (failing_nj) *failing_nj = {int(ni), int(ji)};
        return false;
      }
    }
  }
  return true;
}

bool ModuleContext::multiplication_condition(const Bitset** failing) {
  if (!multiplication_) {
    bool ok = true;
    Bitset fail;
    for (const Bitset& n : submodules()) {
      if (module_times_ideal(colon(n)) != n) {
        ok = false;
        fail = n;
        break;
      }
    }
    multiplication_ = std::make_pair(ok, std::move(fail));
  }
  if (!multiplication_->first && failing) *failing = &multiplication_->second;
  return multiplication_->first;
}

const Bitset& ModuleContext::smult_good_s(const Bitset& n) {
  auto it = smult_good_.find(n);
  if (it != smult_good_.end()) return it->second;
  const Bitset& target = module_times_ideal(colon(n));
  Bitset out(module_->ring_order());
  for (int s = 0; s < module_->ring_order(); ++s)
    if (act_principal(n, s).subset_of(target)) out.set(s);
  return smult_good_.emplace(n, std::move(out)).first->second;
}

const Bitset& ModuleContext::cyclic(int x) {
  auto& slot = cyclic_[std::size_t(x)];
  if (!slot) {
    Bitset g(module_->order());
    g.set(x);
    slot = generate_submodule(module_, g).bits;
  }
  return *slot;
}

namespace {

// Lexicographic combinations of `elems` of size k, visiting tuples in
// ascending element order; returns true when `visit` accepts a tuple.
bool combinations(const std::vector<int>& elems, int k,
                  const std::function<bool(const std::vector<int>&)>& visit,
                  std::vector<int>& cur, std::size_t start) {
  if (int(cur.size()) == k) return visit(cur);
  for (std::size_t i = start; i + (k - cur.size()) <= elems.size(); ++i) {
    cur.push_back(elems[i]);
    if (combinations(elems, k, visit, cur, i + 1)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

const ModuleContext::SFiniteCell& ModuleContext::s_finite_cell(const Bitset& n, int s,
                                                               int max_gens) {
  auto key = std::make_pair(n, s);
  auto it = sfinite_.find(key);
  if (it == sfinite_.end()) it = sfinite_.emplace(key, SFiniteCell{}).first;
  SFiniteCell& cell = it->second;
  if (cell.found_k >= 0 || cell.searched_k >= max_gens) return cell;

  const FiniteRightModule& M = *module_;
  const Bitset& raw_ns = act_principal(n, s);
  std::vector<int> elems = n.elements();
  auto add = [&](int a, int b) { return int(M.add(a, b)); };

  for (int k = cell.searched_k + 1; k <= max_gens; ++k) {
    if (k == 0) {
      Bitset f(M.order());
      f.set(M.zero());
      if (raw_ns.subset_of(f)) {
        cell.found_k = 0;
        cell.searched_k = k;
        return cell;
      }
      cell.searched_k = k;
      continue;
    }
    if (k > int(elems.size())) {
      cell.searched_k = max_gens;
      return cell;
    }
    std::vector<int> cur;
    bool found = combinations(
        elems, k,
        [&](const std::vector<int>& tuple) {
          Bitset f = cyclic(tuple[0]);
          for (std::size_t i = 1; i < tuple.size(); ++i) {
            f.unite_with(cyclic(tuple[i]));
            bool changed = true;
            while (changed) {
              changed = false;
              std::vector<int> fe = f.elements();
              for (int a : fe)
                for (int b : fe) {
                  int c = add(a, b);
                  if (!f.test(c)) {
                    f.set(c);
                    changed = true;
                  }
                }
            }
          }
          if (raw_ns.subset_of(f)) {
            cell.found_k = k;
            cell.gens.assign(tuple.begin(), tuple.end());
            return true;
          }
          return false;
        },
        cur, 0);
    cell.searched_k = k;
    if (found) return cell;
  }
  return cell;
}

}  // namespace sprime
