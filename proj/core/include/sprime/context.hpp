#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sprime/subsets.hpp"

namespace sprime {

// Per-ring cache of derived data shared by predicates and theorem sweeps.
// All members are lazy; results are memoized by subset value, so iteration
// order never depends on cache state.
class RingContext {
 public:
  explicit RingContext(RingPtr r, Caps caps = Caps::defaults());

  const RingPtr& ring() const { return ring_; }
  const Caps& caps() const { return caps_; }

  // The two-sided ideal <s>.
  const Bitset& principal(int s);

  // Sorted enumerations, including {0} and the improper whole ring.
  const std::vector<Bitset>& two_sided_ideals();
  const std::vector<Bitset>& right_ideals();

  const Bitset& units();

  // Pairs (a, b) with aRb subset of p, a not in p, b not in p. Pairs with a
  // or b already in the (two-sided) p satisfy every S-prime disjunction, so
  // they are omitted.
  const std::vector<std::pair<Elem, Elem>>& test_pairs(const Bitset& p);

  // { x : x<s> subset of p }.
  const Bitset& serve_set(const Bitset& p, int s);

  // Raw products { j*t : j in bits, t in <s> } without additive closure
  // (containment in an additively closed target is unaffected).
  const Bitset& times_principal(const Bitset& bits, int s);

  // P is prime: no surviving test pair. No properness guard here.
  bool prime_condition(const Bitset& p);

  // Def-2.1-shaped condition for two-sided P at a fixed s.
  bool s_prime_condition_at(const Bitset& p, int s);

  // Uniform-mode condition: some s in s_bits serves every test pair.
  bool s_prime_condition_uniform(const Bitset& p, const Bitset& s_bits,
                                 int* witness = nullptr);
  // Per-pair-mode condition: every test pair is served by some s.
  bool s_prime_condition_per_pair(const Bitset& p, const Bitset& s_bits,
                                  std::pair<int, int>* failing = nullptr);

 private:
  RingPtr ring_;
  Caps caps_;
  std::vector<std::optional<Bitset>> principal_;
  std::optional<std::vector<Bitset>> two_sided_, right_;
  std::optional<Bitset> units_;
  std::map<Bitset, std::vector<std::pair<Elem, Elem>>> pairs_;
  std::map<std::pair<Bitset, int>, Bitset> serve_, times_;
};

// Per-module cache. Owns a RingContext for the base ring (shared between
// modules over the same ring when constructed through a Workspace).
class ModuleContext {
 public:
  explicit ModuleContext(ModulePtr m, Caps caps = Caps::defaults());
  ModuleContext(ModulePtr m, std::shared_ptr<RingContext> rc, Caps caps);

  const ModulePtr& module() const { return module_; }
  RingContext& rc() { return *rc_; }
  const std::shared_ptr<RingContext>& rc_ptr() const { return rc_; }
  const Caps& caps() const { return caps_; }

  const std::vector<Bitset>& submodules();

  // (P :_R M).
  const Bitset& colon(const Bitset& p);

  // Pairs (m, a) with mRa subset of p, m not in p, a not in colon(p).
  const std::vector<std::pair<Elem, Elem>>& test_pairs(const Bitset& p);

  // { a : a<s> subset of colon(p) } and { m : m<s> subset of p }; the second
  // set is exactly (P :_M <s>).
  const Bitset& serve_a(const Bitset& p, int s);
  const Bitset& serve_m(const Bitset& p, int s);

  // Raw action products { act(n, t) : n in bits, t in <s> }.
  const Bitset& act_principal(const Bitset& n, int s);

  // M*I as a closed submodule (additive closure of { act(x, i) }).
  const Bitset& module_times_ideal(const Bitset& ideal_bits);

  bool prime_condition(const Bitset& p);

  // Def 2.2 at a fixed associated s.
  bool def22_condition_at(const Bitset& p, int s);
  bool s_prime_condition_uniform(const Bitset& p, const Bitset& s_bits,
                                 int* witness = nullptr);
  bool s_prime_condition_per_pair(const Bitset& p, const Bitset& s_bits,
                                  std::pair<int, int>* failing = nullptr);

  // Theorem-2.5-shaped condition at a fixed s: for every enumerated
  // submodule N and two-sided ideal J with NJ subset of P, either
  // J<s> subset of (P :_R M) or N<s> subset of P.
  bool ideal_form_condition_at(const Bitset& p, int s,
                               std::pair<int, int>* failing_nj = nullptr);

  // Multiplication-module verdict: every enumerated P equals M*(P :_R M).
  bool multiplication_condition(const Bitset** failing = nullptr);

  // { s : N<s> subset of M*(N :_R M) }.
  const Bitset& smult_good_s(const Bitset& n);

  // Minimal generator count k <= max_gens for a submodule F with
  // N<s> subset of F subset of N and F generated by k elements of N, plus
  // the lexicographically first tuple at that count. found_k is -1 when no
  // such F exists with at most searched_k generators.
  struct SFiniteCell {
    int found_k = -1;
    int searched_k = -1;
    std::vector<Elem> gens;
  };
  const SFiniteCell& s_finite_cell(const Bitset& n, int s, int max_gens);

  // Cyclic submodule generated by one element.
  const Bitset& cyclic(int x);

 private:
  const Bitset& raw_product(const Bitset& n, int j_idx);

  ModulePtr module_;
  std::shared_ptr<RingContext> rc_;
  Caps caps_;
  std::optional<std::vector<Bitset>> submodules_;
  std::map<Bitset, Bitset> colon_;
  std::map<Bitset, std::vector<std::pair<Elem, Elem>>> pairs_;
  std::map<std::pair<Bitset, int>, Bitset> serve_a_, serve_m_, act_principal_;
  std::map<Bitset, Bitset> mtimes_;
  std::map<Bitset, Bitset> smult_good_;
  std::optional<std::pair<bool, Bitset>> multiplication_;
  std::map<std::pair<Bitset, int>, SFiniteCell> sfinite_;
  std::vector<std::optional<Bitset>> cyclic_;
  std::map<std::pair<Bitset, int>, Bitset> nj_products_;
};

}  // namespace sprime
