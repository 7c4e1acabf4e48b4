#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sprime/hom.hpp"
#include "sprime/predicates.hpp"

namespace sprime {

// Knobs controlling corpus generation and sweep policies. The seed is
// recorded in every report; identical options produce identical reports.
struct CorpusOptions {
  int msystem_max_size = 2;        // exhaustive m-system size bound
  int msystem_sample3_count = 8;   // seeded size-3 m-systems per ring
  bool quotient_modules = true;    // include quotients of the base modules
  std::string selection = "all";   // "all" or "sampled"
  int selection_cap = 12;          // per-list cap when selection == "sampled"
  std::uint64_t seed = 1;
  std::uint64_t budget = 5'000'000;  // per-theorem instance admission cap
  int n_max = 4;                   // avoidance tuple size bound
  int avoidance_n4_samples = 150;  // sampled 4-tuples per (module, S)
  int max_gens = 2;                // S-finite generator bound
};

struct Corpus {
  std::vector<RingPtr> rings;
  std::vector<std::pair<RingPtr, RingPtr>> product_pairs;
  CorpusOptions opt;
};

// Z_2..Z_24, M_2(Z_2), T_2(Z_2), T_2(Z_4); product factor pairs Z_n x Z_m
// with n <= m and n*m <= 36.
Corpus default_corpus(const Caps& caps = Caps::defaults());

struct Violation {
  std::string instance;
  std::vector<NamedValue> tuple;
};

struct TheoremReport {
  std::string id;
  std::uint64_t instances_checked = 0;
  std::vector<Violation> violations;    // stored up to a cap
  std::uint64_t violations_total = 0;   // full count
  std::vector<std::string> witness_log;
  std::map<std::string, std::int64_t> notes;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;

  bool pass() const { return violations_total == 0; }
};

// Shared state for a verification run: module pool, per-ring m-system lists,
// and memoized membership verdicts. Deterministic: pools and lists are built
// in corpus order, all caches are keyed by value.
class Workspace {
 public:
  explicit Workspace(Corpus corpus, Caps caps = Caps::defaults());

  const Corpus& corpus() const { return corpus_; }
  const Caps& caps() const { return caps_; }

  struct Entry {
    ModulePtr module;
    std::shared_ptr<ModuleContext> ctx;
    std::string name;

    std::map<std::pair<Bitset, Bitset>, bool> sprime_memo;
    std::map<Bitset, bool> prime_memo;
    std::map<Bitset, bool> smult_memo;
    std::map<std::pair<Bitset, int>, bool> noeth_memo;
    std::map<Bitset, std::unique_ptr<Entry>> quotient_cache;
    struct Mat {
      Materialized mat;
      std::unique_ptr<Entry> entry;
    };
    std::map<Bitset, Mat> materialized_cache;
    std::vector<Bitset> selected_subs;
    bool selected_subs_ready = false;
  };

  // Regular modules and (optionally) quotients of regulars for the base
  // rings, then regular modules of the product rings.
  const std::vector<std::unique_ptr<Entry>>& modules();

  // Base-ring entries only (excludes product-ring regulars).
  std::size_t base_module_count();

  std::shared_ptr<RingContext> ring_context(const RingPtr& r);
  RingPtr product_ring_of(std::size_t pair_index);
  Entry* regular_entry(const RingPtr& r);

  // Exhaustive m-systems of size <= msystem_max_size plus the seeded size-3
  // sample, in deterministic order.
  const std::vector<Bitset>& msystems(const RingPtr& r);

  // Membership helpers: properness and disjointness folded in, never throw.
  bool member_prime_submodule(Entry& e, const Bitset& p);
  bool member_s_prime_submodule(Entry& e, const Bitset& p, const Bitset& s);
  bool member_prime_ideal(RingContext& rc, const Bitset& p);
  bool member_s_prime_ideal(RingContext& rc, const Bitset& p, const Bitset& s);
  bool member_s_multiplication(Entry& e, const Bitset& s);
  bool member_s_noetherian(Entry& e, const Bitset& s, int max_gens);

  Entry& quotient_entry(Entry& e, const Bitset& l);
  Entry::Mat& materialized_entry(Entry& e, const Bitset& n);

  // Submodule list honoring the selection policy (policy applies to sweep
  // loops; conditions quantifying inside a single check stay exhaustive).
  const std::vector<Bitset>& selected_submodules(Entry& e);

  std::uint64_t derive_seed(const std::string& salt) const;

 private:
  Corpus corpus_;
  Caps caps_;
  std::vector<std::unique_ptr<Entry>> entries_;
  std::size_t base_entries_ = 0;
  bool built_ = false;
  std::map<const FiniteRing*, std::shared_ptr<RingContext>> ring_ctxs_;
  std::map<const FiniteRing*, std::vector<Bitset>> msystems_;
  std::map<const FiniteRing*, Entry*> regular_of_;
  std::vector<RingPtr> product_rings_;

  void build();
  std::unique_ptr<Entry> make_entry(ModulePtr m, std::string name);
};

// Identifiers accepted by verify_theorem / run_verify, in report order.
const std::vector<std::string>& theorem_ids();

TheoremReport verify_example_2_3(Workspace& ws);
TheoremReport verify_thm_2_5(Workspace& ws);
TheoremReport verify_thm_2_6(Workspace& ws);
TheoremReport verify_prop_2_7(Workspace& ws);
TheoremReport verify_prop_2_8(Workspace& ws);
TheoremReport verify_cor_2_9(Workspace& ws);
TheoremReport verify_thm_2_12(Workspace& ws);
TheoremReport verify_thm_2_13_avoidance(Workspace& ws, int n_max);
TheoremReport verify_prop_2_14(Workspace& ws);
TheoremReport verify_cor_2_15(Workspace& ws);
TheoremReport verify_thm_2_16(Workspace& ws);
TheoremReport verify_thm_2_17(Workspace& ws);
TheoremReport verify_thm_2_18(Workspace& ws);
TheoremReport verify_cor_2_19(Workspace& ws);
TheoremReport verify_lemma_2_20(Workspace& ws);
TheoremReport verify_lemma_2_21(Workspace& ws);
TheoremReport verify_thm_2_22(Workspace& ws);
TheoremReport verify_prop_3_2(Workspace& ws);
TheoremReport verify_cor_3_3(Workspace& ws);
TheoremReport verify_remark_3_1(Workspace& ws);
TheoremReport verify_mode_comparison(Workspace& ws);

TheoremReport verify_theorem(Workspace& ws, const std::string& id);
// Empty id list means the full catalog.
std::vector<TheoremReport> run_verify(Workspace& ws, std::vector<std::string> ids);

// Re-run a verifier with one hypothesis removed; whatever the sweep finds is
// the product, reported as the violations list. Supported (id, drop) pairs:
//   thm-2.13 / s-prime-count, thm-2.13 / s-multiplication,
//   thm-2.16 / kernel-subset, thm-2.17 / preimage-disjoint,
//   s-prime   / disjointness.
TheoremReport search_counterexamples(Workspace& ws, const std::string& id,
                                     const std::string& drop);

}  // namespace sprime
