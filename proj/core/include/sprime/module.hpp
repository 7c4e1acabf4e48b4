#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sprime/ring.hpp"

namespace sprime {

enum class ModuleKind { Regular, Product, Quotient, Explicit };

class FiniteRightModule;
using ModulePtr = std::shared_ptr<const FiniteRightModule>;

// A finite right module over a FiniteRing, given by an addition table and an
// action table (module element x ring element -> module element).
class FiniteRightModule {
 public:
  FiniteRightModule(RingPtr ring, int order, std::vector<Elem> add, Elem zero,
                    std::vector<Elem> neg, std::vector<Elem> act, std::string label,
                    ModuleKind kind = ModuleKind::Explicit,
                    std::vector<ModulePtr> parents = {},
                    std::vector<Elem> quotient_submodule = {},
                    std::vector<Elem> coset_rep = {});

  const RingPtr& ring() const { return ring_; }
  int order() const { return order_; }
  int ring_order() const { return ring_->order(); }
  Elem add(int a, int b) const { return add_[std::size_t(a) * order_ + b]; }
  Elem neg(int a) const { return neg_[std::size_t(a)]; }
  Elem act(int m, int r) const { return act_[std::size_t(m) * ring_order_ + r]; }
  Elem zero() const { return zero_; }
  const std::string& label() const { return label_; }

  ModuleKind kind() const { return kind_; }
  const std::vector<ModulePtr>& parents() const { return parents_; }
  const std::vector<Elem>& quotient_submodule() const { return quotient_submodule_; }
  const std::vector<Elem>& coset_rep() const { return coset_rep_; }

  bool same_tables(const FiniteRightModule& o) const {
    return order_ == o.order_ && zero_ == o.zero_ && add_ == o.add_ &&
           neg_ == o.neg_ && act_ == o.act_ && ring_->same_tables(*o.ring_);
  }

 private:
  RingPtr ring_;
  int order_;
  int ring_order_;
  std::vector<Elem> add_, neg_, act_;
  Elem zero_;
  std::string label_;
  ModuleKind kind_;
  std::vector<ModulePtr> parents_;
  std::vector<Elem> quotient_submodule_;
  std::vector<Elem> coset_rep_;
};

// The ring as a right module over itself: act(m, r) = mul(m, r). Submodules
// of this module are exactly the right ideals of the ring.
ModulePtr regular_module(const RingPtr& r);

// Componentwise module over product_ring(m1.ring, m2.ring); elements are
// pair_index(m2.order(), a, b). The product ring is built internally and is
// reachable through ring().
ModulePtr product_module(const ModulePtr& m1, const ModulePtr& m2,
                         const Caps& caps = Caps::defaults());

struct QuotientModule {
  ModulePtr module;
  ModulePtr base;
  std::vector<Elem> projection;
};

// Quotient by a submodule (improper allowed: quotienting by the whole module
// yields the zero module). The submodule and the well-definedness of the
// coset tables are checked eagerly.
QuotientModule quotient_module(const ModulePtr& m, const Bitset& submodule_bits);

// Exhaustive module axiom check; first failing law reported.
VerdictReport validate_module(const FiniteRightModule& m);

// Closure check for a subset: contains zero, closed under addition, negation
// and the ring action.
VerdictReport validate_submodule_bits(const FiniteRightModule& m, const Bitset& bits);

std::string render_module_element(const FiniteRightModule& m, int e);

}  // namespace sprime
