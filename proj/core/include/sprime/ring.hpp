#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sprime/bitset.hpp"
#include "sprime/config.hpp"
#include "sprime/verdict.hpp"

namespace sprime {

// Element of a ring or module: a dense index into the owner's carrier.
using Elem = std::uint16_t;

enum class RingKind { Zmod, Matrix, UpperTriangular, Product, Quotient, Explicit };

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// A finite associative unital ring given by Cayley tables over indices
// 0..order-1. Immutable after construction; safe to share.
class FiniteRing {
 public:
  // Raw-table constructor. Checks table shapes and index ranges only; run
  // validate_ring for the full axiom sweep.
  FiniteRing(int order, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
             Elem one, std::vector<Elem> neg, std::string label,
             RingKind kind = RingKind::Explicit, int param = 0,
             std::vector<RingPtr> parents = {}, std::vector<Elem> quotient_ideal = {},
             std::vector<Elem> coset_rep = {});

  int order() const { return order_; }
  Elem add(int a, int b) const { return add_[std::size_t(a) * order_ + b]; }
  Elem mul(int a, int b) const { return mul_[std::size_t(a) * order_ + b]; }
  Elem neg(int a) const { return neg_[std::size_t(a)]; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& label() const { return label_; }

  RingKind kind() const { return kind_; }
  // Zmod: the modulus n. Matrix/UpperTriangular: the dimension k.
  int param() const { return param_; }
  // Matrix/UpperTriangular/Quotient: [base]. Product: [left, right].
  const std::vector<RingPtr>& parents() const { return parents_; }
  // Quotient only: the ideal of the base ring, as sorted base indices.
  const std::vector<Elem>& quotient_ideal() const { return quotient_ideal_; }
  // Quotient only: minimal base-ring representative of each coset.
  const std::vector<Elem>& coset_rep() const { return coset_rep_; }

  bool same_tables(const FiniteRing& o) const {
    return order_ == o.order_ && zero_ == o.zero_ && one_ == o.one_ &&
           add_ == o.add_ && mul_ == o.mul_ && neg_ == o.neg_;
  }

 private:
  int order_;
  std::vector<Elem> add_, mul_, neg_;
  Elem zero_, one_;
  std::string label_;
  RingKind kind_;
  int param_;
  std::vector<RingPtr> parents_;
  std::vector<Elem> quotient_ideal_;
  std::vector<Elem> coset_rep_;
};

// Index pairing for product carriers: (a, b) -> a * right_order + b.
inline int pair_index(int right_order, int a, int b) { return a * right_order + b; }
inline std::pair<int, int> unpair_index(int right_order, int e) {
  return {e / right_order, e % right_order};
}

// The ring of integers modulo n, elements 0..n-1. n = 0 is rejected; n = 1
// gives the zero ring (zero == one).
RingPtr make_zmod(int n);

// k x k matrices over base, indexed by row-major digit expansion: the entry
// at (i, j) is digit i*k+j of the index in base `base.order()`.
RingPtr make_matrix_ring(const RingPtr& base, int k, const Caps& caps = Caps::defaults());

// Upper-triangular k x k matrices over base; digit positions are the pairs
// (i, j) with i <= j in row-major order.
RingPtr make_upper_triangular(const RingPtr& base, int k, const Caps& caps = Caps::defaults());

// Componentwise operations on pair_index(r2.order(), a, b).
RingPtr product_ring(const RingPtr& r1, const RingPtr& r2, const Caps& caps = Caps::defaults());

struct QuotientRing {
  RingPtr ring;
  RingPtr base;
  std::vector<Elem> projection;  // base index -> quotient index
};

// Quotient by a proper two-sided ideal, given as a bitset over the base
// carrier. The ideal and the well-definedness of the coset tables are both
// checked eagerly; failures throw ValidationError. Cosets are numbered in
// ascending order of their minimal representatives.
QuotientRing quotient_ring(const RingPtr& r, const Bitset& ideal_bits);

// Exhaustive axiom check: abelian group under (add, zero, neg), associative
// multiplication, two-sided identity, distributivity. The first failing law
// is reported as a counterexample with its witness elements.
VerdictReport validate_ring(const FiniteRing& r);

// Closure check for a subset of the carrier: contains zero, closed under
// addition, negation, right multiplication, and (if two_sided) left
// multiplication by every ring element.
VerdictReport validate_ideal_bits(const FiniteRing& r, const Bitset& bits,
                                  bool two_sided);

// Elements u with uv = vu = 1 for some v.
Bitset unit_elements(const FiniteRing& r);

// Human-readable rendering of an element, following the construction: plain
// integers for Zmod, bracketed rows for matrix kinds, pairs for products,
// "rep+I" for quotients, the bare index otherwise.
std::string render_ring_element(const FiniteRing& r, int e);

}  // namespace sprime
