#include "sprime/module.hpp"

#include <algorithm>

#include "sprime/errors.hpp"

namespace sprime {

namespace {

std::string subset_label(const std::vector<Elem>& elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ",";
    if (i == 12 && elems.size() > 13) {
      s += "...";
      break;
    }
    s += std::to_string(elems[i]);
  }
  return s + "}";
}

}  // namespace

FiniteRightModule::FiniteRightModule(RingPtr ring, int order, std::vector<Elem> add,
                                     Elem zero, std::vector<Elem> neg,
                                     std::vector<Elem> act, std::string label,
                                     ModuleKind kind, std::vector<ModulePtr> parents,
                                     std::vector<Elem> quotient_submodule,
                                     std::vector<Elem> coset_rep)
    : ring_(std::move(ring)),
      order_(order),
      ring_order_(ring_->order()),
      add_(std::move(add)),
      neg_(std::move(neg)),
      act_(std::move(act)),
      zero_(zero),
      label_(std::move(label)),
      kind_(kind),
      parents_(std::move(parents)),
      quotient_submodule_(std::move(quotient_submodule)),
      coset_rep_(std::move(coset_rep)) {
  if (order_ <= 0) throw ValidationError(label_ + ": order must be positive");
  auto check = [&](const std::vector<Elem>& t, std::size_t expected, const char* what) {
    if (t.size() != expected)
      throw ValidationError(label_ + ": " + what + " table has wrong size");
    for (Elem e : t)
      if (int(e) >= order_)
        throw ValidationError(label_ + ": " + what + " table entry out of range");
  };
  check(add_, std::size_t(order_) * order_, "add");
  check(neg_, std::size_t(order_), "neg");
  check(act_, std::size_t(order_) * ring_order_, "act");
  if (int(zero_) >= order_) throw ValidationError(label_ + ": zero out of range");
}

ModulePtr regular_module(const RingPtr& r) {
  const int n = r->order();
  std::vector<Elem> add(std::size_t(n) * n), neg(n), act(std::size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    neg[std::size_t(a)] = r->neg(a);
    for (int b = 0; b < n; ++b) {
      add[std::size_t(a) * n + b] = r->add(a, b);
      act[std::size_t(a) * n + b] = r->mul(a, b);
    }
  }
  return std::make_shared<FiniteRightModule>(r, n, std::move(add), r->zero(),
                                             std::move(neg), std::move(act),
                                             "reg(" + r->label() + ")",
                                             ModuleKind::Regular);
}

ModulePtr product_module(const ModulePtr& m1, const ModulePtr& m2, const Caps& caps) {
  RingPtr pr = product_ring(m1->ring(), m2->ring(), caps);
  const int o1 = m1->order(), o2 = m2->order();
  const std::int64_t order64 = std::int64_t(o1) * o2;
  if (order64 > caps.module_order_cap)
    throw CapExceeded("product_module: order exceeds module cap " +
                      std::to_string(caps.module_order_cap));
  const int order = int(order64);
  const int ro2 = m2->ring()->order();
  const int rorder = pr->order();
  std::vector<Elem> add(std::size_t(order) * order), neg(order),
      act(std::size_t(order) * rorder);
  for (int a = 0; a < order; ++a) {
    auto [a1, a2] = unpair_index(o2, a);
    neg[std::size_t(a)] = Elem(pair_index(o2, m1->neg(a1), m2->neg(a2)));
    for (int b = 0; b < order; ++b) {
      auto [b1, b2] = unpair_index(o2, b);
      add[std::size_t(a) * order + b] =
          Elem(pair_index(o2, m1->add(a1, b1), m2->add(a2, b2)));
    }
    for (int rr = 0; rr < rorder; ++rr) {
      auto [r1, r2] = unpair_index(ro2, rr);
      act[std::size_t(a) * rorder + rr] =
          Elem(pair_index(o2, m1->act(a1, r1), m2->act(a2, r2)));
    }
  }
  Elem zero = Elem(pair_index(o2, m1->zero(), m2->zero()));
  return std::make_shared<FiniteRightModule>(
      pr, order, std::move(add), zero, std::move(neg), std::move(act),
      m1->label() + "x" + m2->label(), ModuleKind::Product,
      std::vector<ModulePtr>{m1, m2});
}

VerdictReport validate_submodule_bits(const FiniteRightModule& m, const Bitset& bits) {
  if (bits.width() != m.order())
    return VerdictReport::fail_with({NamedValue::text("law", "subset width mismatch")});
  if (!bits.test(m.zero()))
    return VerdictReport::fail_with({NamedValue::text("law", "missing zero"),
                                     NamedValue::elem("zero", m.zero())});
  VerdictReport out = VerdictReport::pass();
  bool failed = false;
  bits.for_each([&](int a) {
    if (failed) return;
    if (!bits.test(m.neg(a))) {
      out = VerdictReport::fail_with(
          {NamedValue::text("law", "negation"), NamedValue::elem("m", a)});
      failed = true;
      return;
    }
    bits.for_each([&](int b) {
      if (failed) return;
      if (!bits.test(m.add(a, b))) {
        out = VerdictReport::fail_with({NamedValue::text("law", "addition"),
                                        NamedValue::elem("m", a),
                                        NamedValue::elem("m'", b)});
        failed = true;
      }
    });
    if (failed) return;
    for (int r = 0; r < m.ring_order() && !failed; ++r)
      if (!bits.test(m.act(a, r))) {
        out = VerdictReport::fail_with({NamedValue::text("law", "ring action"),
                                        NamedValue::elem("m", a),
                                        NamedValue::elem("r", r)});
        failed = true;
      }
  });
  return out;
}

QuotientModule quotient_module(const ModulePtr& m, const Bitset& submodule_bits) {
  VerdictReport v = validate_submodule_bits(*m, submodule_bits);
  if (!v.holds)
    throw ValidationError("quotient_module: subset is not a submodule of " +
                          m->label());

  const int n = m->order();
  std::vector<Elem> rep(std::size_t(n));
  for (int a = 0; a < n; ++a) {
    int best = a;
    submodule_bits.for_each([&](int i) { best = std::min(best, int(m->add(a, i))); });
    rep[std::size_t(a)] = Elem(best);
  }
  std::vector<int> id_of(std::size_t(n), -1);
  int next = 0;
  for (int a = 0; a < n; ++a)
    if (int(rep[std::size_t(a)]) == a) id_of[std::size_t(a)] = next++;
  const int order = next;
  std::vector<Elem> proj(std::size_t(n));
  std::vector<Elem> coset_rep(std::size_t(order));
  for (int a = 0; a < n; ++a) {
    proj[std::size_t(a)] = Elem(id_of[rep[std::size_t(a)]]);
    coset_rep[proj[std::size_t(a)]] = rep[std::size_t(a)];
  }

  const int rorder = m->ring_order();
  std::vector<Elem> add(std::size_t(order) * order), neg(order),
      act(std::size_t(order) * rorder);
  for (int a = 0; a < order; ++a) {
    int ra = coset_rep[std::size_t(a)];
    neg[std::size_t(a)] = proj[m->neg(ra)];
    for (int b = 0; b < order; ++b)
      add[std::size_t(a) * order + b] = proj[m->add(ra, coset_rep[std::size_t(b)])];
    for (int r = 0; r < rorder; ++r)
      act[std::size_t(a) * rorder + r] = proj[m->act(ra, r)];
  }
  for (int a = 0; a < n; ++a) {
    int pa = proj[std::size_t(a)];
    for (int b = 0; b < n; ++b)
      if (proj[m->add(a, b)] != add[std::size_t(pa) * order + proj[std::size_t(b)]])
        throw ValidationError("quotient_module: addition not well-defined");
    for (int r = 0; r < rorder; ++r)
      if (proj[m->act(a, r)] != act[std::size_t(pa) * rorder + r])
        throw ValidationError("quotient_module: action not well-defined");
  }

  std::vector<Elem> sub_elems;
  submodule_bits.for_each([&](int i) { sub_elems.push_back(Elem(i)); });
  std::string label = m->label() + "/" + subset_label(sub_elems);
  auto q = std::make_shared<FiniteRightModule>(
      m->ring(), order, std::move(add), proj[m->zero()], std::move(neg),
      std::move(act), label, ModuleKind::Quotient, std::vector<ModulePtr>{m},
      std::move(sub_elems), std::move(coset_rep));
  return QuotientModule{q, m, std::move(proj)};
}

VerdictReport validate_module(const FiniteRightModule& m) {
  const int n = m.order();
  const int rn = m.ring_order();
  const FiniteRing& R = *m.ring();
  auto cex = [&](const char* law, std::vector<NamedValue> vals) {
    vals.insert(vals.begin(), NamedValue::text("law", law));
    return VerdictReport::fail_with(std::move(vals));
  };
  for (int a = 0; a < n; ++a) {
    if (m.add(a, m.zero()) != a)
      return cex("additive identity", {NamedValue::elem("m", a)});
    if (m.add(a, m.neg(a)) != m.zero())
      return cex("additive inverse", {NamedValue::elem("m", a)});
    if (m.act(a, R.one()) != a)
      return cex("unital action", {NamedValue::elem("m", a)});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (m.add(a, b) != m.add(b, a))
        return cex("additive commutativity",
                   {NamedValue::elem("m", a), NamedValue::elem("m'", b)});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
          return cex("additive associativity",
                     {NamedValue::elem("m", a), NamedValue::elem("m'", b),
                      NamedValue::elem("m''", c)});
  for (int a = 0; a < n; ++a)
    for (int r = 0; r < rn; ++r) {
      for (int s = 0; s < rn; ++s) {
        if (m.act(a, R.mul(r, s)) != m.act(m.act(a, r), s))
          return cex("action associativity",
                     {NamedValue::elem("m", a), NamedValue::elem("r", r),
                      NamedValue::elem("r'", s)});
        if (m.act(a, R.add(r, s)) != m.add(m.act(a, r), m.act(a, s)))
          return cex("action distributes over ring addition",
                     {NamedValue::elem("m", a), NamedValue::elem("r", r),
                      NamedValue::elem("r'", s)});
      }
      for (int b = 0; b < n; ++b)
        if (m.act(m.add(a, b), r) != m.add(m.act(a, r), m.act(b, r)))
          return cex("action distributes over module addition",
                     {NamedValue::elem("m", a), NamedValue::elem("m'", b),
                      NamedValue::elem("r", r)});
    }
  return VerdictReport::pass();
}

std::string render_module_element(const FiniteRightModule& m, int e) {
  switch (m.kind()) {
    case ModuleKind::Regular:
      return render_ring_element(*m.ring(), e);
    case ModuleKind::Product: {
      auto [a, b] = unpair_index(m.parents()[1]->order(), e);
      return "(" + render_module_element(*m.parents()[0], a) + "," +
             render_module_element(*m.parents()[1], b) + ")";
    }
    case ModuleKind::Quotient:
      return render_module_element(*m.parents()[0], m.coset_rep()[std::size_t(e)]) +
             "+L";
    case ModuleKind::Explicit:
      break;
  }
  return std::to_string(e);
}

}  // namespace sprime
