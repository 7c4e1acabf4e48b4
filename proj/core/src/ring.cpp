#include "sprime/ring.hpp"

#include <algorithm>
#include <cstdint>

#include "sprime/errors.hpp"

namespace sprime {

namespace {

void check_table(const std::vector<Elem>& t, std::size_t expected, int order,
                 const char* what, const std::string& label) {
  if (t.size() != expected)
    throw ValidationError(label + ": " + what + " table has wrong size");
  for (Elem e : t)
    if (int(e) >= order)
      throw ValidationError(label + ": " + what + " table entry out of range");
}

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

FiniteRing::FiniteRing(int order, std::vector<Elem> add, std::vector<Elem> mul,
                       Elem zero, Elem one, std::vector<Elem> neg, std::string label,
                       RingKind kind, int param, std::vector<RingPtr> parents,
                       std::vector<Elem> quotient_ideal, std::vector<Elem> coset_rep)
    : order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(std::move(neg)),
      zero_(zero),
      one_(one),
      label_(std::move(label)),
      kind_(kind),
      param_(param),
      parents_(std::move(parents)),
      quotient_ideal_(std::move(quotient_ideal)),
      coset_rep_(std::move(coset_rep)) {
  if (order_ <= 0) throw ValidationError(label_ + ": order must be positive");
  check_table(add_, std::size_t(order_) * order_, order_, "add", label_);
  check_table(mul_, std::size_t(order_) * order_, order_, "mul", label_);
  check_table(neg_, std::size_t(order_), order_, "neg", label_);
  if (int(zero_) >= order_ || int(one_) >= order_)
    throw ValidationError(label_ + ": zero/one out of range");
}

RingPtr make_zmod(int n) {
  if (n <= 0) throw ValidationError("make_zmod: n must be >= 1");
  std::vector<Elem> add(std::size_t(n) * n), mul(std::size_t(n) * n), neg(n);
  for (int a = 0; a < n; ++a) {
    neg[a] = Elem((n - a) % n);
    for (int b = 0; b < n; ++b) {
      add[std::size_t(a) * n + b] = Elem((a + b) % n);
      mul[std::size_t(a) * n + b] = Elem((a * b) % n);
    }
  }
  return std::make_shared<FiniteRing>(n, std::move(add), std::move(mul), Elem(0),
                                      Elem(1 % n), std::move(neg),
                                      "Z" + std::to_string(n), RingKind::Zmod, n);
}

namespace {

// Shared builder for full and upper-triangular matrix rings. `positions`
// lists the stored (i, j) entries in row-major order; missing entries are
// zero and must stay zero under multiplication (true for upper-triangular).
RingPtr build_matrix_ring(const RingPtr& base, int k,
                          const std::vector<std::pair<int, int>>& positions,
                          const std::string& label, RingKind kind, const Caps& caps) {
  const int o = base->order();
  std::int64_t order64 = 1;
  for (std::size_t p = 0; p < positions.size(); ++p) {
    order64 *= o;
    if (order64 > caps.ring_order_cap)
      throw CapExceeded(label + ": order exceeds ring cap " +
                        std::to_string(caps.ring_order_cap));
  }
  const int order = int(order64);

  std::vector<int> pos_of(std::size_t(k) * k, -1);
  for (std::size_t p = 0; p < positions.size(); ++p)
    pos_of[std::size_t(positions[p].first) * k + positions[p].second] = int(p);

  auto digits = [&](int e, std::vector<int>& d) {
    for (std::size_t p = 0; p < positions.size(); ++p) {
      d[p] = e % o;
      e /= o;
    }
  };
  auto undigits = [&](const std::vector<int>& d) {
    int e = 0;
    for (std::size_t p = positions.size(); p-- > 0;) e = e * o + d[p];
    return e;
  };
  auto entry = [&](const std::vector<int>& d, int i, int j) {
    int p = pos_of[std::size_t(i) * k + j];
    return p < 0 ? int(base->zero()) : d[std::size_t(p)];
  };

  std::vector<Elem> add(std::size_t(order) * order), mul(std::size_t(order) * order),
      neg(order);
  std::vector<int> da(positions.size()), db(positions.size()), dc(positions.size());
  for (int a = 0; a < order; ++a) {
    digits(a, da);
    for (std::size_t p = 0; p < positions.size(); ++p)
      dc[p] = base->neg(da[p]);
    neg[std::size_t(a)] = Elem(undigits(dc));
    for (int b = 0; b < order; ++b) {
      digits(b, db);
      for (std::size_t p = 0; p < positions.size(); ++p)
        dc[p] = base->add(da[p], db[p]);
      add[std::size_t(a) * order + b] = Elem(undigits(dc));
      for (std::size_t p = 0; p < positions.size(); ++p) {
        auto [i, j] = positions[p];
        int s = base->zero();
        for (int m = 0; m < k; ++m)
          s = base->add(s, base->mul(entry(da, i, m), entry(db, m, j)));
        dc[p] = s;
      }
      mul[std::size_t(a) * order + b] = Elem(undigits(dc));
    }
  }

  std::vector<int> done(positions.size());
  for (std::size_t p = 0; p < positions.size(); ++p)
    done[p] = positions[p].first == positions[p].second ? base->one() : base->zero();
  Elem one = Elem(undigits(done));

  return std::make_shared<FiniteRing>(order, std::move(add), std::move(mul), Elem(0),
                                      one, std::move(neg), label, kind, k,
                                      std::vector<RingPtr>{base});
}

}  // namespace

RingPtr make_matrix_ring(const RingPtr& base, int k, const Caps& caps) {
  if (k <= 0) throw ValidationError("make_matrix_ring: k must be >= 1");
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) positions.emplace_back(i, j);
  return build_matrix_ring(base, k, positions,
                           "M" + std::to_string(k) + "(" + base->label() + ")",
                           RingKind::Matrix, caps);
}

RingPtr make_upper_triangular(const RingPtr& base, int k, const Caps& caps) {
  if (k <= 0) throw ValidationError("make_upper_triangular: k must be >= 1");
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) positions.emplace_back(i, j);
  return build_matrix_ring(base, k, positions,
                           "T" + std::to_string(k) + "(" + base->label() + ")",
                           RingKind::UpperTriangular, caps);
}

RingPtr product_ring(const RingPtr& r1, const RingPtr& r2, const Caps& caps) {
  const int o1 = r1->order(), o2 = r2->order();
  const std::int64_t order64 = std::int64_t(o1) * o2;
  if (order64 > caps.ring_order_cap)
    throw CapExceeded("product_ring: order exceeds ring cap " +
                      std::to_string(caps.ring_order_cap));
  const int order = int(order64);
  std::vector<Elem> add(std::size_t(order) * order), mul(std::size_t(order) * order),
      neg(order);
  for (int a = 0; a < order; ++a) {
    auto [a1, a2] = unpair_index(o2, a);
    neg[std::size_t(a)] = Elem(pair_index(o2, r1->neg(a1), r2->neg(a2)));
    for (int b = 0; b < order; ++b) {
      auto [b1, b2] = unpair_index(o2, b);
      add[std::size_t(a) * order + b] =
          Elem(pair_index(o2, r1->add(a1, b1), r2->add(a2, b2)));
      mul[std::size_t(a) * order + b] =
          Elem(pair_index(o2, r1->mul(a1, b1), r2->mul(a2, b2)));
    }
  }
  Elem zero = Elem(pair_index(o2, r1->zero(), r2->zero()));
  Elem one = Elem(pair_index(o2, r1->one(), r2->one()));
  return std::make_shared<FiniteRing>(order, std::move(add), std::move(mul), zero, one,
                                      std::move(neg), r1->label() + "x" + r2->label(),
                                      RingKind::Product, 0,
                                      std::vector<RingPtr>{r1, r2});
}

VerdictReport validate_ideal_bits(const FiniteRing& r, const Bitset& bits,
                                  bool two_sided) {
  if (bits.width() != r.order())
    return VerdictReport::fail_with({NamedValue::text("law", "subset width mismatch")});
  if (!bits.test(r.zero()))
    return VerdictReport::fail_with({NamedValue::text("law", "missing zero"),
                                     NamedValue::elem("zero", r.zero())});
  VerdictReport out = VerdictReport::pass();
  bool failed = false;
  bits.for_each([&](int a) {
    if (failed) return;
    if (!bits.test(r.neg(a))) {
      out = VerdictReport::fail_with(
          {NamedValue::text("law", "negation"), NamedValue::elem("a", a)});
      failed = true;
      return;
    }
    bits.for_each([&](int b) {
      if (failed) return;
      if (!bits.test(r.add(a, b))) {
        out = VerdictReport::fail_with({NamedValue::text("law", "addition"),
                                        NamedValue::elem("a", a),
                                        NamedValue::elem("b", b)});
        failed = true;
      }
    });
    if (failed) return;
    for (int x = 0; x < r.order() && !failed; ++x) {
      if (!bits.test(r.mul(a, x))) {
        out = VerdictReport::fail_with({NamedValue::text("law", "right multiplication"),
                                        NamedValue::elem("a", a),
                                        NamedValue::elem("r", x)});
        failed = true;
      } else if (two_sided && !bits.test(r.mul(x, a))) {
        out = VerdictReport::fail_with({NamedValue::text("law", "left multiplication"),
                                        NamedValue::elem("a", a),
                                        NamedValue::elem("r", x)});
        failed = true;
      }
    }
  });
  return out;
}

QuotientRing quotient_ring(const RingPtr& r, const Bitset& ideal_bits) {
  VerdictReport v = validate_ideal_bits(*r, ideal_bits, /*two_sided=*/true);
  if (!v.holds)
    throw ValidationError("quotient_ring: subset is not a two-sided ideal of " +
                          r->label());
  if (ideal_bits.count() == r->order())
    throw ValidationError("quotient_ring: improper ideal (equals the whole ring)");

  const int n = r->order();
  std::vector<Elem> rep(std::size_t(n));
  for (int a = 0; a < n; ++a) {
    int best = a;
    ideal_bits.for_each([&](int i) { best = std::min(best, int(r->add(a, i))); });
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

  std::vector<Elem> add(std::size_t(order) * order), mul(std::size_t(order) * order),
      neg(order);
  for (int a = 0; a < order; ++a) {
    int ra = coset_rep[std::size_t(a)];
    neg[std::size_t(a)] = proj[r->neg(ra)];
    for (int b = 0; b < order; ++b) {
      int rb = coset_rep[std::size_t(b)];
      add[std::size_t(a) * order + b] = proj[r->add(ra, rb)];
      mul[std::size_t(a) * order + b] = proj[r->mul(ra, rb)];
    }
  }
  // Well-definedness: the coset tables must agree with the base operation on
  // every pair of representatives, not just the canonical ones.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int pa = proj[std::size_t(a)], pb = proj[std::size_t(b)];
      if (proj[r->add(a, b)] != add[std::size_t(pa) * order + pb])
        throw ValidationError("quotient_ring: addition not well-defined");
      if (proj[r->mul(a, b)] != mul[std::size_t(pa) * order + pb])
        throw ValidationError("quotient_ring: multiplication not well-defined");
    }

  std::vector<Elem> ideal_elems;
  ideal_bits.for_each([&](int i) { ideal_elems.push_back(Elem(i)); });
  std::string label = r->label() + "/" + subset_label(ideal_elems);
  auto ring = std::make_shared<FiniteRing>(
      order, std::move(add), std::move(mul), proj[r->zero()], proj[r->one()],
      std::move(neg), label, RingKind::Quotient, 0, std::vector<RingPtr>{r},
      std::move(ideal_elems), std::move(coset_rep));
  return QuotientRing{ring, r, std::move(proj)};
}

VerdictReport validate_ring(const FiniteRing& r) {
  const int n = r.order();
  auto cex3 = [&](const char* law, int a, int b, int c, int lhs, int rhs) {
    return VerdictReport::fail_with(
        {NamedValue::text("law", law), NamedValue::elem("a", a, render_ring_element(r, a)),
         NamedValue::elem("b", b, render_ring_element(r, b)),
         NamedValue::elem("c", c, render_ring_element(r, c)), NamedValue::elem("lhs", lhs),
         NamedValue::elem("rhs", rhs)});
  };
  for (int a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a)
      return cex3("additive identity", a, r.zero(), 0, r.add(a, r.zero()), a);
    if (r.add(a, r.neg(a)) != r.zero())
      return cex3("additive inverse", a, r.neg(a), 0, r.add(a, r.neg(a)), r.zero());
    if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a)
      return cex3("multiplicative identity", a, r.one(), 0, r.mul(r.one(), a), a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a))
        return cex3("additive commutativity", a, b, 0, r.add(a, b), r.add(b, a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          return cex3("additive associativity", a, b, c, r.add(r.add(a, b), c),
                      r.add(a, r.add(b, c)));
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          return cex3("multiplicative associativity", a, b, c, r.mul(r.mul(a, b), c),
                      r.mul(a, r.mul(b, c)));
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          return cex3("left distributivity", a, b, c, r.mul(a, r.add(b, c)),
                      r.add(r.mul(a, b), r.mul(a, c)));
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
          return cex3("right distributivity", a, b, c, r.mul(r.add(a, b), c),
                      r.add(r.mul(a, c), r.mul(b, c)));
      }
  return VerdictReport::pass();
}

Bitset unit_elements(const FiniteRing& r) {
  Bitset units(r.order());
  for (int u = 0; u < r.order(); ++u)
    for (int v = 0; v < r.order(); ++v)
      if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) {
        units.set(u);
        break;
      }
  return units;
}

namespace {

std::string render_matrix(const FiniteRing& r, int e, bool upper_triangular) {
  const FiniteRing& base = *r.parents()[0];
  const int o = base.order();
  const int k = r.param();
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < k; ++i)
    for (int j = upper_triangular ? i : 0; j < k; ++j) positions.emplace_back(i, j);
  std::vector<int> digit(std::size_t(k) * k, base.zero());
  for (auto [i, j] : positions) {
    digit[std::size_t(i) * k + j] = e % o;
    e /= o;
  }
  std::string s = "[";
  for (int i = 0; i < k; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < k; ++j) {
      if (j) s += ",";
      s += render_ring_element(base, digit[std::size_t(i) * k + j]);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

std::string render_ring_element(const FiniteRing& r, int e) {
  switch (r.kind()) {
    case RingKind::Matrix:
      return render_matrix(r, e, false);
    case RingKind::UpperTriangular:
      return render_matrix(r, e, true);
    case RingKind::Product: {
      auto [a, b] = unpair_index(r.parents()[1]->order(), e);
      return "(" + render_ring_element(*r.parents()[0], a) + "," +
             render_ring_element(*r.parents()[1], b) + ")";
    }
    case RingKind::Quotient:
      return render_ring_element(*r.parents()[0], r.coset_rep()[std::size_t(e)]) + "+I";
    case RingKind::Zmod:
    case RingKind::Explicit:
      break;
  }
  return std::to_string(e);
}

}  // namespace sprime
