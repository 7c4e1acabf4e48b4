#include "sprime/hom.hpp"

#include <algorithm>

#include "sprime/errors.hpp"

namespace sprime {

VerdictReport validate_hom(const ModuleHom& f) {
  if (f.source->ring() != f.target->ring() &&
      !f.source->ring()->same_tables(*f.target->ring()))
    throw PreconditionError("validate_hom: source and target rings differ");
  if (f.map.size() != std::size_t(f.source->order()))
    return VerdictReport::fail_with({NamedValue::text("law", "map table size")});
  for (Elem e : f.map)
    if (int(e) >= f.target->order())
      return VerdictReport::fail_with({NamedValue::text("law", "map range")});
  const FiniteRightModule& A = *f.source;
  const FiniteRightModule& B = *f.target;
  if (f(A.zero()) != B.zero())
    return VerdictReport::fail_with({NamedValue::text("law", "f(0) = 0")});
  for (int a = 0; a < A.order(); ++a)
    for (int b = 0; b < A.order(); ++b)
      if (f(A.add(a, b)) != B.add(f(a), f(b)))
        return VerdictReport::fail_with({NamedValue::text("law", "additivity"),
                                         NamedValue::elem("m", a),
                                         NamedValue::elem("m'", b)});
  for (int a = 0; a < A.order(); ++a)
    for (int r = 0; r < A.ring_order(); ++r)
      if (f(A.act(a, r)) != B.act(f(a), r))
        return VerdictReport::fail_with({NamedValue::text("law", "action"),
                                         NamedValue::elem("m", a),
                                         NamedValue::elem("r", r)});
  return VerdictReport::pass();
}

Submodule kernel(const ModuleHom& f) {
  Bitset bits(f.source->order());
  for (int x = 0; x < f.source->order(); ++x)
    if (f(x) == f.target->zero()) bits.set(x);
  return Submodule{f.source, bits};
}

bool is_epimorphism(const ModuleHom& f) {
  Bitset seen(f.target->order());
  for (int x = 0; x < f.source->order(); ++x) seen.set(f(x));
  return seen.count() == f.target->order();
}

Bitset image_bits(const ModuleHom& f, const Bitset& bits) {
  Bitset out(f.target->order());
  bits.for_each([&](int x) { out.set(f(x)); });
  return out;
}

Submodule image_submodule(const ModuleHom& f, const Submodule& p) {
  Bitset out = image_bits(f, p.bits);
  if (!validate_submodule_bits(*f.target, out).holds)
    throw ValidationError("image_submodule: image is not a submodule of the target");
  return Submodule{f.target, out};
}

Submodule preimage_submodule(const ModuleHom& f, const Submodule& p) {
  Bitset out(f.source->order());
  for (int x = 0; x < f.source->order(); ++x)
    if (p.bits.test(f(x))) out.set(x);
#ifndef NDEBUG
  if (!validate_submodule_bits(*f.source, out).holds)
    throw ValidationError("preimage_submodule: preimage failed closure check");
#endif
  return Submodule{f.source, out};
}

Projection canonical_projection(const ModulePtr& m, const Bitset& submodule_bits) {
  QuotientModule q = quotient_module(m, submodule_bits);
  ModuleHom hom{m, q.module, q.projection};
  return Projection{std::move(hom), q.module};
}

Materialized materialize_submodule(const Submodule& n) {
  const FiniteRightModule& M = *n.module;
  if (!validate_submodule_bits(M, n.bits).holds)
    throw ValidationError("materialize_submodule: subset is not a submodule");
  std::vector<Elem> to_parent;
  std::vector<int> to_local(std::size_t(M.order()), -1);
  n.bits.for_each([&](int x) {
    to_local[std::size_t(x)] = int(to_parent.size());
    to_parent.push_back(Elem(x));
  });
  const int order = int(to_parent.size());
  const int rorder = M.ring_order();
  std::vector<Elem> add(std::size_t(order) * order), neg(order),
      act(std::size_t(order) * rorder);
  for (int a = 0; a < order; ++a) {
    int pa = to_parent[std::size_t(a)];
    neg[std::size_t(a)] = Elem(to_local[M.neg(pa)]);
    for (int b = 0; b < order; ++b)
      add[std::size_t(a) * order + b] =
          Elem(to_local[M.add(pa, to_parent[std::size_t(b)])]);
    for (int r = 0; r < rorder; ++r)
      act[std::size_t(a) * rorder + r] = Elem(to_local[M.act(pa, r)]);
  }
  auto sub = std::make_shared<FiniteRightModule>(
      M.ring(), order, std::move(add), Elem(to_local[M.zero()]), std::move(neg),
      std::move(act), "sub" + n.bits.to_string() + "of" + M.label(),
      ModuleKind::Explicit);
  ModuleHom incl{sub, n.module, to_parent};
  return Materialized{sub, to_parent, std::move(incl)};
}

}  // namespace sprime
