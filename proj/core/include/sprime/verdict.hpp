#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sprime {

// One named element of a witness or counterexample: an element index, a
// label, or a list of element indices (a subset or generator tuple).
struct NamedValue {
  std::string name;
  std::variant<std::int64_t, std::string, std::vector<int>> value;
  std::string render;  // optional human-readable form, may be empty

  static NamedValue elem(std::string name, std::int64_t v, std::string render = "") {
    return NamedValue{std::move(name), v, std::move(render)};
  }
  static NamedValue text(std::string name, std::string v) {
    return NamedValue{std::move(name), std::move(v), ""};
  }
  static NamedValue elems(std::string name, std::vector<int> v, std::string render = "") {
    return NamedValue{std::move(name), std::move(v), std::move(render)};
  }
};

// Outcome of a predicate or validation check. Witness-bearing predicates
// populate exactly one of witness/counterexample.
struct VerdictReport {
  bool holds = false;
  std::vector<NamedValue> witness;
  std::vector<NamedValue> counterexample;

  static VerdictReport pass() { return VerdictReport{true, {}, {}}; }
  static VerdictReport pass_with(std::vector<NamedValue> w) {
    return VerdictReport{true, std::move(w), {}};
  }
  static VerdictReport fail_with(std::vector<NamedValue> c) {
    return VerdictReport{false, {}, std::move(c)};
  }
};

}  // namespace sprime
