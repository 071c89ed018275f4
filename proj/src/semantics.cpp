#include "zlab/semantics.hpp"

#include <vector>

namespace zlab {

int eval(const Term& t, const FiniteGroupoid& g, const Assignment& a) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return 0;
    case Term::Kind::Var: {
      auto it = a.find(t.var_name());
      if (it == a.end())
        throw std::invalid_argument("unassigned variable '" + t.var_name() + "'");
      return it->second;
    }
    case Term::Kind::Arrow:
      return g.apply(eval(t.left(), g, a), eval(t.right(), g, a));
  }
  throw std::logic_error("unreachable term kind");
}

SatisfactionReport satisfies(const FiniteGroupoid& g, const Identity& id) {
  const std::set<std::string> var_set = id.variables();
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  const int n = g.size();
  const std::size_t k = vars.size();

  Assignment a;
  for (const std::string& v : vars) a[v] = 0;
  std::vector<int> tuple(k, 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) a[vars[i]] = tuple[i];
    int lv = eval(id.lhs, g, a);
    int rv = eval(id.rhs, g, a);
    if (lv != rv)
      return SatisfactionReport{false, Counterexample{a, lv, rv},
                                render_identity(id)};
    // Advance the rightmost position: lexicographic order over
    // (vars[0], ..., vars[k-1]).
    std::size_t i = k;
    while (i > 0 && tuple[i - 1] == n - 1) tuple[--i] = 0;
    if (i == 0) break;
    ++tuple[i - 1];
  }
  return SatisfactionReport{};
}

std::string render_assignment(const Assignment& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : a) {
    if (!first) out += ", ";
    first = false;
    out += name + "=" + std::to_string(value);
  }
  out += "}";
  return out;
}

std::string describe_failure(const SatisfactionReport& r) {
  if (r.holds) return "holds";
  std::string out = "fails";
  if (r.failed_identity) out += " " + *r.failed_identity;
  if (r.counterexample) {
    out += " at " + render_assignment(r.counterexample->assignment);
    out += " (lhs=" + std::to_string(r.counterexample->lhs_value) +
           ", rhs=" + std::to_string(r.counterexample->rhs_value) + ")";
  }
  return out;
}

const Identity& axiom_implication() {
  static const Identity id =
      parse_identity("(x -> y) -> z = ((z' -> x) -> (y -> z)')'");
  return id;
}

const Identity& axiom_zero() {
  static const Identity id = parse_identity("0'' = 0");
  return id;
}

SatisfactionReport is_izroupoid(const FiniteGroupoid& g) {
  SatisfactionReport r = satisfies(g, axiom_implication());
  if (!r.holds) {
    r.failed_identity = "(I)";
    return r;
  }
  r = satisfies(g, axiom_zero());
  if (!r.holds) r.failed_identity = "(I0)";
  return r;
}

}  // namespace zlab
