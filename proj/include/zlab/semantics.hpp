#ifndef ZLAB_SEMANTICS_HPP
#define ZLAB_SEMANTICS_HPP

#include <map>
#include <optional>
#include <string>

#include "zlab/groupoid.hpp"
#include "zlab/term.hpp"

namespace zlab {

// Maps variable names to elements.  std::map keeps variables in
// alphabetical order, which fixes the report format.
using Assignment = std::map<std::string, int>;

// Bottom-up interpretation: 0 is element 0, -> is the Cayley table.
// Throws std::invalid_argument on a variable missing from a.
int eval(const Term& t, const FiniteGroupoid& g, const Assignment& a);

struct Counterexample {
  Assignment assignment;
  int lhs_value = 0;
  int rhs_value = 0;
};

struct SatisfactionReport {
  bool holds = true;
  std::optional<Counterexample> counterexample;
  // For multi-identity checks: rendering of the first failing identity.
  std::optional<std::string> failed_identity;

  explicit operator bool() const { return holds; }
};

// Exhaustive check over all |g|^k assignments (variables in alphabetical
// order, enumerated lexicographically); reports the first failure.
SatisfactionReport satisfies(const FiniteGroupoid& g, const Identity& id);

// "{x=0, y=1}" with variables in alphabetical order; "{}" when empty.
std::string render_assignment(const Assignment& a);

// "fails <identity> at {x=0, ...} (lhs=i, rhs=j)"; "holds" when it holds.
std::string describe_failure(const SatisfactionReport& r);

// The two defining identities of implication zroupoids:
//   (I)  (x -> y) -> z = ((z' -> x) -> (y -> z)')'
//   (I0) 0'' = 0
const Identity& axiom_implication();
const Identity& axiom_zero();

// Checks (I) and (I0); on failure names the failing axiom.
SatisfactionReport is_izroupoid(const FiniteGroupoid& g);

}  // namespace zlab

#endif  // ZLAB_SEMANTICS_HPP
