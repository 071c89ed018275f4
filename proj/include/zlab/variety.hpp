#ifndef ZLAB_VARIETY_HPP
#define ZLAB_VARIETY_HPP

#include <string>
#include <vector>

#include "zlab/semantics.hpp"

namespace zlab {

// An equationally defined class of algebras.  When relative_to_I is set,
// membership additionally requires the implication-zroupoid axioms.
struct VarietySpec {
  std::string name;
  std::vector<Identity> identities;
  bool relative_to_I = true;
};

// Intersection: identities of both (name "a∩b" unless given).
VarietySpec intersect(const VarietySpec& a, const VarietySpec& b,
                      std::string name = {});

// Membership test.  Checks the axioms first (when relative to I), then
// each identity in spec order; reports the first failure by rendered
// identity ("(I)" / "(I0)" for the axioms) plus its counterexample.
SatisfactionReport in_variety(const FiniteGroupoid& g, const VarietySpec& v);

}  // namespace zlab

#endif  // ZLAB_VARIETY_HPP
