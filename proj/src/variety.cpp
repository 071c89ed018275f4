#include "zlab/variety.hpp"

namespace zlab {

VarietySpec intersect(const VarietySpec& a, const VarietySpec& b,
                      std::string name) {
  VarietySpec out;
  out.name = name.empty() ? a.name + "∩" + b.name : std::move(name);
  out.relative_to_I = a.relative_to_I || b.relative_to_I;
  out.identities = a.identities;
  for (const Identity& id : b.identities) {
    bool dup = false;
    for (const Identity& have : out.identities)
      if (have == id) { dup = true; break; }
    if (!dup) out.identities.push_back(id);
  }
  return out;
}

SatisfactionReport in_variety(const FiniteGroupoid& g, const VarietySpec& v) {
  if (v.relative_to_I) {
    SatisfactionReport r = is_izroupoid(g);
    if (!r.holds) return r;
  }
  for (const Identity& id : v.identities) {
    SatisfactionReport r = satisfies(g, id);
    if (!r.holds) return r;
  }
  return SatisfactionReport{};
}

}  // namespace zlab
