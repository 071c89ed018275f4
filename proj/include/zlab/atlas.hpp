#ifndef ZLAB_ATLAS_HPP
#define ZLAB_ATLAS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zlab/search.hpp"
#include "zlab/variety.hpp"

namespace zlab {

// ---------------------------------------------------------------------------
// Variety catalog
// ---------------------------------------------------------------------------

// Named varieties, in a fixed presentation order (used by reports):
//   T    trivial variety (x = y)
//   I    implication zroupoids (the axioms only)
//   I10  x' = x
//   I20  x'' = x
//   MC   commutative meet: x & y = y & x
//   SL   x' = x together with x -> y = y -> x
//   DM   (x -> y) -> x = x
//   BA   DM plus x -> x = 0'
//   S    I20 ∩ MC
//   A1..A14   the fourteen product-reassociation identities (sigma_identities)
//   S1..S14   Si = Ai ∩ S
//   E1   (x -> y)' = x -> (0 -> y)
//   E2   x' -> y = x -> y'
//   E3   0 -> (x -> y) = 0 -> (y -> x)
struct VarietyCatalog {
  std::vector<std::string> order;
  std::map<std::string, VarietySpec> entries;

  bool has(const std::string& name) const { return entries.count(name) != 0; }
  const VarietySpec& at(const std::string& name) const;
};

const VarietyCatalog& builtin_catalog();

// Lookup helper; throws std::invalid_argument on an unknown name.
const VarietySpec& variety(const std::string& name);

// The six instances of the permuted-product schema
//   x -> (y -> z) = (p(x) -> p(y)) -> p(z),
// one per permutation p of {x, y, z}, in lexicographic order of
// (p(x), p(y), p(z)).
const std::vector<Identity>& e4_instances();

// ---------------------------------------------------------------------------
// Embedded witness tables
// ---------------------------------------------------------------------------

// A concrete Cayley table together with the membership facts it is on
// record for.  Every table is an implication zroupoid.
struct WitnessRecord {
  std::string id;
  FiniteGroupoid table;
  std::vector<std::string> in_varieties;
  std::vector<std::string> not_in;
  std::string note;
};

const std::vector<WitnessRecord>& builtin_witnesses();

// Lookup helper; throws std::invalid_argument on an unknown id.
const WitnessRecord& witness(const std::string& id);

struct WitnessCheck {
  bool ok = true;
  // First failure, e.g. "claimed member of A14 but fails ... at ...".
  std::string detail;
};

// Re-verifies every recorded membership and non-membership of the table.
WitnessCheck verify_witness(const WitnessRecord& w);

// ---------------------------------------------------------------------------
// Claim ledger
// ---------------------------------------------------------------------------

enum class ClaimKind { Distinctness, Inclusion, Equality, Lemma };
enum class ClaimStatus { Pass, Fail, InsufficientBudget };

// One independently checkable statement about the catalog varieties.
//
//   Distinctness: `witness_id` names an embedded table in `left` \ `right`;
//     when evidence_size > 0 a search re-derives some separating model of
//     size <= evidence_size (capped by the verification budget).
//   Inclusion:    left ⊆ right; a separating-model search up to the budget
//     must come back empty.
//   Equality:     left = right; separating-model searches in both
//     directions must come back empty.
//   Lemma:        every implication zroupoid (up to the budget) satisfying
//     all `hypotheses` satisfies all `conclusions`.
struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::Lemma;
  std::string statement;
  std::string left, right;
  std::string witness_id;
  // Model size at which the claim's evidence is considered complete.
  // Distinctness claims with evidence_size 0 rest on the witness alone.
  int evidence_size = 3;
  // Uses the deep budget (reserved for searches that need 4-element models).
  bool deep = false;
  std::vector<Identity> hypotheses, conclusions;
};

struct ClaimResult {
  ClaimStatus status = ClaimStatus::Pass;
  std::string detail;
  // Populated on Fail where a concrete refutation exists.
  std::optional<FiniteGroupoid> counterexample;
  std::optional<std::string> counterexample_detail;
  // Largest model size actually searched (0 for witness-only checks).
  int searched_size = 0;
};

struct VerifiedClaim {
  Claim claim;
  ClaimResult result;
};

struct LedgerOptions {
  int budget = 3;       // exhaustive-search cap for most claims
  int deep_budget = 4;  // cap for the deep separation searches
  int jobs = 1;
};

// The full built-in ledger, in a fixed order.
const std::vector<Claim>& builtin_claims();

// Verifies one claim / every built-in claim under the given budgets.
ClaimResult verify_claim(const Claim& c, const LedgerOptions& opts = {});
std::vector<VerifiedClaim> verify_claims(const LedgerOptions& opts = {});

// ---------------------------------------------------------------------------
// Poset construction
// ---------------------------------------------------------------------------

// Status of the ordered containment question "V ⊆ W?".
enum class PairStatus { SubsetConsistent, NotSubset, Unknown };

// Evidence for a NotSubset verdict: a table in V \ W, found either by the
// exhaustive search ("search") or among the embedded witnesses (their id).
struct PairEvidence {
  std::string source;
  FiniteGroupoid table;
};

struct PosetEdge {
  std::string lower, upper;
  PairEvidence strictness;  // a table in `upper` \ `lower`
};

struct PosetDiscrepancy {
  std::string lower, upper;  // expected lower ⊆ upper, but refuted
  std::string detail;
  std::optional<FiniteGroupoid> table;
};

// A computed relationship that no ledger claim asserts either way.
struct PosetFinding {
  std::string a, b;
  std::string kind;  // "strictly-below" (a below b) or "incomparable"
  std::string detail;
};

struct PosetReport {
  std::vector<std::string> nodes;
  int budget = 3;
  // relation[i][j]: status of nodes[i] ⊆ nodes[j] (diagonal: consistent).
  std::vector<std::vector<PairStatus>> relation;
  // evidence[i][j]: present iff relation[i][j] == NotSubset.
  std::vector<std::vector<std::optional<PairEvidence>>> evidence;
  // Transitive reduction of the strict order "consistent below and
  // witnessed distinct"; each edge carries its strictness evidence.
  std::vector<PosetEdge> hasse_edges;
  std::vector<PosetDiscrepancy> discrepancies;
  std::vector<PosetFinding> discovered;
};

// The twelve nodes of the main subvariety diagram.
const std::vector<std::string>& main_poset_nodes();
// The five nodes of the S-restricted diagram.
const std::vector<std::string>& s_poset_nodes();

// Computes the containment relation over `nodes` from (a) every
// isomorphism-class representative of size <= budget and (b) the embedded
// witness tables, then reduces the strict order to its Hasse diagram.
// Throws std::invalid_argument on an unknown node name.
PosetReport build_poset(const std::vector<std::string>& nodes, int budget,
                        int jobs = 1);

}  // namespace zlab

#endif  // ZLAB_ATLAS_HPP
