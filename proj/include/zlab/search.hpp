#ifndef ZLAB_SEARCH_HPP
#define ZLAB_SEARCH_HPP

#include <optional>
#include <vector>

#include "zlab/variety.hpp"

namespace zlab {

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest table size enumerate_models will accept.  Defaults to 6; the
// ZLAB_MAX_SIZE environment variable overrides it.
int max_search_size();

struct SearchProblem {
  int size = 1;
  // Conjoin the implication-zroupoid axioms into must_satisfy.
  bool in_I = true;
  std::vector<Identity> must_satisfy;
  // Each listed identity must FAIL under at least one assignment
  // (checked on complete tables only).
  std::vector<Identity> must_fail;
  bool up_to_iso = false;
  // Stop after this many models (selected in depth-first discovery order).
  std::optional<long long> limit;
};

struct SearchStats {
  long long nodes = 0;         // cell assignments tried
  long long tables = 0;        // complete tables reached
  double wall_seconds = 0.0;
};

struct SearchOutcome {
  // Sorted by table order (size, then row-major cells); canonical
  // representatives when up_to_iso was set.
  std::vector<FiniteGroupoid> models;
  // True iff every branch of the space was explored or refuted.
  bool exhausted = true;
  SearchStats stats;
};

// Depth-first backtracking over table cells (column 0 first, then the rest
// in row-major order) with ground-instance propagation: after each cell
// assignment, constraint instances whose value became determined are
// re-checked, and violated branches are pruned.  Output is deterministic
// and independent of the worker count.
SearchOutcome enumerate_models(const SearchProblem& p, int jobs = 1);

long long count_models(int size, const VarietySpec& v, bool up_to_iso,
                       int jobs = 1);

struct SeparationResult {
  // A smallest model in v but not in w (least canonical table among that
  // size), if one exists within max_size.
  std::optional<FiniteGroupoid> model;
  // True iff all sizes up to max_size were fully searched.
  bool exhausted = true;
};

SeparationResult find_separating_model(const VarietySpec& v,
                                       const VarietySpec& w, int max_size,
                                       int jobs = 1);

struct ConditionalCheckResult {
  bool holds = true;
  // Present when holds is false: a model satisfying every hypothesis but
  // violating `violated` at `where`.
  std::optional<FiniteGroupoid> counterexample;
  std::optional<Identity> violated;
  std::optional<Counterexample> where;
  bool exhausted = true;
};

// Verifies that every implication zroupoid of size <= max_size satisfying
// all hypotheses also satisfies all conclusions.
ConditionalCheckResult conditional_identity_check(
    const std::vector<Identity>& hypotheses,
    const std::vector<Identity>& conclusions, int max_size, int jobs = 1);

}  // namespace zlab

#endif  // ZLAB_SEARCH_HPP
