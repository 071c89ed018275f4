#include "zlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace zlab {

int max_search_size() {
  if (const char* env = std::getenv("ZLAB_MAX_SIZE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 255) return static_cast<int>(v);
  }
  return 6;
}

namespace {

constexpr int kMaxVars = 8;

struct Op {
  enum Kind : std::uint8_t { PushVar, PushZero, Apply };
  Kind kind;
  std::uint8_t arg = 0;  // variable slot for PushVar
};

struct CompiledIdentity {
  std::vector<Op> lhs, rhs;
  int nvars = 0;
};

void compile_side(const Term& t, const std::vector<std::string>& vars,
                  std::vector<Op>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      out.push_back({Op::PushZero});
      return;
    case Term::Kind::Var: {
      auto it = std::find(vars.begin(), vars.end(), t.var_name());
      out.push_back({Op::PushVar,
                     static_cast<std::uint8_t>(it - vars.begin())});
      return;
    }
    case Term::Kind::Arrow:
      compile_side(t.left(), vars, out);
      compile_side(t.right(), vars, out);
      out.push_back({Op::Apply});
      return;
  }
}

CompiledIdentity compile_identity(const Identity& id) {
  const std::set<std::string> var_set = id.variables();
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  if (vars.size() > kMaxVars)
    throw std::invalid_argument("identity has too many variables");
  CompiledIdentity ci;
  ci.nvars = static_cast<int>(vars.size());
  compile_side(id.lhs, vars, ci.lhs);
  compile_side(id.rhs, vars, ci.rhs);
  return ci;
}

// One ground instance: an identity with concrete element values for its
// variables.
struct Instance {
  std::uint16_t ident;
  std::uint8_t vals[kMaxVars];
};

// Evaluates one side over a possibly partial table (-1 cells unset).
// Returns the value, or -1 as soon as an unset cell is read (every read
// feeds the result, so one unknown makes the whole side unknown).
int eval_side(const std::vector<Op>& ops, const std::uint8_t* vals,
              const std::int8_t* table, int n) {
  int stack[64];
  int sp = 0;
  for (const Op& op : ops) {
    switch (op.kind) {
      case Op::PushVar:
        stack[sp++] = vals[op.arg];
        break;
      case Op::PushZero:
        stack[sp++] = 0;
        break;
      case Op::Apply: {
        int b = stack[--sp];
        int v = table[stack[sp - 1] * n + b];
        if (v < 0) return -1;
        stack[sp - 1] = v;
        break;
      }
    }
  }
  return stack[0];
}

enum class InstanceState { Holds, Violated, Blocked };

InstanceState check_instance(const CompiledIdentity& ci, const Instance& inst,
                             const std::int8_t* table, int n) {
  int l = eval_side(ci.lhs, inst.vals, table, n);
  if (l < 0) return InstanceState::Blocked;
  int r = eval_side(ci.rhs, inst.vals, table, n);
  if (r < 0) return InstanceState::Blocked;
  return l == r ? InstanceState::Holds : InstanceState::Violated;
}

// Does the (complete) table violate the identity under some assignment?
bool fails_somewhere(const CompiledIdentity& ci, const std::int8_t* table,
                     int n) {
  Instance inst{};
  int k = ci.nvars;
  for (int i = 0; i < k; ++i) inst.vals[i] = 0;
  while (true) {
    if (eval_side(ci.lhs, inst.vals, table, n) !=
        eval_side(ci.rhs, inst.vals, table, n))
      return true;
    int i = k;
    while (i > 0 && inst.vals[i - 1] == n - 1) inst.vals[--i] = 0;
    if (i == 0) return false;
    ++inst.vals[i - 1];
  }
}

// The shared, immutable part of a search.
struct Compiled {
  int n = 1;
  int ncells = 1;
  std::vector<int> cell_order;  // depth -> cell index
  std::vector<CompiledIdentity> sat;
  std::vector<Instance> instances;
  std::vector<CompiledIdentity> fail;
  bool up_to_iso = false;
  std::optional<long long> limit;
};

Compiled compile_problem(const SearchProblem& p) {
  Compiled c;
  c.n = p.size;
  c.ncells = p.size * p.size;
  c.up_to_iso = p.up_to_iso;
  c.limit = p.limit;

  // Column 0 first (primes become decidable early), then the remaining
  // cells row-major.
  for (int i = 0; i < c.n; ++i) c.cell_order.push_back(i * c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 1; j < c.n; ++j) c.cell_order.push_back(i * c.n + j);

  std::vector<Identity> sat_ids;
  if (p.in_I) {
    sat_ids.push_back(axiom_implication());
    sat_ids.push_back(axiom_zero());
  }
  sat_ids.insert(sat_ids.end(), p.must_satisfy.begin(), p.must_satisfy.end());

  // Reject contradictory problems.  Identities over x, y, z are compared
  // up to variable renaming and side swap; others structurally.
  static const std::set<std::string> xyz = {"x", "y", "z"};
  auto same_identity = [](const Identity& a, const Identity& b) {
    if (a == b) return true;
    auto in_xyz = [](const Identity& id) {
      for (const std::string& v : id.variables())
        if (!xyz.contains(v)) return false;
      return true;
    };
    if (in_xyz(a) && in_xyz(b))
      return canonical_identity(a) == canonical_identity(b);
    return false;
  };
  for (const Identity& s : sat_ids)
    for (const Identity& f : p.must_fail)
      if (same_identity(s, f))
        throw std::invalid_argument(
            "identity appears in both must_satisfy and must_fail: " +
            render_identity(f));

  for (const Identity& id : sat_ids) c.sat.push_back(compile_identity(id));
  for (const Identity& id : p.must_fail) c.fail.push_back(compile_identity(id));

  for (std::size_t ii = 0; ii < c.sat.size(); ++ii) {
    int k = c.sat[ii].nvars;
    Instance inst{};
    inst.ident = static_cast<std::uint16_t>(ii);
    for (int i = 0; i < k; ++i) inst.vals[i] = 0;
    while (true) {
      c.instances.push_back(inst);
      int i = k;
      while (i > 0 && inst.vals[i - 1] == c.n - 1) inst.vals[--i] = 0;
      if (i == 0) break;
      ++inst.vals[i - 1];
    }
  }
  return c;
}

// One depth-first search over a subtree given by fixed values for the
// first `prefix.size()` cells in cell order.
//
// Every ground instance is either "active" (its value is still undetermined
// by the current partial table) or parked on the depth at which it was last
// verified to hold.  A verified instance only reads cells at or above that
// depth, so its value cannot change until the search revisits that depth;
// re-assigning or unsetting the depth's cell moves its parked instances
// back to the active list.  Each cell assignment re-checks exactly the
// active instances, so a branch is pruned at the shallowest depth at which
// any instance becomes violated.
class Engine {
 public:
  Engine(const Compiled& c, const std::vector<std::uint8_t>& prefix)
      : c_(c), table_(c.ncells, -1), settled_(c.ncells) {
    for (std::size_t d = 0; d < prefix.size(); ++d)
      table_[c_.cell_order[d]] = static_cast<std::int8_t>(prefix[d]);
    depth0_ = static_cast<int>(prefix.size());

    for (std::size_t i = 0; i < c_.instances.size(); ++i) {
      switch (check_instance(c_.sat[c_.instances[i].ident], c_.instances[i],
                             table_.data(), c_.n)) {
        case InstanceState::Holds:
          // Reads only prefix cells, which never change here.
          break;
        case InstanceState::Violated:
          infeasible_ = true;
          return;
        case InstanceState::Blocked:
          active_.push_back(static_cast<int>(i));
          break;
      }
    }
  }

  void run() {
    if (!infeasible_) dfs(depth0_);
  }

  std::vector<FiniteGroupoid> models;
  bool stopped_early = false;
  long long nodes = 0, tables = 0;

 private:
  void unsettle(int depth) {
    std::vector<int>& parked = settled_[depth];
    active_.insert(active_.end(), parked.begin(), parked.end());
    parked.clear();
  }

  // Re-checks all active instances; parks the ones that now hold.
  // Returns false when some instance is violated.
  bool scan_active(int depth) {
    for (std::size_t i = 0; i < active_.size();) {
      int idx = active_[i];
      switch (check_instance(c_.sat[c_.instances[idx].ident],
                             c_.instances[idx], table_.data(), c_.n)) {
        case InstanceState::Holds:
          settled_[depth].push_back(idx);
          active_[i] = active_.back();
          active_.pop_back();
          break;
        case InstanceState::Violated:
          return false;
        case InstanceState::Blocked:
          ++i;
          break;
      }
    }
    return true;
  }

  // Returns false to unwind once the result limit is reached.
  bool dfs(int depth) {
    if (depth == c_.ncells) return on_complete();
    int cell = c_.cell_order[depth];
    for (int v = 0; v < c_.n; ++v) {
      unsettle(depth);
      table_[cell] = static_cast<std::int8_t>(v);
      ++nodes;
      if (scan_active(depth) && !dfs(depth + 1)) {
        table_[cell] = -1;
        return false;
      }
    }
    unsettle(depth);
    table_[cell] = -1;
    return true;
  }

  bool on_complete() {
    ++tables;
    for (const CompiledIdentity& f : c_.fail)
      if (!fails_somewhere(f, table_.data(), c_.n)) return true;

    std::vector<std::uint8_t> cells(table_.begin(), table_.end());
    FiniteGroupoid g(c_.n, std::move(cells));
    if (c_.up_to_iso && canonical_form(g) != g) return true;
    models.push_back(std::move(g));
    if (c_.limit && static_cast<long long>(models.size()) >= *c_.limit) {
      stopped_early = true;
      return false;
    }
    return true;
  }

  const Compiled& c_;
  std::vector<std::int8_t> table_;
  std::vector<int> active_;
  std::vector<std::vector<int>> settled_;  // indexed by depth
  int depth0_ = 0;
  bool infeasible_ = false;
};

}  // namespace

SearchOutcome enumerate_models(const SearchProblem& p, int jobs) {
  if (p.size < 1) throw SearchLimitError("size must be at least 1");
  if (p.size > max_search_size())
    throw SearchLimitError(
        "size " + std::to_string(p.size) + " exceeds the configured maximum " +
        std::to_string(max_search_size()) +
        " (set ZLAB_MAX_SIZE to override)");

  auto t0 = std::chrono::steady_clock::now();
  Compiled c = compile_problem(p);
  jobs = std::max(1, jobs);

  // Partition the tree by the values of the first k cells; subproblem
  // order equals depth-first discovery order, so the merged result is
  // independent of the worker count.
  int k = 0;
  long long nsub = 1;
  while (jobs > 1 && nsub < 8LL * jobs && k < c.ncells && nsub * c.n <= 4096) {
    nsub *= c.n;
    ++k;
  }

  std::vector<std::vector<FiniteGroupoid>> found(nsub);
  std::vector<char> early(nsub, 0);
  std::atomic<long long> nodes{0}, tables{0};
  std::atomic<long long> next{0};

  auto worker = [&] {
    while (true) {
      long long idx = next.fetch_add(1);
      if (idx >= nsub) break;
      std::vector<std::uint8_t> prefix(k);
      long long rem = idx;
      for (int d = k - 1; d >= 0; --d) {
        prefix[d] = static_cast<std::uint8_t>(rem % c.n);
        rem /= c.n;
      }
      Engine e(c, prefix);
      e.run();
      found[idx] = std::move(e.models);
      early[idx] = e.stopped_early ? 1 : 0;
      nodes += e.nodes;
      tables += e.tables;
    }
  };

  if (jobs == 1 || nsub == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  SearchOutcome out;
  bool any_early = false;
  for (long long i = 0; i < nsub; ++i) {
    any_early = any_early || early[i];
    for (FiniteGroupoid& g : found[i]) out.models.push_back(std::move(g));
  }
  out.exhausted = !any_early;
  if (c.limit && static_cast<long long>(out.models.size()) > *c.limit) {
    out.models.erase(out.models.begin() + static_cast<std::ptrdiff_t>(*c.limit),
                     out.models.end());
    out.exhausted = false;
  }
  std::sort(out.models.begin(), out.models.end());

  out.stats.nodes = nodes.load();
  out.stats.tables = tables.load();
  out.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

long long count_models(int size, const VarietySpec& v, bool up_to_iso,
                       int jobs) {
  SearchProblem p;
  p.size = size;
  p.in_I = v.relative_to_I;
  p.must_satisfy = v.identities;
  p.up_to_iso = up_to_iso;
  return static_cast<long long>(enumerate_models(p, jobs).models.size());
}

SeparationResult find_separating_model(const VarietySpec& v,
                                       const VarietySpec& w, int max_size,
                                       int jobs) {
  SeparationResult result;
  for (int n = 1; n <= max_size; ++n) {
    SearchProblem p;
    p.size = n;
    p.in_I = v.relative_to_I;
    p.must_satisfy = v.identities;
    p.up_to_iso = true;
    SearchOutcome out = enumerate_models(p, jobs);
    result.exhausted = result.exhausted && out.exhausted;
    for (const FiniteGroupoid& g : out.models) {
      if (!in_variety(g, w).holds) {
        result.model = g;
        return result;
      }
    }
  }
  return result;
}

ConditionalCheckResult conditional_identity_check(
    const std::vector<Identity>& hypotheses,
    const std::vector<Identity>& conclusions, int max_size, int jobs) {
  ConditionalCheckResult result;
  for (int n = 1; n <= max_size; ++n) {
    SearchProblem p;
    p.size = n;
    p.in_I = true;
    p.must_satisfy = hypotheses;
    p.up_to_iso = true;  // satisfaction is isomorphism-invariant
    SearchOutcome out = enumerate_models(p, jobs);
    result.exhausted = result.exhausted && out.exhausted;
    for (const FiniteGroupoid& g : out.models) {
      for (const Identity& concl : conclusions) {
        SatisfactionReport r = satisfies(g, concl);
        if (!r.holds) {
          result.holds = false;
          result.counterexample = g;
          result.violated = concl;
          result.where = r.counterexample;
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace zlab
