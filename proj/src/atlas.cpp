#include "zlab/atlas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace zlab {

namespace {

std::vector<Identity> ids_of(std::initializer_list<const char*> texts) {
  std::vector<Identity> out;
  out.reserve(texts.size());
  for (const char* t : texts) out.push_back(parse_identity(t));
  return out;
}

VarietySpec relative(std::string name,
                     std::initializer_list<const char*> texts) {
  return VarietySpec{std::move(name), ids_of(texts), true};
}

const Identity& sigma(const std::string& label) {
  for (const auto& [name, id] : sigma_identities())
    if (name == label) return id;
  throw std::logic_error("no identity labelled " + label);
}

VarietyCatalog build_catalog() {
  VarietyCatalog cat;
  auto add = [&cat](VarietySpec v) {
    cat.order.push_back(v.name);
    cat.entries.emplace(v.name, std::move(v));
  };
  add(relative("T", {"x = y"}));
  add(VarietySpec{"I", {}, true});
  add(relative("I10", {"x' = x"}));
  add(relative("I20", {"x'' = x"}));
  add(relative("MC", {"x & y = y & x"}));
  add(relative("SL", {"x' = x", "x -> y = y -> x"}));
  add(relative("DM", {"(x -> y) -> x = x"}));
  add(relative("BA", {"(x -> y) -> x = x", "x -> x = 0'"}));
  add(intersect(cat.entries.at("I20"), cat.entries.at("MC"), "S"));
  for (const auto& [label, id] : sigma_identities())
    add(VarietySpec{label, {id}, true});
  for (int i = 1; i <= 14; ++i) {
    const std::string ai = "A" + std::to_string(i);
    add(intersect(cat.entries.at(ai), cat.entries.at("S"),
                  "S" + std::to_string(i)));
  }
  add(relative("E1", {"(x -> y)' = x -> (0 -> y)"}));
  add(relative("E2", {"x' -> y = x -> y'"}));
  add(relative("E3", {"0 -> (x -> y) = 0 -> (y -> x)"}));
  return cat;
}

std::vector<WitnessRecord> build_witnesses() {
  std::vector<WitnessRecord> out;
  auto add = [&out](const char* id,
                    std::initializer_list<std::initializer_list<int>> rows,
                    std::vector<std::string> in_vs,
                    std::vector<std::string> not_in, const char* note) {
    out.push_back(WitnessRecord{id, FiniteGroupoid::from_rows(rows),
                                std::move(in_vs), std::move(not_in), note});
  };
  add("2z", {{0, 0}, {0, 0}}, {"I", "A3"}, {"SL"},
      "two-element table with every product 0");
  add("2s", {{0, 1}, {1, 1}}, {"I", "SL", "A4"}, {"BA"},
      "the two-element meet-semilattice");
  add("2b", {{1, 1}, {0, 1}}, {"I", "A4", "S", "BA"},
      {"A3", "A1", "A14", "S14"},
      "the two-element Boolean implication table");
  add("m3a", {{0, 0, 0}, {2, 0, 0}, {0, 0, 0}}, {"I", "A11"},
      {"A4", "A2", "A6", "A9"},
      "three-element table inside A11 but outside A2, A6, A9 and A4");
  add("m3b", {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, {"I", "A1"}, {"A3"},
      "three-element table placing A1 strictly above A3");
  add("m3c", {{0, 0, 0}, {2, 0, 2}, {0, 0, 0}}, {"I", "A2"}, {"A3"},
      "three-element table placing A2 strictly above A3");
  add("m4a", {{0, 0, 0, 0}, {0, 2, 3, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
      {"I", "A6", "A9"}, {"A3"},
      "four-element table placing A6 and A9 strictly above A3");
  add("m4b", {{0, 1, 2, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {3, 3, 3, 3}},
      {"I", "A14", "S14"}, {"A11", "SL"},
      "four-element table separating A14 from A11 and S14 from SL");
  add("m5a",
      {{0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0},
       {0, 0, 0, 0, 1},
       {0, 2, 0, 0, 0}},
      {"I", "A9", "A11", "MC"}, {"A2", "A4", "A6"},
      "five-element table found by exhaustive search; it places A9 outside "
      "A2, A4 and A6 (no table of size five or less does so for A6 against "
      "A2, A4 or A9)");
  return out;
}

std::string joined_identities(const std::vector<Identity>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i != 0) out += "; ";
    out += render_identity(ids[i]);
  }
  return out;
}

std::string lemma_statement(const std::vector<Identity>& hyps,
                            const std::vector<Identity>& concls) {
  if (hyps.empty())
    return "every implication zroupoid satisfies: " + joined_identities(concls);
  return "every implication zroupoid satisfying " + joined_identities(hyps) +
         " also satisfies: " + joined_identities(concls);
}

std::vector<Claim> build_claims() {
  std::vector<Claim> out;

  auto eq = [&out](const std::string& left, const std::string& right) {
    Claim c;
    c.id = "eq:" + left + "-" + right;
    c.kind = ClaimKind::Equality;
    c.statement = left + " and " + right + " define the same variety";
    c.left = left;
    c.right = right;
    out.push_back(std::move(c));
  };
  auto incl = [&out](const std::string& left, const std::string& right) {
    Claim c;
    c.id = "incl:" + left + "-" + right;
    c.kind = ClaimKind::Inclusion;
    c.statement = left + " is contained in " + right;
    c.left = left;
    c.right = right;
    out.push_back(std::move(c));
  };
  auto sep = [&out](const std::string& left, const std::string& right,
                    const std::string& wid, int evidence, bool deep = false) {
    Claim c;
    c.id = "sep:" + left + "-" + right;
    c.kind = ClaimKind::Distinctness;
    c.statement = left + " is not contained in " + right + " (table " + wid +
                  " belongs to " + left + " but not to " + right + ")";
    c.left = left;
    c.right = right;
    c.witness_id = wid;
    c.evidence_size = evidence;
    c.deep = deep;
    out.push_back(std::move(c));
  };
  auto lemma = [&out](const std::string& id, std::vector<Identity> hyps,
                      std::vector<Identity> concls) {
    Claim c;
    c.id = "lemma:" + id;
    c.kind = ClaimKind::Lemma;
    c.statement = lemma_statement(hyps, concls);
    c.hypotheses = std::move(hyps);
    c.conclusions = std::move(concls);
    out.push_back(std::move(c));
  };

  // Collapses inside the fourteen-identity family.
  eq("A3", "A5");
  eq("A3", "A7");
  eq("A3", "A8");
  eq("A3", "A10");
  eq("A11", "A12");
  eq("A11", "A13");

  // The containment chains of the main diagram.
  incl("SL", "A3");
  incl("A3", "A1");
  incl("A3", "A2");
  incl("A3", "A4");
  incl("A3", "A6");
  incl("A3", "A9");
  incl("A3", "A11");
  incl("A3", "A14");
  incl("A2", "A11");
  incl("A6", "A11");
  incl("A9", "A11");
  incl("A11", "A14");
  incl("BA", "A4");

  // Strictness and pairwise separation, each backed by an embedded table.
  sep("SL", "T", "2s", 2);
  sep("BA", "T", "2b", 2);
  sep("A3", "SL", "2z", 2);
  sep("A4", "BA", "2s", 2);
  sep("I", "A1", "2b", 2);
  sep("I", "A4", "m3a", 3);
  sep("I", "A14", "2b", 2);
  sep("A1", "A3", "m3b", 3);
  sep("A2", "A3", "m3c", 3);
  sep("A4", "A3", "2b", 2);
  sep("A6", "A3", "m4a", 4, true);
  sep("A9", "A3", "m4a", 4, true);
  sep("A11", "A3", "m3a", 3);
  sep("A14", "A3", "m3a", 3);
  sep("A1", "A2", "m3b", 3);
  sep("A1", "A4", "m3b", 3);
  sep("A1", "A6", "m3b", 3);
  sep("A1", "A9", "m3b", 3);
  sep("A1", "A11", "m3b", 3);
  sep("A1", "A14", "m3b", 3);
  sep("A2", "A4", "m3c", 3);
  sep("A2", "A6", "m3c", 3);
  sep("A2", "A9", "m3c", 3);
  sep("A11", "A2", "m3a", 3);
  sep("A14", "A2", "m3a", 3);
  sep("A4", "A6", "2b", 2);
  sep("A4", "A9", "2b", 2);
  sep("A11", "A4", "m3a", 3);
  sep("A4", "A14", "2b", 2);
  sep("A9", "A6", "m5a", 0);
  sep("A11", "A6", "m3a", 3);
  sep("A14", "A6", "m3a", 3);
  sep("A11", "A9", "m3a", 3);
  sep("A14", "A9", "m3a", 3);
  sep("A14", "A11", "m4b", 4, true);

  // The commutative-involutive restriction.
  incl("SL", "S14");
  incl("S14", "S");
  incl("BA", "S");
  incl("S", "A4");
  sep("S14", "SL", "m4b", 4, true);
  sep("S", "S14", "2b", 2);
  sep("BA", "S14", "2b", 2);
  eq("S4", "S");
  for (int i : {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13})
    eq("S" + std::to_string(i), "SL");

  // Unconditional consequences of the axioms.
  lemma("triple-prime-left", {}, ids_of({"x''' -> y = x' -> y"}));
  lemma("product-double-prime", {},
        ids_of({"(x -> y) -> z = ((x -> y) -> z)''",
                "(x -> y)' = (x'' -> y)'"}));

  // Four equivalent descriptions of the involutive subvariety, verified as
  // a cycle of implications.
  lemma("fixpoint-cycle-1", ids_of({"0' -> x = x"}), ids_of({"x'' = x"}));
  lemma("fixpoint-cycle-2", ids_of({"x'' = x"}), ids_of({"(x -> x')' = x"}));
  lemma("fixpoint-cycle-3", ids_of({"(x -> x')' = x"}),
        ids_of({"x' -> x = x"}));
  lemma("fixpoint-cycle-4", ids_of({"x' -> x = x"}), ids_of({"0' -> x = x"}));

  // Consequences of x'' = x.
  lemma("invol-zero-swap", ids_of({"x'' = x"}),
        ids_of({"x' -> 0' = 0 -> x", "0 -> x' = x -> 0'"}));
  lemma("invol-consequences", ids_of({"x'' = x"}),
        ids_of({"(x -> 0') -> y = (x -> y') -> y",
                "(y -> x) -> y = (0 -> x) -> y",
                "0 -> x = 0 -> (0 -> x)",
                "(0 -> x) -> (0 -> y) = x -> (0 -> y)",
                "x -> y = x -> (x -> y)",
                "0 -> (x -> y) = x -> (0 -> y)",
                "0 -> (x -> y')' = 0 -> (x' -> y)",
                "x -> (y -> x') = y -> x'"}));

  // Conditional rewriting steps used to collapse the identity family.
  lemma("prime-shift-absorption", ids_of({"x' -> y = x -> y'"}),
        ids_of({"(x -> y) -> y' = x -> y'"}));
  lemma("prime-shift-zero-1",
        ids_of({"x'' = x", "(x -> y)' = x -> (0 -> y)"}),
        ids_of({"x -> y' = x -> (0 -> y)"}));
  lemma("prime-shift-zero-2",
        ids_of({"x'' = x", "(x -> y)' = x -> (0 -> y)"}),
        ids_of({"(x -> (y -> z)')' = x -> (y -> (0 -> z))'"}));
  lemma("zero-reassociation",
        ids_of({"(x -> y)' = x -> (0 -> y)", "x' -> y = x -> y'"}),
        ids_of({"0 -> (x -> (y -> z)) = 0 -> ((x -> y) -> z)"}));
  lemma("prime-symmetric-product", ids_of({"(x -> y)' = (y -> x)'"}),
        ids_of({"(x -> y) -> z = (y -> x) -> z"}));

  // Consequences of individual family members.
  lemma("A5-consequences", {sigma("A5")},
        ids_of({"x' -> y = x -> y'", "(x -> y)' = 0 -> (x -> y)",
                "x -> (0 -> y) = 0 -> (x -> y)"}));
  lemma("A8-consequences", {sigma("A8")},
        ids_of({"x -> y' = x' -> y'", "x -> y' = 0 -> (y' -> x)"}));
  lemma("A10-consequences", {sigma("A10")},
        ids_of({"(0 -> (x -> y))' = x -> y'", "(y -> x)'' = x -> y'",
                "(x -> y)' = x -> y'"}));
  lemma("A13-consequences", {sigma("A13")},
        ids_of({"(x -> y)' = (0 -> x) -> y", "(x -> y)' = x' -> y'",
                "(x -> y)' = (0 -> y) -> x'", "(x -> y)' = (x -> y)''",
                "(x -> y)' = (y -> x)'"}));
  lemma("A2-prime-symmetric", {sigma("A2")},
        ids_of({"(x -> y)' = (y -> x)'"}));
  lemma("A6-prime-symmetric", {sigma("A6")},
        ids_of({"(x -> y)' = (y -> x)'"}));
  lemma("A9-prime-symmetric", {sigma("A9")},
        ids_of({"(x -> y)' = (y -> x)'"}));

  // The E-identities hold across the bottom equality class...
  for (const char* label : {"A3", "A5", "A7", "A8", "A10"})
    lemma(std::string("E-components-") + label, {sigma(label)},
          {variety("E1").identities[0], variety("E2").identities[0],
           variety("E3").identities[0]});

  // ...and together with any one permuted-product identity they force the
  // whole family.
  {
    std::vector<Identity> all_sigma;
    for (const auto& [label, id] : sigma_identities()) all_sigma.push_back(id);
    const std::vector<Identity>& perms = e4_instances();
    for (std::size_t k = 0; k < perms.size(); ++k) {
      std::vector<Identity> hyps = {variety("E1").identities[0],
                                    variety("E2").identities[0],
                                    variety("E3").identities[0], perms[k]};
      lemma("E-family-" + std::to_string(k + 1), std::move(hyps), all_sigma);
    }
  }

  // Entry points used to anchor SL below the family.
  lemma("commutative-product-assoc", ids_of({"x -> y = y -> x"}),
        {sigma("A1")});
  lemma("fixed-prime-product-assoc", ids_of({"x' = x"}), {sigma("A1")});
  lemma("meet-commutative-fixed-prime", ids_of({"x' = x", "x & y = y & x"}),
        ids_of({"x -> y = y -> x"}));
  lemma("S-idempotent-fixed-prime",
        ids_of({"x'' = x", "x & y = y & x", "x -> x = x"}),
        ids_of({"x' = x"}));

  return out;
}

// Containments the ledger asserts as true (directed: first component
// inside second).  Equalities appear in both directions.
const std::vector<std::pair<std::string, std::string>>& stated_below() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"SL", "A3"},  {"A3", "A4"},   {"A4", "I"},    {"BA", "A4"},
      {"A3", "A1"},  {"A1", "I"},    {"A3", "A2"},   {"A3", "A6"},
      {"A3", "A9"},  {"A2", "A11"},  {"A6", "A11"},  {"A9", "A11"},
      {"A11", "A14"}, {"A14", "I"},  {"A3", "A11"},  {"A3", "A14"},
      {"A3", "A5"},  {"A5", "A3"},   {"A3", "A7"},   {"A7", "A3"},
      {"A3", "A8"},  {"A8", "A3"},   {"A3", "A10"},  {"A10", "A3"},
      {"A11", "A12"}, {"A12", "A11"}, {"A11", "A13"}, {"A13", "A11"},
      {"SL", "S14"}, {"S14", "S"},   {"BA", "S"},
  };
  return v;
}

// Reflexive-transitive closure of stated_below over all catalog names.
class StatedClosure {
 public:
  StatedClosure() {
    const std::vector<std::string>& order = builtin_catalog().order;
    for (std::size_t i = 0; i < order.size(); ++i) index_[order[i]] = i;
    const std::size_t n = order.size();
    reach_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach_[i][i] = true;
    for (const auto& [a, b] : stated_below()) reach_[index_.at(a)][index_.at(b)] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (reach_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (reach_[k][j]) reach_[i][j] = true;
  }

  bool below(const std::string& a, const std::string& b) const {
    return reach_[index_.at(a)][index_.at(b)];
  }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> reach_;
};

const StatedClosure& stated_closure() {
  static const StatedClosure c;
  return c;
}

bool is_family_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'A') return false;
  return name.find_first_not_of("0123456789", 1) == std::string::npos;
}

}  // namespace

const VarietySpec& VarietyCatalog::at(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end())
    throw std::invalid_argument("unknown variety: " + name);
  return it->second;
}

const VarietyCatalog& builtin_catalog() {
  static const VarietyCatalog cat = build_catalog();
  return cat;
}

const VarietySpec& variety(const std::string& name) {
  return builtin_catalog().at(name);
}

const std::vector<Identity>& e4_instances() {
  static const std::vector<Identity> ids = [] {
    const Term lhs = Term::arrow(
        Term::var("x"), Term::arrow(Term::var("y"), Term::var("z")));
    std::array<std::string, 3> p = {"x", "y", "z"};
    std::vector<Identity> out;
    do {
      Term rhs = Term::arrow(Term::arrow(Term::var(p[0]), Term::var(p[1])),
                             Term::var(p[2]));
      out.push_back(Identity{lhs, rhs});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return ids;
}

const std::vector<WitnessRecord>& builtin_witnesses() {
  static const std::vector<WitnessRecord> w = build_witnesses();
  return w;
}

const WitnessRecord& witness(const std::string& id) {
  for (const WitnessRecord& w : builtin_witnesses())
    if (w.id == id) return w;
  throw std::invalid_argument("unknown witness table: " + id);
}

WitnessCheck verify_witness(const WitnessRecord& w) {
  for (const std::string& name : w.in_varieties) {
    SatisfactionReport r = in_variety(w.table, variety(name));
    if (!r.holds)
      return {false,
              "claimed member of " + name + " but " + describe_failure(r)};
  }
  for (const std::string& name : w.not_in) {
    SatisfactionReport r = in_variety(w.table, variety(name));
    if (r.holds)
      return {false, "claimed outside " + name +
                         " but satisfies every defining identity"};
  }
  return {};
}

const std::vector<Claim>& builtin_claims() {
  static const std::vector<Claim> claims = build_claims();
  return claims;
}

namespace {

ClaimResult verify_distinctness(const Claim& c, const LedgerOptions& o) {
  ClaimResult res;
  const WitnessRecord& w = witness(c.witness_id);
  SatisfactionReport in_left = in_variety(w.table, variety(c.left));
  if (!in_left.holds) {
    res.status = ClaimStatus::Fail;
    res.detail = "table " + c.witness_id + " should belong to " + c.left +
                 " but " + describe_failure(in_left);
    return res;
  }
  SatisfactionReport in_right = in_variety(w.table, variety(c.right));
  if (in_right.holds) {
    res.status = ClaimStatus::Fail;
    res.detail = "table " + c.witness_id + " should fall outside " + c.right +
                 " but satisfies every defining identity";
    return res;
  }
  if (c.evidence_size <= 0) {
    res.detail = "table " + c.witness_id + " (size " +
                 std::to_string(w.table.size()) +
                 ") verifies; no re-derivation search is scheduled for this "
                 "claim";
    return res;
  }
  const int cap = std::min(c.deep ? o.deep_budget : o.budget,
                           max_search_size());
  if (cap < c.evidence_size) {
    res.status = ClaimStatus::InsufficientBudget;
    res.detail = "table " + c.witness_id +
                 " verifies, but re-deriving a separator needs size " +
                 std::to_string(c.evidence_size) + " and the budget allows " +
                 std::to_string(cap);
    return res;
  }
  SeparationResult sr = find_separating_model(variety(c.left),
                                              variety(c.right),
                                              c.evidence_size, o.jobs);
  res.searched_size = c.evidence_size;
  if (!sr.model) {
    res.status = ClaimStatus::Fail;
    res.detail = "table " + c.witness_id +
                 " verifies, yet the search found no separator up to size " +
                 std::to_string(c.evidence_size);
    return res;
  }
  res.detail = "table " + c.witness_id + " verifies; search re-found a " +
               std::to_string(sr.model->size()) + "-element separator";
  return res;
}

ClaimResult verify_inclusion(const Claim& c, const LedgerOptions& o) {
  ClaimResult res;
  const int cap = std::min(o.budget, max_search_size());
  SeparationResult sr =
      find_separating_model(variety(c.left), variety(c.right), cap, o.jobs);
  res.searched_size = cap;
  if (sr.model) {
    res.status = ClaimStatus::Fail;
    res.counterexample = *sr.model;
    res.counterexample_detail =
        describe_failure(in_variety(*sr.model, variety(c.right)));
    res.detail = "a " + std::to_string(sr.model->size()) +
                 "-element member of " + c.left + " escapes " + c.right;
    return res;
  }
  if (cap < c.evidence_size) {
    res.status = ClaimStatus::InsufficientBudget;
    res.detail = "no separating model up to size " + std::to_string(cap) +
                 "; the evidence target is size " +
                 std::to_string(c.evidence_size);
    return res;
  }
  res.detail = "no member of " + c.left + " escapes " + c.right +
               " up to size " + std::to_string(cap);
  return res;
}

ClaimResult verify_equality(const Claim& c, const LedgerOptions& o) {
  ClaimResult res;
  const int cap = std::min(o.budget, max_search_size());
  res.searched_size = cap;
  const VarietySpec& l = variety(c.left);
  const VarietySpec& r = variety(c.right);
  SeparationResult lr = find_separating_model(l, r, cap, o.jobs);
  if (lr.model) {
    res.status = ClaimStatus::Fail;
    res.counterexample = *lr.model;
    res.counterexample_detail = describe_failure(in_variety(*lr.model, r));
    res.detail = "a " + std::to_string(lr.model->size()) +
                 "-element member of " + c.left + " escapes " + c.right;
    return res;
  }
  SeparationResult rl = find_separating_model(r, l, cap, o.jobs);
  if (rl.model) {
    res.status = ClaimStatus::Fail;
    res.counterexample = *rl.model;
    res.counterexample_detail = describe_failure(in_variety(*rl.model, l));
    res.detail = "a " + std::to_string(rl.model->size()) +
                 "-element member of " + c.right + " escapes " + c.left;
    return res;
  }
  if (cap < c.evidence_size) {
    res.status = ClaimStatus::InsufficientBudget;
    res.detail = "no separating model in either direction up to size " +
                 std::to_string(cap) + "; the evidence target is size " +
                 std::to_string(c.evidence_size);
    return res;
  }
  res.detail = "no separating model in either direction up to size " +
               std::to_string(cap);
  return res;
}

ClaimResult verify_lemma(const Claim& c, const LedgerOptions& o) {
  ClaimResult res;
  const int cap = std::min(o.budget, max_search_size());
  ConditionalCheckResult r =
      conditional_identity_check(c.hypotheses, c.conclusions, cap, o.jobs);
  res.searched_size = cap;
  if (!r.holds) {
    res.status = ClaimStatus::Fail;
    res.counterexample = r.counterexample;
    std::string what = "violates";
    if (r.violated) what += " " + render_identity(*r.violated);
    if (r.where) {
      what += " at " + render_assignment(r.where->assignment);
      what += " (lhs=" + std::to_string(r.where->lhs_value) +
              ", rhs=" + std::to_string(r.where->rhs_value) + ")";
    }
    res.counterexample_detail = what;
    res.detail = "a " +
                 std::to_string(r.counterexample ? r.counterexample->size()
                                                 : 0) +
                 "-element model satisfies the hypotheses but " + what;
    return res;
  }
  if (cap < c.evidence_size) {
    res.status = ClaimStatus::InsufficientBudget;
    res.detail = "holds up to size " + std::to_string(cap) +
                 "; the evidence target is size " +
                 std::to_string(c.evidence_size);
    return res;
  }
  res.detail = "holds in every implication zroupoid up to size " +
               std::to_string(cap);
  return res;
}

}  // namespace

ClaimResult verify_claim(const Claim& c, const LedgerOptions& opts) {
  switch (c.kind) {
    case ClaimKind::Distinctness:
      return verify_distinctness(c, opts);
    case ClaimKind::Inclusion:
      return verify_inclusion(c, opts);
    case ClaimKind::Equality:
      return verify_equality(c, opts);
    case ClaimKind::Lemma:
      return verify_lemma(c, opts);
  }
  throw std::logic_error("unreachable claim kind");
}

std::vector<VerifiedClaim> verify_claims(const LedgerOptions& opts) {
  std::vector<VerifiedClaim> out;
  out.reserve(builtin_claims().size());
  for (const Claim& c : builtin_claims())
    out.push_back(VerifiedClaim{c, verify_claim(c, opts)});
  return out;
}

const std::vector<std::string>& main_poset_nodes() {
  static const std::vector<std::string> nodes = {
      "T",  "SL", "BA", "A1",  "A2",  "A3",
      "A4", "A6", "A9", "A11", "A14", "I"};
  return nodes;
}

const std::vector<std::string>& s_poset_nodes() {
  static const std::vector<std::string> nodes = {"T", "SL", "BA", "S14", "S"};
  return nodes;
}

PosetReport build_poset(const std::vector<std::string>& nodes, int budget,
                        int jobs) {
  const VarietyCatalog& cat = builtin_catalog();
  for (const std::string& name : nodes)
    if (!cat.has(name))
      throw std::invalid_argument("unknown variety: " + name);
  if (budget < 1)
    throw std::invalid_argument("poset budget must be at least 1");

  PosetReport report;
  report.nodes = nodes;
  report.budget = budget;
  const std::size_t n = nodes.size();

  // Every isomorphism-class representative up to the budget, smallest
  // sizes first, canonical order within a size.
  std::vector<FiniteGroupoid> pool;
  for (int size = 1; size <= budget; ++size) {
    SearchProblem p;
    p.size = size;
    p.up_to_iso = true;
    SearchOutcome outcome = enumerate_models(p, jobs);
    for (FiniteGroupoid& m : outcome.models) pool.push_back(std::move(m));
  }

  // Membership profiles of the pool and of the wider embedded tables.
  std::vector<std::vector<bool>> pool_member(n);
  for (std::size_t i = 0; i < n; ++i) {
    const VarietySpec& v = cat.at(nodes[i]);
    pool_member[i].reserve(pool.size());
    for (const FiniteGroupoid& g : pool)
      pool_member[i].push_back(in_variety(g, v).holds);
  }
  std::vector<const WitnessRecord*> wide;
  for (const WitnessRecord& w : builtin_witnesses())
    if (w.table.size() > budget) wide.push_back(&w);
  std::vector<std::vector<bool>> wide_member(n);
  for (std::size_t i = 0; i < n; ++i) {
    const VarietySpec& v = cat.at(nodes[i]);
    wide_member[i].reserve(wide.size());
    for (const WitnessRecord* w : wide)
      wide_member[i].push_back(in_variety(w->table, v).holds);
  }

  report.relation.assign(n, std::vector<PairStatus>(
                                n, PairStatus::SubsetConsistent));
  report.evidence.assign(
      n, std::vector<std::optional<PairEvidence>>(n, std::nullopt));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t r = 0; r < pool.size(); ++r) {
        if (pool_member[i][r] && !pool_member[j][r]) {
          report.relation[i][j] = PairStatus::NotSubset;
          report.evidence[i][j] = PairEvidence{"search", pool[r]};
          break;
        }
      }
      if (report.relation[i][j] == PairStatus::NotSubset) continue;
      for (std::size_t r = 0; r < wide.size(); ++r) {
        if (wide_member[i][r] && !wide_member[j][r]) {
          report.relation[i][j] = PairStatus::NotSubset;
          report.evidence[i][j] = PairEvidence{wide[r]->id, wide[r]->table};
          break;
        }
      }
    }
  }

  auto strict = [&report](std::size_t lo, std::size_t hi) {
    return lo != hi &&
           report.relation[lo][hi] == PairStatus::SubsetConsistent &&
           report.relation[hi][lo] == PairStatus::NotSubset;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strict(i, j)) continue;
      bool reducible = false;
      for (std::size_t k = 0; k < n && !reducible; ++k)
        if (strict(i, k) && strict(k, j)) reducible = true;
      if (!reducible)
        report.hasse_edges.push_back(
            PosetEdge{nodes[i], nodes[j], *report.evidence[j][i]});
    }
  }

  const StatedClosure& closure = stated_closure();
  for (const auto& [a, b] : stated_below()) {
    auto ia = std::find(nodes.begin(), nodes.end(), a);
    auto ib = std::find(nodes.begin(), nodes.end(), b);
    if (ia == nodes.end() || ib == nodes.end()) continue;
    const std::size_t i = ia - nodes.begin(), j = ib - nodes.begin();
    if (report.relation[i][j] == PairStatus::NotSubset) {
      PosetDiscrepancy d;
      d.lower = a;
      d.upper = b;
      d.detail = "expected " + a + " inside " + b +
                 " but a separating table was found (source: " +
                 report.evidence[i][j]->source + ")";
      d.table = report.evidence[i][j]->table;
      report.discrepancies.push_back(std::move(d));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_family_name(nodes[i]) || !is_family_name(nodes[j])) continue;
      if (closure.below(nodes[i], nodes[j]) ||
          closure.below(nodes[j], nodes[i]))
        continue;
      PosetFinding f;
      if (strict(i, j) || strict(j, i)) {
        const bool fwd = strict(i, j);
        f.a = fwd ? nodes[i] : nodes[j];
        f.b = fwd ? nodes[j] : nodes[i];
        f.kind = "strictly-below";
        const PairEvidence& ev =
            fwd ? *report.evidence[j][i] : *report.evidence[i][j];
        f.detail = "every member of " + f.a + " up to size " +
                   std::to_string(budget) + " lies inside " + f.b + "; " +
                   f.b + " escapes via a " +
                   std::to_string(ev.table.size()) + "-element table (" +
                   ev.source + ")";
      } else if (report.relation[i][j] == PairStatus::NotSubset &&
                 report.relation[j][i] == PairStatus::NotSubset) {
        f.a = nodes[i];
        f.b = nodes[j];
        f.kind = "incomparable";
        f.detail = "separated in both directions (" + nodes[i] + " escapes " +
                   nodes[j] + " via " + report.evidence[i][j]->source + ", " +
                   nodes[j] + " escapes " + nodes[i] + " via " +
                   report.evidence[j][i]->source + ")";
      } else {
        f.a = nodes[i];
        f.b = nodes[j];
        f.kind = "no-separation-found";
        f.detail = "no separating table in either direction up to size " +
                   std::to_string(budget);
      }
      report.discovered.push_back(std::move(f));
    }
  }

  return report;
}

}  // namespace zlab
