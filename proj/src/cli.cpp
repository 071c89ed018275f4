#include "zlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zlab/atlas.hpp"
#include "zlab/search.hpp"
#include "zlab/semantics.hpp"
#include "zlab/term.hpp"
#include "zlab/variety.hpp"
#include "zlab/version.hpp"

namespace zlab {
namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;        // success / the property holds
constexpr int kNegative = 1;  // definite negative answer
constexpr int kUsage = 2;     // usage or input error

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Expands an identity argument: either an inline identity or "@path" naming
// a file with one identity per line ('#' starts a comment).
std::vector<Identity> parse_identity_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    const std::string path = arg.substr(1);
    std::istringstream in(read_file(path));
    std::vector<Identity> ids;
    std::string line;
    while (std::getline(in, line)) {
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      ids.push_back(parse_identity(line));
    }
    if (ids.empty())
      throw std::runtime_error("no identities found in '" + path + "'");
    return ids;
  }
  return {parse_identity(arg)};
}

FiniteGroupoid load_table(const std::string& path) {
  return FiniteGroupoid::parse_table(read_file(path));
}

std::string known_varieties_hint() {
  std::string s = "known varieties:";
  for (const std::string& name : builtin_catalog().order) s += " " + name;
  return s;
}

const VarietySpec& named_variety(const std::string& name) {
  if (!builtin_catalog().has(name))
    throw std::invalid_argument("unknown variety '" + name + "'; " +
                                known_varieties_hint());
  return builtin_catalog().at(name);
}

void check_size_guard(int size, const char* what) {
  if (size > max_search_size())
    throw std::invalid_argument(
        std::string(what) + " " + std::to_string(size) +
        " exceeds the search guard (" + std::to_string(max_search_size()) +
        "); set ZLAB_MAX_SIZE to raise it");
}

const char* claim_kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::Distinctness: return "distinctness";
    case ClaimKind::Inclusion: return "inclusion";
    case ClaimKind::Equality: return "equality";
    case ClaimKind::Lemma: return "lemma";
  }
  return "?";
}

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::InsufficientBudget: return "insufficient-budget";
  }
  return "?";
}

const char* pair_status_name(PairStatus s) {
  switch (s) {
    case PairStatus::SubsetConsistent: return "subset-consistent";
    case PairStatus::NotSubset: return "not-subset";
    case PairStatus::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Report serialization (stable key order; no timings or worker counts)
// ---------------------------------------------------------------------------

ojson table_json(const FiniteGroupoid& g) {
  ojson rows = ojson::array();
  for (int i = 0; i < g.size(); ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < g.size(); ++j) row.push_back(g.apply(i, j));
    rows.push_back(std::move(row));
  }
  ojson doc;
  doc["size"] = g.size();
  doc["rows"] = std::move(rows);
  return doc;
}

void write_report_file(const std::string& path, const ojson& doc) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write report file '" + path + "'");
  f << doc.dump(2) << "\n";
  if (!f)
    throw std::runtime_error("error while writing report file '" + path + "'");
}

ojson poset_json(const PosetReport& r) {
  ojson doc;
  doc["budget"] = r.budget;
  doc["nodes"] = r.nodes;

  ojson relation = ojson::array();
  for (const auto& row : r.relation) {
    ojson jrow = ojson::array();
    for (PairStatus s : row) jrow.push_back(pair_status_name(s));
    relation.push_back(std::move(jrow));
  }
  doc["relation"] = std::move(relation);

  ojson edges = ojson::array();
  for (const PosetEdge& e : r.hasse_edges) {
    ojson je;
    je["lower"] = e.lower;
    je["upper"] = e.upper;
    ojson ev;
    ev["source"] = e.strictness.source;
    ev["table"] = table_json(e.strictness.table);
    je["strictness"] = std::move(ev);
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);

  ojson discrepancies = ojson::array();
  for (const PosetDiscrepancy& d : r.discrepancies) {
    ojson jd;
    jd["lower"] = d.lower;
    jd["upper"] = d.upper;
    jd["detail"] = d.detail;
    if (d.table) jd["table"] = table_json(*d.table);
    discrepancies.push_back(std::move(jd));
  }
  doc["discrepancies"] = std::move(discrepancies);

  ojson discovered = ojson::array();
  for (const PosetFinding& f : r.discovered) {
    ojson jf;
    jf["a"] = f.a;
    jf["b"] = f.b;
    jf["kind"] = f.kind;
    jf["detail"] = f.detail;
    discovered.push_back(std::move(jf));
  }
  doc["discovered"] = std::move(discovered);
  return doc;
}

std::string finding_phrase(const PosetFinding& f) {
  if (f.kind == "strictly-below") return f.a + " strictly below " + f.b;
  if (f.kind == "incomparable") return f.a + " incomparable with " + f.b;
  return f.a + " vs " + f.b + " (" + f.kind + ")";
}

void print_poset(const PosetReport& r, std::ostream& out) {
  out << "nodes (" << r.nodes.size() << "):";
  for (const std::string& n : r.nodes) out << " " << n;
  out << "\n";
  out << "budget: " << r.budget << "\n";
  out << "edges (" << r.hasse_edges.size() << "), lower < upper:\n";
  for (const PosetEdge& e : r.hasse_edges) {
    out << "  " << e.lower << " < " << e.upper;
    if (e.strictness.source != "search")
      out << "  [separating table: " << e.strictness.source << "]";
    out << "\n";
  }
  if (r.discrepancies.empty()) {
    out << "discrepancies: none\n";
  } else {
    out << "discrepancies (" << r.discrepancies.size() << "):\n";
    for (const PosetDiscrepancy& d : r.discrepancies)
      out << "  " << d.lower << " <= " << d.upper << " refuted: " << d.detail
          << "\n";
  }
  if (!r.discovered.empty()) {
    out << "discovered (" << r.discovered.size() << "):\n";
    for (const PosetFinding& f : r.discovered)
      out << "  " << finding_phrase(f) << ": " << f.detail << "\n";
  }
  out << "digraph containment {\n  rankdir=BT;\n";
  for (const PosetEdge& e : r.hasse_edges)
    out << "  \"" << e.lower << "\" -> \"" << e.upper << "\";\n";
  out << "}\n";
}

// ---------------------------------------------------------------------------
// Classification (shared by `classify` and `reproduce`)
// ---------------------------------------------------------------------------

struct ClassificationSummary {
  std::vector<Term> terms;
  std::vector<Identity> identities;
  std::vector<IdentityClass> classes;  // sorted by representative label
  bool expected_shape = false;         // 12 terms, 66 identities, 14 classes
};

int label_number(const std::optional<std::string>& label) {
  if (!label || label->size() < 2) return 1 << 20;
  return std::stoi(label->substr(1));
}

ClassificationSummary run_classification() {
  ClassificationSummary s;
  s.terms = generate_associative_terms();
  s.identities = generate_associative_identities();
  s.classes = classify_identities(s.identities);
  std::sort(s.classes.begin(), s.classes.end(),
            [](const IdentityClass& a, const IdentityClass& b) {
              return label_number(a.sigma_label) < label_number(b.sigma_label);
            });
  std::size_t labeled = 0;
  std::size_t member_total = 0;
  for (const IdentityClass& c : s.classes) {
    if (c.sigma_label) ++labeled;
    member_total += c.members.size();
  }
  s.expected_shape = s.terms.size() == 12 && s.identities.size() == 66 &&
                     s.classes.size() == 14 && labeled == 14 &&
                     member_total == 66;
  return s;
}

const Identity& sigma_by_label(const std::string& label) {
  for (const auto& [name, id] : sigma_identities())
    if (name == label) return id;
  throw std::invalid_argument("no representative identity labeled " + label);
}

ojson classification_json(const ClassificationSummary& s) {
  ojson doc;
  ojson terms = ojson::array();
  for (const Term& t : s.terms) terms.push_back(render_term(t));
  doc["term_count"] = s.terms.size();
  doc["terms"] = std::move(terms);
  doc["identity_count"] = s.identities.size();
  doc["class_count"] = s.classes.size();
  ojson classes = ojson::array();
  for (const IdentityClass& c : s.classes) {
    ojson jc;
    jc["label"] = c.sigma_label ? *c.sigma_label : "?";
    if (c.sigma_label)
      jc["representative"] = render_identity(sigma_by_label(*c.sigma_label));
    jc["canonical"] = render_identity(c.canonical);
    jc["size"] = c.members.size();
    ojson members = ojson::array();
    for (const Identity& id : c.members) members.push_back(render_identity(id));
    jc["members"] = std::move(members);
    classes.push_back(std::move(jc));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

// ---------------------------------------------------------------------------
// Subcommand runners
// ---------------------------------------------------------------------------

int run_check(const std::string& algebra_path, const std::string& identity_arg,
              std::ostream& out) {
  const FiniteGroupoid g = load_table(algebra_path);
  const std::vector<Identity> ids = parse_identity_arg(identity_arg);
  if (ids.size() != 1)
    throw std::invalid_argument("check expects exactly one identity, got " +
                                std::to_string(ids.size()));
  const SatisfactionReport r = satisfies(g, ids.front());
  if (r.holds) {
    out << "holds: " << render_identity(ids.front()) << "\n";
    return kOk;
  }
  out << describe_failure(r) << "\n";
  return kNegative;
}

int run_member(const std::string& algebra_path, const std::string& name,
               std::ostream& out) {
  const FiniteGroupoid g = load_table(algebra_path);
  const VarietySpec& v = named_variety(name);
  const SatisfactionReport r = in_variety(g, v);
  if (r.holds) {
    out << "member of " << name << "\n";
    return kOk;
  }
  out << "not a member of " << name << ": " << describe_failure(r) << "\n";
  return kNegative;
}

int run_search(int size, const std::vector<std::string>& satisfy_args,
               const std::vector<std::string>& fail_args,
               const std::string& variety_name, bool up_to_iso,
               std::optional<long long> limit, bool all, int jobs,
               std::ostream& out) {
  check_size_guard(size, "size");
  SearchProblem p;
  p.size = size;
  p.in_I = true;
  if (!variety_name.empty()) {
    const VarietySpec& v = named_variety(variety_name);
    p.must_satisfy.insert(p.must_satisfy.end(), v.identities.begin(),
                          v.identities.end());
  }
  for (const std::string& arg : satisfy_args)
    for (Identity& id : parse_identity_arg(arg))
      p.must_satisfy.push_back(std::move(id));
  for (const std::string& arg : fail_args)
    for (Identity& id : parse_identity_arg(arg))
      p.must_fail.push_back(std::move(id));
  p.up_to_iso = up_to_iso;
  if (all)
    p.limit.reset();
  else
    p.limit = limit.value_or(10);

  const SearchOutcome outcome = enumerate_models(p, jobs);
  int k = 0;
  for (const FiniteGroupoid& m : outcome.models)
    out << "# model " << ++k << "\n" << m.to_table_text() << "\n";
  out << "models: " << outcome.models.size();
  if (up_to_iso) out << " (up to isomorphism)";
  if (outcome.exhausted)
    out << "; search exhausted\n";
  else
    out << "; stopped at limit " << *p.limit
        << " (use --all or --limit to see more)\n";
  return outcome.models.empty() ? kNegative : kOk;
}

int run_count(int size, const std::string& name, bool up_to_iso, int jobs,
              std::ostream& out) {
  check_size_guard(size, "size");
  const VarietySpec& v = named_variety(name);
  out << count_models(size, v, up_to_iso, jobs) << "\n";
  return kOk;
}

int run_classify(const std::string& report_path, std::ostream& out) {
  const ClassificationSummary s = run_classification();
  out << "terms: " << s.terms.size() << "\n";
  out << "identities: " << s.identities.size() << "\n";
  out << "classes: " << s.classes.size() << "\n";
  for (const IdentityClass& c : s.classes) {
    const std::string label = c.sigma_label ? *c.sigma_label : "?";
    const Identity& rep =
        c.sigma_label ? sigma_by_label(*c.sigma_label) : c.canonical;
    out << "  " << label << "  [" << c.members.size() << " identities]  "
        << render_identity(rep) << "\n";
  }
  if (!report_path.empty()) {
    ojson doc;
    doc["version"] = kVersion;
    ojson body = classification_json(s);
    for (auto it = body.begin(); it != body.end(); ++it)
      doc[it.key()] = it.value();
    write_report_file(report_path, doc);
    out << "report written to " << report_path << "\n";
  }
  return kOk;
}

int run_poset(std::vector<std::string> nodes, int budget,
              const std::string& report_path, int jobs, std::ostream& out) {
  if (nodes.empty()) nodes = main_poset_nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    named_variety(nodes[i]);
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j])
        throw std::invalid_argument("duplicate node '" + nodes[i] + "'");
  }
  check_size_guard(budget, "budget");
  const PosetReport r = build_poset(nodes, budget, jobs);
  print_poset(r, out);
  if (!report_path.empty()) {
    ojson doc;
    doc["version"] = kVersion;
    ojson body = poset_json(r);
    for (auto it = body.begin(); it != body.end(); ++it)
      doc[it.key()] = it.value();
    write_report_file(report_path, doc);
    out << "report written to " << report_path << "\n";
  }
  return r.discrepancies.empty() ? kOk : kNegative;
}

int run_reproduce(int budget, int deep_budget, const std::string& report_path,
                  int jobs, std::ostream& out) {
  check_size_guard(budget, "budget");
  check_size_guard(deep_budget, "deep budget");
  const auto t0 = std::chrono::steady_clock::now();
  out << "reproduction at budget " << budget << " (deep separations at "
      << deep_budget << ")\n";

  // Identity classification.
  const ClassificationSummary cls = run_classification();
  out << "classification: " << cls.terms.size() << " terms, "
      << cls.identities.size() << " identities, " << cls.classes.size()
      << " classes  " << (cls.expected_shape ? "[ok]" : "[FAIL]") << "\n";

  // Embedded witness tables.
  ojson jwitnesses = ojson::array();
  bool witnesses_pass = true;
  for (const WitnessRecord& w : builtin_witnesses()) {
    const WitnessCheck wc = verify_witness(w);
    if (!wc.ok) {
      witnesses_pass = false;
      out << "  [FAIL] witness " << w.id << ": " << wc.detail << "\n";
    }
    ojson jw;
    jw["id"] = w.id;
    jw["size"] = w.table.size();
    jw["table"] = table_json(w.table);
    jw["memberships"] = w.in_varieties;
    jw["non_memberships"] = w.not_in;
    if (!w.note.empty()) jw["note"] = w.note;
    jw["pass"] = wc.ok;
    if (!wc.ok) jw["detail"] = wc.detail;
    jwitnesses.push_back(std::move(jw));
  }
  out << "witnesses: " << builtin_witnesses().size() << " tables re-verified  "
      << (witnesses_pass ? "[ok]" : "[FAIL]") << "\n";

  // Claim ledger.
  LedgerOptions opts;
  opts.budget = budget;
  opts.deep_budget = deep_budget;
  opts.jobs = jobs;
  const std::vector<VerifiedClaim> verified = verify_claims(opts);
  std::size_t n_pass = 0, n_fail = 0, n_insufficient = 0;
  for (const VerifiedClaim& vc : verified) {
    switch (vc.result.status) {
      case ClaimStatus::Pass: ++n_pass; break;
      case ClaimStatus::Fail: ++n_fail; break;
      case ClaimStatus::InsufficientBudget: ++n_insufficient; break;
    }
  }
  out << "claims: " << verified.size() << " checked, " << n_pass << " pass, "
      << n_fail << " fail, " << n_insufficient << " insufficient-budget  "
      << (n_fail == 0 && n_insufficient == 0 ? "[ok]" : "[FAIL]") << "\n";
  for (const VerifiedClaim& vc : verified)
    if (vc.result.status != ClaimStatus::Pass)
      out << "  [" << claim_status_name(vc.result.status) << "] "
          << vc.claim.id << ": " << vc.result.detail << "\n";

  // Containment posets.
  const PosetReport main_poset = build_poset(main_poset_nodes(), budget, jobs);
  out << "main poset: " << main_poset.hasse_edges.size() << " edges, "
      << main_poset.discrepancies.size() << " discrepancies  "
      << (main_poset.discrepancies.empty() ? "[ok]" : "[FAIL]") << "\n";
  for (const PosetDiscrepancy& d : main_poset.discrepancies)
    out << "  [FAIL] " << d.lower << " <= " << d.upper << ": " << d.detail
        << "\n";
  const PosetReport s_poset = build_poset(s_poset_nodes(), budget, jobs);
  out << "restricted poset: " << s_poset.hasse_edges.size() << " edges, "
      << s_poset.discrepancies.size() << " discrepancies  "
      << (s_poset.discrepancies.empty() ? "[ok]" : "[FAIL]") << "\n";
  for (const PosetDiscrepancy& d : s_poset.discrepancies)
    out << "  [FAIL] " << d.lower << " <= " << d.upper << ": " << d.detail
        << "\n";

  const bool overall = cls.expected_shape && witnesses_pass && n_fail == 0 &&
                       n_insufficient == 0 && main_poset.discrepancies.empty() &&
                       s_poset.discrepancies.empty();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  out << "overall: " << (overall ? "PASS" : "FAIL") << " (" << std::fixed
      << std::setprecision(1) << secs << " s)\n";

  if (!report_path.empty()) {
    ojson doc;
    doc["version"] = kVersion;
    doc["budget"] = budget;
    doc["deep_budget"] = deep_budget;

    ojson jcls = classification_json(cls);
    jcls["pass"] = cls.expected_shape;
    doc["classification"] = std::move(jcls);

    doc["witnesses"] = std::move(jwitnesses);

    ojson jclaims = ojson::array();
    for (const VerifiedClaim& vc : verified) {
      ojson jc;
      jc["id"] = vc.claim.id;
      jc["kind"] = claim_kind_name(vc.claim.kind);
      jc["statement"] = vc.claim.statement;
      if (!vc.claim.left.empty()) jc["left"] = vc.claim.left;
      if (!vc.claim.right.empty()) jc["right"] = vc.claim.right;
      if (!vc.claim.witness_id.empty()) jc["witness"] = vc.claim.witness_id;
      if (!vc.claim.hypotheses.empty()) {
        ojson hs = ojson::array();
        for (const Identity& id : vc.claim.hypotheses)
          hs.push_back(render_identity(id));
        jc["hypotheses"] = std::move(hs);
      }
      if (!vc.claim.conclusions.empty()) {
        ojson cs = ojson::array();
        for (const Identity& id : vc.claim.conclusions)
          cs.push_back(render_identity(id));
        jc["conclusions"] = std::move(cs);
      }
      jc["evidence_size"] = vc.claim.evidence_size;
      jc["deep"] = vc.claim.deep;
      jc["status"] = claim_status_name(vc.result.status);
      jc["detail"] = vc.result.detail;
      jc["searched_size"] = vc.result.searched_size;
      if (vc.result.counterexample)
        jc["counterexample"] = table_json(*vc.result.counterexample);
      if (vc.result.counterexample_detail)
        jc["counterexample_detail"] = *vc.result.counterexample_detail;
      jclaims.push_back(std::move(jc));
    }
    doc["claims"] = std::move(jclaims);

    doc["main_poset"] = poset_json(main_poset);
    doc["restricted_poset"] = poset_json(s_poset);
    doc["overall_pass"] = overall;
    write_report_file(report_path, doc);
    out << "report written to " << report_path << "\n";
  }
  return overall ? kOk : kNegative;
}

}  // namespace

// ---------------------------------------------------------------------------
// Argument parsing and dispatch
// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"zlab: a workbench for implication zroupoids <A, ->, 0>"};
  app.name("zlab");
  app.set_version_flag("--version", std::string("zlab ") + kVersion);
  app.require_subcommand(1);

  // check
  std::string check_algebra, check_identity;
  CLI::App* check = app.add_subcommand(
      "check", "Check one identity on a Cayley-table file");
  check->add_option("--algebra", check_algebra, "Cayley-table file")
      ->required();
  check
      ->add_option("--identity", check_identity,
                   "identity, inline or @file (one identity)")
      ->required();

  // member
  std::string member_algebra, member_variety;
  CLI::App* member = app.add_subcommand(
      "member", "Test membership of a table in a named variety");
  member->add_option("--algebra", member_algebra, "Cayley-table file")
      ->required();
  member->add_option("--variety", member_variety, "variety name (see README)")
      ->required();

  // search
  int search_size = 0;
  std::vector<std::string> search_satisfy, search_fail;
  std::string search_variety;
  bool search_iso = false, search_all = false;
  long long search_limit = 0;
  int search_jobs = 1;
  CLI::App* search = app.add_subcommand(
      "search", "Enumerate implication zroupoids of a given size");
  search->add_option("--size", search_size, "table size")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_option("--satisfy", search_satisfy,
                     "identity that must hold (repeatable; @file allowed)");
  search->add_option("--fail", search_fail,
                     "identity that must fail (repeatable; @file allowed)");
  search->add_option("--variety", search_variety,
                     "restrict to a named variety");
  search->add_flag("--up-to-iso", search_iso,
                   "one canonical representative per isomorphism class");
  CLI::Option* limit_opt =
      search->add_option("--limit", search_limit, "stop after this many models")
          ->check(CLI::PositiveNumber);
  CLI::Option* all_opt =
      search->add_flag("--all", search_all, "enumerate every model (no limit)");
  limit_opt->excludes(all_opt);
  all_opt->excludes(limit_opt);
  search->add_option("--jobs", search_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  // count
  int count_size = 0;
  std::string count_variety;
  bool count_iso = false;
  int count_jobs = 1;
  CLI::App* count =
      app.add_subcommand("count", "Count models of a variety at a given size");
  count->add_option("--size", count_size, "table size")
      ->required()
      ->check(CLI::PositiveNumber);
  count->add_option("--variety", count_variety, "variety name")->required();
  count->add_flag("--up-to-iso", count_iso, "count isomorphism classes");
  count->add_option("--jobs", count_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  // classify
  std::string classify_report;
  CLI::App* classify = app.add_subcommand(
      "classify",
      "Partition the 66 product-reassociation identities into classes");
  classify->add_option("--report", classify_report, "write a JSON report here");

  // poset
  std::vector<std::string> poset_nodes;
  int poset_budget = 3;
  std::string poset_report;
  int poset_jobs = 1;
  CLI::App* poset = app.add_subcommand(
      "poset", "Compute the containment order over named varieties");
  poset
      ->add_option("--nodes", poset_nodes,
                   "comma-separated variety names (default: the main diagram)")
      ->delimiter(',');
  poset->add_option("--budget", poset_budget, "exhaustive-search size cap")
      ->check(CLI::PositiveNumber);
  poset->add_option("--report", poset_report, "write a JSON report here");
  poset->add_option("--jobs", poset_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  // reproduce
  int repro_budget = 3, repro_deep = 4, repro_jobs = 1;
  std::string repro_report;
  CLI::App* reproduce = app.add_subcommand(
      "reproduce",
      "Re-verify the whole classification: claims, witnesses, posets");
  reproduce->add_option("--budget", repro_budget, "exhaustive-search size cap")
      ->check(CLI::PositiveNumber);
  reproduce
      ->add_option("--deep-budget", repro_deep,
                   "size cap for the deep separation searches")
      ->check(CLI::PositiveNumber);
  reproduce->add_option("--report", repro_report, "write a JSON report here");
  reproduce->add_option("--jobs", repro_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return run_check(check_algebra, check_identity, out);
    if (member->parsed()) return run_member(member_algebra, member_variety, out);
    if (search->parsed()) {
      std::optional<long long> limit;
      if (limit_opt->count() > 0) limit = search_limit;
      return run_search(search_size, search_satisfy, search_fail,
                        search_variety, search_iso, limit, search_all,
                        search_jobs, out);
    }
    if (count->parsed())
      return run_count(count_size, count_variety, count_iso, count_jobs, out);
    if (classify->parsed()) return run_classify(classify_report, out);
    if (poset->parsed())
      return run_poset(poset_nodes, poset_budget, poset_report, poset_jobs,
                       out);
    if (reproduce->parsed())
      return run_reproduce(repro_budget, repro_deep, repro_report, repro_jobs,
                           out);
    err << "error: no subcommand selected\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "identity parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const TableError& e) {
    err << "table error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace zlab
