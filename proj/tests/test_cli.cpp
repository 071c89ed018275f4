// End-to-end tests of the command-line surface: flag parsing, exit codes,
// human output, and the machine-readable reports.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zlab/cli.hpp"
#include "zlab/groupoid.hpp"

using namespace zlab;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string data_path(const std::string& rel) {
  return std::string(ZLAB_DATA_DIR) + "/" + rel;
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("version and help") {
  CliResult v = cli({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out == "zlab 0.1.0\n");

  CliResult h = cli({"--help"});
  CHECK(h.code == 0);
  for (const char* sub :
       {"check", "member", "search", "count", "classify", "poset", "reproduce"})
    CHECK(contains(h.out, sub));

  CliResult sh = cli({"search", "--help"});
  CHECK(sh.code == 0);
  CHECK(contains(sh.out, "--up-to-iso"));
  CHECK(contains(sh.out, "--fail"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check", "--algebra", data_path("tables/2z.tbl")}).code == 2);
  CHECK(cli({"search", "--size", "2", "--limit", "1", "--all"}).code == 2);
  CHECK(cli({"search", "--size", "0"}).code == 2);
  CHECK(cli({"count", "--size", "2", "--variety", "I", "--jobs", "-1"}).code ==
        2);
}

TEST_CASE("check: identity holds") {
  CliResult r = cli({"check", "--algebra", data_path("tables/2s.tbl"),
                     "--identity", "x -> y = y -> x"});
  CHECK(r.code == 0);
  CHECK(r.out == "holds: (x -> y) = (y -> x)\n");
  CHECK(r.err.empty());
}

TEST_CASE("check: identity fails with the first counterexample") {
  CliResult r = cli({"check", "--algebra", data_path("tables/2b.tbl"),
                     "--identity", "x->(y->z) = (x->y)->z"});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "fails (x -> (y -> z)) = ((x -> y) -> z) at {x=0, y=0, z=0} "
        "(lhs=1, rhs=0)\n");
}

TEST_CASE("check: @file identities") {
  const fs::path one = temp_file("zlab_cli_one.id",
                                 "# a comment\n"
                                 "x -> (y -> z) = (x -> y) -> z  # trailing\n");
  CliResult r = cli({"check", "--algebra", data_path("tables/2s.tbl"),
                     "--identity", "@" + one.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "holds"));

  const fs::path two =
      temp_file("zlab_cli_two.id", "x = x -> x\nx -> y = y -> x\n");
  CliResult r2 = cli({"check", "--algebra", data_path("tables/2s.tbl"),
                      "--identity", "@" + two.string()});
  CHECK(r2.code == 2);
  CHECK(contains(r2.err, "exactly one identity"));

  const fs::path empty = temp_file("zlab_cli_empty.id", "# nothing here\n");
  CliResult r3 = cli({"check", "--algebra", data_path("tables/2s.tbl"),
                      "--identity", "@" + empty.string()});
  CHECK(r3.code == 2);
  CHECK(contains(r3.err, "no identities found"));
}

TEST_CASE("check: input errors") {
  CliResult missing = cli({"check", "--algebra", "/no/such/file.tbl",
                           "--identity", "x = x"});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "cannot open file"));

  const fs::path bad = temp_file("zlab_cli_bad.tbl", "2\n0 5\n0 0\n");
  CliResult malformed = cli({"check", "--algebra", bad.string(), "--identity",
                             "x = x"});
  CHECK(malformed.code == 2);
  CHECK(contains(malformed.err, "table error"));

  CliResult unparsable = cli({"check", "--algebra", data_path("tables/2z.tbl"),
                              "--identity", "x -> = y"});
  CHECK(unparsable.code == 2);
  CHECK(contains(unparsable.err, "identity parse error"));
}

TEST_CASE("member: yes, no, and bad variety") {
  CliResult yes =
      cli({"member", "--algebra", data_path("tables/2s.tbl"), "--variety",
           "SL"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "member of SL\n");

  CliResult no = cli({"member", "--algebra", data_path("tables/2b.tbl"),
                      "--variety", "SL"});
  CHECK(no.code == 1);
  CHECK(no.out ==
        "not a member of SL: fails (x -> 0) = x at {x=0} (lhs=1, rhs=0)\n");

  CliResult unknown = cli({"member", "--algebra", data_path("tables/2z.tbl"),
                           "--variety", "NOPE"});
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "unknown variety 'NOPE'"));
  CHECK(contains(unknown.err, "known varieties:"));
  CHECK(contains(unknown.err, "A14"));
}

TEST_CASE("member: a table outside the axioms reports the failing axiom") {
  const fs::path t = temp_file("zlab_cli_nonmember.tbl", "2\n1 1\n1 1\n");
  CliResult r = cli({"member", "--algebra", t.string(), "--variety", "I"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "not a member of I"));
  CHECK(contains(r.out, "(I0)"));
}

TEST_CASE("search: the three two-element tables, exact output") {
  CliResult r = cli({"search", "--size", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# model 1\n2\n0 0\n0 0\n\n"
        "# model 2\n2\n0 1\n1 1\n\n"
        "# model 3\n2\n1 1\n0 1\n\n"
        "models: 3; search exhausted\n");
}

TEST_CASE("search: printed tables re-parse under the table format") {
  CliResult r = cli({"search", "--size", "2"});
  REQUIRE(r.code == 0);
  // Cut the summary line, then split the remainder on blank lines.
  const std::size_t summary = r.out.rfind("models:");
  REQUIRE(summary != std::string::npos);
  std::string body = r.out.substr(0, summary);
  std::vector<FiniteGroupoid> parsed;
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t gap = body.find("\n\n", start);
    if (gap == std::string::npos) gap = body.size();
    const std::string block = body.substr(start, gap - start);
    if (block.find_first_not_of(" \t\r\n") != std::string::npos)
      parsed.push_back(FiniteGroupoid::parse_table(block));
    start = gap + 2;
  }
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0] == FiniteGroupoid::from_rows({{0, 0}, {0, 0}}));
  CHECK(parsed[1] == FiniteGroupoid::from_rows({{0, 1}, {1, 1}}));
  CHECK(parsed[2] == FiniteGroupoid::from_rows({{1, 1}, {0, 1}}));
}

TEST_CASE("search: limits and --all") {
  CliResult def = cli({"search", "--size", "3"});
  CHECK(def.code == 0);
  CHECK(contains(def.out,
                 "models: 10; stopped at limit 10 (use --all or --limit"));

  CliResult lim = cli({"search", "--size", "3", "--limit", "5"});
  CHECK(lim.code == 0);
  CHECK(contains(lim.out, "models: 5; stopped at limit 5"));

  CliResult all = cli({"search", "--size", "3", "--all"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "models: 31; search exhausted"));

  CliResult iso = cli({"search", "--size", "3", "--all", "--up-to-iso"});
  CHECK(iso.code == 0);
  CHECK(contains(iso.out,
                 "models: 17 (up to isomorphism); search exhausted"));
}

TEST_CASE("search: constraints, variety filters, and empty results") {
  CliResult comm =
      cli({"search", "--size", "2", "--satisfy", "x -> y = y -> x"});
  CHECK(comm.code == 0);
  CHECK(contains(comm.out, "models: 2; search exhausted"));

  CliResult noncomm = cli({"search", "--size", "2", "--fail",
                           "x -> y = y -> x"});
  CHECK(noncomm.code == 0);
  CHECK(contains(noncomm.out, "models: 1; search exhausted"));
  CHECK(contains(noncomm.out, "1 1\n0 1"));

  CliResult sl = cli({"search", "--size", "2", "--variety", "SL"});
  CHECK(sl.code == 0);
  CHECK(contains(sl.out, "models: 1; search exhausted"));
  CHECK(contains(sl.out, "0 1\n1 1"));

  CliResult empty = cli({"search", "--size", "2", "--variety", "T"});
  CHECK(empty.code == 1);
  CHECK(contains(empty.out, "models: 0; search exhausted"));
}

TEST_CASE("search: output is independent of the worker count") {
  CliResult j1 = cli({"search", "--size", "3", "--all", "--jobs", "1"});
  CliResult j4 = cli({"search", "--size", "3", "--all", "--jobs", "4"});
  CHECK(j1.code == j4.code);
  CHECK(j1.out == j4.out);
}

TEST_CASE("search and poset respect the size guard") {
  CliResult over = cli({"search", "--size", "7"});
  CHECK(over.code == 2);
  CHECK(contains(over.err, "exceeds the search guard (6)"));
  CHECK(contains(over.err, "ZLAB_MAX_SIZE"));

  setenv("ZLAB_MAX_SIZE", "3", 1);
  CliResult tightened = cli({"search", "--size", "4"});
  CHECK(tightened.code == 2);
  CHECK(contains(tightened.err, "exceeds the search guard (3)"));
  CliResult budget = cli({"poset", "--nodes", "T,SL", "--budget", "4"});
  CHECK(budget.code == 2);
  unsetenv("ZLAB_MAX_SIZE");

  CliResult ok = cli({"search", "--size", "4", "--limit", "1"});
  CHECK(ok.code == 0);
}

TEST_CASE("count: known model counts") {
  CliResult raw = cli({"count", "--size", "3", "--variety", "I"});
  CHECK(raw.code == 0);
  CHECK(raw.out == "31\n");

  CliResult iso = cli({"count", "--size", "3", "--variety", "I",
                       "--up-to-iso"});
  CHECK(iso.code == 0);
  CHECK(iso.out == "17\n");

  CliResult sl = cli({"count", "--size", "2", "--variety", "SL"});
  CHECK(sl.code == 0);
  CHECK(sl.out == "1\n");

  CliResult trivial = cli({"count", "--size", "2", "--variety", "T"});
  CHECK(trivial.code == 0);
  CHECK(trivial.out == "0\n");
}

TEST_CASE("classify: human summary and JSON report") {
  CliResult r = cli({"classify"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "terms: 12\n"));
  CHECK(contains(r.out, "identities: 66\n"));
  CHECK(contains(r.out, "classes: 14\n"));
  CHECK(contains(r.out,
                 "A1  [6 identities]  (x -> (y -> z)) = ((x -> y) -> z)"));
  CHECK(contains(r.out,
                 "A14  [3 identities]  ((x -> y) -> z) = ((z -> y) -> x)"));

  const fs::path rep = fs::temp_directory_path() / "zlab_cli_classify.json";
  CliResult r2 = cli({"classify", "--report", rep.string()});
  CHECK(r2.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(slurp(rep));
  CHECK(doc["version"] == "0.1.0");
  CHECK(doc["term_count"] == 12);
  CHECK(doc["identity_count"] == 66);
  CHECK(doc["class_count"] == 14);
  REQUIRE(doc["classes"].size() == 14);
  CHECK(doc["classes"][0]["label"] == "A1");
  CHECK(doc["classes"][0]["size"] == 6);
  std::size_t total = 0;
  for (const auto& c : doc["classes"]) total += c["members"].size();
  CHECK(total == 66);
  fs::remove(rep);
}

TEST_CASE("poset: restricted five-node diagram") {
  CliResult r = cli({"poset", "--nodes", "T,SL,BA,S14,S"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "edges (5), lower < upper:"));
  CHECK(contains(r.out, "  T < SL\n"));
  CHECK(contains(r.out, "  T < BA\n"));
  CHECK(contains(r.out, "  SL < S14  [separating table: m4b]\n"));
  CHECK(contains(r.out, "  BA < S\n"));
  CHECK(contains(r.out, "  S14 < S\n"));
  CHECK(contains(r.out, "discrepancies: none"));
  CHECK(contains(r.out, "digraph containment {"));
  CHECK(contains(r.out, "\"S14\" -> \"S\";"));
}

TEST_CASE("poset: main diagram report") {
  const fs::path rep = fs::temp_directory_path() / "zlab_cli_poset.json";
  CliResult r = cli({"poset", "--report", rep.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "nodes (12): T SL BA A1 A2 A3 A4 A6 A9 A11 A14 I"));
  CHECK(contains(r.out, "edges (15), lower < upper:"));
  CHECK(contains(r.out, "discrepancies: none"));
  CHECK(contains(r.out, "discovered (14):"));
  CHECK(contains(r.out, "A6 strictly below A2"));

  const nlohmann::json doc = nlohmann::json::parse(slurp(rep));
  CHECK(doc["version"] == "0.1.0");
  CHECK(doc["budget"] == 3);
  REQUIRE(doc["nodes"].size() == 12);
  REQUIRE(doc["edges"].size() == 15);
  CHECK(doc["discrepancies"].empty());
  CHECK(doc["discovered"].size() == 14);
  CHECK(doc["edges"][0]["lower"] == "T");
  CHECK(doc["edges"][0]["upper"] == "SL");
  CHECK(doc["edges"][0]["strictness"]["source"] == "search");
  // The A11 < A14 edge is separated by the embedded four-element table.
  const auto& e13 = doc["edges"][13];
  CHECK(e13["lower"] == "A11");
  CHECK(e13["upper"] == "A14");
  CHECK(e13["strictness"]["source"] == "m4b");
  const nlohmann::json m4b_rows = {
      {0, 1, 2, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {3, 3, 3, 3}};
  CHECK(e13["strictness"]["table"]["rows"] == m4b_rows);
  // Relation matrix entries are one of the three status strings.
  REQUIRE(doc["relation"].size() == 12);
  for (const auto& row : doc["relation"]) {
    REQUIRE(row.size() == 12);
    for (const auto& cell : row) {
      const std::string s = cell.get<std::string>();
      const bool known = s == "subset-consistent" || s == "not-subset" ||
                         s == "unknown";
      CHECK(known);
    }
  }
  fs::remove(rep);
}

TEST_CASE("poset: node validation") {
  CHECK(cli({"poset", "--nodes", "T,NOPE"}).code == 2);
  CHECK(cli({"poset", "--nodes", "T,T"}).code == 2);
  CliResult single = cli({"poset", "--nodes", "I", "--budget", "2"});
  CHECK(single.code == 0);
  CHECK(contains(single.out, "edges (0)"));
}

TEST_CASE("reproduce: default run passes everything") {
  CliResult r = cli({"reproduce"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "reproduction at budget 3 (deep separations at 4)"));
  CHECK(contains(r.out,
                 "classification: 12 terms, 66 identities, 14 classes  [ok]"));
  CHECK(contains(r.out, "witnesses: 9 tables re-verified  [ok]"));
  CHECK(contains(
      r.out,
      "claims: 109 checked, 109 pass, 0 fail, 0 insufficient-budget  [ok]"));
  CHECK(contains(r.out, "main poset: 15 edges, 0 discrepancies  [ok]"));
  CHECK(contains(r.out, "restricted poset: 5 edges, 0 discrepancies  [ok]"));
  CHECK(contains(r.out, "overall: PASS"));
}

TEST_CASE("reproduce: reports are byte-identical across runs and workers") {
  const fs::path a = fs::temp_directory_path() / "zlab_cli_rep_a.json";
  const fs::path b = fs::temp_directory_path() / "zlab_cli_rep_b.json";
  const fs::path c = fs::temp_directory_path() / "zlab_cli_rep_c.json";
  CHECK(cli({"reproduce", "--report", a.string()}).code == 0);
  CHECK(cli({"reproduce", "--report", b.string()}).code == 0);
  CHECK(cli({"reproduce", "--report", c.string(), "--jobs", "4"}).code == 0);
  const std::string sa = slurp(a), sb = slurp(b), sc = slurp(c);
  CHECK(sa == sb);
  CHECK(sa == sc);

  const nlohmann::json doc = nlohmann::json::parse(sa);
  CHECK(doc["version"] == "0.1.0");
  CHECK(doc["budget"] == 3);
  CHECK(doc["deep_budget"] == 4);
  CHECK(doc["overall_pass"] == true);
  CHECK(doc["classification"]["pass"] == true);
  REQUIRE(doc["witnesses"].size() == 9);
  CHECK(doc["witnesses"][0]["id"] == "2z");
  for (const auto& w : doc["witnesses"]) CHECK(w["pass"] == true);
  REQUIRE(doc["claims"].size() == 109);
  for (const auto& cl : doc["claims"]) CHECK(cl["status"] == "pass");
  CHECK(doc["main_poset"]["edges"].size() == 15);
  CHECK(doc["restricted_poset"]["edges"].size() == 5);

  // Spot-check one witness-only distinctness entry.
  bool found = false;
  for (const auto& cl : doc["claims"])
    if (cl["id"] == "sep:A9-A6") {
      found = true;
      CHECK(cl["kind"] == "distinctness");
      CHECK(cl["witness"] == "m5a");
      CHECK(cl["evidence_size"] == 0);
      CHECK(cl["searched_size"] == 0);
    }
  CHECK(found);
  fs::remove(a);
  fs::remove(b);
  fs::remove(c);
}

TEST_CASE("reproduce: an undersized budget is reported honestly") {
  CliResult r = cli({"reproduce", "--budget", "2", "--deep-budget", "2"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "insufficient-budget"));
  CHECK(contains(r.out, "overall: FAIL"));
}

TEST_CASE("report files that cannot be written are input errors") {
  CliResult r = cli({"classify", "--report", "/no/such/dir/x.json"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "cannot write report file"));
}
