#ifndef ZLAB_TERM_HPP
#define ZLAB_TERM_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zlab {

// A term over the binary operation -> and the constant 0.  Surface syntax
// also offers the postfix prime (t' == t -> 0) and the infix meet
// (a & b == (a -> b')'); both are desugared at parse time, so a Term is
// always a tree of Zero / Var / Arrow nodes only.
class Term {
 public:
  enum class Kind : unsigned char { Zero, Var, Arrow };

  Term() : Term(zero()) {}

  static Term zero();
  static Term var(std::string name);
  static Term arrow(Term left, Term right);
  // t' == t -> 0
  static Term prime(Term t);
  // a & b == (a -> b')'
  static Term meet(Term a, Term b);

  Kind kind() const { return node_->kind; }
  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  // Var nodes only.
  const std::string& var_name() const;
  // Arrow nodes only.
  Term left() const;
  Term right() const;

  bool operator==(const Term& other) const;
  // Total structural order: preorder traversal, token order
  // Zero < Var (by name) < Arrow.
  std::strong_ordering operator<=>(const Term& other) const;

  std::size_t node_count() const;
  // Free variables in alphabetical order.
  std::set<std::string> variables() const;
  // Applies a variable renaming; names absent from the map are kept.
  Term rename(const std::map<std::string, std::string>& renaming) const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    std::string name;  // Var only
    NodePtr left, right;  // Arrow only
  };

  explicit Term(NodePtr node) : node_(std::move(node)) {}

  NodePtr node_;
};

// An equation lhs ~ rhs, treated as an unordered pair of terms.
struct Identity {
  Term lhs, rhs;

  // Symmetric equality: p~q equals q~p.
  bool operator==(const Identity& other) const;
  // Total order on the side-sorted pair (used for deterministic output).
  std::strong_ordering operator<=>(const Identity& other) const;

  std::set<std::string> variables() const;
  Identity rename(const std::map<std::string, std::string>& renaming) const;
};

// A bijective variable renaming.
using Renaming = std::map<std::string, std::string>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset);
  // Byte offset into the input at which parsing failed.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (whitespace insignificant, '#' starts a line comment):
//   identity := term ("=" | "≈") term
//   term     := meet ( "->" term )?          right-associative
//   meet     := post ( "&" post )*           left-associative
//   post     := atom ( "'" )*
//   atom     := variable | "0" | "(" term ")"
//   variable := [a-z][a-z0-9]*
Term parse_term(std::string_view text);
Identity parse_identity(std::string_view text);

// Fully parenthesized rendering; parse_term(render_term(t)) == t.
// Arrow nodes always print as "(l -> r)"; atoms print bare.
std::string render_term(const Term& t);
// Renders "lhs = rhs" (accepts "≈" on input, always emits "=").
std::string render_identity(const Identity& id);

// The 12 product terms in three fixed distinct variables: for each of the
// six permutations (v1,v2,v3) of vars, first v1->(v2->v3) then (v1->v2)->v3.
// Permutations are enumerated in lexicographic order of (v1,v2,v3).
std::vector<Term> generate_associative_terms(
    const std::vector<std::string>& vars = {"x", "y", "z"});

// All 66 unordered pairs of distinct terms from generate_associative_terms,
// in pair-index order (0,1),(0,2),...,(10,11).
std::vector<Identity> generate_associative_identities();

// Minimum of { (s·p, s·q), (s·q, s·p) } over all bijections s of {x,y,z},
// comparing pairs lexicographically with side-sorted members.  Idempotent;
// invariant under renaming of the input and swap of sides.  Requires the
// identity's variables to be contained in {x,y,z}.
Identity canonical_identity(const Identity& id);

struct IdentityClass {
  Identity canonical;
  std::vector<Identity> members;
  // Label of the distinguished representative contained in this class
  // ("A1".."A14"), if any.
  std::optional<std::string> sigma_label;
};

// Partitions ids by canonical_identity; classes sorted by canonical.
std::vector<IdentityClass> classify_identities(
    const std::vector<Identity>& ids);

// The 14 representative identities A1..A14, in label order.
const std::vector<std::pair<std::string, Identity>>& sigma_identities();

}  // namespace zlab

#endif  // ZLAB_TERM_HPP
