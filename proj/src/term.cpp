#include "zlab/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace zlab {

Term Term::zero() {
  static const NodePtr node = std::make_shared<Node>(Node{Kind::Zero, {}, nullptr, nullptr});
  return Term(node);
}

Term Term::var(std::string name) {
  return Term(std::make_shared<Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

Term Term::arrow(Term left, Term right) {
  return Term(std::make_shared<Node>(
      Node{Kind::Arrow, {}, std::move(left.node_), std::move(right.node_)}));
}

Term Term::prime(Term t) { return arrow(std::move(t), zero()); }

Term Term::meet(Term a, Term b) {
  return prime(arrow(std::move(a), prime(std::move(b))));
}

const std::string& Term::var_name() const { return node_->name; }

Term Term::left() const { return Term(node_->left); }

Term Term::right() const { return Term(node_->right); }

namespace {

int kind_rank(Term::Kind k) {
  switch (k) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return 1;
    case Term::Kind::Arrow: return 2;
  }
  return 3;
}

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  if (int d = kind_rank(a.kind()) - kind_rank(b.kind()); d != 0)
    return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  switch (a.kind()) {
    case Term::Kind::Zero:
      return std::strong_ordering::equal;
    case Term::Kind::Var:
      return a.var_name() <=> b.var_name();
    case Term::Kind::Arrow: {
      if (auto c = compare_terms(a.left(), b.left()); c != 0) return c;
      return compare_terms(a.right(), b.right());
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  return compare_terms(*this, other) == std::strong_ordering::equal;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  return compare_terms(*this, other);
}

std::size_t Term::node_count() const {
  if (!is_arrow()) return 1;
  return 1 + left().node_count() + right().node_count();
}

namespace {

void collect_variables(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: return;
    case Term::Kind::Var: out.insert(t.var_name()); return;
    case Term::Kind::Arrow:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      return;
  }
}

}  // namespace

std::set<std::string> Term::variables() const {
  std::set<std::string> out;
  collect_variables(*this, out);
  return out;
}

Term Term::rename(const std::map<std::string, std::string>& renaming) const {
  switch (kind()) {
    case Kind::Zero: return zero();
    case Kind::Var: {
      auto it = renaming.find(var_name());
      return it == renaming.end() ? *this : var(it->second);
    }
    case Kind::Arrow:
      return arrow(left().rename(renaming), right().rename(renaming));
  }
  return *this;
}

bool Identity::operator==(const Identity& other) const {
  return (lhs == other.lhs && rhs == other.rhs) ||
         (lhs == other.rhs && rhs == other.lhs);
}

namespace {

std::pair<const Term*, const Term*> sorted_sides(const Identity& id) {
  if (id.lhs <= id.rhs) return {&id.lhs, &id.rhs};
  return {&id.rhs, &id.lhs};
}

}  // namespace

std::strong_ordering Identity::operator<=>(const Identity& other) const {
  auto [a1, a2] = sorted_sides(*this);
  auto [b1, b2] = sorted_sides(other);
  if (auto c = *a1 <=> *b1; c != 0) return c;
  return *a2 <=> *b2;
}

std::set<std::string> Identity::variables() const {
  std::set<std::string> out = lhs.variables();
  out.merge(rhs.variables());
  return out;
}

Identity Identity::rename(const std::map<std::string, std::string>& renaming) const {
  return Identity{lhs.rename(renaming), rhs.rename(renaming)};
}

ParseError::ParseError(std::string message, std::size_t offset)
    : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

// Recursive-descent parser over the grammar in the header.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_full_term() {
    Term t = parse_term();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return t;
  }

  Identity parse_full_identity() {
    Term lhs = parse_term();
    skip_space();
    if (!eat("=") && !eat("≈"))
      throw ParseError("expected '=' or '≈' between the two sides", pos_);
    Term rhs = parse_term();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return Identity{std::move(lhs), std::move(rhs)};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool eat(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Term parse_term() {
    Term lhs = parse_meet();
    if (eat("->")) return Term::arrow(std::move(lhs), parse_term());
    return lhs;
  }

  Term parse_meet() {
    Term t = parse_post();
    while (true) {
      // '&' but not '&&'; the grammar has no '&&', so a plain match is fine.
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        t = Term::meet(std::move(t), parse_post());
      } else {
        break;
      }
    }
    return t;
  }

  Term parse_post() {
    Term t = parse_atom();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '\'') {
        ++pos_;
        t = Term::prime(std::move(t));
      } else {
        break;
      }
    }
    return t;
  }

  Term parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return Term::zero();
    }
    if (c == '(') {
      ++pos_;
      Term t = parse_term();
      if (!eat(")")) throw ParseError("expected ')'", pos_);
      return t;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9'))
          ++pos_;
        else
          break;
      }
      return Term::var(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError("unexpected token", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse_full_term(); }

Identity parse_identity(std::string_view text) {
  return Parser(text).parse_full_identity();
}

std::string render_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return "0";
    case Term::Kind::Var: return t.var_name();
    case Term::Kind::Arrow:
      return "(" + render_term(t.left()) + " -> " + render_term(t.right()) + ")";
  }
  return {};
}

std::string render_identity(const Identity& id) {
  return render_term(id.lhs) + " = " + render_term(id.rhs);
}

std::vector<Term> generate_associative_terms(const std::vector<std::string>& vars) {
  if (vars.size() != 3)
    throw std::invalid_argument("generate_associative_terms needs exactly 3 variables");
  if (std::set<std::string>(vars.begin(), vars.end()).size() != 3)
    throw std::invalid_argument("generate_associative_terms needs distinct variables");

  std::vector<std::string> perm = vars;
  std::sort(perm.begin(), perm.end());
  std::vector<Term> out;
  out.reserve(12);
  do {
    Term a = Term::var(perm[0]), b = Term::var(perm[1]), c = Term::var(perm[2]);
    out.push_back(Term::arrow(a, Term::arrow(b, c)));
    out.push_back(Term::arrow(Term::arrow(a, b), c));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Identity> generate_associative_identities() {
  std::vector<Term> terms = generate_associative_terms();
  std::vector<Identity> out;
  out.reserve(66);
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      out.push_back(Identity{terms[i], terms[j]});
  return out;
}

namespace {

const std::array<std::array<const char*, 3>, 6>& xyz_permutations() {
  static const std::array<std::array<const char*, 3>, 6> perms = {{
      {"x", "y", "z"}, {"x", "z", "y"}, {"y", "x", "z"},
      {"y", "z", "x"}, {"z", "x", "y"}, {"z", "y", "x"},
  }};
  return perms;
}

}  // namespace

Identity canonical_identity(const Identity& id) {
  static const std::set<std::string> alphabet = {"x", "y", "z"};
  for (const std::string& v : id.variables())
    if (!alphabet.contains(v))
      throw std::invalid_argument(
          "canonical_identity supports variables x, y, z only; got '" + v + "'");

  std::optional<Identity> best;
  for (const auto& p : xyz_permutations()) {
    Renaming sigma{{"x", p[0]}, {"y", p[1]}, {"z", p[2]}};
    Term l = id.lhs.rename(sigma), r = id.rhs.rename(sigma);
    for (Identity cand : {Identity{l, r}, Identity{r, l}}) {
      if (cand.rhs < cand.lhs) std::swap(cand.lhs, cand.rhs);
      if (!best || cand.lhs < best->lhs ||
          (cand.lhs == best->lhs && cand.rhs < best->rhs))
        best = std::move(cand);
    }
  }
  return *best;
}

std::vector<IdentityClass> classify_identities(const std::vector<Identity>& ids) {
  std::map<std::string, IdentityClass> by_canonical;
  for (const Identity& id : ids) {
    Identity canon = canonical_identity(id);
    auto [it, inserted] =
        by_canonical.try_emplace(render_identity(canon), IdentityClass{});
    if (inserted) it->second.canonical = canon;
    it->second.members.push_back(id);
  }
  for (const auto& [label, sigma] : sigma_identities()) {
    Identity canon = canonical_identity(sigma);
    auto it = by_canonical.find(render_identity(canon));
    if (it != by_canonical.end()) it->second.sigma_label = label;
  }
  std::vector<IdentityClass> out;
  out.reserve(by_canonical.size());
  for (auto& [key, cls] : by_canonical) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(),
            [](const IdentityClass& a, const IdentityClass& b) {
              return a.canonical < b.canonical;
            });
  return out;
}

const std::vector<std::pair<std::string, Identity>>& sigma_identities() {
  static const std::vector<std::pair<std::string, Identity>> sigma = [] {
    const std::pair<const char*, const char*> raw[] = {
        {"A1", "x -> (y -> z) = (x -> y) -> z"},
        {"A2", "x -> (y -> z) = x -> (z -> y)"},
        {"A3", "x -> (y -> z) = (x -> z) -> y"},
        {"A4", "x -> (y -> z) = y -> (x -> z)"},
        {"A5", "x -> (y -> z) = (y -> x) -> z"},
        {"A6", "x -> (y -> z) = y -> (z -> x)"},
        {"A7", "x -> (y -> z) = (y -> z) -> x"},
        {"A8", "x -> (y -> z) = (z -> x) -> y"},
        {"A9", "x -> (y -> z) = z -> (y -> x)"},
        {"A10", "x -> (y -> z) = (z -> y) -> x"},
        {"A11", "(x -> y) -> z = (x -> z) -> y"},
        {"A12", "(x -> y) -> z = (y -> x) -> z"},
        {"A13", "(x -> y) -> z = (y -> z) -> x"},
        {"A14", "(x -> y) -> z = (z -> y) -> x"},
    };
    std::vector<std::pair<std::string, Identity>> out;
    for (const auto& [label, text] : raw)
      out.emplace_back(label, parse_identity(text));
    return out;
  }();
  return sigma;
}

}  // namespace zlab
