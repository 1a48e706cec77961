#include "ulogic/formula.hpp"

#include <algorithm>
#include <cctype>

namespace ulogic {

namespace {

FormulaPtr node(NodeKind kind, std::string name, FormulaPtr l, FormulaPtr r) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  n->name = std::move(name);
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

}  // namespace

FormulaPtr atom(std::string name) { return node(NodeKind::Atom, std::move(name), nullptr, nullptr); }
FormulaPtr meta(std::string name) { return node(NodeKind::Meta, std::move(name), nullptr, nullptr); }
FormulaPtr falsum() { return node(NodeKind::False, {}, nullptr, nullptr); }
FormulaPtr verum() { return node(NodeKind::True, {}, nullptr, nullptr); }
FormulaPtr land(FormulaPtr l, FormulaPtr r) { return node(NodeKind::And, {}, std::move(l), std::move(r)); }
FormulaPtr lor(FormulaPtr l, FormulaPtr r) { return node(NodeKind::Or, {}, std::move(l), std::move(r)); }
FormulaPtr lnot(FormulaPtr f) { return node(NodeKind::Not, {}, std::move(f), nullptr); }
FormulaPtr implies(FormulaPtr l, FormulaPtr r) { return node(NodeKind::Implies, {}, std::move(l), std::move(r)); }
FormulaPtr iff(FormulaPtr l, FormulaPtr r) { return node(NodeKind::Iff, {}, std::move(l), std::move(r)); }
FormulaPtr conditional(FormulaPtr phi, FormulaPtr psi) {
  return node(NodeKind::Cond, {}, std::move(phi), std::move(psi));
}

namespace {

enum class Tok { End, LParen, RParen, Amp, OrOp, Tilde, Arrow, DArrow, Bar, Zero, One, Ident, MetaVar };

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string value;
  std::size_t tok_pos = 0;
  bool allow_meta = false;

  explicit Lexer(std::string_view t, bool metas) : text(t), allow_meta(metas) { next(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw FormulaParseError(msg + " at position " + std::to_string(at), at);
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    value.clear();
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    switch (c) {
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      case '&': tok = Tok::Amp; ++pos; return;
      case '~': tok = Tok::Tilde; ++pos; return;
      case '|': tok = Tok::Bar; ++pos; return;
      case '\\':
        if (pos + 1 < text.size() && text[pos + 1] == '/') {
          tok = Tok::OrOp;
          pos += 2;
          return;
        }
        fail("stray '\\'", pos);
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          tok = Tok::Arrow;
          pos += 2;
          return;
        }
        fail("stray '-'", pos);
      case '<':
        if (pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') {
          tok = Tok::DArrow;
          pos += 3;
          return;
        }
        fail("stray '<'", pos);
      case '0':
      case '1': {
        if (pos + 1 < text.size() && ident_char(text[pos + 1]))
          fail("malformed constant", pos);
        tok = c == '0' ? Tok::Zero : Tok::One;
        ++pos;
        return;
      }
      case '$': {
        if (!allow_meta) fail("meta variables are not allowed here", pos);
        ++pos;
        if (pos >= text.size() || !ident_start(text[pos])) fail("malformed meta variable", pos);
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        tok = Tok::MetaVar;
        value.assign(text.substr(start, pos - start));
        return;
      }
      default:
        if (ident_start(c)) {
          std::size_t start = pos;
          while (pos < text.size() && ident_char(text[pos])) ++pos;
          tok = Tok::Ident;
          value.assign(text.substr(start, pos - start));
          return;
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }
  }
};

struct Parser {
  Lexer lex;

  Parser(std::string_view text, bool metas) : lex(text, metas) {}

  FormulaPtr run() {
    FormulaPtr f = parse_iff();
    if (lex.tok != Tok::End) lex.fail("trailing input", lex.tok_pos);
    return f;
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_imp();
    while (lex.tok == Tok::DArrow) {
      lex.next();
      f = iff(std::move(f), parse_imp());
    }
    return f;
  }

  FormulaPtr parse_imp() {
    FormulaPtr f = parse_cond();
    if (lex.tok == Tok::Arrow) {
      lex.next();
      return implies(std::move(f), parse_imp());
    }
    return f;
  }

  FormulaPtr parse_cond() {
    FormulaPtr f = parse_or();
    while (lex.tok == Tok::Bar) {
      lex.next();
      f = conditional(std::move(f), parse_or());
    }
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (lex.tok == Tok::OrOp) {
      lex.next();
      f = lor(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (lex.tok == Tok::Amp) {
      lex.next();
      f = land(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    switch (lex.tok) {
      case Tok::Tilde:
        lex.next();
        return lnot(parse_unary());
      case Tok::Zero:
        lex.next();
        return falsum();
      case Tok::One:
        lex.next();
        return verum();
      case Tok::Ident: {
        FormulaPtr f = atom(lex.value);
        lex.next();
        return f;
      }
      case Tok::MetaVar: {
        FormulaPtr f = meta(lex.value);
        lex.next();
        return f;
      }
      case Tok::LParen: {
        lex.next();
        FormulaPtr f = parse_iff();
        if (lex.tok != Tok::RParen) lex.fail("expected ')'", lex.tok_pos);
        lex.next();
        return f;
      }
      default:
        lex.fail("expected a formula", lex.tok_pos);
    }
  }
};

// Binding strength, loosest first; unary and leaf nodes rank above all
// binary operators.
int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Iff: return 1;
    case NodeKind::Implies: return 2;
    case NodeKind::Cond: return 3;
    case NodeKind::Or: return 4;
    case NodeKind::And: return 5;
    default: return 6;
  }
}

bool right_associative(NodeKind k) { return k == NodeKind::Implies; }

const char* op_text(NodeKind k) {
  switch (k) {
    case NodeKind::Iff: return " <-> ";
    case NodeKind::Implies: return " -> ";
    case NodeKind::Cond: return " | ";
    case NodeKind::Or: return " \\/ ";
    case NodeKind::And: return " & ";
    default: return "";
  }
}

void print_into(const FormulaPtr& f, std::string& out) {
  switch (f->kind) {
    case NodeKind::Atom: out += f->name; return;
    case NodeKind::Meta: out += '$'; out += f->name; return;
    case NodeKind::False: out += '0'; return;
    case NodeKind::True: out += '1'; return;
    case NodeKind::Not: {
      out += '~';
      bool parens = precedence(f->left->kind) < 6;
      if (parens) out += '(';
      print_into(f->left, out);
      if (parens) out += ')';
      return;
    }
    default: {
      int p = precedence(f->kind);
      bool rassoc = right_associative(f->kind);
      int lp = precedence(f->left->kind);
      int rp = precedence(f->right->kind);
      bool lparens = rassoc ? lp <= p : lp < p;
      bool rparens = rassoc ? rp < p : rp <= p;
      if (lparens) out += '(';
      print_into(f->left, out);
      if (lparens) out += ')';
      out += op_text(f->kind);
      if (rparens) out += '(';
      print_into(f->right, out);
      if (rparens) out += ')';
      return;
    }
  }
}

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(text, false).run(); }
FormulaPtr parse_schema(std::string_view text) { return Parser(text, true).run(); }

std::string print(const FormulaPtr& f) {
  std::string out;
  print_into(f, out);
  return out;
}

FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->kind) {
    case NodeKind::Atom:
    case NodeKind::Meta:
    case NodeKind::False:
      return f;
    case NodeKind::True:
      return implies(falsum(), falsum());
    case NodeKind::Not: {
      FormulaPtr l = desugar(f->left);
      return l == f->left ? f : lnot(std::move(l));
    }
    case NodeKind::Iff: {
      FormulaPtr l = desugar(f->left);
      FormulaPtr r = desugar(f->right);
      return land(implies(l, r), implies(r, l));
    }
    case NodeKind::Cond: {
      FormulaPtr phi = desugar(f->left);
      FormulaPtr psi = desugar(f->right);
      return implies(psi, land(psi, phi));
    }
    default: {
      FormulaPtr l = desugar(f->left);
      FormulaPtr r = desugar(f->right);
      if (l == f->left && r == f->right) return f;
      return node(f->kind, {}, std::move(l), std::move(r));
    }
  }
}

bool is_core(const FormulaPtr& f) {
  switch (f->kind) {
    case NodeKind::Atom:
    case NodeKind::Meta:
    case NodeKind::False:
      return true;
    case NodeKind::True:
    case NodeKind::Iff:
    case NodeKind::Cond:
      return false;
    case NodeKind::Not:
      return is_core(f->left);
    default:
      return is_core(f->left) && is_core(f->right);
  }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::Atom:
    case NodeKind::Meta:
      return a->name == b->name;
    case NodeKind::False:
    case NodeKind::True:
      return true;
    case NodeKind::Not:
      return equal(a->left, b->left);
    default:
      return equal(a->left, b->left) && equal(a->right, b->right);
  }
}

namespace {

void collect_names(const FormulaPtr& f, NodeKind kind, std::set<std::string>& out) {
  if (f->kind == kind) out.insert(f->name);
  if (f->left) collect_names(f->left, kind, out);
  if (f->right) collect_names(f->right, kind, out);
}

void collect_subformulas(const FormulaPtr& f, std::set<std::string>& seen, std::vector<FormulaPtr>& out) {
  if (f->left) collect_subformulas(f->left, seen, out);
  if (f->right) collect_subformulas(f->right, seen, out);
  if (seen.insert(print(f)).second) out.push_back(f);
}

}  // namespace

std::set<std::string> atom_names(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_names(f, NodeKind::Atom, out);
  return out;
}

std::set<std::string> meta_names(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_names(f, NodeKind::Meta, out);
  return out;
}

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
  std::set<std::string> seen;
  std::vector<FormulaPtr> out;
  collect_subformulas(f, seen, out);
  return out;
}

FormulaPtr substitute(const FormulaPtr& schema, const Bindings& bindings) {
  switch (schema->kind) {
    case NodeKind::Meta: {
      auto it = bindings.find(schema->name);
      if (it == bindings.end())
        throw std::invalid_argument("no binding for meta variable $" + schema->name);
      return it->second;
    }
    case NodeKind::Atom:
    case NodeKind::False:
    case NodeKind::True:
      return schema;
    case NodeKind::Not:
      return lnot(substitute(schema->left, bindings));
    default:
      return node(schema->kind, {}, substitute(schema->left, bindings),
                  substitute(schema->right, bindings));
  }
}

namespace {

bool match_core(const FormulaPtr& s, const FormulaPtr& f, Bindings& sigma) {
  if (s->kind == NodeKind::Meta) {
    auto [it, inserted] = sigma.emplace(s->name, f);
    return inserted || equal(it->second, f);
  }
  if (s->kind != f->kind) return false;
  switch (s->kind) {
    case NodeKind::Atom:
      return s->name == f->name;
    case NodeKind::False:
      return true;
    case NodeKind::Not:
      return match_core(s->left, f->left, sigma);
    default:
      return match_core(s->left, f->left, sigma) && match_core(s->right, f->right, sigma);
  }
}

}  // namespace

std::optional<Bindings> match_schema(const FormulaPtr& schema, const FormulaPtr& f) {
  Bindings sigma;
  if (match_core(desugar(schema), desugar(f), sigma)) return sigma;
  return std::nullopt;
}

std::string pair_key(const FormulaPtr& l, const FormulaPtr& r) {
  std::string a = print(desugar(l));
  std::string b = print(desugar(r));
  if (b < a) std::swap(a, b);
  a += '\x1f';
  a += b;
  return a;
}

}  // namespace ulogic
