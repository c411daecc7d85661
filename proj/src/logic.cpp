#include "monocat/logic.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "monocat/bridge.hpp"
#include "monocat/errors.hpp"

namespace monocat {

// ---------------------------------------------------------------------
// Lexer and parser

namespace {

struct Token {
  enum class Type { Ident, LParen, RParen, Comma, Dot, End };
  Type type = Type::End;
  std::string text;
  int line = 0;
  int column = 0;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex_line(const std::string& line, int line_no,
                            const std::string& filename) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int column = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      break;
    }
    if (c == '(') {
      tokens.push_back({Token::Type::LParen, "(", line_no, column});
      ++i;
    } else if (c == ')') {
      tokens.push_back({Token::Type::RParen, ")", line_no, column});
      ++i;
    } else if (c == ',') {
      tokens.push_back({Token::Type::Comma, ",", line_no, column});
      ++i;
    } else if (c == '.') {
      tokens.push_back({Token::Type::Dot, ".", line_no, column});
      ++i;
    } else if (is_ident_char(c)) {
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) {
        ++j;
      }
      tokens.push_back({Token::Type::Ident, line.substr(i, j - i), line_no,
                        column});
      i = j;
    } else {
      throw ParseError(fmt::format("{}:{}:{}: unexpected character '{}'",
                                   filename, line_no, column, c),
                       line_no, column);
    }
  }
  tokens.push_back({Token::Type::End, "", line_no,
                    static_cast<int>(line.size()) + 1});
  return tokens;
}

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "and" || s == "or" ||
         s == "implies" || s == "iff" || s == "not";
}

bool is_constant_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'e') {
    return false;
  }
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::string& filename,
         std::map<std::string, std::size_t>& predicate_arity,
         std::map<std::string, std::size_t>& function_arity)
      : tokens_(std::move(tokens)),
        filename_(filename),
        predicate_arity_(predicate_arity),
        function_arity_(function_arity) {}

  Formula parse() {
    Formula f = formula();
    expect(Token::Type::End, "end of line");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& what) {
    throw ParseError(fmt::format("{}:{}:{}: {}", filename_, at.line, at.column,
                                 what),
                     at.line, at.column);
  }

  Token expect(Token::Type type, const std::string& what) {
    if (peek().type != type) {
      fail(peek(), fmt::format("expected {}", what));
    }
    return advance();
  }

  Formula formula() {
    if (peek().type == Token::Type::Ident &&
        (peek().text == "forall" || peek().text == "exists")) {
      const Token quant = advance();
      const Token var = expect(Token::Type::Ident, "a variable name");
      if (is_keyword(var.text)) {
        fail(var, fmt::format("'{}' cannot be a variable", var.text));
      }
      if (is_constant_name(var.text)) {
        fail(var, fmt::format("'{}' is reserved for constants", var.text));
      }
      expect(Token::Type::Dot, "'.'");
      bound_.push_back(var.text);
      Formula body = formula();
      bound_.pop_back();
      Formula f;
      f.kind = quant.text == "forall" ? Formula::Kind::Forall
                                      : Formula::Kind::Exists;
      f.name = var.text;
      f.children.push_back(std::move(body));
      return f;
    }
    return iff_expr();
  }

  Formula iff_expr() {
    Formula left = implies_expr();
    while (peek().type == Token::Type::Ident && peek().text == "iff") {
      advance();
      Formula right = implies_expr();
      Formula f;
      f.kind = Formula::Kind::Iff;
      f.children = {std::move(left), std::move(right)};
      left = std::move(f);
    }
    return left;
  }

  Formula implies_expr() {
    Formula left = or_expr();
    if (peek().type == Token::Type::Ident && peek().text == "implies") {
      advance();
      Formula right = implies_expr();  // right associative
      Formula f;
      f.kind = Formula::Kind::Implies;
      f.children = {std::move(left), std::move(right)};
      return f;
    }
    return left;
  }

  Formula or_expr() {
    Formula left = and_expr();
    while (peek().type == Token::Type::Ident && peek().text == "or") {
      advance();
      Formula right = and_expr();
      Formula f;
      f.kind = Formula::Kind::Or;
      f.children = {std::move(left), std::move(right)};
      left = std::move(f);
    }
    return left;
  }

  Formula and_expr() {
    Formula left = unary();
    while (peek().type == Token::Type::Ident && peek().text == "and") {
      advance();
      Formula right = unary();
      Formula f;
      f.kind = Formula::Kind::And;
      f.children = {std::move(left), std::move(right)};
      left = std::move(f);
    }
    return left;
  }

  Formula unary() {
    if (peek().type == Token::Type::Ident && peek().text == "not") {
      advance();
      Formula f;
      f.kind = Formula::Kind::Not;
      f.children.push_back(unary());
      return f;
    }
    if (peek().type == Token::Type::LParen) {
      advance();
      Formula f = formula();
      expect(Token::Type::RParen, "')'");
      return f;
    }
    if (peek().type == Token::Type::Ident) {
      if (peek().text == "forall" || peek().text == "exists") {
        fail(peek(), "quantifiers used as operands must be parenthesized");
      }
      if (is_keyword(peek().text)) {
        fail(peek(), fmt::format("unexpected keyword '{}'", peek().text));
      }
      return atom();
    }
    fail(peek(), "expected a formula");
  }

  Formula atom() {
    const Token name = advance();
    expect(Token::Type::LParen, "'(' after a predicate name");
    std::vector<Term> args;
    args.push_back(term());
    while (peek().type == Token::Type::Comma) {
      advance();
      args.push_back(term());
    }
    expect(Token::Type::RParen, "')'");

    Formula f;
    f.args = std::move(args);
    if (name.text == "eq") {
      if (f.args.size() != 2) {
        fail(name, "eq takes exactly two arguments");
      }
      f.kind = Formula::Kind::Equal;
      return f;
    }
    f.kind = Formula::Kind::Atom;
    f.name = name.text;
    record_arity(predicate_arity_, name, f.args.size(), "predicate");
    return f;
  }

  Term term() {
    const Token name = expect(Token::Type::Ident, "a term");
    if (is_keyword(name.text)) {
      fail(name, fmt::format("unexpected keyword '{}'", name.text));
    }
    if (peek().type == Token::Type::LParen) {
      advance();
      Term t;
      t.kind = Term::Kind::Apply;
      t.name = name.text;
      t.args.push_back(term());
      while (peek().type == Token::Type::Comma) {
        advance();
        t.args.push_back(term());
      }
      expect(Token::Type::RParen, "')'");
      record_arity(function_arity_, name, t.args.size(), "function");
      return t;
    }
    Term t;
    t.name = name.text;
    if (std::find(bound_.begin(), bound_.end(), name.text) != bound_.end()) {
      t.kind = Term::Kind::Variable;
    } else if (is_constant_name(name.text)) {
      t.kind = Term::Kind::Constant;
    } else {
      fail(name, fmt::format("unbound variable '{}'", name.text));
    }
    return t;
  }

  void record_arity(std::map<std::string, std::size_t>& table, const Token& name,
                    std::size_t arity, const std::string& what) {
    auto [it, inserted] = table.emplace(name.text, arity);
    if (!inserted && it->second != arity) {
      fail(name, fmt::format("arity mismatch for {} '{}': {} vs {}", what,
                             name.text, it->second, arity));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::string filename_;
  std::vector<std::string> bound_;
  std::map<std::string, std::size_t>& predicate_arity_;
  std::map<std::string, std::size_t>& function_arity_;
};

}  // namespace

std::vector<Formula> parse_axioms(const std::string& text,
                                  const std::string& filename) {
  std::vector<Formula> axioms;
  std::map<std::string, std::size_t> predicate_arity;
  std::map<std::string, std::size_t> function_arity;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = lex_line(line, line_no, filename);
    if (tokens.size() == 1) {
      continue;  // blank or comment-only line
    }
    Parser parser(std::move(tokens), filename, predicate_arity, function_arity);
    axioms.push_back(parser.parse());
  }
  return axioms;
}

// ---------------------------------------------------------------------
// Printing

std::string print_term(const Term& t) {
  if (t.kind != Term::Kind::Apply) {
    return t.name;
  }
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) {
      out += ", ";
    }
    out += print_term(t.args[i]);
  }
  return out + ")";
}

namespace {

int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

bool is_quantifier(const Formula& f) {
  return f.kind == Formula::Kind::Forall || f.kind == Formula::Kind::Exists;
}

bool is_binary(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return true;
    default:
      return false;
  }
}

std::string print_rec(const Formula& f);

// Operands of connectives: parenthesize quantifiers always, otherwise
// follow precedence; equal precedence binds on the associative side.
std::string print_operand(const Formula& child, int parent_prec,
                          bool assoc_side) {
  const bool parens = is_quantifier(child) ||
                      precedence(child) < parent_prec ||
                      (precedence(child) == parent_prec && !assoc_side);
  const std::string text = print_rec(child);
  return parens ? "(" + text + ")" : text;
}

std::string print_rec(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const std::string quant =
          f.kind == Formula::Kind::Forall ? "forall" : "exists";
      const Formula& body = f.children.front();
      std::string text = print_rec(body);
      if (is_binary(body)) {
        text = "(" + text + ")";
      }
      return fmt::format("{} {} . {}", quant, f.name, text);
    }
    case Formula::Kind::Not:
      return "not " + print_operand(f.children.front(), 5, true);
    case Formula::Kind::And:
      return print_operand(f.children[0], 4, true) + " and " +
             print_operand(f.children[1], 4, false);
    case Formula::Kind::Or:
      return print_operand(f.children[0], 3, true) + " or " +
             print_operand(f.children[1], 3, false);
    case Formula::Kind::Implies:
      return print_operand(f.children[0], 2, false) + " implies " +
             print_operand(f.children[1], 2, true);
    case Formula::Kind::Iff:
      return print_operand(f.children[0], 1, true) + " iff " +
             print_operand(f.children[1], 1, false);
    case Formula::Kind::Equal:
      return fmt::format("eq({}, {})", print_term(f.args[0]),
                         print_term(f.args[1]));
    case Formula::Kind::Atom: {
      std::string out = f.name + "(";
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) {
          out += ", ";
        }
        out += print_term(f.args[i]);
      }
      return out + ")";
    }
  }
  return "";
}

}  // namespace

std::string print_formula(const Formula& f) { return print_rec(f); }

// ---------------------------------------------------------------------
// Localization

namespace {

// Eliminates constants adjacent to variables in one argument list.
// Adjacency is judged on the list as written; a constant after a
// variable becomes tau1_<c>(x), one before a variable tau2_<c>(y).
std::vector<Term> eliminate_in_args(const std::vector<Term>& args,
                                    std::size_t axiom_index,
                                    std::vector<RewriteStep>& trace);

Term eliminate_in_term(const Term& t, std::size_t axiom_index,
                       std::vector<RewriteStep>& trace) {
  if (t.kind != Term::Kind::Apply) {
    return t;
  }
  Term out = t;
  out.args = eliminate_in_args(t.args, axiom_index, trace);
  return out;
}

std::vector<Term> eliminate_in_args(const std::vector<Term>& args,
                                    std::size_t axiom_index,
                                    std::vector<RewriteStep>& trace) {
  std::vector<Term> out;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    out.push_back(eliminate_in_term(args[i], axiom_index, trace));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].kind != Term::Kind::Constant) {
      continue;
    }
    Term replacement;
    if (i > 0 && args[i - 1].kind == Term::Kind::Variable) {
      replacement.kind = Term::Kind::Apply;
      replacement.name = "tau1_" + args[i].name;
      replacement.args = {args[i - 1]};
    } else if (i + 1 < args.size() &&
               args[i + 1].kind == Term::Kind::Variable) {
      replacement.kind = Term::Kind::Apply;
      replacement.name = "tau2_" + args[i].name;
      replacement.args = {args[i + 1]};
    } else {
      continue;  // leftover; detected afterwards
    }
    trace.push_back({axiom_index, "constant", print_term(args[i]),
                     print_term(replacement)});
    out[i] = std::move(replacement);
  }
  return out;
}

void collect_leftover_constants(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Constant) {
    out.insert(t.name);
  }
  for (const Term& arg : t.args) {
    collect_leftover_constants(arg, out);
  }
}

Formula eliminate_constants(const Formula& f, std::size_t axiom_index,
                            std::vector<RewriteStep>& trace) {
  Formula out = f;
  if (f.kind == Formula::Kind::Atom || f.kind == Formula::Kind::Equal) {
    out.args = eliminate_in_args(f.args, axiom_index, trace);
    return out;
  }
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    out.children[i] = eliminate_constants(f.children[i], axiom_index, trace);
  }
  return out;
}

// Product factors of a term: applications of two or more arguments are
// flattened as concatenations, everything else is opaque.
void flatten_factors(const Term& t, std::vector<Term>& out) {
  if (t.kind == Term::Kind::Apply && t.args.size() >= 2) {
    for (const Term& arg : t.args) {
      flatten_factors(arg, out);
    }
    return;
  }
  out.push_back(t);
}

Formula make_ex_atom(const Term& a, const Term& b) {
  Formula f;
  f.kind = Formula::Kind::Atom;
  f.name = "ex";
  f.args = {a, b};
  return f;
}

// Ordered, duplicate-free ex-guards for one atom.
std::vector<Formula> guards_for_atom(const Formula& atom, GuardReading reading) {
  std::vector<Formula> guards;
  std::set<std::string> seen;
  const auto add_pairs = [&](const std::vector<Term>& factors) {
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      const Term& left =
          reading == GuardReading::AdjacentPairs ? factors[i] : factors[0];
      Formula g = make_ex_atom(left, factors[i + 1]);
      if (seen.insert(print_formula(g)).second) {
        guards.push_back(std::move(g));
      }
    }
  };
  if (atom.kind == Formula::Kind::Atom && atom.args.size() >= 2) {
    std::vector<Term> seq;
    for (const Term& arg : atom.args) {
      flatten_factors(arg, seq);
    }
    add_pairs(seq);
  }
  const auto walk = [&](const auto& self, const Term& t) -> void {
    if (t.kind == Term::Kind::Apply && t.args.size() >= 2) {
      std::vector<Term> seq;
      flatten_factors(t, seq);
      add_pairs(seq);
    }
    for (const Term& arg : t.args) {
      self(self, arg);
    }
  };
  for (const Term& arg : atom.args) {
    walk(walk, arg);
  }
  return guards;
}

Formula fold_conjunction(std::vector<Formula> parts) {
  Formula acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Formula f;
    f.kind = Formula::Kind::And;
    f.children = {std::move(acc), std::move(parts[i])};
    acc = std::move(f);
  }
  return acc;
}

// Conjuncts of a premise that are ex atoms, by printed form.
void premise_guards(const Formula& premise, std::set<std::string>& out) {
  if (premise.kind == Formula::Kind::And) {
    premise_guards(premise.children[0], out);
    premise_guards(premise.children[1], out);
    return;
  }
  if (premise.kind == Formula::Kind::Atom && premise.name == "ex") {
    out.insert(print_formula(premise));
  }
}

Formula guard_formula(const Formula& f, const std::set<std::string>& available,
                      std::size_t axiom_index, GuardReading reading,
                      std::vector<RewriteStep>& trace) {
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
    case Formula::Kind::Not:
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Iff: {
      Formula out = f;
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        out.children[i] =
            guard_formula(f.children[i], available, axiom_index, reading, trace);
      }
      return out;
    }
    case Formula::Kind::Implies: {
      Formula out = f;
      std::set<std::string> extended = available;
      premise_guards(f.children[0], extended);
      out.children[0] =
          guard_formula(f.children[0], available, axiom_index, reading, trace);
      out.children[1] =
          guard_formula(f.children[1], extended, axiom_index, reading, trace);
      return out;
    }
    case Formula::Kind::Atom:
      if (f.name == "ex") {
        return f;  // the existence predicate itself is never localized
      }
      [[fallthrough]];
    case Formula::Kind::Equal: {
      std::vector<Formula> guards;
      for (Formula& g : guards_for_atom(f, reading)) {
        if (!available.count(print_formula(g))) {
          guards.push_back(std::move(g));
        }
      }
      if (guards.empty()) {
        return f;
      }
      Formula wrapped;
      wrapped.kind = Formula::Kind::Implies;
      wrapped.children = {fold_conjunction(std::move(guards)), f};
      trace.push_back({axiom_index, "guard", print_formula(f),
                       print_formula(wrapped)});
      return wrapped;
    }
  }
  return f;
}

void collect_formula_constants(const Formula& f, std::set<std::string>& out) {
  for (const Term& arg : f.args) {
    collect_leftover_constants(arg, out);
  }
  for (const Formula& child : f.children) {
    collect_formula_constants(child, out);
  }
}

}  // namespace

LocalizationReport localize(const std::vector<Formula>& axioms,
                            GuardReading reading) {
  LocalizationReport report;
  report.input = axioms;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    std::vector<RewriteStep> trace;
    Formula without_constants = eliminate_constants(axioms[i], i, trace);
    std::set<std::string> leftover;
    collect_formula_constants(without_constants, leftover);
    if (!leftover.empty()) {
      report.warnings.push_back(fmt::format(
          "axiom {}: constant '{}' has no adjacent variable; axiom left "
          "unchanged", i, *leftover.begin()));
      report.output.push_back(axioms[i]);
      continue;
    }
    Formula guarded = guard_formula(without_constants, {}, i, reading, trace);
    report.output.push_back(std::move(guarded));
    report.trace.insert(report.trace.end(), trace.begin(), trace.end());
  }
  return report;
}

// ---------------------------------------------------------------------
// Finite structures and evaluation

std::size_t FiniteStructure::offset(const std::vector<Index>& tuple) const {
  std::size_t out = 0;
  for (Index i : tuple) {
    out = out * domain.size() + i;
  }
  return out;
}

void FiniteStructure::set_predicate(const std::string& name,
                                    const std::vector<Index>& tuple,
                                    bool value) {
  auto& table = predicates[{name, tuple.size()}];
  if (table.values.empty()) {
    table.arity = tuple.size();
    std::size_t size = 1;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      size *= domain.size();
    }
    table.values.assign(size, false);
  }
  table.values[offset(tuple)] = value;
}

bool FiniteStructure::predicate(const std::string& name,
                                const std::vector<Index>& tuple) const {
  const auto it = predicates.find({name, tuple.size()});
  if (it == predicates.end()) {
    throw StructuralError(fmt::format("uninterpreted predicate '{}/{}'", name,
                                      tuple.size()));
  }
  return it->second.values[offset(tuple)];
}

namespace {

struct Environment {
  std::vector<std::pair<std::string, Index>> bindings;

  Index lookup(const std::string& var) const {
    for (auto it = bindings.rbegin(); it != bindings.rend(); ++it) {
      if (it->first == var) {
        return it->second;
      }
    }
    throw StructuralError(fmt::format("unbound variable '{}'", var));
  }
};

Index eval_term(const Term& t, const FiniteStructure& s, const Environment& env) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return env.lookup(t.name);
    case Term::Kind::Constant: {
      const auto it = s.constants.find(t.name);
      if (it == s.constants.end()) {
        throw StructuralError(fmt::format("uninterpreted constant '{}'", t.name));
      }
      return it->second;
    }
    case Term::Kind::Apply: {
      const auto it = s.functions.find({t.name, t.args.size()});
      if (it == s.functions.end()) {
        throw StructuralError(fmt::format("uninterpreted function '{}/{}'",
                                          t.name, t.args.size()));
      }
      std::vector<Index> tuple;
      tuple.reserve(t.args.size());
      for (const Term& arg : t.args) {
        tuple.push_back(eval_term(arg, s, env));
      }
      return it->second.values[s.offset(tuple)];
    }
  }
  throw StructuralError("malformed term");
}

bool eval_formula(const Formula& f, const FiniteStructure& s, Environment& env) {
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const bool universal = f.kind == Formula::Kind::Forall;
      for (Index d = 0; d < s.domain.size(); ++d) {
        env.bindings.emplace_back(f.name, d);
        const bool value = eval_formula(f.children.front(), s, env);
        env.bindings.pop_back();
        if (universal && !value) {
          return false;
        }
        if (!universal && value) {
          return true;
        }
      }
      return universal;
    }
    case Formula::Kind::Not:
      return !eval_formula(f.children.front(), s, env);
    case Formula::Kind::And:
      return eval_formula(f.children[0], s, env) &&
             eval_formula(f.children[1], s, env);
    case Formula::Kind::Or:
      return eval_formula(f.children[0], s, env) ||
             eval_formula(f.children[1], s, env);
    case Formula::Kind::Implies:
      return !eval_formula(f.children[0], s, env) ||
             eval_formula(f.children[1], s, env);
    case Formula::Kind::Iff:
      return eval_formula(f.children[0], s, env) ==
             eval_formula(f.children[1], s, env);
    case Formula::Kind::Equal:
      return eval_term(f.args[0], s, env) == eval_term(f.args[1], s, env);
    case Formula::Kind::Atom: {
      std::vector<Index> tuple;
      tuple.reserve(f.args.size());
      for (const Term& arg : f.args) {
        tuple.push_back(eval_term(arg, s, env));
      }
      return s.predicate(f.name, tuple);
    }
  }
  throw StructuralError("malformed formula");
}

}  // namespace

bool evaluate(const Formula& f, const FiniteStructure& s) {
  if (s.domain.empty()) {
    throw StructuralError("empty domain");
  }
  Environment env;
  return eval_formula(f, s, env);
}

FiniteStructure structure_from_monoid_ideal(const FiniteMonoid& m,
                                            const Subset& q) {
  FiniteStructure s;
  s.domain = m.elements;

  FunctionTable op;
  op.arity = 2;
  op.values.reserve(m.size() * m.size());
  for (Index i = 0; i < m.size(); ++i) {
    for (Index j = 0; j < m.size(); ++j) {
      op.values.push_back(m.mul(i, j));
    }
  }
  s.functions[{"op", 2}] = std::move(op);

  for (Index i = 0; i < m.size(); ++i) {
    s.set_predicate("ex", {i}, !q.count(i));
    for (Index j = 0; j < m.size(); ++j) {
      s.set_predicate("ex", {i, j}, !q.count(m.mul(i, j)));
    }
  }
  return s;
}

const std::string& monoid_axioms_text() {
  static const std::string text =
      "forall x . forall y . forall z . eq(op(op(x, y), z), op(x, op(y, z)))\n"
      "forall x . eq(op(e0, x), x)\n"
      "forall x . eq(op(x, e0), x)\n";
  return text;
}

namespace {

UnitLawReport unit_law_report(const FiniteMonoid& m, const Subset& q,
                              const Subset& units, const Formula& axiom,
                              FiniteStructure& s, const std::string& tau_symbol,
                              bool unit_on_left) {
  UnitLawReport report;
  report.tau_symbol = tau_symbol;
  report.admissible.assign(m.size(), {});
  report.canonical.assign(m.size(), kUndefined);

  FunctionTable table;
  table.arity = 1;
  table.values.assign(m.size(), m.unit);
  for (Index x = 0; x < m.size(); ++x) {
    if (q.count(x)) {
      continue;  // no guard can fire; the interpretation is unconstrained
    }
    for (Index e : units) {
      const Index p = unit_on_left ? m.mul(e, x) : m.mul(x, e);
      if (!q.count(p) && p == x) {
        report.admissible[x].insert(e);
      }
    }
    // Prefer a local unit other than the global one.
    for (Index e : report.admissible[x]) {
      if (e != m.unit) {
        report.canonical[x] = e;
        break;
      }
    }
    if (report.canonical[x] == kUndefined && report.admissible[x].count(m.unit)) {
      report.canonical[x] = m.unit;
    }
    if (report.canonical[x] != kUndefined) {
      table.values[x] = report.canonical[x];
    }
  }
  s.functions[{tau_symbol, 1}] = std::move(table);
  report.pass = evaluate(axiom, s);
  return report;
}

}  // namespace

TheoryReport check_localized_monoid_theory(const FiniteMonoid& m,
                                           const Subset& q) {
  if (!is_ideal(m, q) || !is_associative_ideal(m, q).holds) {
    throw StructuralError("subset is not an associative ideal");
  }
  TheoryReport report;
  FiniteStructure s = structure_from_monoid_ideal(m, q);
  const auto axioms = parse_axioms(monoid_axioms_text(), "<builtin>");
  auto localization = localize(axioms);
  report.localized_axioms = localization.output;

  report.associativity = evaluate(report.localized_axioms[0], s);

  const Subset units = local_units(m, q);
  report.left_unit = unit_law_report(m, q, units, report.localized_axioms[1], s,
                                     "tau2_e0", true);
  report.right_unit = unit_law_report(m, q, units, report.localized_axioms[2],
                                      s, "tau1_e0", false);
  return report;
}

}  // namespace monocat
