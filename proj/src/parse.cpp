#include "logiceval/parse.hpp"

#include <cctype>
#include <map>

namespace logiceval {

namespace {

enum class Tok { LParen, RParen, Amp, Eq, Dot, Comma, Minus, Ident, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", i}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", i}); ++i; continue;
      case '&': out.push_back({Tok::Amp, "&", i}); ++i; continue;
      case '=': out.push_back({Tok::Eq, "=", i}); ++i; continue;
      case '.': out.push_back({Tok::Dot, ".", i}); ++i; continue;
      case '-': out.push_back({Tok::Minus, "-", i}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", i}); ++i; continue;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && word_char(text[i])) ++i;
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (c == '|') throw ParseError("disjunction is outside the supported fragment", i);
    if (c == '>') throw ParseError("implication is outside the supported fragment", i);
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), tokens_(lex(text)) {}

  Formula run() {
    Formula f = parse_sequence();
    expect(Tok::End, "trailing input after formula");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[cursor_]; }
  Token take() { return tokens_[cursor_++]; }

  void expect(Tok type, const std::string& what) {
    if (peek().type != type) throw ParseError(what, peek().pos);
    ++cursor_;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, peek().pos);
  }

  // item ('&' item)*
  Formula parse_sequence() {
    std::vector<Formula> items;
    items.push_back(parse_item());
    while (peek().type == Tok::Amp) {
      take();
      items.push_back(parse_item());
    }
    if (items.size() == 1) return std::move(items[0]);
    return make_conj(std::move(items));
  }

  Formula parse_item() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Minus:
        take();
        return make_neg(parse_item());
      case Tok::LParen: {
        take();
        return parse_group();
      }
      case Tok::Ident:
        if (t.text == "exists") return parse_quantified();
        if (t.text == "forall" || t.text == "all")
          fail("universal quantification is outside the supported fragment");
        if (tokens_[cursor_ + 1].type == Tok::LParen) return make_atom(parse_application());
        fail("a bare term cannot stand as a formula");
      default:
        fail("expected a formula");
    }
  }

  Formula parse_quantified() {
    take();  // 'exists'
    std::vector<Variable> vars;
    while (peek().type == Tok::Ident) {
      Token name = take();
      auto v = Variable::from_name(name.text);
      if (!v) throw ParseError("expected a variable of shape e<N> or x<N>, got '" +
                               name.text + "'", name.pos);
      vars.push_back(*v);
    }
    if (vars.empty()) fail("quantifier binds no variables");
    expect(Tok::Dot, "expected '.' after quantified variables");
    return make_exists(std::move(vars), parse_item());
  }

  // After '(' has been consumed: either an equality or a grouped sequence.
  Formula parse_group() {
    if (peek().type == Tok::Ident && peek().text != "exists") {
      Token head = tokens_[cursor_];
      if (tokens_[cursor_ + 1].type == Tok::Eq) {
        // (term = term)
        Term lhs = parse_term();
        take();  // '='
        Term rhs = parse_term();
        expect(Tok::RParen, "expected ')' after equality");
        return make_atom(Atom::term_eq(std::move(lhs), std::move(rhs)));
      }
      if (tokens_[cursor_ + 1].type == Tok::LParen) {
        Atom app = parse_application();
        if (peek().type == Tok::Eq) {
          // (role(event) = value)
          if (app.args.size() != 1)
            throw ParseError("role application left of '=' takes one argument", head.pos);
          take();  // '='
          Term rhs = parse_term();
          expect(Tok::RParen, "expected ')' after role equality");
          return make_atom(Atom::role_eq(app.predicate, app.args[0], std::move(rhs)));
        }
        Formula first = make_atom(std::move(app));
        return finish_group(std::move(first));
      }
    }
    return finish_group(parse_item());
  }

  Formula finish_group(Formula first) {
    std::vector<Formula> items;
    items.push_back(std::move(first));
    while (peek().type == Tok::Amp) {
      take();
      items.push_back(parse_item());
    }
    expect(Tok::RParen, "expected ')'");
    if (items.size() == 1) return std::move(items[0]);
    return make_conj(std::move(items));
  }

  Atom parse_application() {
    Token name = take();
    expect(Tok::LParen, "expected '(' after predicate name");
    std::vector<Term> args;
    args.push_back(parse_term());
    while (peek().type == Tok::Comma) {
      take();
      args.push_back(parse_term());
    }
    expect(Tok::RParen, "expected ')' after predicate arguments");
    return Atom::pred(name.text, std::move(args));
  }

  Term parse_term() {
    if (peek().type != Tok::Ident) fail("expected a term");
    Token t = take();
    if (t.text == "exists") throw ParseError("'exists' cannot be used as a term", t.pos);
    if (auto v = Variable::from_name(t.text)) return *v;
    return Constant{t.text};
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(text).run();
}

namespace {

// True when the same name is bound twice along one scope chain, either
// within a single quantifier list or by shadowing an enclosing binder.
bool has_duplicate_bindings(const Formula& f, std::vector<std::string>& scope) {
  switch (f.kind) {
    case Formula::Kind::Exists: {
      std::size_t mark = scope.size();
      for (const Variable& v : f.bound) {
        for (const std::string& s : scope) {
          if (s == v.name) { scope.resize(mark); return true; }
        }
        scope.push_back(v.name);
      }
      bool dup = has_duplicate_bindings(f.children[0], scope);
      scope.resize(mark);
      return dup;
    }
    default:
      for (const Formula& c : f.children) {
        if (has_duplicate_bindings(c, scope)) return true;
      }
      return false;
  }
}

}  // namespace

WffReport check_wff(std::string_view text) {
  WffReport report;
  Formula f;
  try {
    f = parse_formula(text);
  } catch (const ParseError& e) {
    std::size_t at = e.position();
    report.diagnostics.push_back({e.what(), at, at < text.size() ? at + 1 : at});
    return report;
  }
  report.parsed = true;
  report.formula = f;

  auto free = free_variables(f);
  report.closed = free.empty();
  for (const Variable& v : free)
    report.diagnostics.push_back({"free variable '" + v.name + "'", 0, 0});

  std::vector<std::string> scope;
  report.duplicate_bindings = has_duplicate_bindings(f, scope);
  if (report.duplicate_bindings)
    report.diagnostics.push_back({"variable bound twice in one scope chain", 0, 0});

  // Arity drift is worth surfacing but does not decide well-formedness.
  std::map<std::string, std::size_t> arity;
  for_each_atom(f, [&](const Atom& a) {
    if (a.kind != AtomKind::Predicate) return;
    auto [it, fresh] = arity.emplace(a.predicate, a.args.size());
    if (!fresh && it->second != a.args.size())
      report.diagnostics.push_back({"predicate '" + a.predicate +
                                    "' used with inconsistent arity", 0, 0});
  });

  report.is_wff = report.parsed && report.closed && !report.duplicate_bindings;
  return report;
}

bool exact_match(std::string_view gold, std::string_view predicted) {
  auto canon = [](std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        pending_space = true;
        continue;
      }
      if (pending_space && !out.empty() && word_char(out.back()) && word_char(c))
        out += ' ';
      pending_space = false;
      out += c;
    }
    return out;
  };
  return canon(gold) == canon(predicted);
}

}  // namespace logiceval
