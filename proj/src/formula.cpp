#include "logiceval/formula.hpp"

#include <cctype>
#include <stdexcept>

namespace logiceval {

std::optional<Variable> Variable::from_name(std::string_view token) {
  if (token.empty()) return std::nullopt;
  char head = token.front();
  if (head != 'e' && head != 'x') return std::nullopt;
  int index = 0;
  for (std::size_t i = 1; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return std::nullopt;
    index = index * 10 + (token[i] - '0');
  }
  Variable v;
  v.sort = head == 'e' ? Sort::Event : Sort::Entity;
  v.index = index;
  v.name = std::string(token);
  return v;
}

Variable Variable::make(Sort sort, int index) {
  Variable v;
  v.sort = sort;
  v.index = index;
  v.name = (sort == Sort::Event ? "e" : "x") + std::to_string(index);
  return v;
}

bool is_variable(const Term& t) {
  return std::holds_alternative<Variable>(t);
}

const std::string& term_name(const Term& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return v->name;
  return std::get<Constant>(t).name;
}

Atom Atom::pred(std::string name, std::vector<Term> args) {
  if (args.empty()) throw std::invalid_argument("predicate atom needs at least one argument");
  Atom a;
  a.kind = AtomKind::Predicate;
  a.predicate = std::move(name);
  a.args = std::move(args);
  return a;
}

Atom Atom::role_eq(std::string role, Term event, Term value) {
  Atom a;
  a.kind = AtomKind::RoleEq;
  a.predicate = std::move(role);
  a.args = {std::move(event), std::move(value)};
  return a;
}

Atom Atom::term_eq(Term lhs, Term rhs) {
  Atom a;
  a.kind = AtomKind::TermEq;
  a.args = {std::move(lhs), std::move(rhs)};
  return a;
}

Formula make_atom(Atom a) {
  Formula f;
  f.kind = Formula::Kind::Atomic;
  f.atom = std::move(a);
  return f;
}

Formula make_neg(Formula inner) {
  Formula f;
  f.kind = Formula::Kind::Neg;
  f.children.push_back(std::move(inner));
  return f;
}

Formula make_exists(std::vector<Variable> vars, Formula body) {
  if (vars.empty()) throw std::invalid_argument("quantifier needs at least one variable");
  Formula f;
  f.kind = Formula::Kind::Exists;
  f.bound = std::move(vars);
  f.children.push_back(std::move(body));
  return f;
}

Formula make_conj(std::vector<Formula> children) {
  if (children.size() < 2) throw std::invalid_argument("conjunction needs at least two conjuncts");
  Formula f;
  f.kind = Formula::Kind::Conj;
  f.children = std::move(children);
  return f;
}

std::string print_term(const Term& t) {
  return term_name(t);
}

std::string print_atom(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Predicate: {
      std::string out = a.predicate + "(";
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ",";
        out += print_term(a.args[i]);
      }
      out += ")";
      return out;
    }
    case AtomKind::RoleEq:
      return "(" + a.predicate + "(" + print_term(a.args[0]) + ") = " +
             print_term(a.args[1]) + ")";
    case AtomKind::TermEq:
      return "(" + print_term(a.args[0]) + " = " + print_term(a.args[1]) + ")";
  }
  return {};
}

namespace {

// Conjuncts that are themselves conjunctions keep their grouping parens.
std::string print_child(const Formula& f) {
  if (f.kind == Formula::Kind::Conj) return "(" + print_formula(f) + ")";
  return print_formula(f);
}

}  // namespace

std::string print_formula(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atomic:
      return print_atom(f.atom);
    case Formula::Kind::Neg:
      return "-" + print_child(f.children[0]);
    case Formula::Kind::Exists: {
      std::string out = "exists";
      for (const Variable& v : f.bound) out += " " + v.name;
      out += ".(";
      const Formula& body = f.children[0];
      out += print_formula(body);
      out += ")";
      return out;
    }
    case Formula::Kind::Conj: {
      std::string out;
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += " & ";
        out += print_child(f.children[i]);
      }
      return out;
    }
  }
  return {};
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& scope,
                  std::set<Variable>& out) {
  switch (f.kind) {
    case Formula::Kind::Atomic:
      for (const Term& t : f.atom.args) {
        if (const auto* v = std::get_if<Variable>(&t)) {
          bool bound = false;
          for (const std::string& s : scope) {
            if (s == v->name) { bound = true; break; }
          }
          if (!bound) out.insert(*v);
        }
      }
      break;
    case Formula::Kind::Exists: {
      std::size_t mark = scope.size();
      for (const Variable& v : f.bound) scope.push_back(v.name);
      collect_free(f.children[0], scope, out);
      scope.resize(mark);
      break;
    }
    default:
      for (const Formula& c : f.children) collect_free(c, scope, out);
      break;
  }
}

}  // namespace

std::set<Variable> free_variables(const Formula& f) {
  std::set<Variable> out;
  std::vector<std::string> scope;
  collect_free(f, scope, out);
  return out;
}

namespace {

Variable rename_one(const Variable& v,
                    const std::map<std::string, std::string>& renaming) {
  auto it = renaming.find(v.name);
  if (it == renaming.end()) return v;
  auto fresh = Variable::from_name(it->second);
  if (!fresh) throw std::invalid_argument("renaming target '" + it->second +
                                          "' is not a variable name");
  return *fresh;
}

}  // namespace

Formula rename_variables(const Formula& f,
                         const std::map<std::string, std::string>& renaming) {
  Formula out = f;
  switch (f.kind) {
    case Formula::Kind::Atomic:
      for (Term& t : out.atom.args) {
        if (const auto* v = std::get_if<Variable>(&t)) t = rename_one(*v, renaming);
      }
      break;
    case Formula::Kind::Exists:
      for (Variable& v : out.bound) v = rename_one(v, renaming);
      [[fallthrough]];
    default:
      for (Formula& c : out.children) c = rename_variables(c, renaming);
      break;
  }
  return out;
}

int count_negations(const Formula& f) {
  int n = f.kind == Formula::Kind::Neg ? 1 : 0;
  for (const Formula& c : f.children) n += count_negations(c);
  return n;
}

QuantifierCounts bound_variable_counts(const Formula& f) {
  QuantifierCounts counts;
  if (f.kind == Formula::Kind::Exists) {
    for (const Variable& v : f.bound) {
      if (v.sort == Sort::Event) ++counts.events;
      else ++counts.entities;
    }
  }
  for (const Formula& c : f.children) {
    QuantifierCounts inner = bound_variable_counts(c);
    counts.events += inner.events;
    counts.entities += inner.entities;
  }
  return counts;
}

}  // namespace logiceval
