#include "logiceval/normalize.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace logiceval {

namespace {

// Strips the leading negations, if any, and returns how many there were.
const Formula& strip_negations(const Formula& f, int& count) {
  const Formula* g = &f;
  count = 0;
  while (g->kind == Formula::Kind::Neg) {
    g = &g->children[0];
    ++count;
  }
  return *g;
}

void collect_binder_names(const Formula& f, std::set<std::string>& names) {
  if (f.kind == Formula::Kind::Exists) {
    for (const Variable& v : f.bound) names.insert(v.name);
  }
  for (const Formula& c : f.children) collect_binder_names(c, names);
}

struct BodyWalker {
  PositiveBody body;
  std::set<std::string> reserved;              // every binder name anywhere
  std::set<std::string> claimed;               // names already in the prefix
  std::map<std::string, int> next_fresh_index; // per sort letter

  Variable claim(const Variable& v) {
    if (claimed.insert(v.name).second) return v;
    // A reused binder name gets the next free index of its sort, skipping
    // names any binder holds so later occurrences stay untouched.
    int& idx = next_fresh_index[v.sort == Sort::Event ? "e" : "x"];
    Variable fresh;
    do {
      fresh = Variable::make(v.sort, ++idx);
    } while (reserved.count(fresh.name) || claimed.count(fresh.name));
    claimed.insert(fresh.name);
    return fresh;
  }

  void walk(const Formula& f, std::vector<std::pair<std::string, Variable>>& env) {
    switch (f.kind) {
      case Formula::Kind::Neg:
        throw NormalizationError("negation below a quantifier or conjunction");
      case Formula::Kind::Exists: {
        std::size_t mark = env.size();
        for (const Variable& v : f.bound) {
          Variable fresh = claim(v);
          env.emplace_back(v.name, fresh);
          body.vars.push_back(fresh);
        }
        walk(f.children[0], env);
        env.resize(mark);
        break;
      }
      case Formula::Kind::Conj:
        for (const Formula& c : f.children) walk(c, env);
        break;
      case Formula::Kind::Atomic: {
        Atom a = f.atom;
        for (Term& t : a.args) {
          if (const auto* v = std::get_if<Variable>(&t)) {
            bool bound = false;
            for (auto it = env.rbegin(); it != env.rend(); ++it) {
              if (it->first == v->name) {
                t = it->second;
                bound = true;
                break;
              }
            }
            if (!bound)
              throw NormalizationError("formula is not closed: free variable '" +
                                       v->name + "'");
          }
        }
        body.atoms.push_back(std::move(a));
        break;
      }
    }
  }
};

}  // namespace

PositiveBody collect_positive_body(const Formula& f) {
  BodyWalker walker;
  // Reserve every binder name so renamed-apart duplicates cannot collide
  // with a binder that appears later in the walk.
  collect_binder_names(f, walker.reserved);
  for (const std::string& name : walker.reserved) {
    auto v = Variable::from_name(name);
    if (!v) continue;
    std::string letter = v->sort == Sort::Event ? "e" : "x";
    auto& idx = walker.next_fresh_index[letter];
    idx = std::max(idx, v->index);
  }
  std::vector<std::pair<std::string, Variable>> env;
  walker.walk(f, env);
  return std::move(walker.body);
}

Formula strip_predicate_decorations(const Formula& f) {
  Formula out = f;
  if (f.kind == Formula::Kind::Atomic) {
    std::size_t i = 0;
    while (i < out.atom.predicate.size() && out.atom.predicate[i] == '_') ++i;
    if (i > 0) out.atom.predicate.erase(0, i);
  }
  for (Formula& c : out.children) c = strip_predicate_decorations(c);
  return out;
}

Formula pull_quantifiers(const Formula& f) {
  int negations = 0;
  const Formula& core = strip_negations(f, negations);
  PositiveBody body = collect_positive_body(core);

  std::vector<Variable> prefix;
  for (const Variable& v : body.vars)
    if (v.sort == Sort::Event) prefix.push_back(v);
  for (const Variable& v : body.vars)
    if (v.sort == Sort::Entity) prefix.push_back(v);

  std::vector<Formula> conjuncts;
  conjuncts.reserve(body.atoms.size());
  for (Atom& a : body.atoms) conjuncts.push_back(make_atom(std::move(a)));

  Formula result = conjuncts.size() == 1 ? std::move(conjuncts[0])
                                         : make_conj(std::move(conjuncts));
  if (!prefix.empty()) result = make_exists(std::move(prefix), std::move(result));
  for (int i = 0; i < negations; ++i) result = make_neg(std::move(result));
  return result;
}

namespace {

const Formula& prenex_quantifier(const Formula& f) {
  int negations = 0;
  const Formula& core = strip_negations(f, negations);
  if (core.kind == Formula::Kind::Exists) {
    const Formula& body = core.children[0];
    if (count_negations(body) > 0 || body.kind == Formula::Kind::Exists)
      throw NormalizationError("formula is not in prenex shape");
    // Nested quantifiers anywhere below the prefix disqualify the shape.
    QuantifierCounts inner = bound_variable_counts(body);
    if (inner.events + inner.entities > 0)
      throw NormalizationError("formula is not in prenex shape");
  } else if (count_negations(core) > 0 ||
             bound_variable_counts(core).events + bound_variable_counts(core).entities > 0) {
    throw NormalizationError("formula is not in prenex shape");
  }
  return core;
}

}  // namespace

Renaming prenex_renumbering(const Formula& f) {
  const Formula& core = prenex_quantifier(f);
  Renaming renaming;
  if (core.kind != Formula::Kind::Exists) return renaming;
  int position = 0;
  for (const Variable& v : core.bound)
    renaming.pairs.emplace_back(v, Variable::make(v.sort, ++position));
  return renaming;
}

Formula renumber_variables(const Formula& f) {
  Renaming renaming = prenex_renumbering(f);
  if (renaming.pairs.empty()) return f;
  std::map<std::string, std::string> by_name;
  for (const auto& [from, to] : renaming.pairs) by_name[from.name] = to.name;
  return rename_variables(f, by_name);
}

Formula normalize(const Formula& f) {
  return renumber_variables(pull_quantifiers(strip_predicate_decorations(f)));
}

}  // namespace logiceval
