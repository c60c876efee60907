#include "logiceval/entail.hpp"

#include <algorithm>
#include <set>

#include "logiceval/normalize.hpp"

namespace logiceval {

namespace {

bool negation_free(const Formula& f) {
  if (f.kind == Formula::Kind::Neg) return false;
  for (const Formula& c : f.children)
    if (!negation_free(c)) return false;
  return true;
}

}  // namespace

FragmentShape classify_fragment(const Formula& f) {
  FragmentShape shape;
  const Formula* core = &f;
  while (core->kind == Formula::Kind::Neg) {
    core = &core->children[0];
    ++shape.negations;
  }
  shape.supported = negation_free(*core);
  if (shape.supported) shape.body = *core;
  return shape;
}

FactBase skolemize(const Formula& positive_body) {
  PositiveBody body = collect_positive_body(positive_body);

  FactBase fb;
  for (const Variable& v : body.vars) fb.universe.push_back(v.name);

  std::set<std::string> seen_constants;
  auto note_constant = [&](const Term& t) {
    if (is_variable(t)) return;
    const std::string& name = term_name(t);
    if (seen_constants.insert(name).second) fb.constants.push_back(name);
  };

  for (const Atom& a : body.atoms) {
    for (const Term& t : a.args) note_constant(t);
    switch (a.kind) {
      case AtomKind::Predicate: {
        FactBase::Fact fact;
        fact.predicate = a.predicate;
        for (const Term& t : a.args) fact.args.push_back(term_name(t));
        fb.facts.push_back(std::move(fact));
        break;
      }
      case AtomKind::RoleEq:
        fb.roles.push_back({a.predicate, term_name(a.args[0]), term_name(a.args[1])});
        break;
      case AtomKind::TermEq:
        fb.equalities.emplace_back(term_name(a.args[0]), term_name(a.args[1]));
        break;
    }
  }
  return fb;
}

namespace {

struct UnionFind {
  std::map<std::string, std::string> parent;

  void add(const std::string& x) { parent.emplace(x, x); }

  const std::string& find(const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) it = parent.emplace(x, x).first;
    if (it->second == x) return it->first;
    std::string root = find(it->second);
    it->second = root;
    return parent.find(x)->second;
  }

  // Smaller name wins as representative, keeping output deterministic.
  void merge(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
};

}  // namespace

CongruenceResult congruence_closure(const FactBase& fb) {
  UnionFind uf;
  for (const std::string& c : fb.universe) uf.add(c);
  for (const std::string& c : fb.constants) uf.add(c);
  for (const auto& [a, b] : fb.equalities) {
    uf.add(a);
    uf.add(b);
    uf.merge(a, b);
  }
  for (const auto& r : fb.roles) {
    uf.add(r.event);
    uf.add(r.value);
  }

  // Functionality of roles: one value class per (role, event class).
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::string, std::string>, std::string> seen;
    for (const auto& r : fb.roles) {
      auto key = std::make_pair(r.role, uf.find(r.event));
      std::string value = uf.find(r.value);
      auto [it, fresh] = seen.emplace(key, value);
      if (!fresh && it->second != value) {
        uf.merge(it->second, value);
        changed = true;
        break;
      }
    }
  }

  CongruenceResult out;
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [name, _] : uf.parent) groups[uf.find(name)].push_back(name);
  for (auto& [rep, members] : groups) {
    std::sort(members.begin(), members.end());
    for (const std::string& m : members) out.representative[m] = rep;
    out.classes.push_back(std::move(members));
  }

  std::set<FactBase::Fact> canonical;
  for (const FactBase::Fact& f : fb.facts) {
    FactBase::Fact c;
    c.predicate = f.predicate;
    for (const std::string& a : f.args) c.args.push_back(uf.find(a));
    canonical.insert(std::move(c));
  }
  out.facts.assign(canonical.begin(), canonical.end());

  for (const auto& r : fb.roles)
    out.role_values[{r.role, uf.find(r.event)}] = uf.find(r.value);
  return out;
}

namespace {

// Finite canonical model of the premise: one element per congruence
// class, plus fresh unconstrained elements for conclusion-only constants.
struct HomModel {
  std::vector<std::string> names;
  std::map<std::string, int> element_of;            // constant -> element
  std::map<std::string, std::set<std::vector<int>>> facts;
  std::map<std::pair<std::string, int>, int> role;  // (role, elem) -> elem
};

struct HomProblem {
  std::vector<std::string> vars;
  std::vector<Atom> atoms;  // over vars and constants
};

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : remaining_(limit) {}
  bool spend() {
    if (remaining_ == 0) return false;
    --remaining_;
    return true;
  }

 private:
  std::uint64_t remaining_;
};

HomModel build_model(const Formula& premise_body, const HomProblem& goal) {
  CongruenceResult cc = congruence_closure(skolemize(premise_body));

  HomModel model;
  for (const auto& cls : cc.classes) {
    int id = int(model.names.size());
    model.names.push_back(cls.front());
    for (const std::string& member : cls) model.element_of[member] = id;
  }
  auto elem = [&](const std::string& rep) { return model.element_of.at(rep); };

  for (const FactBase::Fact& f : cc.facts) {
    std::vector<int> args;
    for (const std::string& a : f.args) args.push_back(elem(a));
    model.facts[f.predicate].insert(std::move(args));
  }
  for (const auto& [key, value] : cc.role_values)
    model.role[{key.first, elem(key.second)}] = elem(value);

  // Constants the conclusion mentions but the premise does not denote
  // fresh, unconstrained elements.
  for (const Atom& a : goal.atoms) {
    for (const Term& t : a.args) {
      if (is_variable(t)) continue;
      const std::string& name = term_name(t);
      if (!model.element_of.count(name)) {
        model.element_of[name] = int(model.names.size());
        model.names.push_back(name);
      }
    }
  }

  // Nonempty-domain assumption.
  if (model.names.empty()) model.names.push_back("d0");
  return model;
}

// Backtracking homomorphism search with forward propagation of role and
// equality constraints.
class HomSearch {
 public:
  HomSearch(const HomModel& model, const HomProblem& goal, Budget& budget)
      : model_(model), goal_(goal), budget_(budget) {
    for (std::size_t i = 0; i < goal.vars.size(); ++i)
      var_index_[goal.vars[i]] = int(i);
    assignment_.assign(goal.vars.size(), -1);
    order_ = pick_order();
  }

  // nullopt: budget exhausted. Otherwise the witness or NotEntails.
  std::optional<bool> run() {
    if (!consistent_ground()) return false;
    return assign(0);
  }

  std::map<std::string, std::string> witness() const {
    std::map<std::string, std::string> w;
    for (std::size_t i = 0; i < goal_.vars.size(); ++i)
      w[goal_.vars[i]] = model_.names[assignment_[i]];
    return w;
  }

 private:
  int value_of(const Term& t) const {
    if (is_variable(t)) {
      auto it = var_index_.find(term_name(t));
      return assignment_[it->second];
    }
    return model_.element_of.at(term_name(t));
  }

  bool is_var_unassigned(const Term& t) const {
    return is_variable(t) && value_of(t) < 0;
  }

  // Checks every atom whose arguments are fully assigned; atoms with one
  // hole that the model determines (role values, equalities) get it
  // filled, recursing into the next decision level.
  bool check_atoms() const {
    for (const Atom& a : goal_.atoms) {
      bool total = true;
      for (const Term& t : a.args)
        if (is_var_unassigned(t)) { total = false; break; }
      if (!total) continue;
      switch (a.kind) {
        case AtomKind::Predicate: {
          std::vector<int> args;
          for (const Term& t : a.args) args.push_back(value_of(t));
          auto it = model_.facts.find(a.predicate);
          if (it == model_.facts.end() || !it->second.count(args)) return false;
          break;
        }
        case AtomKind::RoleEq: {
          auto it = model_.role.find({a.predicate, value_of(a.args[0])});
          if (it == model_.role.end() || it->second != value_of(a.args[1]))
            return false;
          break;
        }
        case AtomKind::TermEq:
          if (value_of(a.args[0]) != value_of(a.args[1])) return false;
          break;
      }
    }
    return true;
  }

  // Ground atoms (no variables at all) must hold regardless of choices.
  bool consistent_ground() const { return check_atoms(); }

  // Variables constrained by predicate atoms first; they have the
  // smallest candidate sets.
  std::vector<int> pick_order() const {
    std::vector<std::pair<int, int>> keyed;
    for (std::size_t i = 0; i < goal_.vars.size(); ++i) {
      int score = 0;
      for (const Atom& a : goal_.atoms) {
        for (const Term& t : a.args) {
          if (is_variable(t) && term_name(t) == goal_.vars[i])
            score += a.kind == AtomKind::Predicate ? 4 : 1;
        }
      }
      keyed.emplace_back(-score, int(i));
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> order;
    for (auto& [_, i] : keyed) order.push_back(i);
    return order;
  }

  // Candidate elements for a variable: intersection of the fact columns
  // it must inhabit, or the whole domain when unconstrained.
  std::vector<int> candidates(int var) const {
    const std::string& name = goal_.vars[var];
    std::optional<std::set<int>> pool;
    for (const Atom& a : goal_.atoms) {
      if (a.kind != AtomKind::Predicate) continue;
      for (std::size_t pos = 0; pos < a.args.size(); ++pos) {
        if (!is_variable(a.args[pos]) || term_name(a.args[pos]) != name) continue;
        std::set<int> column;
        auto it = model_.facts.find(a.predicate);
        if (it != model_.facts.end()) {
          for (const auto& tuple : it->second)
            if (tuple.size() == a.args.size()) column.insert(tuple[pos]);
        }
        if (!pool) pool = std::move(column);
        else {
          std::set<int> narrowed;
          std::set_intersection(pool->begin(), pool->end(), column.begin(),
                                column.end(),
                                std::inserter(narrowed, narrowed.begin()));
          pool = std::move(narrowed);
        }
      }
    }
    if (pool) return {pool->begin(), pool->end()};
    std::vector<int> all(model_.names.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    return all;
  }

  // Fills holes the current assignment forces. Returns false on conflict;
  // records filled variables for rollback.
  bool propagate(std::vector<int>& filled) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (const Atom& a : goal_.atoms) {
        if (a.kind == AtomKind::RoleEq) {
          const Term& ev = a.args[0];
          const Term& val = a.args[1];
          if (!is_var_unassigned(ev) && is_var_unassigned(val)) {
            auto it = model_.role.find({a.predicate, value_of(ev)});
            if (it == model_.role.end()) return false;
            int var = var_index_.at(term_name(val));
            assignment_[var] = it->second;
            filled.push_back(var);
            progressed = true;
          }
        } else if (a.kind == AtomKind::TermEq) {
          const Term& l = a.args[0];
          const Term& r = a.args[1];
          if (!is_var_unassigned(l) && is_var_unassigned(r)) {
            int var = var_index_.at(term_name(r));
            assignment_[var] = value_of(l);
            filled.push_back(var);
            progressed = true;
          } else if (is_var_unassigned(l) && !is_var_unassigned(r)) {
            int var = var_index_.at(term_name(l));
            assignment_[var] = value_of(r);
            filled.push_back(var);
            progressed = true;
          }
        }
      }
    }
    return check_atoms();
  }

  std::optional<bool> assign(std::size_t level) {
    // Skip variables propagation already filled.
    while (level < order_.size() && assignment_[order_[level]] >= 0) ++level;
    if (level == order_.size()) return check_atoms();

    int var = order_[level];
    for (int candidate : candidates(var)) {
      if (!budget_.spend()) return std::nullopt;
      assignment_[var] = candidate;
      std::vector<int> filled;
      if (check_atoms() && propagate(filled)) {
        auto result = assign(level + 1);
        if (!result.has_value() || *result) return result;
      }
      for (int f : filled) assignment_[f] = -1;
      assignment_[var] = -1;
    }
    return false;
  }

  const HomModel& model_;
  const HomProblem& goal_;
  Budget& budget_;
  std::map<std::string, int> var_index_;
  std::vector<int> assignment_;
  std::vector<int> order_;
};

HomProblem goal_of(const Formula& positive_body) {
  PositiveBody body = collect_positive_body(positive_body);
  HomProblem goal;
  for (const Variable& v : body.vars) goal.vars.push_back(v.name);
  goal.atoms = std::move(body.atoms);
  return goal;
}

// premise |= conclusion for two positive existential conjunctions.
EntailResult positive_entails(const Formula& premise_body,
                              const Formula& conclusion_body,
                              const EntailConfig& cfg, bool want_witness) {
  EntailResult result;
  HomProblem goal = goal_of(conclusion_body);
  HomModel model = build_model(premise_body, goal);
  Budget budget(cfg.max_steps);
  HomSearch search(model, goal, budget);
  auto found = search.run();
  if (!found.has_value()) {
    result.verdict = EntailVerdict::Timeout;
    return result;
  }
  result.verdict = *found ? EntailVerdict::Entails : EntailVerdict::NotEntails;
  if (*found && want_witness) result.witness = search.witness();
  return result;
}

// A positive existential conjunction is valid exactly when every atom is
// a term equality and identifying variables solves them: no equivalence
// class may contain two distinct constants. Predicate and role atoms
// fail in the structure where every relation is empty and every role is
// nowhere defined.
bool is_valid_sentence(const Formula& positive_body) {
  PositiveBody body = collect_positive_body(positive_body);
  UnionFind uf;
  for (const Atom& a : body.atoms) {
    if (a.kind != AtomKind::TermEq) return false;
    uf.merge(term_name(a.args[0]), term_name(a.args[1]));
  }
  std::map<std::string, std::string> constant_of;  // class -> constant
  for (const Atom& a : body.atoms) {
    for (const Term& t : a.args) {
      if (is_variable(t)) continue;
      const std::string& name = term_name(t);
      auto [it, fresh] = constant_of.emplace(uf.find(name), name);
      if (!fresh && it->second != name) return false;
    }
  }
  return true;
}

EntailVerdict outcome_to_verdict(ProverOutcome out) {
  switch (out) {
    case ProverOutcome::Theorem: return EntailVerdict::Entails;
    case ProverOutcome::NotTheorem: return EntailVerdict::NotEntails;
    case ProverOutcome::Timeout: return EntailVerdict::Timeout;
    case ProverOutcome::Error: return EntailVerdict::Unsupported;
  }
  return EntailVerdict::Unsupported;
}

}  // namespace

EntailResult entails(const Formula& premise, const Formula& conclusion,
                     const EntailConfig& cfg) {
  FragmentShape a = classify_fragment(premise);
  FragmentShape b = classify_fragment(conclusion);
  if (!a.supported || !b.supported ||
      !free_variables(premise).empty() || !free_variables(conclusion).empty()) {
    if (!cfg.prover_command.empty()) {
      ProverConfig pc{cfg.prover_command, cfg.prover_timeout_seconds};
      EntailResult result;
      result.verdict = outcome_to_verdict(
          external_prove(to_tptp(premise, conclusion), pc));
      return result;
    }
    return {};
  }

  int ka = a.negations % 2;  // double negations cancel
  int kb = b.negations % 2;

  if (ka == 0 && kb == 0) return positive_entails(a.body, b.body, cfg, true);
  if (ka == 1 && kb == 1) return positive_entails(b.body, a.body, cfg, false);
  if (ka == 0 && kb == 1) {
    // Two positive existential conjunctions are jointly satisfiable, so a
    // positive premise never entails a negated sentence.
    EntailResult result;
    result.verdict = EntailVerdict::NotEntails;
    return result;
  }
  // Negated premise, positive conclusion: holds when the conclusion is
  // valid, or when the negated body is valid and the premise therefore
  // unsatisfiable.
  EntailResult result;
  result.verdict = is_valid_sentence(b.body) || is_valid_sentence(a.body)
                       ? EntailVerdict::Entails
                       : EntailVerdict::NotEntails;
  return result;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Equivalent: return "Equivalent";
    case Relation::ForwardOnly: return "ForwardOnly";
    case Relation::BackwardOnly: return "BackwardOnly";
    case Relation::Contradiction: return "Contradiction";
    case Relation::Neutral: return "Neutral";
    case Relation::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

namespace {

// Is premise AND other unsatisfiable? Only reachable when neither
// entailment direction holds.
EntailVerdict contradiction_check(const Formula& a, const Formula& b,
                                  const EntailConfig& cfg) {
  FragmentShape sa = classify_fragment(a);
  FragmentShape sb = classify_fragment(b);
  int ka = sa.negations % 2, kb = sb.negations % 2;
  if (ka == 0 && kb == 0) return EntailVerdict::NotEntails;
  if (ka == 0 && kb == 1)
    return positive_entails(sa.body, sb.body, cfg, false).verdict;
  if (ka == 1 && kb == 0)
    return positive_entails(sb.body, sa.body, cfg, false).verdict;
  // Both negated: the conjunction is unsatisfiable iff one body is valid.
  bool valid = is_valid_sentence(sa.body) || is_valid_sentence(sb.body);
  return valid ? EntailVerdict::Entails : EntailVerdict::NotEntails;
}

}  // namespace

Relation logical_relation(const Formula& gold, const Formula& predicted,
                          const EntailConfig& cfg) {
  EntailResult forward = entails(gold, predicted, cfg);
  EntailResult backward = entails(predicted, gold, cfg);

  auto decided = [](EntailVerdict v) {
    return v == EntailVerdict::Entails || v == EntailVerdict::NotEntails;
  };
  if (!decided(forward.verdict) || !decided(backward.verdict))
    return Relation::Unsupported;

  bool fwd = forward.verdict == EntailVerdict::Entails;
  bool bwd = backward.verdict == EntailVerdict::Entails;
  if (fwd && bwd) return Relation::Equivalent;
  if (fwd) return Relation::ForwardOnly;
  if (bwd) return Relation::BackwardOnly;

  EntailVerdict conflict = contradiction_check(gold, predicted, cfg);
  if (conflict == EntailVerdict::Entails) return Relation::Contradiction;
  if (conflict == EntailVerdict::NotEntails) return Relation::Neutral;
  return Relation::Unsupported;
}

bool prover_accuracy_verdict(const Formula& gold, const Formula& predicted,
                             const EntailConfig& cfg) {
  return logical_relation(gold, predicted, cfg) == Relation::Equivalent;
}

}  // namespace logiceval
