#include "logiceval/drs.hpp"

#include "logiceval/normalize.hpp"

namespace logiceval {

Drs fol_to_drs(const Formula& f) {
  int negations = 0;
  const Formula* core = &f;
  while (core->kind == Formula::Kind::Neg) {
    core = &core->children[0];
    ++negations;
  }

  PositiveBody body;
  try {
    body = collect_positive_body(*core);
  } catch (const NormalizationError& e) {
    throw ConversionError(e.what());
  }

  Drs box;
  box.referents = std::move(body.vars);
  for (Atom& a : body.atoms) box.conditions.emplace_back(std::move(a));

  for (int i = 0; i < negations; ++i) {
    NegBox neg;
    neg.inner.push_back(std::move(box));
    box = Drs{};
    box.conditions.emplace_back(std::move(neg));
  }
  return box;
}

namespace {

ClauseArg term_arg(const Term& t) {
  ClauseArg arg;
  arg.kind = is_variable(t) ? ClauseArg::Kind::Var : ClauseArg::Kind::Const;
  arg.name = term_name(t);
  return arg;
}

struct ClauseBuilder {
  ClauseSet out;
  int next_box = 0;

  std::string fresh_box() {
    return "b" + std::to_string(++next_box);
  }

  void emit(const Drs& box, const std::string& id) {
    out.boxes.push_back(id);
    for (const Variable& v : box.referents) out.variables.insert(v.name);
    for (const Condition& cond : box.conditions) {
      if (const auto* atom = std::get_if<Atom>(&cond)) {
        Clause clause;
        clause.box = id;
        switch (atom->kind) {
          case AtomKind::Predicate:
          case AtomKind::RoleEq:
            clause.label = atom->predicate;
            break;
          case AtomKind::TermEq:
            clause.label = "EQ";
            break;
        }
        for (const Term& t : atom->args) {
          clause.args.push_back(term_arg(t));
          if (is_variable(t)) out.variables.insert(term_name(t));
        }
        out.clauses.push_back(std::move(clause));
      } else {
        const NegBox& neg = std::get<NegBox>(cond);
        std::string inner_id = fresh_box();
        Clause clause;
        clause.box = id;
        clause.label = "NOT";
        clause.args.push_back({ClauseArg::Kind::Box, inner_id});
        out.clauses.push_back(std::move(clause));
        emit(neg.box(), inner_id);
      }
    }
  }
};

}  // namespace

ClauseSet drs_to_clauses(const Drs& drs) {
  ClauseBuilder builder;
  builder.emit(drs, builder.fresh_box());
  return std::move(builder.out);
}

std::string clause_dump(const ClauseSet& cs) {
  std::string out;
  for (const Clause& c : cs.clauses) {
    out += c.box;
    out += ' ';
    out += c.label;
    for (const ClauseArg& a : c.args) {
      out += ' ';
      out += a.name;
    }
    out += '\n';
  }
  return out;
}

ClauseSet formula_to_clauses(const Formula& f) {
  return drs_to_clauses(fol_to_drs(f));
}

}  // namespace logiceval
