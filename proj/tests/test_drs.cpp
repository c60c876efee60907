#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logiceval/drs.hpp"
#include "logiceval/parse.hpp"
#include "support/fixtures.hpp"

using namespace logiceval;

namespace {

std::vector<std::string> referent_names(const Drs& box) {
  std::vector<std::string> out;
  for (const Variable& v : box.referents) out.push_back(v.name);
  return out;
}

}  // namespace

TEST_CASE("negated corpus form: root box wrapping one negated box") {
  Drs root = fol_to_drs(parse_formula(fixtures::biker_prenex));
  CHECK(root.referents.empty());
  REQUIRE(root.conditions.size() == 1);
  const auto* neg = std::get_if<NegBox>(&root.conditions[0]);
  REQUIRE(neg != nullptr);

  const Drs& inner = neg->box();
  CHECK(referent_names(inner) == std::vector<std::string>{"e1", "x2", "x3"});
  REQUIRE(inner.conditions.size() == 5);
  for (const Condition& c : inner.conditions)
    CHECK(std::holds_alternative<Atom>(c));
  CHECK(std::get<Atom>(inner.conditions[0]).predicate == "biker");
  CHECK(std::get<Atom>(inner.conditions[2]).kind == AtomKind::RoleEq);
}

TEST_CASE("positive corpus form: a single box") {
  Drs root = fol_to_drs(parse_formula(fixtures::boys_prenex));
  CHECK(referent_names(root) == std::vector<std::string>{"e1", "x2", "x3"});
  REQUIRE(root.conditions.size() == 6);
  CHECK(std::get<Atom>(root.conditions[1]).predicate == "three");
}

TEST_CASE("nested quantifiers land in one content box") {
  Drs root = fol_to_drs(parse_formula(fixtures::boys_raw));
  CHECK(referent_names(root) == std::vector<std::string>{"x4", "e5", "x6"});
  CHECK(root.conditions.size() == 6);
}

TEST_CASE("clause inventory of the worked role pair") {
  CHECK(clause_dump(formula_to_clauses(parse_formula(fixtures::g2))) ==
        "b1 eat e\n"
        "b1 subj e x\n");
  CHECK(clause_dump(formula_to_clauses(parse_formula(fixtures::p2))) ==
        "b1 eat e\n"
        "b1 obj e x\n");
}

TEST_CASE("clause counts for the corpus pair") {
  CHECK(formula_to_clauses(parse_formula(fixtures::biker_prenex)).clauses.size() == 6);
  CHECK(formula_to_clauses(parse_formula(fixtures::boys_prenex)).clauses.size() == 6);
}

TEST_CASE("negation chains number boxes depth-first") {
  ClauseSet cs = formula_to_clauses(parse_formula("--p(a)"));
  CHECK(cs.boxes == std::vector<std::string>{"b1", "b2", "b3"});
  CHECK(clause_dump(cs) ==
        "b1 NOT b2\n"
        "b2 NOT b3\n"
        "b3 p a\n");
  REQUIRE(cs.clauses.size() == 3);
  CHECK(cs.clauses[0].args[0].kind == ClauseArg::Kind::Box);
  CHECK(cs.clauses[2].args[0].kind == ClauseArg::Kind::Const);
}

TEST_CASE("equalities get the reserved EQ label") {
  ClauseSet cs = formula_to_clauses(
      parse_formula("exists x1.((x1 = a) & p(x1))"));
  CHECK(clause_dump(cs) ==
        "b1 EQ x1 a\n"
        "b1 p x1\n");
  CHECK(cs.clauses[0].label == "EQ");
  CHECK(cs.clauses[0].args[0].kind == ClauseArg::Kind::Var);
  CHECK(cs.clauses[0].args[1].kind == ClauseArg::Kind::Const);
}

TEST_CASE("role equalities flatten to binary clauses") {
  ClauseSet cs = formula_to_clauses(parse_formula(fixtures::children_gold));
  CHECK(clause_dump(cs) ==
        "b1 NOT b2\n"
        "b2 child x3\n"
        "b2 play e1\n"
        "b2 subj e1 x3\n"
        "b2 wait e2\n"
        "b2 subj e2 x3\n");
  CHECK(cs.variables == std::set<std::string>{"e1", "e2", "x3"});
}

TEST_CASE("variable inventory covers referents and arguments") {
  ClauseSet cs = formula_to_clauses(parse_formula("exists e1 x2.jump(e1)"));
  // x2 never occurs in a clause but is still a referent of the box.
  CHECK(cs.variables == std::set<std::string>{"e1", "x2"});
  CHECK(cs.clauses.size() == 1);
}

TEST_CASE("conversion rejects what the box language cannot hold") {
  CHECK_THROWS_AS(fol_to_drs(parse_formula("exists e1.-jump(e1)")),
                  ConversionError);
  CHECK_THROWS_AS(fol_to_drs(parse_formula("(p(a) & -q(a))")), ConversionError);
  CHECK_THROWS_AS(fol_to_drs(parse_formula("jump(e1)")), ConversionError);
  CHECK_THROWS_AS(formula_to_clauses(parse_formula("-exists e1.(jump(e1) & "
                                                   "-exists x2.p(x2))")),
                  ConversionError);
}

TEST_CASE("sibling scopes merge into the content box") {
  ClauseSet cs = formula_to_clauses(
      parse_formula("(exists e1.jump(e1) & exists e1.run(e1))"));
  CHECK(clause_dump(cs) ==
        "b1 jump e1\n"
        "b1 run e2\n");
}
