#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "logiceval/normalize.hpp"
#include "logiceval/parse.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace logiceval;

namespace {

std::string norm(const char* text) {
  return print_formula(normalize(parse_formula(text)));
}

std::multiset<std::string> atom_labels(const Formula& f) {
  std::multiset<std::string> out;
  for_each_atom(f, [&](const Atom& a) {
    out.insert(a.kind == AtomKind::TermEq ? "=" : a.predicate);
  });
  return out;
}

}  // namespace

TEST_CASE("corpus raw forms reach their prenex forms byte-exactly") {
  CHECK(norm(fixtures::biker_raw) == fixtures::biker_prenex);
  CHECK(norm(fixtures::boys_raw) == fixtures::boys_prenex);
}

TEST_CASE("decoration stripping") {
  Formula f = parse_formula("exists e1.(__weird(e1) & _in_front_of(e1,e1))");
  Formula stripped = strip_predicate_decorations(f);
  CHECK(print_formula(stripped) ==
        "exists e1.(weird(e1) & in_front_of(e1,e1))");
  // Interior underscores survive; roles are names too.
  Formula g = strip_predicate_decorations(
      parse_formula("exists e1 x2.(_subj(e1) = x2)"));
  CHECK(print_formula(g) == "exists e1 x2.((subj(e1) = x2))");
}

TEST_CASE("quantifier pulling orders events before entities by occurrence") {
  CHECK(norm("exists x1 x2 e3.(p(x1,x2) & q(e3))") ==
        "exists e1 x2 x3.(p(x2,x3) & q(e1))");
  CHECK(norm("exists x1.exists e2.exists x3.(p(x1) & q(e2) & r(x3))") ==
        "exists e1 x2 x3.(p(x2) & q(e1) & r(x3))");
}

TEST_CASE("pulling keeps the original atom order") {
  CHECK(norm(fixtures::boys_raw) ==
        "exists e1 x2 x3.(boy(x2) & three(x2) & jump(e1) & (subj(e1) = x2) & "
        "leaf(x3) & in(e1,x3))");
}

TEST_CASE("sibling scopes with a reused binder are renamed apart") {
  CHECK(norm("(exists e1.jump(e1) & exists e1.run(e1))") ==
        "exists e1 e2.(jump(e1) & run(e2))");
  CHECK(norm("(exists e1.jump(e1) & exists e1 e2.(run(e1) & hop(e2)))") ==
        "exists e1 e2 e3.(jump(e1) & run(e2) & hop(e3))");
}

TEST_CASE("unused binders survive the prefix") {
  CHECK(norm("exists e1 x2.jump(e1)") == "exists e1 x2.(jump(e1))");
}

TEST_CASE("quantifier-free and negation-only inputs") {
  CHECK(norm("p(a)") == "p(a)");
  CHECK(norm("-p(a)") == "-p(a)");
  CHECK(norm("--exists e4.jump(e4)") == "--exists e1.(jump(e1))");
}

TEST_CASE("inner negation and open formulas are rejected") {
  CHECK_THROWS_AS(normalize(parse_formula("exists e1.-jump(e1)")),
                  NormalizationError);
  CHECK_THROWS_AS(normalize(parse_formula("(p(a) & -q(a))")),
                  NormalizationError);
  CHECK_THROWS_AS(normalize(parse_formula("jump(e1)")), NormalizationError);
  CHECK_THROWS_AS(normalize(parse_formula("exists x2.jump(e1)")),
                  NormalizationError);
}

TEST_CASE("renumbering requires prenex shape") {
  CHECK_THROWS_AS(renumber_variables(parse_formula("exists e1.exists x2.p(e1,x2)")),
                  NormalizationError);
  CHECK_THROWS_AS(renumber_variables(parse_formula("exists e1.-jump(e1)")),
                  NormalizationError);
  CHECK(print_formula(renumber_variables(parse_formula(
            "exists e4 x9.(jump(e4) & (subj(e4) = x9))"))) ==
        "exists e1 x2.(jump(e1) & (subj(e1) = x2))");
}

TEST_CASE("renumbering maps the i-th prefix variable to index i") {
  Renaming r = prenex_renumbering(
      parse_formula("exists e7 e3 x9.(p(e7) & q(e3) & r(x9))"));
  REQUIRE(r.pairs.size() == 3);
  CHECK(r.pairs[0].second.name == "e1");
  CHECK(r.pairs[1].second.name == "e2");
  CHECK(r.pairs[2].second.name == "x3");
}

TEST_CASE("collect_positive_body flattens depth-first") {
  PositiveBody body = collect_positive_body(
      parse_formula("exists x4.(_boy(x4) & exists e5.(_jump(e5) & (subj(e5) = x4)))"));
  REQUIRE(body.vars.size() == 2);
  CHECK(body.vars[0].name == "x4");
  CHECK(body.vars[1].name == "e5");
  REQUIRE(body.atoms.size() == 3);
  CHECK(body.atoms[0].predicate == "_boy");
  CHECK(body.atoms[1].predicate == "_jump");
  CHECK(body.atoms[2].kind == AtomKind::RoleEq);
}

TEST_CASE("normalization is idempotent and preserves structure counts") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::random_formula(rng);
    CAPTURE(print_formula(f));
    Formula once = normalize(f);
    CHECK(normalize(once) == once);
    CHECK(count_negations(once) == count_negations(f));
    CHECK(atom_labels(once) == atom_labels(f));

    QuantifierCounts before = bound_variable_counts(f);
    QuantifierCounts after = bound_variable_counts(once);
    CHECK(before == after);
  }
}

TEST_CASE("normalized output is canonical prenex") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Formula f = normalize(gen::random_formula(rng));
    const Formula* core = &f;
    while (core->kind == Formula::Kind::Neg) core = &core->children[0];
    if (core->kind == Formula::Kind::Exists) {
      // Prefix: events first, then entities, indices 1..n by position.
      int position = 0;
      bool seen_entity = false;
      for (const Variable& v : core->bound) {
        ++position;
        CHECK(v.index == position);
        if (v.sort == Sort::Entity) seen_entity = true;
        else CHECK_FALSE(seen_entity);
      }
      core = &core->children[0];
    }
    CHECK(bound_variable_counts(*core) == QuantifierCounts{0, 0});
    CHECK(count_negations(*core) == 0);
  }
}
