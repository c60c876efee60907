#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "logiceval/dmatch.hpp"
#include "logiceval/parse.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace logiceval;

namespace {

ClauseSet clauses(const char* text) {
  return formula_to_clauses(parse_formula(text));
}

MatchScore score(const char* gold, const char* pred) {
  return dmatch_score(clauses(gold), clauses(pred));
}

}  // namespace

TEST_CASE("worked diagnostic pairs") {
  MatchScore role_confusion = score(fixtures::g2, fixtures::p2);
  CHECK(role_confusion.precision == doctest::Approx(0.5));
  CHECK(role_confusion.recall == doctest::Approx(0.5));
  CHECK(role_confusion.f1 == doctest::Approx(0.5));
  CHECK(role_confusion.matched == 1);

  MatchScore extra_modifier = score(fixtures::g1, fixtures::p1);
  CHECK(extra_modifier.precision == doctest::Approx(0.5));
  CHECK(extra_modifier.recall == doctest::Approx(1.0));
  CHECK(extra_modifier.f1 == doctest::Approx(2.0 / 3.0));
  CHECK(extra_modifier.matched == 1);
}

TEST_CASE("disjoint and polarity-split pairs score zero") {
  CHECK(score("p(a)", "q(a)").f1 == 0.0);
  CHECK(score("p(a)", "-p(a)").f1 == 0.0);
  CHECK(score("p(a)", "-p(a)").matched == 0);
}

TEST_CASE("identity scores one") {
  for (const char* text : {fixtures::biker_prenex, fixtures::boys_prenex,
                           fixtures::cc_gold, fixtures::children_gold}) {
    CAPTURE(text);
    MatchScore s = score(text, text);
    CHECK(s.precision == 1.0);
    CHECK(s.recall == 1.0);
    CHECK(s.f1 == 1.0);
  }
}

TEST_CASE("renamed variables do not change the score") {
  MatchScore s = score("exists e1 x2.(eat(e1) & (subj(e1) = x2))",
                       "exists e7 x9.(eat(e7) & (subj(e7) = x9))");
  CHECK(s.f1 == 1.0);
}

TEST_CASE("empty clause-set conventions") {
  ClauseSet empty;
  CHECK(dmatch_score(empty, empty).f1 == 1.0);
  CHECK(dmatch_score(empty, clauses("p(a)")).f1 == 0.0);
  CHECK(dmatch_score(clauses("p(a)"), empty).f1 == 0.0);
  CHECK(dmatch_score(empty, clauses("p(a)")).precision == 0.0);
  CHECK(dmatch_score(clauses("p(a)"), empty).recall == 0.0);
}

TEST_CASE("precision and recall directions") {
  // Prediction carries one extra clause.
  MatchScore s = score("exists e1.(jump(e1))",
                       "exists e1 x2.(jump(e1) & high(e1) & big(x2))");
  CHECK(s.recall == doctest::Approx(1.0));
  CHECK(s.precision == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("alignment is injective and pre-pairs the roots") {
  ClauseSet gold = clauses(fixtures::cc_gold);
  ClauseSet pred = clauses(fixtures::cc_pred);
  Alignment a = best_alignment(gold, pred);
  CHECK(a.box_map.at("b1") == "b1");
  std::set<std::string> images;
  for (const auto& [from, to] : a.var_map) {
    CAPTURE(from);
    CHECK(images.insert(to).second);
  }
  CHECK(a.matched == 10);
}

TEST_CASE("negation boxes must line up") {
  // The inner box pairs with the inner box, so only the inner clause and
  // the NOT link can match; the two extra gold conditions stay unmatched.
  MatchScore s = score(fixtures::pp_gold, fixtures::pp_pred);
  CHECK(s.matched == 8);
  CHECK(s.recall == doctest::Approx(8.0 / 9.0));
  CHECK(s.precision == doctest::Approx(1.0));
}

TEST_CASE("brute force agrees on the worked pairs") {
  for (auto [g, p] : std::initializer_list<std::pair<const char*, const char*>>{
           {fixtures::g1, fixtures::p1},
           {fixtures::g2, fixtures::p2},
           {fixtures::pp_gold, fixtures::pp_pred},
           {fixtures::children_gold, fixtures::children_pred},
           {fixtures::bull_gold, fixtures::bull_pred}}) {
    CAPTURE(g);
    ClauseSet gold = clauses(g), pred = clauses(p);
    CHECK(best_alignment(gold, pred).matched ==
          brute_force_alignment(gold, pred).matched);
  }
}

TEST_CASE("brute force rejects oversized inputs") {
  ClauseSet big = clauses(
      "exists e1 e2 e3 x4 x5 x6 x7 x8 x9.(jump(e1) & jump(e2) & jump(e3) & "
      "p(x4) & p(x5) & p(x6) & p(x7) & p(x8) & p(x9))");
  CHECK(big.variables.size() == 9);
  CHECK_THROWS_AS(brute_force_alignment(big, big), SizeError);
  CHECK_NOTHROW(brute_force_alignment(big, big, 9));

  ClauseSet deep = clauses("-----p(a)");
  CHECK(deep.boxes.size() == 6);
  CHECK_NOTHROW(brute_force_alignment(deep, deep));
  ClauseSet deeper = clauses("------p(a)");
  CHECK_THROWS_AS(brute_force_alignment(deeper, deeper), SizeError);
  CHECK_NOTHROW(brute_force_alignment(deeper, deeper, 8, 7));
}

TEST_CASE("hill climbing never beats the oracle and usually ties it") {
  std::mt19937_64 rng(23);
  gen::GenConfig cfg;
  cfg.max_vars = 5;
  cfg.max_atoms = 7;
  int ties = 0, total = 0;
  while (total < 150) {
    Formula f = gen::random_formula(rng, cfg);
    Formula g = gen::perturb(rng, f);
    ClauseSet gold = formula_to_clauses(f);
    ClauseSet pred = formula_to_clauses(g);
    if (gold.variables.size() > 8 || pred.variables.size() > 8) continue;
    ++total;
    int climbed = best_alignment(gold, pred).matched;
    int exact = brute_force_alignment(gold, pred).matched;
    CAPTURE(print_formula(f));
    CAPTURE(print_formula(g));
    CHECK(climbed <= exact);
    ties += climbed == exact;
  }
  CHECK(ties >= total * 99 / 100);
}

TEST_CASE("search is deterministic for a fixed config") {
  ClauseSet gold = clauses(fixtures::cc_gold);
  ClauseSet pred = clauses(fixtures::cc_pred);
  SearchConfig cfg;
  cfg.rng_seed = 42;
  Alignment first = best_alignment(gold, pred, cfg);
  Alignment second = best_alignment(gold, pred, cfg);
  CHECK(first.matched == second.matched);
  CHECK(first.var_map == second.var_map);
  CHECK(first.box_map == second.box_map);
}

TEST_CASE("scores are clamped to sane ranges") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    Formula f = gen::random_formula(rng);
    Formula g = gen::perturb(rng, f);
    MatchScore s = dmatch_score(formula_to_clauses(f), formula_to_clauses(g));
    CHECK(s.precision >= 0.0);
    CHECK(s.precision <= 1.0);
    CHECK(s.recall >= 0.0);
    CHECK(s.recall <= 1.0);
    CHECK(s.f1 >= 0.0);
    CHECK(s.f1 <= 1.0);
  }
}
