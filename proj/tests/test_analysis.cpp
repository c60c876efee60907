#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "logiceval/analysis.hpp"
#include "logiceval/parse.hpp"
#include "support/fixtures.hpp"

using namespace logiceval;

namespace {

Formula F(const char* text) { return parse_formula(text); }

}  // namespace

TEST_CASE("complexity counts binders, negations, and conjunction joints") {
  CHECK(complexity(F(fixtures::biker_raw)) == 8);
  CHECK(complexity(F(fixtures::biker_prenex)) == 8);
  CHECK(complexity(F(fixtures::boys_raw)) == 8);
  CHECK(complexity(F(fixtures::boys_prenex)) == 8);

  CHECK(complexity(F("p(a)")) == 0);
  CHECK(complexity(F("-p(a)")) == 1);
  CHECK(complexity(F("--p(a)")) == 2);
  CHECK(complexity(F(fixtures::g1)) == 1);
  CHECK(complexity(F(fixtures::p1)) == 2);   // one binder + one joint
  CHECK(complexity(F(fixtures::g2)) == 3);   // two binders + one joint
  CHECK(complexity(F("(p(a) & q(a) & r(a))")) == 2);
}

TEST_CASE("binning splits sorted items evenly with the remainder in front") {
  std::vector<std::pair<std::string, int>> items;
  for (int i = 0; i < 10; ++i)
    items.emplace_back("item" + std::to_string(i), 10 - i);

  auto bins = bin_by_complexity(items, 6);
  REQUIRE(bins.size() == 6);
  CHECK(bins[0].size() == 2);
  CHECK(bins[1].size() == 2);
  CHECK(bins[2].size() == 2);
  CHECK(bins[3].size() == 2);
  CHECK(bins[4].size() == 1);
  CHECK(bins[5].size() == 1);
  // Lowest complexity first: item9 has complexity 1.
  CHECK(bins[0] == std::vector<std::string>{"item9", "item8"});
  CHECK(bins[5] == std::vector<std::string>{"item0"});
}

TEST_CASE("binning is stable and breaks ties by id") {
  std::vector<std::pair<std::string, int>> items = {
      {"b", 1}, {"a", 1}, {"d", 1}, {"c", 1}};
  auto bins = bin_by_complexity(items, 2);
  CHECK(bins[0] == std::vector<std::string>{"a", "b"});
  CHECK(bins[1] == std::vector<std::string>{"c", "d"});

  CHECK_THROWS_AS(bin_by_complexity(items, 0), std::invalid_argument);

  // More bins than items leaves the tail empty.
  auto sparse = bin_by_complexity({{"x", 1}}, 3);
  CHECK(sparse[0] == std::vector<std::string>{"x"});
  CHECK(sparse[1].empty());
  CHECK(sparse[2].empty());
}

TEST_CASE("2580 items split into six bins of 430") {
  std::vector<std::pair<std::string, int>> items;
  for (int i = 0; i < 2580; ++i)
    items.emplace_back("s" + std::to_string(i), i % 17);
  auto bins = bin_by_complexity(items, 6);
  for (const auto& bin : bins) CHECK(bin.size() == 430);
}

TEST_CASE("category flags of the exhibit items") {
  CategoryFlags cc = detect_categories(F(fixtures::cc_gold), fixtures::cc_sentence);
  CHECK(cc.cc);
  CHECK(cc.source == CategoryFlags::Source::Heuristic);

  CategoryFlags pp = detect_categories(F(fixtures::pp_gold), fixtures::pp_sentence);
  CHECK(pp.pp);

  CategoryFlags pss = detect_categories(F(fixtures::pss_gold), fixtures::pss_sentence);
  CHECK(pss.pss);
}

TEST_CASE("coordination fires on either expansion shape") {
  // Same predicate over two events, different subjects, no sentence.
  CHECK(detect_categories(F(fixtures::cc_gold)).cc);
  // Two events sharing one subject.
  CHECK(detect_categories(F(fixtures::children_gold)).cc);
  // Sentence-only signal.
  CHECK(detect_categories(F("p(a)"), "cats and dogs").cc);
  CHECK(detect_categories(F("p(a)"), "cats or dogs").cc);
  CHECK_FALSE(detect_categories(F("p(a)"), "sandcastles on the beach").cc);
  CHECK_FALSE(detect_categories(F(fixtures::g2), "a cat eats").cc);
}

TEST_CASE("prepositional phrases need an event-entity binary predicate") {
  CHECK(detect_categories(F(fixtures::boys_prenex)).pp);  // in(e1,x3)
  CHECK_FALSE(detect_categories(F(fixtures::g2)).pp);
  CHECK_FALSE(detect_categories(F("exists e1 e2.p(e1,e2)")).pp);
  CHECK_FALSE(detect_categories(F("exists x1 x2.p(x1,x2)")).pp);
}

TEST_CASE("passive voice from role shape or sentence shape") {
  CHECK(detect_categories(F(fixtures::pss_pred)).pss);  // obj without subj
  CHECK_FALSE(detect_categories(F(fixtures::bull_gold)).pss);
  CHECK(detect_categories(F("p(a)"), "A rock is being climbed by a person.").pss);
  CHECK(detect_categories(F("p(a)"), "The song was performed by a choir.").pss);
  CHECK_FALSE(detect_categories(F("p(a)"), "A person climbs a rock.").pss);
}

TEST_CASE("error taxonomy: quantifier counts win first") {
  CHECK(classify_error(F(fixtures::children_gold), F(fixtures::children_pred)) ==
        ErrorLabel::QuantifierCount);
  CHECK(classify_error(F(fixtures::bull_gold), F(fixtures::bull_pred)) ==
        ErrorLabel::QuantifierCount);
  // Same total, different split across sorts.
  CHECK(classify_error(F("exists e1 x2.(jump(e1) & p(x2))"),
                       F("exists e1 e2.(jump(e1) & p(e2))")) ==
        ErrorLabel::QuantifierCount);
}

TEST_CASE("error taxonomy: polarity, then role order, then containment") {
  CHECK(classify_error(F("p(a)"), F("-p(a)")) == ErrorLabel::PolarityMismatch);
  CHECK(classify_error(F("--p(a)"), F("-p(a)")) == ErrorLabel::PolarityMismatch);

  CHECK(classify_error(F(fixtures::g2), F(fixtures::p2)) ==
        ErrorLabel::ArgumentRoleOrder);
  CHECK(classify_error(
            F("exists e1 x2 x3.((subj(e1) = x2) & (obj(e1) = x3) & see(e1))"),
            F("exists e1 x2 x3.((obj(e1) = x2) & (subj(e1) = x3) & see(e1))")) ==
        ErrorLabel::ArgumentRoleOrder);

  CHECK(classify_error(F(fixtures::g1), F(fixtures::p1)) ==
        ErrorLabel::SubformulaPresence);
  CHECK(classify_error(F(fixtures::pp_gold), F(fixtures::pp_pred)) ==
        ErrorLabel::SubformulaPresence);
  CHECK(classify_error(F(fixtures::cc_gold), F(fixtures::cc_pred)) ==
        ErrorLabel::SubformulaPresence);
}

TEST_CASE("error taxonomy: label-only residue, then Other") {
  CHECK(classify_error(F("exists e1.jump(e1)"), F("exists e1.run(e1)")) ==
        ErrorLabel::PredicateSymbols);
  CHECK(classify_error(F("(p(a) & q(a))"), F("(p(a) & r(a))")) ==
        ErrorLabel::PredicateSymbols);
  CHECK(classify_error(F("exists e1 x2.(in(e1,x2) & jump(e1))"),
                       F("exists e1 x2.(on(e1,x2) & jump(e1))")) ==
        ErrorLabel::PredicateSymbols);

  CHECK(classify_error(F("p(a,b)"), F("q(c)")) == ErrorLabel::Other);
  CHECK(classify_error(F("(p(a) & q(b))"), F("(p(c) & q(d))")) ==
        ErrorLabel::Other);
}

TEST_CASE("error taxonomy preconditions") {
  CHECK_THROWS_AS(classify_error(F("jump(e1)"), F("p(a)")), PreconditionError);
  CHECK_THROWS_AS(classify_error(F("p(a)"), F("jump(e1)")), PreconditionError);
  // Inside the fragment but outside the box language: falls back to Other.
  CHECK(classify_error(F("exists e1.-jump(e1)"), F("exists e1.-run(e1)")) ==
        ErrorLabel::Other);
}
