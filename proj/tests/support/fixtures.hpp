// Shared corpus snippets used across the test binaries. Raw/prenex pairs
// come from the jumping-biker and jumping-boys items; the g/p pairs are
// the worked diagnostic examples; the sick_test_* pairs are the error
// taxonomy exhibits.

#pragma once

namespace fixtures {

inline constexpr const char* biker_raw =
    "-exists x5.(_biker(x5) & exists e6.(_jump(e6) & (subj(e6) = x5) & "
    "exists x7.(_air(x7) & _in(e6,x7))))";
inline constexpr const char* biker_prenex =
    "-exists e1 x2 x3.(biker(x2) & jump(e1) & (subj(e1) = x2) & air(x3) & "
    "in(e1,x3))";

inline constexpr const char* boys_raw =
    "exists x4.(_boy(x4) & _three(x4) & exists e5.(_jump(e5) & "
    "(subj(e5) = x4) & exists x6.(_leaf(x6) & _in(e5,x6))))";
inline constexpr const char* boys_prenex =
    "exists e1 x2 x3.(boy(x2) & three(x2) & jump(e1) & (subj(e1) = x2) & "
    "leaf(x3) & in(e1,x3))";

// Missing-modifier pair: prediction adds high(e).
inline constexpr const char* g1 = "exists e.jump(e)";
inline constexpr const char* p1 = "exists e.(jump(e) & high(e))";

// Role-confusion pair: subj against obj.
inline constexpr const char* g2 = "exists e x.(eat(e) & (subj(e) = x))";
inline constexpr const char* p2 = "exists e x.(eat(e) & (obj(e) = x))";

// Coordination exhibit: two sitting events, the second loses its bench.
inline constexpr const char* cc_sentence =
    "A man and a woman are sitting comfortably on the bench.";
inline constexpr const char* cc_gold =
    "exists e1 e2 x3 x4 x5 x6.(man(x3) & sit(e1) & (subj(e1) = x3) & "
    "comfortably(e1) & bench(x4) & on(e1,x4) & woman(x5) & sit(e2) & "
    "(subj(e2) = x5) & comfortably(e2) & bench(x6) & on(e2,x6))";
inline constexpr const char* cc_pred =
    "exists e1 e2 x3 x4 x5 x6.(man(x3) & sit(e1) & (subj(e1) = x3) & "
    "comfortably(e1) & bench(x4) & on(e1,x4) & woman(x5) & sit(e2) & "
    "(subj(e2) = x5) & comfortably(e2))";

// Prepositional-phrase exhibit: prediction drops excitedly(e1).
inline constexpr const char* pp_sentence =
    "There is no dog excitedly playing with water in the grass.";
inline constexpr const char* pp_gold =
    "-exists e1 x2 x3 x4.(dog(x2) & play(e1) & (subj(e1) = x2) & water(x3) & "
    "with(e1,x3) & grass(x4) & in(e1,x4) & excitedly(e1))";
inline constexpr const char* pp_pred =
    "-exists e1 x2 x3 x4.(dog(x2) & play(e1) & (subj(e1) = x2) & water(x3) & "
    "with(e1,x3) & grass(x4) & in(e1,x4))";

// Passive exhibit: the climbing loses its agent.
inline constexpr const char* pss_sentence =
    "A rock is being climbed by a person with a rope, which is pink.";
inline constexpr const char* pss_gold =
    "exists e1 e2 x3 x4 x5.(rock(x3) & climb(e1) & (obj(e1) = x3) & "
    "person(x4) & rope(x5) & pink(x5) & with(e2,x5) & (subj(e2) = x4) & "
    "(subj(e1) = x4))";
inline constexpr const char* pss_pred =
    "exists e1 x2 x3 x4.(rock(x2) & climb(e1) & (obj(e1) = x2) & person(x3) & "
    "rope(x4) & pink(x4) & with(e1,x4))";

// Quantifier-count regressions: collapsed events, split modifier.
inline constexpr const char* children_sentence =
    "There are no children playing and waiting.";
inline constexpr const char* children_gold =
    "-exists e1 e2 x3.(child(x3) & play(e1) & (subj(e1) = x3) & wait(e2) & "
    "(subj(e2) = x3))";
inline constexpr const char* children_pred =
    "-exists e1 x2 x3.(child(x2) & play(e1) & (subj(e1) = x2) & wait(e1))";

inline constexpr const char* bull_sentence = "A man is riding a mechanical bull.";
inline constexpr const char* bull_gold =
    "exists e1 x2 x3.(man(x2) & bull(x3) & mechanical(x3) & ride(e1) & "
    "(subj(e1) = x2) & (obj(e1) = x3))";
inline constexpr const char* bull_pred =
    "exists e1 x2 x3 x4.(man(x2) & bull(x3) & mechanical(x4) & ride(e1) & "
    "(subj(e1) = x2) & (obj(e1) = x3))";

}  // namespace fixtures
