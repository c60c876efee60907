#include "logiceval/dmatch.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace logiceval {

namespace {

// Interned view of a clause pair problem. Labels and constants share one
// dictionary across both sides; variables and boxes are per-side ids.
// Boxes are listed root-first, so id 0 is the root on both sides.
struct Side {
  std::vector<std::string> vars;   // sorted for determinism
  std::vector<std::string> boxes;  // root first, then DFS order
  struct EArg { int kind; int id; };          // 0 var, 1 const, 2 box
  struct EClause { int box; int label; std::vector<EArg> args; };
  std::vector<EClause> clauses;
};

struct Problem {
  Side gold, pred;
  // Predicted clause multiset keyed by the interned tuple.
  std::map<std::vector<int>, int> pred_counts;
};

int intern(std::map<std::string, int>& dict, const std::string& s) {
  auto [it, fresh] = dict.emplace(s, static_cast<int>(dict.size()));
  (void)fresh;
  return it->second;
}

Side encode_side(const ClauseSet& cs, std::map<std::string, int>& labels,
                 std::map<std::string, int>& consts) {
  Side side;
  side.vars.assign(cs.variables.begin(), cs.variables.end());
  std::sort(side.vars.begin(), side.vars.end());
  side.boxes = cs.boxes;

  std::map<std::string, int> var_id, box_id;
  for (std::size_t i = 0; i < side.vars.size(); ++i) var_id[side.vars[i]] = int(i);
  for (std::size_t i = 0; i < side.boxes.size(); ++i) box_id[side.boxes[i]] = int(i);

  for (const Clause& c : cs.clauses) {
    Side::EClause ec;
    ec.box = box_id.at(c.box);
    ec.label = intern(labels, c.label);
    for (const ClauseArg& a : c.args) {
      switch (a.kind) {
        case ClauseArg::Kind::Var:
          ec.args.push_back({0, var_id.at(a.name)});
          break;
        case ClauseArg::Kind::Const:
          ec.args.push_back({1, intern(consts, a.name)});
          break;
        case ClauseArg::Kind::Box:
          ec.args.push_back({2, box_id.at(a.name)});
          break;
      }
    }
    side.clauses.push_back(std::move(ec));
  }
  return side;
}

// A mapping assigns every gold variable a predicted variable id or -1, and
// every gold box a predicted box id or -1 (root fixed at 0 -> 0).
struct Mapping {
  std::vector<int> vars;
  std::vector<int> boxes;
};

std::vector<int> clause_key(const Side::EClause& c) {
  std::vector<int> key;
  key.reserve(2 + 2 * c.args.size());
  key.push_back(c.box);
  key.push_back(c.label);
  for (const auto& a : c.args) {
    key.push_back(a.kind);
    key.push_back(a.id);
  }
  return key;
}

// Number of gold clauses whose image under the mapping is present in the
// predicted multiset, counting multiplicity.
int matched_count(const Problem& p, const Mapping& m) {
  std::map<std::vector<int>, int> images;
  for (const Side::EClause& c : p.gold.clauses) {
    std::vector<int> key;
    key.reserve(2 + 2 * c.args.size());
    int box = m.boxes[c.box];
    if (box < 0) continue;
    key.push_back(box);
    key.push_back(c.label);
    bool total = true;
    for (const auto& a : c.args) {
      int id = a.id;
      if (a.kind == 0) id = m.vars[a.id];
      else if (a.kind == 2) id = m.boxes[a.id];
      if (id < 0) { total = false; break; }
      key.push_back(a.kind);
      key.push_back(id);
    }
    if (total) ++images[key];
  }
  int matched = 0;
  for (const auto& [key, count] : images) {
    auto it = p.pred_counts.find(key);
    if (it != p.pred_counts.end()) matched += std::min(count, it->second);
  }
  return matched;
}

// Greedy pairing of variables whose clause-context signatures overlap:
// the signature of a variable is the multiset of (label, position) slots
// it occupies. Boxes are paired by their position in the DFS order, which
// for fragment formulas is the negation nesting chain.
Mapping smart_init(const Problem& p) {
  Mapping m;
  m.vars.assign(p.gold.vars.size(), -1);
  m.boxes.assign(p.gold.boxes.size(), -1);
  for (std::size_t i = 0; i < p.gold.boxes.size() && i < p.pred.boxes.size(); ++i)
    m.boxes[i] = int(i);

  auto signatures = [](const Side& side) {
    std::vector<std::vector<std::pair<int, int>>> sig(side.vars.size());
    for (const auto& c : side.clauses)
      for (std::size_t pos = 0; pos < c.args.size(); ++pos)
        if (c.args[pos].kind == 0)
          sig[c.args[pos].id].emplace_back(c.label, int(pos));
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  };
  auto gold_sig = signatures(p.gold);
  auto pred_sig = signatures(p.pred);

  auto overlap = [](const std::vector<std::pair<int, int>>& a,
                    const std::vector<std::pair<int, int>>& b) {
    std::size_t i = 0, j = 0;
    int n = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) ++i;
      else if (b[j] < a[i]) ++j;
      else { ++n; ++i; ++j; }
    }
    return n;
  };

  // Most-occurring gold variables choose first.
  std::vector<int> order(p.gold.vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return gold_sig[a].size() > gold_sig[b].size();
  });

  std::vector<bool> used(p.pred.vars.size(), false);
  for (int g : order) {
    int best = -1, best_overlap = 0;
    for (std::size_t q = 0; q < p.pred.vars.size(); ++q) {
      if (used[q]) continue;
      int n = overlap(gold_sig[g], pred_sig[q]);
      if (n > best_overlap) { best_overlap = n; best = int(q); }
    }
    if (best >= 0) { m.vars[g] = best; used[best] = true; }
  }
  return m;
}

Mapping random_init(const Problem& p, std::mt19937& rng) {
  Mapping m;
  std::vector<int> pool(p.pred.vars.size());
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  m.vars.assign(p.gold.vars.size(), -1);
  for (std::size_t i = 0; i < m.vars.size() && i < pool.size(); ++i) m.vars[i] = pool[i];

  std::vector<int> box_pool;
  for (std::size_t i = 1; i < p.pred.boxes.size(); ++i) box_pool.push_back(int(i));
  std::shuffle(box_pool.begin(), box_pool.end(), rng);
  m.boxes.assign(p.gold.boxes.size(), -1);
  if (!m.boxes.empty() && !p.pred.boxes.empty()) m.boxes[0] = 0;
  for (std::size_t i = 1; i < m.boxes.size() && i - 1 < box_pool.size(); ++i)
    m.boxes[i] = box_pool[i - 1];
  return m;
}

// Steepest-ascent over single reassignments and pairwise swaps, for both
// variables and non-root boxes.
int hill_climb(const Problem& p, Mapping& m, int max_iterations) {
  int current = matched_count(p, m);
  for (int iter = 0; iter < max_iterations; ++iter) {
    int best_gain = 0;
    enum class Move { None, VarSet, VarSwap, BoxSet, BoxSwap };
    Move move = Move::None;
    int arg_a = 0, arg_b = 0;

    std::vector<bool> var_used(p.pred.vars.size(), false);
    for (int v : m.vars)
      if (v >= 0) var_used[v] = true;
    std::vector<bool> box_used(p.pred.boxes.size(), false);
    for (int b : m.boxes)
      if (b >= 0) box_used[b] = true;

    auto consider = [&](Move kind, int a, int b, int gain) {
      if (gain > best_gain) {
        best_gain = gain;
        move = kind;
        arg_a = a;
        arg_b = b;
      }
    };

    for (std::size_t g = 0; g < m.vars.size(); ++g) {
      int saved = m.vars[g];
      for (int q = -1; q < int(p.pred.vars.size()); ++q) {
        if (q == saved) continue;
        if (q >= 0 && var_used[q]) continue;
        m.vars[g] = q;
        consider(Move::VarSet, int(g), q, matched_count(p, m) - current);
      }
      m.vars[g] = saved;
    }
    for (std::size_t a = 0; a + 1 < m.vars.size(); ++a) {
      for (std::size_t b = a + 1; b < m.vars.size(); ++b) {
        if (m.vars[a] == m.vars[b]) continue;
        std::swap(m.vars[a], m.vars[b]);
        consider(Move::VarSwap, int(a), int(b), matched_count(p, m) - current);
        std::swap(m.vars[a], m.vars[b]);
      }
    }
    for (std::size_t g = 1; g < m.boxes.size(); ++g) {
      int saved = m.boxes[g];
      for (int q = -1; q < int(p.pred.boxes.size()); ++q) {
        if (q == saved || q == 0) continue;
        if (q >= 0 && box_used[q]) continue;
        m.boxes[g] = q;
        consider(Move::BoxSet, int(g), q, matched_count(p, m) - current);
      }
      m.boxes[g] = saved;
    }
    for (std::size_t a = 1; a + 1 < m.boxes.size(); ++a) {
      for (std::size_t b = a + 1; b < m.boxes.size(); ++b) {
        if (m.boxes[a] == m.boxes[b]) continue;
        std::swap(m.boxes[a], m.boxes[b]);
        consider(Move::BoxSwap, int(a), int(b), matched_count(p, m) - current);
        std::swap(m.boxes[a], m.boxes[b]);
      }
    }

    if (move == Move::None) break;
    switch (move) {
      case Move::VarSet: m.vars[arg_a] = arg_b; break;
      case Move::VarSwap: std::swap(m.vars[arg_a], m.vars[arg_b]); break;
      case Move::BoxSet: m.boxes[arg_a] = arg_b; break;
      case Move::BoxSwap: std::swap(m.boxes[arg_a], m.boxes[arg_b]); break;
      case Move::None: break;
    }
    current += best_gain;
  }
  return current;
}

Problem build_problem(const ClauseSet& gold, const ClauseSet& predicted) {
  Problem p;
  std::map<std::string, int> labels, consts;
  p.gold = encode_side(gold, labels, consts);
  p.pred = encode_side(predicted, labels, consts);
  for (const auto& c : p.pred.clauses) ++p.pred_counts[clause_key(c)];
  return p;
}

Alignment to_alignment(const Problem& p, const Mapping& m, int matched) {
  Alignment out;
  out.matched = matched;
  for (std::size_t g = 0; g < m.vars.size(); ++g)
    if (m.vars[g] >= 0) out.var_map[p.gold.vars[g]] = p.pred.vars[m.vars[g]];
  for (std::size_t g = 0; g < m.boxes.size(); ++g)
    if (m.boxes[g] >= 0) out.box_map[p.gold.boxes[g]] = p.pred.boxes[m.boxes[g]];
  return out;
}

}  // namespace

Alignment best_alignment(const ClauseSet& gold, const ClauseSet& predicted,
                         const SearchConfig& cfg) {
  Problem p = build_problem(gold, predicted);
  std::mt19937 rng(cfg.rng_seed);

  Mapping best;
  int best_matched = -1;
  int restarts = std::max(1, cfg.restarts);
  for (int r = 0; r < restarts; ++r) {
    Mapping m = r == 0 ? smart_init(p) : random_init(p, rng);
    if (m.boxes.size() > 0 && p.pred.boxes.size() > 0) m.boxes[0] = 0;
    int matched = hill_climb(p, m, cfg.max_iterations);
    if (matched > best_matched) {
      best_matched = matched;
      best = m;
    }
  }
  if (best_matched < 0) {
    best.vars.assign(p.gold.vars.size(), -1);
    best.boxes.assign(p.gold.boxes.size(), -1);
    best_matched = 0;
  }
  return to_alignment(p, best, best_matched);
}

namespace {

// Enumerates injective maps from `from` positions into `to` ids (both are
// index ranges), calling fn on each completed assignment.
template <typename Fn>
void enumerate_injective(std::size_t from, std::size_t to, std::vector<int>& map,
                         std::vector<bool>& used, std::size_t depth, Fn&& fn) {
  if (depth == from) {
    fn(map);
    return;
  }
  for (std::size_t q = 0; q < to; ++q) {
    if (used[q]) continue;
    used[q] = true;
    map[depth] = int(q);
    enumerate_injective(from, to, map, used, depth + 1, fn);
    used[q] = false;
  }
  if (from > to) {
    // More sources than targets: the extras stay unmapped.
    map[depth] = -1;
    enumerate_injective(from, to, map, used, depth + 1, fn);
  }
}

}  // namespace

Alignment brute_force_alignment(const ClauseSet& gold, const ClauseSet& predicted,
                                int max_vars, int max_boxes) {
  Problem p = build_problem(gold, predicted);
  if (int(p.gold.vars.size()) > max_vars || int(p.pred.vars.size()) > max_vars)
    throw SizeError("variable count exceeds the exhaustive-search bound");
  if (int(p.gold.boxes.size()) > max_boxes || int(p.pred.boxes.size()) > max_boxes)
    throw SizeError("box count exceeds the exhaustive-search bound");

  Mapping best;
  best.vars.assign(p.gold.vars.size(), -1);
  best.boxes.assign(p.gold.boxes.size(), -1);
  if (!best.boxes.empty() && !p.pred.boxes.empty()) best.boxes[0] = 0;
  int best_matched = -1;

  std::size_t gb = p.gold.boxes.size() > 0 ? p.gold.boxes.size() - 1 : 0;
  std::size_t pb = p.pred.boxes.size() > 0 ? p.pred.boxes.size() - 1 : 0;

  std::vector<int> box_map(gb, -1);
  std::vector<bool> box_used(pb, false);
  enumerate_injective(gb, pb, box_map, box_used, 0, [&](const std::vector<int>& boxes) {
    Mapping m;
    m.boxes.assign(p.gold.boxes.size(), -1);
    if (!m.boxes.empty() && !p.pred.boxes.empty()) m.boxes[0] = 0;
    for (std::size_t i = 0; i < boxes.size(); ++i)
      m.boxes[i + 1] = boxes[i] >= 0 ? boxes[i] + 1 : -1;

    std::vector<int> var_map(p.gold.vars.size(), -1);
    std::vector<bool> var_used(p.pred.vars.size(), false);
    enumerate_injective(p.gold.vars.size(), p.pred.vars.size(), var_map, var_used, 0,
                        [&](const std::vector<int>& vars) {
                          m.vars = vars;
                          int matched = matched_count(p, m);
                          if (matched > best_matched) {
                            best_matched = matched;
                            best = m;
                          }
                        });
  });
  if (best_matched < 0) best_matched = 0;
  return to_alignment(p, best, best_matched);
}

MatchScore dmatch_score(const ClauseSet& gold, const ClauseSet& predicted,
                        const SearchConfig& cfg) {
  MatchScore score;
  if (gold.clauses.empty() && predicted.clauses.empty()) {
    score.precision = score.recall = score.f1 = 1.0;
    return score;
  }
  if (gold.clauses.empty() || predicted.clauses.empty()) return score;

  Alignment a = best_alignment(gold, predicted, cfg);
  score.matched = a.matched;
  score.precision = double(a.matched) / double(predicted.clauses.size());
  score.recall = double(a.matched) / double(gold.clauses.size());
  if (score.precision + score.recall > 0)
    score.f1 = 2 * score.precision * score.recall / (score.precision + score.recall);
  return score;
}

}  // namespace logiceval
