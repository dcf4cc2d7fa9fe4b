#include "vk/moves.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "vk/gauss_code.hpp"

namespace vk {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Reduce: return "R1-";
    case MoveKind::R1Expand: return "R1+";
    case MoveKind::R2Reduce: return "R2-";
    case MoveKind::R2Expand: return "R2+";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

bool is_reducing(const Move& m) {
  return m.kind == MoveKind::R1Reduce || m.kind == MoveKind::R2Reduce;
}

namespace {

struct Adjacency {
  Loc start;  // pair is (start, start+1 mod len)
  Endpoint e1, e2;
};

std::vector<Adjacency> adjacencies(const GaussDiagram& d) {
  std::vector<Adjacency> out;
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    int n = static_cast<int>(comp.size());
    if (n < 2) continue;
    for (int p = 0; p < n; ++p) {
      if (n == 2 && p == 1) {
        // a 2-endpoint circle has one unordered adjacency; keep both orders
        // only when the endpoints differ (role matters for R2/R3 matching)
        if (comp[0] == comp[1]) continue;
      }
      out.push_back({Loc{c, p}, comp[p], comp[(p + 1) % n]});
    }
  }
  return out;
}

// --- R3 admissibility ------------------------------------------------------
//
// Roles: chord AB (strand A over B), AC (A over C), BC (B over C); strand A is
// over at both its triangle crossings, C under at both. The three triangle
// sides appear as adjacent endpoint pairs:
//   segA = (O_AB, O_AC)   segB = (U_AB, O_BC)   segC = (U_AC, U_BC)
// Key bits: [AC-end first in segA][AB-end first in segB][AC-end first in segC]
// plus the three signs. The table is generated from a planar three-line model
// over both chiralities and all strand orientations.
struct R3Table {
  bool valid[2][2][2][2][2][2] = {};
  R3Table() {
    auto cross = [](int ax, int ay, int bx, int by) { return ax * by - ay * bx; };
    for (int mirror = 0; mirror < 2; ++mirror) {
      for (int dA = -1; dA <= 1; dA += 2)
        for (int dB = -1; dB <= 1; dB += 2)
          for (int dC = -1; dC <= 1; dC += 2) {
            // line A: horizontal; B joins BC(0,0) to AB; C joins BC to AC
            int abx = mirror ? 1 : -1;  // x of crossing AB
            int ax = dA, ay = 0;
            int bx = dB * abx, by = dB * 2;
            int cx = dC * -abx, cy = dC * 2;
            // encounter orders along each strand
            int bitA = (dA * abx < 0) ? 0 : 1;  // AB first iff moving toward AB side first
            int bitB = dB > 0 ? 0 : 1;          // +: BC then AB
            int bitC = dC > 0 ? 0 : 1;          // +: BC then AC
            int sAB = cross(ax, ay, bx, by) > 0 ? 1 : 0;
            int sAC = cross(ax, ay, cx, cy) > 0 ? 1 : 0;
            int sBC = cross(bx, by, cx, cy) > 0 ? 1 : 0;
            valid[bitA][bitB][bitC][sAB][sAC][sBC] = true;
          }
    }
  }
};

const R3Table& r3_table() {
  static const R3Table table;
  return table;
}

struct R3Roles {
  int ab = 0, ac = 0, bc = 0;  // chord ids
};

// Checks the three adjacencies against the admissibility table; pairs are
// expected in any order, roles are recovered from the passage patterns.
std::optional<R3Roles> classify_r3(const GaussDiagram& d, const Adjacency& p1,
                                   const Adjacency& p2, const Adjacency& p3) {
  const Adjacency* segA = nullptr;
  const Adjacency* segB = nullptr;
  const Adjacency* segC = nullptr;
  for (const Adjacency* p : {&p1, &p2, &p3}) {
    int overs = (p->e1.passage == Passage::Over) + (p->e2.passage == Passage::Over);
    if (overs == 2) {
      if (segA) return std::nullopt;
      segA = p;
    } else if (overs == 0) {
      if (segC) return std::nullopt;
      segC = p;
    } else {
      if (segB) return std::nullopt;
      segB = p;
    }
  }
  if (!segA || !segB || !segC) return std::nullopt;

  // AC is the chord shared by segA and segC
  int ac;
  if (segA->e1.chord == segC->e1.chord || segA->e1.chord == segC->e2.chord)
    ac = segA->e1.chord;
  else if (segA->e2.chord == segC->e1.chord || segA->e2.chord == segC->e2.chord)
    ac = segA->e2.chord;
  else
    return std::nullopt;
  int ab = segA->e1.chord == ac ? segA->e2.chord : segA->e1.chord;
  int bc = segC->e1.chord == ac ? segC->e2.chord : segC->e1.chord;
  if (ab == ac || bc == ac || ab == bc) return std::nullopt;
  // segB must carry U_AB and O_BC
  auto has = [&](const Adjacency* p, int chord, Passage pas) {
    return (p->e1.chord == chord && p->e1.passage == pas) ||
           (p->e2.chord == chord && p->e2.passage == pas);
  };
  if (!has(segB, ab, Passage::Under) || !has(segB, bc, Passage::Over)) return std::nullopt;

  int bitA = segA->e1.chord == ac ? 1 : 0;
  int bitB = segB->e1.chord == ab ? 1 : 0;
  int bitC = segC->e1.chord == ac ? 1 : 0;
  int sAB = d.sign(ab) > 0 ? 1 : 0;
  int sAC = d.sign(ac) > 0 ? 1 : 0;
  int sBC = d.sign(bc) > 0 ? 1 : 0;
  if (!r3_table().valid[bitA][bitB][bitC][sAB][sAC][sBC]) return std::nullopt;
  return R3Roles{ab, ac, bc};
}

}  // namespace

std::vector<Move> find_moves(const GaussDiagram& d) {
  std::vector<Move> moves;
  auto adjs = adjacencies(d);

  // R1: chord with cyclically adjacent endpoints
  std::set<int> r1_seen;
  for (const auto& a : adjs)
    if (a.e1.chord == a.e2.chord && r1_seen.insert(a.e1.chord).second) {
      Move m;
      m.kind = MoveKind::R1Reduce;
      m.chords = {a.e1.chord, 0, 0};
      moves.push_back(m);
    }

  // R2: over-over and under-under adjacencies of an opposite-sign pair
  std::map<std::pair<int, int>, std::pair<bool, bool>> pair_flags;
  for (const auto& a : adjs) {
    if (a.e1.chord == a.e2.chord) continue;
    auto key = std::minmax(a.e1.chord, a.e2.chord);
    if (a.e1.passage == Passage::Over && a.e2.passage == Passage::Over)
      pair_flags[key].first = true;
    if (a.e1.passage == Passage::Under && a.e2.passage == Passage::Under)
      pair_flags[key].second = true;
  }
  for (const auto& [key, flags] : pair_flags)
    if (flags.first && flags.second && d.sign(key.first) == -d.sign(key.second)) {
      Move m;
      m.kind = MoveKind::R2Reduce;
      m.chords = {key.first, key.second, 0};
      moves.push_back(m);
    }

  // R3: three endpoint-disjoint adjacencies covering three chords twice each
  auto slots_of = [&](const Adjacency& a) {
    int len = static_cast<int>(d.component(a.start.comp).size());
    return std::pair<Loc, Loc>{a.start, Loc{a.start.comp, (a.start.pos + 1) % len}};
  };
  auto disjoint = [&](const Adjacency& x, const Adjacency& y) {
    auto [a1, a2] = slots_of(x);
    auto [b1, b2] = slots_of(y);
    return a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2;
  };
  std::set<std::array<Loc, 3>> r3_seen;
  int n = static_cast<int>(adjs.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!disjoint(adjs[i], adjs[j])) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!disjoint(adjs[i], adjs[k]) || !disjoint(adjs[j], adjs[k])) continue;
        std::set<int> chords{adjs[i].e1.chord, adjs[i].e2.chord, adjs[j].e1.chord,
                             adjs[j].e2.chord, adjs[k].e1.chord, adjs[k].e2.chord};
        if (chords.size() != 3) continue;
        if (!classify_r3(d, adjs[i], adjs[j], adjs[k])) continue;
        std::array<Loc, 3> starts{adjs[i].start, adjs[j].start, adjs[k].start};
        std::sort(starts.begin(), starts.end());
        if (!r3_seen.insert(starts).second) continue;
        Move m;
        m.kind = MoveKind::R3;
        auto it = chords.begin();
        m.chords = {*it, *std::next(it), *std::next(it, 2)};
        m.pair_starts = starts;
        moves.push_back(m);
      }
    }

  std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.chords != b.chords) return a.chords < b.chords;
    return a.pair_starts < b.pair_starts;
  });
  return moves;
}

GaussDiagram apply_move(const GaussDiagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::R1Reduce: {
      int c = m.chords[0];
      if (!d.has_chord(c)) throw std::invalid_argument("stale move: unknown chord");
      Loc o = d.over_loc(c), u = d.under_loc(c);
      if (o.comp != u.comp) throw std::invalid_argument("stale move: not a kink");
      int len = static_cast<int>(d.component(o.comp).size());
      if ((o.pos + 1) % len != u.pos && (u.pos + 1) % len != o.pos)
        throw std::invalid_argument("stale move: endpoints not adjacent");
      return d.virtualize(c);
    }
    case MoveKind::R2Reduce: {
      int x = m.chords[0], y = m.chords[1];
      for (const Move& cand : find_moves(d))
        if (cand.kind == MoveKind::R2Reduce &&
            cand.chords == std::array<int, 3>{std::min(x, y), std::max(x, y), 0})
          return d.virtualize(x).virtualize(y);
      throw std::invalid_argument("stale move: no such R2 pair");
    }
    case MoveKind::R3: {
      auto comps = d.components();
      std::array<Adjacency, 3> adj;
      for (int t = 0; t < 3; ++t) {
        Loc s = m.pair_starts[t];
        if (s.comp < 0 || s.comp >= d.component_count())
          throw std::invalid_argument("stale move: bad component");
        const auto& comp = d.component(s.comp);
        int len = static_cast<int>(comp.size());
        if (len < 2 || s.pos < 0 || s.pos >= len)
          throw std::invalid_argument("stale move: bad slot");
        adj[t] = Adjacency{s, comp[s.pos], comp[(s.pos + 1) % len]};
      }
      if (!classify_r3(d, adj[0], adj[1], adj[2]))
        throw std::invalid_argument("stale move: R3 pattern absent");
      for (int t = 0; t < 3; ++t) {
        Loc s = m.pair_starts[t];
        auto& comp = comps[s.comp];
        int len = static_cast<int>(comp.size());
        std::swap(comp[s.pos], comp[(s.pos + 1) % len]);
      }
      return GaussDiagram(std::move(comps), d.signs());
    }
    case MoveKind::R1Expand: {
      auto ids = d.chord_ids();
      int id = ids.empty() ? 1 : ids.back() + 1;
      auto comps = d.components();
      if (m.at.comp < 0 || m.at.comp >= d.component_count())
        throw std::invalid_argument("stale move: bad component");
      auto& comp = comps[m.at.comp];
      if (m.at.pos < 0 || m.at.pos > static_cast<int>(comp.size()))
        throw std::invalid_argument("stale move: bad slot");
      Endpoint first{id, m.over_first ? Passage::Over : Passage::Under};
      Endpoint second{id, m.over_first ? Passage::Under : Passage::Over};
      comp.insert(comp.begin() + m.at.pos, {first, second});
      auto signs = d.signs();
      signs[id] = m.sign;
      return GaussDiagram(std::move(comps), std::move(signs));
    }
    case MoveKind::R2Expand: {
      auto ids = d.chord_ids();
      int u = ids.empty() ? 1 : ids.back() + 1;
      int v = u + 1;
      auto comps = d.components();
      auto insert_at = [&comps](Loc at, Endpoint a, Endpoint b) {
        auto& comp = comps.at(at.comp);
        if (at.pos < 0 || at.pos > static_cast<int>(comp.size()))
          throw std::invalid_argument("stale move: bad slot");
        comp.insert(comp.begin() + at.pos, {a, b});
      };
      Endpoint ou{u, Passage::Over}, ov{v, Passage::Over};
      Endpoint uu{u, Passage::Under}, uv{v, Passage::Under};
      Endpoint under1 = m.parallel ? uu : uv;
      Endpoint under2 = m.parallel ? uv : uu;
      if (m.at.comp == m.at2.comp && m.at2.pos <= m.at.pos) {
        insert_at(m.at, ou, ov);
        insert_at(m.at2, under1, under2);
      } else {
        insert_at(m.at2, under1, under2);
        insert_at(m.at, ou, ov);
      }
      auto signs = d.signs();
      signs[u] = m.sign;
      signs[v] = -m.sign;
      return GaussDiagram(std::move(comps), std::move(signs));
    }
  }
  throw std::invalid_argument("bad move kind");
}

bool replay(const MoveTrace& t) {
  GaussDiagram d = t.initial;
  try {
    for (const Move& m : t.steps) d = apply_move(d, m);
  } catch (const std::exception&) {
    return false;
  }
  return canonical_code(d) == canonical_code(t.final);
}

MoveTrace greedy_simplify(const GaussDiagram& d, const SearchBudget& budget) {
  MoveTrace trace;
  trace.initial = d;
  GaussDiagram cur = d;
  std::set<std::string> seen{canonical_code(cur)};
  int r3_used = 0;
  while (true) {
    auto moves = find_moves(cur);
    const Move* reducing = nullptr;
    for (const auto& m : moves)
      if (is_reducing(m)) {
        reducing = &m;
        break;
      }
    if (reducing) {
      cur = apply_move(cur, *reducing);
      trace.steps.push_back(*reducing);
      seen.insert(canonical_code(cur));
      continue;
    }
    bool advanced = false;
    for (const auto& m : moves) {
      if (m.kind != MoveKind::R3 || r3_used >= budget.r3_cap) continue;
      GaussDiagram next = apply_move(cur, m);
      if (seen.insert(canonical_code(next)).second) {
        cur = std::move(next);
        trace.steps.push_back(m);
        ++r3_used;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  trace.final = cur;
  return trace;
}

namespace {

struct SearchNode {
  GaussDiagram d;
  int parent = -1;
  Move mv;
  int expansions = 0;
  int r3s = 0;
};

std::vector<Move> expansion_moves(const GaussDiagram& d) {
  std::vector<Move> out;
  std::vector<Loc> slots;
  if (d.component_count() == 0) {
    // poking needs an existing circle; the empty diagram stays empty
    return out;
  }
  for (int c = 0; c < d.component_count(); ++c) {
    int len = static_cast<int>(d.component(c).size());
    for (int p = 0; p <= len; ++p) slots.push_back(Loc{c, p});
  }
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j)
      for (bool parallel : {true, false})
        for (int sign : {1, -1}) {
          Move m;
          m.kind = MoveKind::R2Expand;
          m.at = slots[i];
          m.at2 = slots[j];
          m.parallel = parallel;
          m.sign = sign;
          out.push_back(m);
        }
  return out;
}

}  // namespace

TrivialityResult is_trivial(const GaussDiagram& d, const SearchBudget& budget) {
  TrivialityResult result;

  MoveTrace head = greedy_simplify(d, budget);
  if (head.final.chord_count() == 0) {
    result.status = Triviality::Yes;
    result.trace = head;
    return result;
  }

  std::vector<SearchNode> nodes;
  nodes.push_back({head.final, -1, Move{}, 0, 0});
  using Key = std::tuple<std::size_t, int, int, std::string, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> pq;
  std::unordered_map<std::string, std::pair<int, int>> visited;
  std::string key0 = canonical_code(head.final);
  pq.push({head.final.chord_count(), 0, 0, key0, 0});
  visited[key0] = {0, 0};

  std::size_t pops = 0;
  while (!pq.empty()) {
    auto [chords, exp, r3s, key, idx] = pq.top();
    pq.pop();
    if (++pops > budget.frontier_cap) break;
    const SearchNode node = nodes[idx];

    if (node.d.chord_count() == 0) {
      // rebuild the trace: greedy head + search path
      std::vector<Move> path;
      for (int i = idx; i > 0; i = nodes[i].parent) path.push_back(nodes[i].mv);
      std::reverse(path.begin(), path.end());
      MoveTrace trace;
      trace.initial = d;
      trace.steps = head.steps;
      trace.steps.insert(trace.steps.end(), path.begin(), path.end());
      trace.final = node.d;
      result.status = Triviality::Yes;
      result.trace = trace;
      result.nodes_expanded = pops;
      return result;
    }

    auto moves = find_moves(node.d);
    bool has_reducing = false;
    for (const auto& m : moves)
      if (is_reducing(m)) has_reducing = true;

    auto push_succ = [&](const Move& m, int dexp, int dr3) {
      GaussDiagram next = apply_move(node.d, m);
      std::string k = canonical_code(next);
      int nexp = node.expansions + dexp;
      int nr3 = node.r3s + dr3;
      auto it = visited.find(k);
      if (it != visited.end() &&
          !(nexp < it->second.first ||
            (nexp == it->second.first && nr3 < it->second.second)))
        return;
      visited[k] = {nexp, nr3};
      nodes.push_back({std::move(next), idx, m, nexp, nr3});
      pq.push({nodes.back().d.chord_count(), nexp, nr3, k,
               static_cast<int>(nodes.size() - 1)});
    };

    for (const auto& m : moves) {
      if (is_reducing(m))
        push_succ(m, 0, 0);
      else if (m.kind == MoveKind::R3 && node.r3s < budget.r3_cap)
        push_succ(m, 0, 1);
    }
    if (!has_reducing && node.expansions < budget.r2_expansion_depth)
      for (const auto& m : expansion_moves(node.d)) push_succ(m, 1, 0);
  }
  result.nodes_expanded = pops;
  return result;
}

// --- flat moves -------------------------------------------------------------

namespace {

struct FlatAdj {
  Loc start;
  int c1 = 0, c2 = 0;
};

std::vector<FlatAdj> flat_adjacencies(const FlatDiagram& d) {
  std::vector<FlatAdj> out;
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.components()[c];
    int n = static_cast<int>(comp.size());
    if (n < 2) continue;
    for (int p = 0; p < n; ++p) {
      if (n == 2 && p == 1) continue;
      out.push_back({Loc{c, p}, comp[p], comp[(p + 1) % n]});
    }
  }
  return out;
}

}  // namespace

std::vector<FlatMove> flat_find_moves(const FlatDiagram& d) {
  std::vector<FlatMove> moves;
  auto adjs = flat_adjacencies(d);

  std::set<int> r1_seen;
  for (const auto& a : adjs)
    if (a.c1 == a.c2 && r1_seen.insert(a.c1).second) {
      FlatMove m;
      m.kind = MoveKind::R1Reduce;
      m.chords = {a.c1, 0, 0};
      moves.push_back(m);
    }

  // flat R2: two endpoint-disjoint adjacencies both covering {x, y}
  auto slots_of = [&](const FlatAdj& a) {
    int len = static_cast<int>(d.components()[a.start.comp].size());
    return std::pair<Loc, Loc>{a.start, Loc{a.start.comp, (a.start.pos + 1) % len}};
  };
  auto disjoint = [&](const FlatAdj& x, const FlatAdj& y) {
    auto [a1, a2] = slots_of(x);
    auto [b1, b2] = slots_of(y);
    return a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2;
  };
  std::set<std::pair<int, int>> r2_seen;
  int n = static_cast<int>(adjs.size());
  for (int i = 0; i < n; ++i) {
    if (adjs[i].c1 == adjs[i].c2) continue;
    for (int j = i + 1; j < n; ++j) {
      if (adjs[j].c1 == adjs[j].c2) continue;
      if (!disjoint(adjs[i], adjs[j])) continue;
      auto ki = std::minmax(adjs[i].c1, adjs[i].c2);
      auto kj = std::minmax(adjs[j].c1, adjs[j].c2);
      if (ki != kj) continue;
      if (!r2_seen.insert(ki).second) continue;
      FlatMove m;
      m.kind = MoveKind::R2Reduce;
      m.chords = {ki.first, ki.second, 0};
      moves.push_back(m);
    }
  }

  // flat R3: any three disjoint adjacencies covering three chords twice each
  std::set<std::array<Loc, 3>> r3_seen;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!disjoint(adjs[i], adjs[j])) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!disjoint(adjs[i], adjs[k]) || !disjoint(adjs[j], adjs[k])) continue;
        std::set<int> chords{adjs[i].c1, adjs[i].c2, adjs[j].c1,
                             adjs[j].c2, adjs[k].c1, adjs[k].c2};
        if (chords.size() != 3) continue;
        std::map<int, int> count;
        for (const auto* a : {&adjs[i], &adjs[j], &adjs[k]}) {
          count[a->c1]++;
          count[a->c2]++;
        }
        bool ok = true;
        for (const auto& [c, cnt] : count) ok &= cnt == 2;
        if (!ok) continue;
        std::array<Loc, 3> starts{adjs[i].start, adjs[j].start, adjs[k].start};
        std::sort(starts.begin(), starts.end());
        if (!r3_seen.insert(starts).second) continue;
        FlatMove m;
        m.kind = MoveKind::R3;
        auto it = chords.begin();
        m.chords = {*it, *std::next(it), *std::next(it, 2)};
        m.pair_starts = starts;
        moves.push_back(m);
      }
    }
  return moves;
}

FlatDiagram flat_apply_move(const FlatDiagram& d, const FlatMove& m) {
  switch (m.kind) {
    case MoveKind::R1Reduce: {
      auto [a, b] = d.chord_locs(m.chords[0]);
      if (a.comp != b.comp) throw std::invalid_argument("stale move: not a kink");
      int len = static_cast<int>(d.components()[a.comp].size());
      if ((a.pos + 1) % len != b.pos && (b.pos + 1) % len != a.pos)
        throw std::invalid_argument("stale move: endpoints not adjacent");
      return d.remove_chord(m.chords[0]);
    }
    case MoveKind::R2Reduce: {
      for (const auto& cand : flat_find_moves(d))
        if (cand.kind == MoveKind::R2Reduce &&
            cand.chords == std::array<int, 3>{std::min(m.chords[0], m.chords[1]),
                                              std::max(m.chords[0], m.chords[1]), 0})
          return d.remove_chord(m.chords[0]).remove_chord(m.chords[1]);
      throw std::invalid_argument("stale move: no such flat R2 pair");
    }
    case MoveKind::R3: {
      auto comps = d.components();
      for (int t = 0; t < 3; ++t) {
        Loc s = m.pair_starts[t];
        auto& comp = comps.at(s.comp);
        int len = static_cast<int>(comp.size());
        if (len < 2 || s.pos < 0 || s.pos >= len)
          throw std::invalid_argument("stale move: bad slot");
        std::swap(comp[s.pos], comp[(s.pos + 1) % len]);
      }
      return FlatDiagram(std::move(comps));
    }
    case MoveKind::R1Expand: {
      auto ids = d.chord_ids();
      int id = ids.empty() ? 1 : ids.back() + 1;
      auto comps = d.components();
      auto& comp = comps.at(m.at.comp);
      if (m.at.pos < 0 || m.at.pos > static_cast<int>(comp.size()))
        throw std::invalid_argument("stale move: bad slot");
      comp.insert(comp.begin() + m.at.pos, {id, id});
      return FlatDiagram(std::move(comps));
    }
    case MoveKind::R2Expand: {
      auto ids = d.chord_ids();
      int u = ids.empty() ? 1 : ids.back() + 1;
      int v = u + 1;
      auto comps = d.components();
      auto insert_at = [&comps](Loc at, int a, int b) {
        auto& comp = comps.at(at.comp);
        if (at.pos < 0 || at.pos > static_cast<int>(comp.size()))
          throw std::invalid_argument("stale move: bad slot");
        comp.insert(comp.begin() + at.pos, {a, b});
      };
      int first2 = m.parallel ? u : v;
      int second2 = m.parallel ? v : u;
      if (m.at.comp == m.at2.comp && m.at2.pos <= m.at.pos) {
        insert_at(m.at, u, v);
        insert_at(m.at2, first2, second2);
      } else {
        insert_at(m.at2, first2, second2);
        insert_at(m.at, u, v);
      }
      return FlatDiagram(std::move(comps));
    }
  }
  throw std::invalid_argument("bad flat move kind");
}

FlatTrivialityResult flat_is_trivial(const FlatDiagram& d, const SearchBudget& budget) {
  FlatTrivialityResult result;
  FlatTrace trace;
  trace.initial = d;
  FlatDiagram cur = d;
  std::set<std::string> seen{flat_canonical_code(cur)};
  int r3_used = 0;
  while (true) {
    if (cur.chord_count() == 0) break;
    auto moves = flat_find_moves(cur);
    const FlatMove* reducing = nullptr;
    for (const auto& m : moves)
      if (m.kind != MoveKind::R3) {
        reducing = &m;
        break;
      }
    if (reducing) {
      cur = flat_apply_move(cur, *reducing);
      trace.steps.push_back(*reducing);
      seen.insert(flat_canonical_code(cur));
      continue;
    }
    bool advanced = false;
    for (const auto& m : moves) {
      if (m.kind != MoveKind::R3 || r3_used >= budget.r3_cap) continue;
      FlatDiagram next = flat_apply_move(cur, m);
      if (seen.insert(flat_canonical_code(next)).second) {
        cur = std::move(next);
        trace.steps.push_back(m);
        ++r3_used;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  trace.final = cur;
  result.nodes_expanded = trace.steps.size();
  if (cur.chord_count() == 0) {
    result.status = Triviality::Yes;
    result.trace = trace;
  }
  return result;
}

FlatTrace project_trace(const MoveTrace& t) {
  FlatTrace out;
  out.initial = t.initial.flatten();
  FlatDiagram cur = out.initial;
  for (const Move& m : t.steps) {
    FlatMove fm;
    fm.kind = m.kind;
    fm.chords = m.chords;
    fm.pair_starts = m.pair_starts;
    fm.at = m.at;
    fm.at2 = m.at2;
    fm.parallel = m.parallel;
    switch (m.kind) {
      case MoveKind::R1Reduce:
        cur = cur.remove_chord(m.chords[0]);
        break;
      case MoveKind::R2Reduce:
        cur = cur.remove_chord(m.chords[0]).remove_chord(m.chords[1]);
        break;
      default:
        cur = flat_apply_move(cur, fm);
        break;
    }
    out.steps.push_back(fm);
  }
  out.final = cur;
  return out;
}

}  // namespace vk
