#include "vk/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace vk {
namespace {

struct Token {
  Passage passage;
  int chord;
  int sign;
};

bool starts_minus(const std::string& s, std::size_t i) {
  if (s[i] == '-') return true;
  // U+2212 MINUS SIGN, UTF-8 e2 88 92
  return i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xe2 &&
         static_cast<unsigned char>(s[i + 1]) == 0x88 &&
         static_cast<unsigned char>(s[i + 2]) == 0x92;
}

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> comps;
  std::vector<Token> cur;
  bool any_content = false;
  bool cur_empty_marker = false;
  std::size_t i = 0;
  auto flush = [&](std::size_t pos) {
    if (cur.empty() && !cur_empty_marker)
      throw ParseError("empty component (use \"0\" for a chordless circle)", pos);
    comps.push_back(std::move(cur));
    cur.clear();
    cur_empty_marker = false;
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    any_content = true;
    if (ch == '|') {
      flush(i);
      ++i;
      continue;
    }
    if (ch == '0' && cur.empty() && !cur_empty_marker) {
      cur_empty_marker = true;
      ++i;
      continue;
    }
    if (ch != 'O' && ch != 'U')
      throw ParseError(std::string("expected 'O' or 'U', got '") + ch + "'", i);
    if (cur_empty_marker) throw ParseError("'0' component cannot carry chords", i);
    Token t;
    t.passage = ch == 'O' ? Passage::Over : Passage::Under;
    std::size_t j = i + 1;
    if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("expected chord number", j);
    long id = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      id = id * 10 + (text[j] - '0');
      if (id > 1000000) throw ParseError("chord number too large", j);
      ++j;
    }
    t.chord = static_cast<int>(id);
    if (t.chord == 0) throw ParseError("chord numbers start at 1", i + 1);
    if (j >= text.size()) throw ParseError("expected sign '+' or '-'", j);
    if (text[j] == '+') {
      t.sign = 1;
      ++j;
    } else if (starts_minus(text, j)) {
      t.sign = -1;
      j += text[j] == '-' ? 1 : 3;
    } else {
      throw ParseError("expected sign '+' or '-'", j);
    }
    cur.push_back(t);
    i = j;
  }
  if (any_content) flush(text.size());
  return comps;
}

}  // namespace

GaussDiagram parse_gauss_code(const std::string& text) {
  auto tokens = tokenize(text);
  std::vector<GaussDiagram::Component> comps;
  std::map<int, int> signs;
  std::map<int, int> mention_count;
  for (const auto& comp_tokens : tokens) {
    GaussDiagram::Component comp;
    for (const auto& t : comp_tokens) {
      comp.push_back(Endpoint{t.chord, t.passage});
      auto it = signs.find(t.chord);
      if (it == signs.end())
        signs[t.chord] = t.sign;
      else if (it->second != t.sign)
        throw ParseError("sign mismatch for chord " + std::to_string(t.chord), 0);
      ++mention_count[t.chord];
    }
    comps.push_back(std::move(comp));
  }
  for (const auto& [id, n] : mention_count)
    if (n != 2)
      throw ParseError("chord " + std::to_string(id) + " mentioned " + std::to_string(n) +
                           " times (want 2)",
                       0);
  try {
    return GaussDiagram(std::move(comps), std::move(signs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

namespace {

void emit_token(std::string& out, const Endpoint& e, int sign, int renumbered) {
  out += e.passage == Passage::Over ? 'O' : 'U';
  out += std::to_string(renumbered);
  out += sign > 0 ? '+' : '-';
}

std::string emit_component_raw(const GaussDiagram& d, const GaussDiagram::Component& comp) {
  if (comp.empty()) return "0";
  std::string out;
  for (const auto& e : comp) emit_token(out, e, d.sign(e.chord), e.chord);
  return out;
}

struct EmitState {
  std::map<int, int> renumber;
  int next_id = 1;
  std::string out;
};

// Emit `comp` starting at rotation `rot`, extending the renumbering map.
void emit_component(const GaussDiagram& d, const GaussDiagram::Component& comp, int rot,
                    EmitState& st) {
  if (comp.empty()) {
    st.out += "0";
    return;
  }
  int n = static_cast<int>(comp.size());
  for (int k = 0; k < n; ++k) {
    const Endpoint& e = comp[(rot + k) % n];
    auto it = st.renumber.find(e.chord);
    int id;
    if (it == st.renumber.end()) {
      id = st.next_id++;
      st.renumber.emplace(e.chord, id);
    } else {
      id = it->second;
    }
    emit_token(st.out, e, d.sign(e.chord), id);
  }
}

}  // namespace

std::string raw_code(const GaussDiagram& d) {
  std::string out;
  for (int c = 0; c < d.component_count(); ++c) {
    if (c) out += "|";
    out += emit_component_raw(d, d.component(c));
  }
  return out;
}

std::string canonical_code(const GaussDiagram& d) {
  int nc = d.component_count();
  if (nc == 0) return "";
  if (nc > 8) throw std::invalid_argument("canonicalization capped at 8 components");
  std::vector<int> perm(nc);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool have_best = false;
  do {
    std::vector<EmitState> states{EmitState{}};
    for (int pi = 0; pi < nc; ++pi) {
      const auto& comp = d.component(perm[pi]);
      std::vector<EmitState> next;
      for (const auto& st : states) {
        int rots = comp.empty() ? 1 : static_cast<int>(comp.size());
        for (int rot = 0; rot < rots; ++rot) {
          EmitState cand = st;
          if (pi) cand.out += "|";
          emit_component(d, comp, rot, cand);
          next.push_back(std::move(cand));
        }
      }
      // keep all states tied for the minimal emitted prefix
      const std::string* min_out = &next.front().out;
      for (const auto& st : next)
        if (st.out < *min_out) min_out = &st.out;
      std::vector<EmitState> kept;
      for (auto& st : next)
        if (st.out == *min_out) kept.push_back(std::move(st));
      states = std::move(kept);
    }
    if (!have_best || states.front().out < best) {
      best = states.front().out;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

GaussDiagram canonical_form(const GaussDiagram& d) {
  return parse_gauss_code(canonical_code(d));
}

bool isomorphic(const GaussDiagram& a, const GaussDiagram& b) {
  return canonical_code(a) == canonical_code(b);
}

std::string flat_canonical_code(const FlatDiagram& d) {
  int nc = d.component_count();
  if (nc == 0) return "";
  if (nc > 8) throw std::invalid_argument("canonicalization capped at 8 components");
  std::vector<int> perm(nc);
  std::iota(perm.begin(), perm.end(), 0);

  struct State {
    std::map<int, int> renumber;
    int next_id = 1;
    std::string out;
  };
  std::string best;
  bool have_best = false;
  do {
    std::vector<State> states{State{}};
    for (int pi = 0; pi < nc; ++pi) {
      const auto& comp = d.components()[perm[pi]];
      std::vector<State> next;
      for (const auto& st : states) {
        int rots = comp.empty() ? 1 : static_cast<int>(comp.size());
        for (int rot = 0; rot < rots; ++rot) {
          State cand = st;
          if (pi) cand.out += "|";
          if (comp.empty()) cand.out += "0";
          int n = static_cast<int>(comp.size());
          for (int k = 0; k < n; ++k) {
            int chord = comp[(rot + k) % n];
            auto it = cand.renumber.find(chord);
            int id;
            if (it == cand.renumber.end()) {
              id = cand.next_id++;
              cand.renumber.emplace(chord, id);
            } else {
              id = it->second;
            }
            cand.out += std::to_string(id);
            cand.out += '.';
          }
          next.push_back(std::move(cand));
        }
      }
      const std::string* min_out = &next.front().out;
      for (const auto& st : next)
        if (st.out < *min_out) min_out = &st.out;
      std::vector<State> kept;
      for (auto& st : next)
        if (st.out == *min_out) kept.push_back(std::move(st));
      states = std::move(kept);
    }
    if (!have_best || states.front().out < best) {
      best = states.front().out;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool flat_isomorphic(const FlatDiagram& a, const FlatDiagram& b) {
  return flat_canonical_code(a) == flat_canonical_code(b);
}

}  // namespace vk
