#include "vk/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vk/gauss_code.hpp"
#include "vk/moves.hpp"

namespace vk {

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::KUpper: return "K_upper";
    case FamilyKind::KLower: return "K_lower";
    case FamilyKind::D: return "D";
    case FamilyKind::DTilde: return "D_tilde";
    case FamilyKind::DQR: return "D_qr";
    case FamilyKind::DNPM: return "D_npm";
    case FamilyKind::DNPMQRT: return "D_npm_qrt";
    case FamilyKind::Link: return "link";
  }
  return "?";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
  for (FamilyKind k : {FamilyKind::KUpper, FamilyKind::KLower, FamilyKind::D,
                       FamilyKind::DTilde, FamilyKind::DQR, FamilyKind::DNPM,
                       FamilyKind::DNPMQRT, FamilyKind::Link})
    if (family_name(k) == name) return k;
  return std::nullopt;
}

FamilySpec FamilySpec::k_upper(int m, int p) { return {FamilyKind::KUpper, m, p}; }
FamilySpec FamilySpec::k_lower(int m, int p) { return {FamilyKind::KLower, m, p}; }
FamilySpec FamilySpec::d(int n, int p) {
  FamilySpec s{FamilyKind::D};
  s.n = n;
  s.p = p;
  return s;
}
FamilySpec FamilySpec::d_tilde(int n, int p) {
  FamilySpec s{FamilyKind::DTilde};
  s.n = n;
  s.p = p;
  return s;
}
FamilySpec FamilySpec::d_qr(int n, int p, int q, int r) {
  FamilySpec s{FamilyKind::DQR};
  s.n = n;
  s.p = p;
  s.q = q;
  s.r = r;
  return s;
}
FamilySpec FamilySpec::d_npm(int n, int p, int m, int q) {
  FamilySpec s{FamilyKind::DNPM};
  s.n = n;
  s.p = p;
  s.m = m;
  s.q = q;
  return s;
}
FamilySpec FamilySpec::d_npm_qrt(int n, int p, int m, int q, int r, int t) {
  FamilySpec s{FamilyKind::DNPMQRT};
  s.n = n;
  s.p = p;
  s.m = m;
  s.q = q;
  s.r = r;
  s.t = t;
  return s;
}
FamilySpec FamilySpec::link(int k, int n, int m, int p) {
  FamilySpec s{FamilyKind::Link};
  s.k = k;
  s.n = n;
  s.m = m;
  s.p = p;
  return s;
}

std::string FamilySpec::str() const {
  std::ostringstream os;
  os << family_name(kind) << "(";
  switch (kind) {
    case FamilyKind::KUpper:
    case FamilyKind::KLower: os << "m=" << m << ",p=" << p; break;
    case FamilyKind::D:
    case FamilyKind::DTilde: os << "n=" << n << ",p=" << p; break;
    case FamilyKind::DQR: os << "n=" << n << ",p=" << p << ",q=" << q << ",r=" << r; break;
    case FamilyKind::DNPM:
      os << "n=" << n << ",p=" << p << ",m=" << m << ",q=" << q;
      break;
    case FamilyKind::DNPMQRT:
      os << "n=" << n << ",p=" << p << ",m=" << m << ",q=" << q << ",r=" << r
         << ",t=" << t;
      break;
    case FamilyKind::Link:
      os << "k=" << k << ",n=" << n << ",m=" << m << ",p=" << p;
      break;
  }
  os << ")";
  return os.str();
}

namespace {

[[noreturn]] void bad_params(const FamilySpec& s, const std::string& why) {
  throw std::invalid_argument("invalid parameters for " + s.str() + ": " + why);
}

struct WordBuilder {
  std::vector<GaussDiagram::Component> comps{1, GaussDiagram::Component{}};
  std::map<int, int> signs;
  void put(Passage pas, int id, int sign) {
    comps.back().push_back({id, pas});
    signs[id] = sign;
  }
  void over(int id, int sign) { put(Passage::Over, id, sign); }
  void under(int id, int sign) { put(Passage::Under, id, sign); }
  void next_component() { comps.push_back({}); }
  GaussDiagram build() { return GaussDiagram(std::move(comps), std::move(signs)); }
};

// K^{m,p}: m nested negative clasp pairs d_{2i-1}, d_{2i} around an
// antiparallel p-chord belt, plus m positive kinks c_i.
// ids: d_j = j, c_i = 2m+i, v_k = 3m+k.
void build_k_upper(int m, int p, WordBuilder& w, ExpectedProfile& prof) {
  auto d = [&](int j) { return j; };
  auto c = [&](int i) { return 2 * m + i; };
  auto v = [&](int k) { return 3 * m + k; };
  for (int i = 1; i <= m; ++i) {
    w.over(d(2 * i - 1), -1);
    w.under(d(2 * i), -1);
  }
  for (int k = 1; k <= p - 1; ++k) w.under(v(k), -1);
  w.over(v(p), -1);
  for (int i = m; i >= 1; --i) {
    w.under(d(2 * i - 1), -1);
    w.over(d(2 * i), -1);
  }
  w.under(v(p), -1);
  for (int k = p - 1; k >= 1; --k) w.over(v(k), -1);
  for (int i = 1; i <= m; ++i) {
    w.over(c(i), 1);
    w.under(c(i), 1);
  }
  for (int i = 1; i <= m; ++i) {
    prof.chords.push_back({d(2 * i - 1), "d" + std::to_string(2 * i - 1), -1, p - 1});
    prof.chords.push_back({d(2 * i), "d" + std::to_string(2 * i), -1, 1 - p});
    prof.chords.push_back({c(i), "c" + std::to_string(i), 1, 0});
  }
  for (int k = 1; k <= p; ++k)
    prof.chords.push_back({v(k), "v" + std::to_string(k), -1, 0});
  for (int i = 1; i <= m; ++i) prof.plan.change.push_back(d(2 * i));
}

// labels removed from the D-family horizontal block: q odd-first (spilling
// into even labels when odd labels run out), then r further even labels.
std::set<int> block_removed(const FamilySpec& s, int p, int q, int r) {
  std::set<int> gone;
  int left = q;
  for (int k = 1; k <= p && left > 0; k += 2) {
    gone.insert(k);
    --left;
  }
  for (int k = 2; k <= p && left > 0; k += 2) {
    gone.insert(k);
    --left;
  }
  for (int k = 2; k <= p && r > 0; k += 2)
    if (!gone.count(k)) {
      gone.insert(k);
      --r;
    }
  if (left > 0 || r > 0) bad_params(s, "q+r exceeds the horizontal block");
  return gone;
}

}  // namespace

FamilyDiagram generate(const FamilySpec& spec) {
  WordBuilder w;
  ExpectedProfile prof;

  switch (spec.kind) {
    case FamilyKind::KUpper: {
      if (spec.m < 1 || spec.p < 2) bad_params(spec, "need m >= 1, p >= 2");
      build_k_upper(spec.m, spec.p, w, prof);
      prof.claimed_u = UnknottingIndex{0, spec.m};
      break;
    }
    case FamilyKind::KLower: {
      int m = spec.m, p = spec.p;
      if (m < 1 || p < 5) bad_params(spec, "need m >= 1, p >= 5");
      int D = 1, C = 2;
      auto d = [&](int j) { return 2 + j; };
      auto c = [&](int i) { return 2 + 2 * m + i; };
      auto b = [&](int k) { return 2 + 3 * m + k; };
      w.over(D, -1);
      for (int i = 1; i <= m; ++i) {
        w.over(c(i), 1);
        w.over(d(2 * i - 1), -1);
        w.under(d(2 * i), -1);
        w.under(c(i), 1);
      }
      for (int k = 1; k <= p; ++k) w.under(b(k), -1);
      w.under(C, 1);
      w.under(D, -1);
      w.over(C, 1);
      for (int i = m; i >= 1; --i) {
        w.over(d(2 * i), -1);
        w.under(d(2 * i - 1), -1);
      }
      for (int k = p; k >= 1; --k) w.over(b(k), -1);

      prof.chords.push_back({D, "d", -1, p - 1});
      prof.chords.push_back({C, "c", 1, -1});
      for (int i = 1; i <= m; ++i) {
        prof.chords.push_back({c(i), "c" + std::to_string(i), 1, 0});
        prof.chords.push_back({d(2 * i - 1), "d" + std::to_string(2 * i - 1), -1, p});
        prof.chords.push_back({d(2 * i), "d" + std::to_string(2 * i), -1, -p});
      }
      for (int k = 1; k <= p; ++k)
        prof.chords.push_back({b(k), "b" + std::to_string(k), -1, -1});
      prof.plan.virtualize.push_back(D);
      for (int i = 1; i <= m; ++i) prof.plan.change.push_back(d(2 * i));
      prof.claimed_u = UnknottingIndex{1, m};
      break;
    }
    case FamilyKind::D:
    case FamilyKind::DTilde:
    case FamilyKind::DQR:
    case FamilyKind::DNPM:
    case FamilyKind::DNPMQRT: {
      int n = spec.n, p = spec.p, m = spec.m, q = spec.q, r = spec.r, t = spec.t;
      bool mirror = spec.kind == FamilyKind::DTilde;
      if (n < 1 || p < 1) bad_params(spec, "need n >= 1, p >= 1");
      if (spec.kind == FamilyKind::D || spec.kind == FamilyKind::DTilde) {
        if (p % 2 == 0) bad_params(spec, "p must be odd");
        m = q = r = t = 0;
      } else if (spec.kind == FamilyKind::DQR) {
        if (p % 2 == 0) bad_params(spec, "p must be odd");
        if (q < 0 || q > (p + 1) / 2) bad_params(spec, "need 0 <= q <= ceil(p/2)");
        if (r < 0 || r > (p - 1) / 2) bad_params(spec, "need 0 <= r <= floor(p/2)");
        m = t = 0;
      } else {
        if (m < 1) bad_params(spec, "need m >= 1");
        if (spec.kind == FamilyKind::DNPM) {
          if (q <= n + 2) bad_params(spec, "need q > n+2");
          if (p < q + 2) bad_params(spec, "need p >= q+2");
          r = t = 0;
        } else {
          if (t < 0 || t > 2 * m) bad_params(spec, "need 0 <= t <= 2m");
        }
      }
      auto c = [&](int i) { return i; };
      auto d = [&](int j) { return n + j; };
      auto h = [&](int k) { return n + 2 * m + k; };
      std::set<int> gone = block_removed(spec, p, q, r);

      for (int i = 1; i <= n; ++i)
        w.put(mirror ? Passage::Under : Passage::Over, c(i), -1);
      for (int i = 1; i <= m; ++i) {
        if (2 * i <= t) continue;  // whole pair virtualized
        if (2 * i - 1 <= t) {      // surviving partner is a kink
          w.under(d(2 * i), -1);
          w.over(d(2 * i), -1);
        } else {
          w.over(d(2 * i - 1), -1);
          w.under(d(2 * i), -1);
          w.under(d(2 * i - 1), -1);
          w.over(d(2 * i), -1);
        }
      }
      for (int k = 1; k <= p; ++k) {
        if (gone.count(k)) continue;
        w.put(k % 2 == 1 ? Passage::Under : Passage::Over, h(k), -1);
      }
      for (int i = 1; i <= n; ++i)
        w.put(mirror ? Passage::Over : Passage::Under, c(i), -1);
      for (int k = p; k >= 1; --k) {
        if (gone.count(k)) continue;
        w.put(k % 2 == 1 ? Passage::Over : Passage::Under, h(k), -1);
      }

      int odds_rem = 0, evens_rem = 0;
      for (int k = 1; k <= p; ++k)
        if (!gone.count(k)) (k % 2 == 1 ? odds_rem : evens_rem)++;
      int diff = odds_rem - evens_rem;
      for (int i = 1; i <= n; ++i) {
        int ind = mirror ? 2 * i - n - 1 - diff : 2 * i - n - 1 + diff;
        prof.chords.push_back({c(i), "c" + std::to_string(i), -1, ind});
      }
      for (int i = 1; i <= m; ++i) {
        if (2 * i <= t) continue;
        if (2 * i - 1 <= t) {
          prof.chords.push_back({d(2 * i), "d" + std::to_string(2 * i), -1, 0});
        } else {
          prof.chords.push_back({d(2 * i - 1), "d" + std::to_string(2 * i - 1), -1, 1});
          prof.chords.push_back({d(2 * i), "d" + std::to_string(2 * i), -1, -1});
        }
      }
      for (int k = 1; k <= p; ++k) {
        if (gone.count(k)) continue;
        int ind = (k % 2 == 1) == !mirror ? -n : n;
        prof.chords.push_back({h(k), "h" + std::to_string(k), -1, ind});
      }

      // trivializing plans
      if (spec.kind == FamilyKind::DQR || spec.kind == FamilyKind::D ||
          spec.kind == FamilyKind::DTilde) {
        int delta = q - r;
        if (spec.kind != FamilyKind::DTilde) {
          if (-n < delta && delta < 0)
            prof.claimed_u = UnknottingIndex{r - q, (p + n - 2 * r) / 2};
          else if (0 <= delta && delta <= 2)
            prof.claimed_u = UnknottingIndex{0, (p + n - q - r) / 2};
          else if (2 < delta && delta < n + 2)
            prof.claimed_u = UnknottingIndex{q - r - 2, (p + n - 2 * q + 2) / 2};
          else
            prof.claimed_u = UnknottingIndex{n, 0};
        }
        bool in_formula_regimes =
            spec.kind != FamilyKind::DTilde && (-n < delta && delta < n + 2);
        if (in_formula_regimes) {
          int dprime = delta;
          std::set<int> plan_gone;
          if (delta > 2) {
            int need = delta - 2;
            for (int k = 2; k <= p && need > 0; k += 2)
              if (!gone.count(k)) {
                prof.plan.virtualize.push_back(h(k));
                plan_gone.insert(k);
                --need;
              }
            dprime = 2;
          } else if (delta < 0) {
            int need = -delta;
            for (int k = 1; k <= p && need > 0; k += 2)
              if (!gone.count(k)) {
                prof.plan.virtualize.push_back(h(k));
                plan_gone.insert(k);
                --need;
              }
            dprime = 0;
          }
          for (int k = 2; k <= p; k += 2)
            if (!gone.count(k) && !plan_gone.count(k)) prof.plan.change.push_back(h(k));
          if (dprime == 0)
            for (int i = (n + 2) / 2; i <= n; ++i) prof.plan.change.push_back(c(i));
          else if (dprime == 1)
            for (int i = 1; i <= n / 2; ++i) prof.plan.change.push_back(c(i));
          else
            for (int i = (n + 4) / 2; i <= n; ++i) prof.plan.change.push_back(c(i));
        } else {
          for (int i = 1; i <= n; ++i) prof.plan.virtualize.push_back(c(i));
        }
      } else {
        for (int i = 1; i <= n; ++i) prof.plan.virtualize.push_back(c(i));
        for (int i = 1; i <= m; ++i)
          if (2 * i > t) prof.plan.change.push_back(d(2 * i));
        if (spec.kind == FamilyKind::DNPM)
          prof.claimed_u = UnknottingIndex{n, m};
      }
      break;
    }
    case FamilyKind::Link: {
      int k = spec.k, n = spec.n, m = spec.m, p = spec.p;
      if (k < 2 || n < 2 || m < 1 || p < 2)
        bad_params(spec, "need k >= 2, n >= 2, m >= 1, p >= 2");
      int kp = std::min(k, n);  // chain length; extra components are chordless
      build_k_upper(m, p, w, prof);
      for (auto& e : prof.chords) e.index.reset();  // link: no per-chord index
      auto tch = [&](int i) { return 3 * m + p + i; };
      if (kp == 2) {
        for (int i = 1; i <= n; ++i) w.over(tch(i), -1);
        w.next_component();
        for (int i = 1; i <= n; ++i) w.under(tch(i), -1);
      } else {
        w.over(tch(1), -1);
        for (int j = 2; j <= kp - 2; ++j) {
          w.next_component();
          w.under(tch(j - 1), -1);
          w.over(tch(j), -1);
        }
        w.next_component();
        w.under(tch(kp - 2), -1);
        for (int i = kp - 1; i <= n; ++i) w.over(tch(i), -1);
        w.next_component();
        for (int i = kp - 1; i <= n; ++i) w.under(tch(i), -1);
      }
      for (int j = kp; j < k; ++j) w.next_component();
      for (int i = 1; i <= n; ++i)
        prof.chords.push_back({tch(i), "t" + std::to_string(i), -1, std::nullopt});
      prof.span = n;
      prof.ell_total = 0;
      prof.claimed_u = UnknottingIndex{n, m};
      // the K_upper plan (crossing changes) is already in prof.plan
      for (int i = 1; i <= n; ++i) prof.plan.virtualize.push_back(tch(i));
      break;
    }
  }

  FamilyDiagram out{spec, w.build(), std::move(prof)};
  ExpectedProfile& pr = out.profile;
  const GaussDiagram& g = out.diagram;

  // expected writhe from the chord expectations
  if (g.component_count() <= 1) {
    for (const auto& e : pr.chords)
      if (e.index && *e.index != 0) {
        pr.writhe.entries[*e.index] += e.sign;
        if (pr.writhe.entries[*e.index] == 0) pr.writhe.entries.erase(*e.index);
      }
    for (const auto& e : pr.chords) pr.writhe.total_signed_count += e.sign;
  } else if (spec.kind == FamilyKind::Link) {
    pr.component_writhes.assign(g.component_count(), WritheVector{});
    auto ku = generate(FamilySpec::k_upper(spec.m, spec.p));
    pr.component_writhes[0] = ku.profile.writhe;
  }

  // self-validation: every profile value is recomputed from the diagram
  auto fail = [&](const std::string& why) {
    throw std::logic_error("generator validation failed for " + spec.str() + ": " + why);
  };
  for (const auto& e : pr.chords) {
    if (!g.has_chord(e.chord)) fail("missing chord " + e.label);
    if (g.sign(e.chord) != e.sign) fail("sign of " + e.label);
    if (e.index && g.component_count() == 1 && index(g, e.chord) != *e.index)
      fail("index of " + e.label + ": got " + std::to_string(index(g, e.chord)) +
           " want " + std::to_string(*e.index));
  }
  if (g.component_count() == 1) {
    if (!(writhe_vector(g) == pr.writhe)) fail("writhe vector");
  } else {
    auto cw = component_writhe_vectors(g);
    for (std::size_t i = 0; i < cw.size(); ++i)
      if (!(cw[i] == pr.component_writhes[i]))
        fail("component writhe " + std::to_string(i));
    if (pr.span && span_total(g).total != *pr.span) fail("span");
    if (pr.ell_total && ell_invariant(g).total != *pr.ell_total) fail("ell");
  }
  std::sort(pr.plan.virtualize.begin(), pr.plan.virtualize.end());
  std::sort(pr.plan.change.begin(), pr.plan.change.end());
  GaussDiagram after = g;
  for (int id : pr.plan.change) after = after.crossing_change(id);
  for (int id : pr.plan.virtualize) after = after.virtualize(id);
  if (greedy_simplify(after).final.chord_count() != 0)
    fail("trivializing plan did not reach the trivial diagram");
  return out;
}

std::vector<ScanRow> single_virtualization_scan(const FamilySpec& spec) {
  if (spec.kind != FamilyKind::KLower)
    throw std::invalid_argument("single_virtualization_scan is defined for K_lower");
  FamilyDiagram fd = generate(spec);
  std::vector<ScanRow> rows;
  for (const auto& e : fd.profile.chords) {
    ScanRow row;
    row.chord = e.chord;
    row.label = e.label;
    if (e.label == "d")
      row.case_id = 6;
    else if (e.label == "c")
      row.case_id = 2;
    else if (e.label[0] == 'b')
      row.case_id = 3;
    else if (e.label[0] == 'c')
      row.case_id = 1;
    else
      row.case_id = (e.chord - 2) % 2 == 1 ? 5 : 4;  // d_j with j = chord-2
    GaussDiagram g = fd.diagram.virtualize(e.chord);
    row.writhe = writhe_vector(g);
    row.bound = lower_bound_knot(g);
    rows.push_back(std::move(row));
  }
  return rows;
}

DistinguishResult distinguish(const FamilySpec& a, const FamilySpec& b) {
  FamilyDiagram fa = generate(a), fb = generate(b);
  DistinguishResult res;
  std::ostringstream os;
  if (fa.diagram.component_count() == 1 && fb.diagram.component_count() == 1) {
    WritheVector wa = writhe_vector(fa.diagram), wb = writhe_vector(fb.diagram);
    std::set<int> keys;
    for (const auto& [n, j] : wa.entries) keys.insert(n);
    for (const auto& [n, j] : wb.entries) keys.insert(n);
    for (int n : keys)
      if (wa.at(n) != wb.at(n)) {
        os << "J_" << n << " differs: " << wa.at(n) << " vs " << wb.at(n);
        return {true, os.str()};
      }
    auto ma = minimal_crossing_check(fa.diagram), mb = minimal_crossing_check(fb.diagram);
    if (ma.minimal && mb.minimal && *ma.crossing_number != *mb.crossing_number) {
      os << "minimal crossing numbers differ: " << *ma.crossing_number << " vs "
         << *mb.crossing_number;
      return {true, os.str()};
    }
  } else if (fa.diagram.component_count() >= 2 && fb.diagram.component_count() >= 2) {
    int sa = span_total(fa.diagram).total, sb = span_total(fb.diagram).total;
    if (sa != sb) {
      os << "span differs: " << sa << " vs " << sb;
      return {true, os.str()};
    }
    int ja = 0, jb = 0;
    for (const auto& wv : component_writhe_vectors(fa.diagram)) ja += abs_sum(wv);
    for (const auto& wv : component_writhe_vectors(fb.diagram)) jb += abs_sum(wv);
    if (ja != jb) {
      os << "summed component |J| differs: " << ja << " vs " << jb;
      return {true, os.str()};
    }
  } else {
    return {true, "component counts differ"};
  }
  return {false, "not distinguished"};
}

}  // namespace vk
