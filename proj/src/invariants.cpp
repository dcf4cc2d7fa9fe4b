#include "vk/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace vk {

int label_increment(Passage p, int sign) {
  return p == Passage::Over ? -sign : sign;
}

namespace {

void require_knot(const GaussDiagram& d, const char* op) {
  if (d.component_count() > 1)
    throw std::invalid_argument(std::string(op) + " is defined for one-component diagrams");
}

}  // namespace

ChengColoring cheng_coloring_from(const GaussDiagram& d, int basepoint) {
  require_knot(d, "cheng_coloring");
  ChengColoring col;
  if (d.component_count() == 0) {
    col.labels.push_back({0});
    return col;
  }
  const auto& comp = d.component(0);
  int n = static_cast<int>(comp.size());
  if (n == 0) {
    col.labels.push_back({0});
    return col;
  }
  if (basepoint < 0 || basepoint >= n) throw std::invalid_argument("bad basepoint");
  std::vector<int> labels(n, 0);
  int label = 0;
  for (int k = 0; k < n; ++k) {
    int pos = (basepoint + k) % n;
    labels[pos] = label;  // label of the arc entering endpoint `pos`
    label += label_increment(comp[pos].passage, d.sign(comp[pos].chord));
  }
  if (label != 0) throw std::logic_error("coloring walk did not close");
  col.labels.push_back(std::move(labels));
  return col;
}

ChengColoring cheng_coloring(const GaussDiagram& d) { return cheng_coloring_from(d, 0); }

int index(const GaussDiagram& d, int chord) {
  require_knot(d, "index");
  ChengColoring col = cheng_coloring(d);
  const auto& labels = col.labels.at(0);
  int o = labels.at(d.over_loc(chord).pos);
  int u = labels.at(d.under_loc(chord).pos);
  int s = d.sign(chord);
  int a = s > 0 ? o : u;
  int b = s > 0 ? u : o;
  return s * (a - b - 1);
}

int index_by_linking(const GaussDiagram& d, int chord) {
  require_knot(d, "index_by_linking");
  const auto& comp = d.component(0);
  int n = static_cast<int>(comp.size());
  int from = d.over_loc(chord).pos;
  int to = d.under_loc(chord).pos;
  int sum = 0;
  for (int pos = (from + 1) % n; pos != to; pos = (pos + 1) % n) {
    const Endpoint& e = comp[pos];
    sum += e.passage == Passage::Over ? d.sign(e.chord) : -d.sign(e.chord);
  }
  return sum;
}

WritheVector writhe_vector(const GaussDiagram& d) {
  require_knot(d, "writhe_vector");
  WritheVector w;
  if (d.component_count() == 0 || d.chord_count() == 0) return w;
  ChengColoring col = cheng_coloring(d);
  const auto& labels = col.labels.at(0);
  for (int id : d.chord_ids()) {
    int s = d.sign(id);
    int o = labels.at(d.over_loc(id).pos);
    int u = labels.at(d.under_loc(id).pos);
    int a = s > 0 ? o : u;
    int b = s > 0 ? u : o;
    int ind = s * (a - b - 1);
    w.total_signed_count += s;
    if (ind != 0) {
      w.entries[ind] += s;
      if (w.entries[ind] == 0) w.entries.erase(ind);
    }
  }
  return w;
}

int abs_sum(const WritheVector& w) {
  int sum = 0;
  for (const auto& [n, j] : w.entries) sum += std::abs(j);
  return sum;
}

int half_abs_sum(const WritheVector& w) { return (abs_sum(w) + 1) / 2; }

bool has_asymmetry(const WritheVector& w) {
  for (const auto& [n, j] : w.entries)
    if (j != w.at(-n)) return true;
  return false;
}

std::string LaurentPolynomial::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, c] : coeffs) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    long long a = c < 0 ? -c : c;
    out += std::to_string(a) + "*t^" + std::to_string(n);
    first = false;
  }
  return out;
}

LaurentPolynomial affine_index_polynomial(const GaussDiagram& d) {
  WritheVector w = writhe_vector(d);
  LaurentPolynomial p;
  long long constant = 0;
  for (const auto& [n, j] : w.entries) {
    p.coeffs[n] += j;
    constant -= j;
  }
  if (constant != 0) p.coeffs[0] = constant;
  for (auto it = p.coeffs.begin(); it != p.coeffs.end();)
    it = it->second == 0 ? p.coeffs.erase(it) : std::next(it);
  return p;
}

std::vector<WritheVector> component_writhe_vectors(const GaussDiagram& d) {
  std::vector<WritheVector> result;
  for (int c = 0; c < d.component_count(); ++c) {
    GaussDiagram::Component comp;
    std::map<int, int> signs;
    for (const Endpoint& e : d.component(c)) {
      auto [a, b] = d.chord_components(e.chord);
      if (a == c && b == c) {
        comp.push_back(e);
        signs[e.chord] = d.sign(e.chord);
      }
    }
    GaussDiagram sub({std::move(comp)}, std::move(signs));
    result.push_back(writhe_vector(sub));
  }
  return result;
}

SpanPair span_pair(const GaussDiagram& d, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= d.component_count() || j >= d.component_count())
    throw std::invalid_argument("span_pair needs two distinct valid components");
  SpanPair sp;
  sp.i = i;
  sp.j = j;
  for (int id : d.linking_chords(i, j)) {
    bool i_over = d.over_loc(id).comp == i;
    int s = d.sign(id);
    if (i_over)
      (s > 0 ? sp.alpha_plus : sp.alpha_minus)++;
    else
      (s > 0 ? sp.beta_plus : sp.beta_minus)++;
  }
  return sp;
}

SpanReport span_total(const GaussDiagram& d) {
  if (d.component_count() < 2)
    throw std::invalid_argument("span_total needs at least two components");
  SpanReport report;
  for (int i = 0; i < d.component_count(); ++i)
    for (int j = i + 1; j < d.component_count(); ++j) {
      SpanPair sp = span_pair(d, i, j);
      report.total += sp.span();
      report.pairs.push_back(sp);
    }
  return report;
}

int linking_over(const GaussDiagram& d, int i, int j) {
  int lk = 0;
  for (int id : d.linking_chords(i, j))
    if (d.over_loc(id).comp == i) lk += d.sign(id);
  return lk;
}

PairEll ell_pair(const GaussDiagram& d, int i, int j, const EllBudget& budget) {
  SpanPair sp = span_pair(d, i, j);
  int span = sp.span();
  int target = sp.imbalance();
  PairEll out;
  out.i = i;
  out.j = j;

  std::vector<int> chords = d.linking_chords(i, j);
  std::sort(chords.begin(), chords.end());
  int n = static_cast<int>(chords.size());
  // contribution of each chord to the imbalance
  std::vector<int> contrib(n);
  for (int k = 0; k < n; ++k) {
    bool i_over = d.over_loc(chords[k]).comp == i;
    contrib[k] = i_over ? d.sign(chords[k]) : -d.sign(chords[k]);
  }
  int base_lk = linking_over(d, i, j);

  // enumerate subsets of size `span` whose removal zeroes the imbalance
  std::vector<int> pick;
  bool found = false;
  int best = 0;
  std::size_t visited = 0;
  bool exceeded = false;
  std::vector<std::vector<int>> lambda;

  auto record = [&](const std::vector<int>& subset) {
    int removed_sum = 0, removed_lk = 0;
    for (int k : subset) {
      removed_sum += contrib[k];
      if (d.over_loc(chords[k]).comp == i) removed_lk += d.sign(chords[k]);
    }
    if (removed_sum != target) return;
    int lk = std::abs(base_lk - removed_lk);
    std::vector<int> ids;
    for (int k : subset) ids.push_back(chords[k]);
    if (!found || lk < best) {
      best = lk;
      lambda.clear();
    }
    found = true;
    if (lk == best && lambda.size() < budget.lambda_cap) lambda.push_back(ids);
  };

  std::function<void(int)> rec = [&](int start) {
    if (exceeded) return;
    if (static_cast<int>(pick.size()) == span) {
      if (++visited > budget.subset_cap) {
        exceeded = true;
        return;
      }
      record(pick);
      return;
    }
    int need = span - static_cast<int>(pick.size());
    for (int k = start; k + need <= n; ++k) {
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
      if (exceeded) return;
    }
  };
  rec(0);

  out.budget_exceeded = exceeded;
  if (found) {
    out.ell = best;
    out.lambda = std::move(lambda);
  } else if (!exceeded) {
    // span-many removals always suffice to zero the imbalance
    throw std::logic_error("ell_pair: no span-killing subset found");
  }
  return out;
}

EllReport ell_invariant(const GaussDiagram& d, const EllBudget& budget) {
  if (d.component_count() < 2)
    throw std::invalid_argument("ell_invariant needs at least two components");
  EllReport report;
  for (int i = 0; i < d.component_count(); ++i)
    for (int j = i + 1; j < d.component_count(); ++j) {
      PairEll pe = ell_pair(d, i, j, budget);
      report.total += pe.ell;
      report.budget_exceeded |= pe.budget_exceeded;
      report.pairs.push_back(std::move(pe));
    }
  return report;
}

UnknottingIndex lower_bound_knot(const GaussDiagram& d) {
  if (d.component_count() > 1)
    throw std::invalid_argument("lower_bound_knot needs a one-component diagram");
  WritheVector w = writhe_vector(d);
  if (has_asymmetry(w)) return {1, 0};
  return {0, half_abs_sum(w)};
}

UnknottingIndex lower_bound_link(const GaussDiagram& d, const EllBudget& budget) {
  if (d.component_count() < 2)
    throw std::invalid_argument("lower_bound_link needs at least two components");
  SpanReport span = span_total(d);
  EllReport ell = ell_invariant(d, budget);
  int j_sum = 0;
  for (const WritheVector& w : component_writhe_vectors(d)) j_sum += abs_sum(w);
  return {span.total, ell.total + (j_sum + 1) / 2};
}

MinimalityReport minimal_crossing_check(const GaussDiagram& d) {
  if (d.component_count() > 1)
    throw std::invalid_argument("minimal_crossing_check needs a one-component diagram");
  MinimalityReport report;
  std::map<int, int> sign_by_index;
  for (int id : d.chord_ids()) {
    int ind = index(d, id);
    if (ind == 0) report.no_zero_index = false;
    auto it = sign_by_index.find(ind);
    if (it == sign_by_index.end())
      sign_by_index[ind] = d.sign(id);
    else if (it->second != d.sign(id))
      report.same_index_same_sign = false;
  }
  report.minimal = report.no_zero_index && report.same_index_same_sign;
  if (report.minimal) {
    report.crossing_number = static_cast<int>(d.chord_count());
    if (abs_sum(writhe_vector(d)) != static_cast<int>(d.chord_count()))
      throw std::logic_error("minimality conditions hold but |J| sum != chord count");
  }
  return report;
}

}  // namespace vk
