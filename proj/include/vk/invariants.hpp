#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vk/diagram.hpp"

namespace vk {

// Integer labels on arcs: labels[c][p] is the label of the arc entering
// endpoint p of component c (the basepoint arc, entering slot 0, is 0).
// A chordless component carries the single label 0.
struct ChengColoring {
  std::vector<std::vector<int>> labels;
};

// Traversal increment at an endpoint: over endpoints add -sign, under
// endpoints add +sign; the increments around each circle sum to zero.
int label_increment(Passage p, int sign);

ChengColoring cheng_coloring(const GaussDiagram& d);
// Same walk started at `basepoint` (labels there 0); differs from
// cheng_coloring by a constant on each arc.
ChengColoring cheng_coloring_from(const GaussDiagram& d, int basepoint);

// Index of a crossing, read off the coloring as sgn(c)(a-b-1) where a,b are
// the incoming labels in the roles fixed by the crossing sign.
int index(const GaussDiagram& d, int chord);

// Independent route: signed count over the chords interleaved with `chord`,
// +sgn for an over endpoint between the over and under ends of `chord`,
// -sgn for an under endpoint. Agrees with index() on every diagram.
int index_by_linking(const GaussDiagram& d, int chord);

struct WritheVector {
  std::map<int, int> entries;  // n -> J_n, n != 0, zeros omitted
  int total_signed_count = 0;  // sum of all crossing signs (diagnostic)

  int at(int n) const {
    auto it = entries.find(n);
    return it == entries.end() ? 0 : it->second;
  }
  bool operator==(const WritheVector& o) const { return entries == o.entries; }
};

WritheVector writhe_vector(const GaussDiagram& d);

int abs_sum(const WritheVector& w);
// ceil(sum |J_n| / 2): a half-integer count of crossing changes is impossible.
int half_abs_sum(const WritheVector& w);
bool has_asymmetry(const WritheVector& w);  // some n with J_n != J_{-n}

struct LaurentPolynomial {
  std::map<int, long long> coeffs;  // exponent -> coefficient, zeros omitted
  bool zero() const { return coeffs.empty(); }
  long long at(int n) const {
    auto it = coeffs.find(n);
    return it == coeffs.end() ? 0 : it->second;
  }
  std::string str() const;  // "c*t^n" terms, ascending exponent
  bool operator==(const LaurentPolynomial&) const = default;
};

// Sum over n != 0 of J_n (t^n - 1); vanishes on the empty diagram.
LaurentPolynomial affine_index_polynomial(const GaussDiagram& d);

// Writhe vector of each component's self-chord subdiagram (all other
// chords deleted).
std::vector<WritheVector> component_writhe_vectors(const GaussDiagram& d);

struct SpanPair {
  int i = 0, j = 0;
  int alpha_plus = 0, alpha_minus = 0;  // i passes over j, by sign
  int beta_plus = 0, beta_minus = 0;    // i passes under j, by sign
  int imbalance() const { return (alpha_plus - alpha_minus) - (beta_plus - beta_minus); }
  int span() const { return imbalance() < 0 ? -imbalance() : imbalance(); }
};

struct SpanReport {
  std::vector<SpanPair> pairs;  // unordered pairs, i < j
  int total = 0;
};

SpanPair span_pair(const GaussDiagram& d, int i, int j);
SpanReport span_total(const GaussDiagram& d);

// Signed count of chords where component i passes over component j
// (classical linking number on classical diagrams).
int linking_over(const GaussDiagram& d, int i, int j);

struct PairEll {
  int i = 0, j = 0;
  int ell = 0;
  bool budget_exceeded = false;
  std::vector<std::vector<int>> lambda;  // minimizing witnesses capped at lambda_cap
};

struct EllReport {
  std::vector<PairEll> pairs;
  int total = 0;
  bool budget_exceeded = false;
};

struct EllBudget {
  std::size_t subset_cap = 1u << 20;  // max subsets enumerated per pair
  std::size_t lambda_cap = 64;        // witnesses kept per pair
};

// ell for the 2-component subdiagram of components i,j: minimal |lk| over
// span-many virtualization subsets of their linking chords killing the span.
PairEll ell_pair(const GaussDiagram& d, int i, int j, const EllBudget& budget = {});
EllReport ell_invariant(const GaussDiagram& d, const EllBudget& budget = {});

// max in dictionary order of (1,0)-if-asymmetric and (0, half |J| sum).
UnknottingIndex lower_bound_knot(const GaussDiagram& d);
// (span(D), sum of pairwise ell + half the summed component |J_k|).
UnknottingIndex lower_bound_link(const GaussDiagram& d, const EllBudget& budget = {});

struct MinimalityReport {
  bool minimal = false;
  std::optional<int> crossing_number;
  bool same_index_same_sign = true;  // condition (a)
  bool no_zero_index = true;         // condition (b)
};

// Sufficient minimality test: equal-index crossings share their sign and no
// crossing has index zero; then the chord count is the minimal crossing
// number and equals sum |J_k|.
MinimalityReport minimal_crossing_check(const GaussDiagram& d);

}  // namespace vk
