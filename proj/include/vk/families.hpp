#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vk/diagram.hpp"
#include "vk/invariants.hpp"
#include "vk/plan.hpp"

namespace vk {

enum class FamilyKind { KUpper, KLower, D, DTilde, DQR, DNPM, DNPMQRT, Link };

std::string family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(const std::string& name);

// Parameter meanings per family:
//   K_upper(m,p)            p >= 2, m >= 1
//   K_lower(m,p)            p >= 5, m >= 1
//   D(n,p), D_tilde(n,p)    n >= 1, p >= 1 odd
//   D_qr(n,p,q,r)           p odd, q odd-label and r even-label virtualizations
//   D_npm(n,p,m,q)          q > n+2, p >= q+2 (odd-first virtualization order)
//   D_npm_qrt(n,p,m,q,r,t)  t leading d-chords also virtualized
//   link(k,n,m,p)           k >= 2 components, n linking chords, K_upper(m,p) carrier
struct FamilySpec {
  FamilyKind kind = FamilyKind::KUpper;
  int m = 0, p = 0, n = 0, q = 0, r = 0, t = 0, k = 0;

  static FamilySpec k_upper(int m, int p);
  static FamilySpec k_lower(int m, int p);
  static FamilySpec d(int n, int p);
  static FamilySpec d_tilde(int n, int p);
  static FamilySpec d_qr(int n, int p, int q, int r);
  static FamilySpec d_npm(int n, int p, int m, int q);
  static FamilySpec d_npm_qrt(int n, int p, int m, int q, int r, int t);
  static FamilySpec link(int k, int n, int m, int p);

  std::string str() const;
};

struct ChordExpectation {
  int chord = 0;
  std::string label;        // "c1", "d3", "b2", "t1", ...
  int sign = 0;
  std::optional<int> index;  // knots only; absent for linking chords
};

struct ExpectedProfile {
  std::vector<ChordExpectation> chords;
  WritheVector writhe;                          // knots
  std::vector<WritheVector> component_writhes;  // links
  std::optional<int> span;                      // links
  std::optional<int> ell_total;                 // links
  std::optional<UnknottingIndex> claimed_u;     // the family's proved unknotting index
  UnknottingPlan plan;                          // trivializing plan realizing claimed_u
};

struct FamilyDiagram {
  FamilySpec spec;
  GaussDiagram diagram;
  ExpectedProfile profile;
};

// Emits the diagram and its expected profile, re-deriving every profile value
// from the diagram itself and aborting on any mismatch (generator bugs must
// never escape). The plan is checked to reach the trivial diagram greedily.
FamilyDiagram generate(const FamilySpec& spec);

// One row per chord of K_lower(m,p): the writhe vector and knot lower bound
// after virtualizing exactly that chord.
struct ScanRow {
  int chord = 0;
  std::string label;
  int case_id = 0;  // 1..6 by chord class
  WritheVector writhe;
  UnknottingIndex bound;
};

std::vector<ScanRow> single_virtualization_scan(const FamilySpec& spec);

struct DistinguishResult {
  bool distinguished = false;
  std::string witness;  // e.g. "J_2 differs: -2 vs 0"
};

DistinguishResult distinguish(const FamilySpec& a, const FamilySpec& b);

}  // namespace vk
