#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vk/diagram.hpp"
#include "vk/families.hpp"
#include "vk/moves.hpp"
#include "vk/plan.hpp"

namespace vk {

// Replayable witness: plan applied to the source diagram, then the trace,
// ends at the trivial diagram. cost = (|virtualize|, |change|).
struct UnknottingCertificate {
  UnknottingPlan plan;
  MoveTrace trace;  // from the post-plan diagram to zero chords
  UnknottingIndex cost;
};

// Machine-checks the certificate against `d`: the plan applies, the trace
// replays and ends with no chords.
bool check_certificate(const GaussDiagram& d, const UnknottingCertificate& cert);

std::optional<UnknottingCertificate> certify(const GaussDiagram& d,
                                             const UnknottingPlan& plan,
                                             const SearchBudget& budget = {});

struct IndexInterval {
  UnknottingIndex lower;
  std::optional<UnknottingIndex> upper;
};

struct SearchResult {
  IndexInterval interval;
  std::optional<UnknottingCertificate> certificate;
  int skipped_inconclusive = 0;  // plans skipped at costs before the certified one
  bool cap_exceeded = false;     // chord count above the enumeration cap
};

struct SearchOptions {
  int max_virtualizations = -1;  // -1: up to the chord count
  int max_changes = -1;
  std::size_t chord_cap = 14;
  int threads = 1;
  SearchBudget budget;
};

// Enumerates candidate costs in dictionary order (virtualizations ascending,
// then changes ascending) and all plans of each cost in lexicographic order;
// the first certified plan gives the upper bound. The certified value bounds
// U of this diagram; it equals the knot/link invariant only when it meets the
// invariant lower bound.
SearchResult search_min(const GaussDiagram& d, const SearchOptions& opts = {});

// Invariant lower-bound sweep behind the families' unknotting-index proofs:
// every virtualization subset smaller than `target.virtualizations` leaves a
// writhe-asymmetric (hence flat-nontrivial) diagram, and every subset of
// exactly that size is either still asymmetric or needs at least
// `target.changes` crossing changes by the half-sum bound.
bool sweep_lower_bound(const GaussDiagram& d, UnknottingIndex target);

struct CheckLine {
  std::string what;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct TheoremReport {
  FamilySpec spec;
  bool pass = false;
  UnknottingIndex claimed;
  std::optional<UnknottingIndex> lower;
  std::optional<UnknottingIndex> certified;
  std::vector<CheckLine> checks;
  std::optional<UnknottingCertificate> certificate;
};

// Recomputes the family's claimed unknotting index from scratch: invariant
// lower bound (direct bounds or the subset sweep, per family) plus a
// certified plan of matching cost, with the per-family profile assertions.
TheoremReport verify_theorem(const FamilySpec& spec, const SearchBudget& budget = {});

}  // namespace vk
