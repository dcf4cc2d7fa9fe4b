#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vk/diagram.hpp"

namespace vk {

enum class MoveKind { R1Reduce, R1Expand, R2Reduce, R2Expand, R3 };

std::string to_string(MoveKind k);  // "R1-", "R1+", "R2-", "R2+", "R3"

// Sites reference the diagram the move was detected on; positions are slots
// in that concrete diagram (traces replay against the evolving diagram).
struct Move {
  MoveKind kind = MoveKind::R1Reduce;

  // R1Reduce / R2Reduce: chords[0] (and chords[1] for R2)
  std::array<int, 3> chords{0, 0, 0};

  // R1Expand: at, over_first, sign
  // R2Expand: at, at2, parallel, sign (sign of the first inserted chord;
  //           the strand at `at` passes over the strand at `at2`)
  Loc at, at2;
  bool over_first = true;
  bool parallel = true;
  int sign = 1;

  // R3: the three adjacent pairs, each given by the slot of its first
  // endpoint (the pair is (slot, slot+1) cyclically).
  std::array<Loc, 3> pair_starts;

  bool operator==(const Move&) const = default;
};

bool is_reducing(const Move& m);

// All applicable reducing R1, reducing R2, and R3 moves, deterministically
// ordered.
std::vector<Move> find_moves(const GaussDiagram& d);

GaussDiagram apply_move(const GaussDiagram& d, const Move& m);

struct MoveTrace {
  GaussDiagram initial;
  std::vector<Move> steps;
  GaussDiagram final;
};

// Re-applies the steps from `initial`; true iff the result equals `final`
// up to canonical form.
bool replay(const MoveTrace& t);

struct SearchBudget {
  int r2_expansion_depth = 2;     // expansions allowed per search path
  int r3_cap = 64;                // R3 applications per search path
  std::size_t frontier_cap = 100000;  // nodes popped before giving up
};

// R1/R2 reduction to fixpoint with bounded R3 interleaving.
MoveTrace greedy_simplify(const GaussDiagram& d, const SearchBudget& budget = {});

enum class Triviality { Yes, Inconclusive };

struct TrivialityResult {
  Triviality status = Triviality::Inconclusive;
  std::optional<MoveTrace> trace;  // ends at zero chords when status == Yes
  std::size_t nodes_expanded = 0;
};

// "Yes" only with a replayable trace to zero chords (component count is
// invariant under all classical moves). "Inconclusive" never asserts
// knottedness.
TrivialityResult is_trivial(const GaussDiagram& d, const SearchBudget& budget = {});

// Flat counterparts: sign/passage admissibility conditions dropped.
struct FlatMove {
  MoveKind kind = MoveKind::R1Reduce;
  std::array<int, 3> chords{0, 0, 0};
  std::array<Loc, 3> pair_starts;
  Loc at, at2;           // expansions
  bool parallel = true;  // R2Expand
  bool operator==(const FlatMove&) const = default;
};

std::vector<FlatMove> flat_find_moves(const FlatDiagram& d);
FlatDiagram flat_apply_move(const FlatDiagram& d, const FlatMove& m);

struct FlatTrace {
  FlatDiagram initial;
  std::vector<FlatMove> steps;
  FlatDiagram final;
};

struct FlatTrivialityResult {
  Triviality status = Triviality::Inconclusive;
  std::optional<FlatTrace> trace;
  std::size_t nodes_expanded = 0;
};

FlatTrivialityResult flat_is_trivial(const FlatDiagram& d, const SearchBudget& budget = {});

// Projection of a classical trace to flat moves (R1/R2/R3 all survive).
FlatTrace project_trace(const MoveTrace& t);

}  // namespace vk
