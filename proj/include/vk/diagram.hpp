#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vk {

enum class Passage : std::uint8_t { Over, Under };

constexpr Passage opposite(Passage p) {
  return p == Passage::Over ? Passage::Under : Passage::Over;
}

struct Endpoint {
  int chord = 0;
  Passage passage = Passage::Over;
  bool operator==(const Endpoint&) const = default;
};

// Position of an endpoint: component index + slot on that circle.
struct Loc {
  int comp = -1;
  int pos = -1;
  bool operator==(const Loc&) const = default;
  auto operator<=>(const Loc&) const = default;
};

// Pair (virtualizations, crossing changes) compared in dictionary order.
struct UnknottingIndex {
  int virtualizations = 0;
  int changes = 0;
  auto operator<=>(const UnknottingIndex&) const = default;
};

UnknottingIndex operator+(UnknottingIndex a, UnknottingIndex b);
std::string to_string(const UnknottingIndex& u);

class FlatDiagram;

// Multi-component Gauss diagram: oriented circles carrying the endpoints of
// signed, over/under-decorated chords. Virtual crossings leave no trace in
// this representation. Immutable value type; operations return new diagrams.
class GaussDiagram {
public:
  using Component = std::vector<Endpoint>;

  GaussDiagram() = default;
  GaussDiagram(std::vector<Component> components, std::map<int, int> signs);

  int component_count() const { return static_cast<int>(components_.size()); }
  std::size_t chord_count() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(int i) const { return components_.at(i); }
  const std::map<int, int>& signs() const { return signs_; }

  bool has_chord(int id) const { return signs_.count(id) != 0; }
  int sign(int id) const;
  std::vector<int> chord_ids() const;
  Loc over_loc(int id) const;
  Loc under_loc(int id) const;
  Loc loc(int id, Passage p) const { return p == Passage::Over ? over_loc(id) : under_loc(id); }
  const Endpoint& at(Loc l) const { return components_.at(l.comp).at(l.pos); }

  // component indices of the over/under endpoints
  std::pair<int, int> chord_components(int id) const;
  bool is_self_chord(int id) const;
  std::size_t self_chord_count(int comp) const;
  std::vector<int> linking_chords(int comp_i, int comp_j) const;

  // Swaps the over/under endpoints of `id` and negates its sign.
  GaussDiagram crossing_change(int id) const;
  // Deletes chord `id`; endpoint slots compact, component count unchanged.
  GaussDiagram virtualize(int id) const;
  FlatDiagram flatten() const;

  bool operator==(const GaussDiagram&) const;

private:
  std::vector<Component> components_;
  std::map<int, int> signs_;
  std::map<int, std::pair<Loc, Loc>> locs_;  // chord -> (over, under)

  void index_and_validate();
};

// Gauss diagram with signs and over/under decoration forgotten.
class FlatDiagram {
public:
  using Component = std::vector<int>;  // chord ids, each appearing twice

  FlatDiagram() = default;
  explicit FlatDiagram(std::vector<Component> components);

  int component_count() const { return static_cast<int>(components_.size()); }
  std::size_t chord_count() const { return chord_positions_.size(); }
  bool empty() const { return chord_positions_.empty(); }
  const std::vector<Component>& components() const { return components_; }
  std::vector<int> chord_ids() const;
  std::pair<Loc, Loc> chord_locs(int id) const;

  FlatDiagram remove_chord(int id) const;

  bool operator==(const FlatDiagram&) const = default;

private:
  std::vector<Component> components_;
  std::map<int, std::pair<Loc, Loc>> chord_positions_;
  void index_and_validate();
};

}  // namespace vk
