#include "vk/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace vk {

UnknottingIndex operator+(UnknottingIndex a, UnknottingIndex b) {
  return {a.virtualizations + b.virtualizations, a.changes + b.changes};
}

std::string to_string(const UnknottingIndex& u) {
  return "(" + std::to_string(u.virtualizations) + "," + std::to_string(u.changes) + ")";
}

GaussDiagram::GaussDiagram(std::vector<Component> components, std::map<int, int> signs)
    : components_(std::move(components)), signs_(std::move(signs)) {
  index_and_validate();
}

void GaussDiagram::index_and_validate() {
  locs_.clear();
  std::map<int, int> seen_over, seen_under;
  std::size_t endpoints = 0;
  for (int c = 0; c < static_cast<int>(components_.size()); ++c) {
    for (int p = 0; p < static_cast<int>(components_[c].size()); ++p) {
      const Endpoint& e = components_[c][p];
      ++endpoints;
      if (!signs_.count(e.chord))
        throw std::invalid_argument("chord " + std::to_string(e.chord) + " has no sign");
      auto& count = e.passage == Passage::Over ? seen_over[e.chord] : seen_under[e.chord];
      if (++count > 1)
        throw std::invalid_argument("chord " + std::to_string(e.chord) +
                                    " repeats a passage");
      auto& locs = locs_[e.chord];
      (e.passage == Passage::Over ? locs.first : locs.second) = Loc{c, p};
    }
  }
  if (endpoints != 2 * signs_.size())
    throw std::invalid_argument("endpoint count does not match chord count");
  for (const auto& [id, s] : signs_) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("chord " + std::to_string(id) + " sign must be +1 or -1");
    if (!seen_over.count(id) || !seen_under.count(id))
      throw std::invalid_argument("chord " + std::to_string(id) +
                                  " must appear once over and once under");
  }
}

int GaussDiagram::sign(int id) const {
  auto it = signs_.find(id);
  if (it == signs_.end())
    throw std::invalid_argument("unknown chord " + std::to_string(id));
  return it->second;
}

std::vector<int> GaussDiagram::chord_ids() const {
  std::vector<int> ids;
  ids.reserve(signs_.size());
  for (const auto& [id, s] : signs_) ids.push_back(id);
  return ids;
}

Loc GaussDiagram::over_loc(int id) const {
  auto it = locs_.find(id);
  if (it == locs_.end()) throw std::invalid_argument("unknown chord " + std::to_string(id));
  return it->second.first;
}

Loc GaussDiagram::under_loc(int id) const {
  auto it = locs_.find(id);
  if (it == locs_.end()) throw std::invalid_argument("unknown chord " + std::to_string(id));
  return it->second.second;
}

std::pair<int, int> GaussDiagram::chord_components(int id) const {
  return {over_loc(id).comp, under_loc(id).comp};
}

bool GaussDiagram::is_self_chord(int id) const {
  auto [a, b] = chord_components(id);
  return a == b;
}

std::size_t GaussDiagram::self_chord_count(int comp) const {
  std::size_t n = 0;
  for (const auto& [id, s] : signs_) {
    auto [a, b] = chord_components(id);
    if (a == comp && b == comp) ++n;
  }
  return n;
}

std::vector<int> GaussDiagram::linking_chords(int comp_i, int comp_j) const {
  std::vector<int> ids;
  for (const auto& [id, s] : signs_) {
    auto [a, b] = chord_components(id);
    if ((a == comp_i && b == comp_j) || (a == comp_j && b == comp_i)) ids.push_back(id);
  }
  return ids;
}

GaussDiagram GaussDiagram::crossing_change(int id) const {
  if (!has_chord(id)) throw std::invalid_argument("unknown chord " + std::to_string(id));
  auto comps = components_;
  auto signs = signs_;
  for (auto& comp : comps)
    for (auto& e : comp)
      if (e.chord == id) e.passage = opposite(e.passage);
  signs[id] = -signs[id];
  return GaussDiagram(std::move(comps), std::move(signs));
}

GaussDiagram GaussDiagram::virtualize(int id) const {
  if (!has_chord(id)) throw std::invalid_argument("unknown chord " + std::to_string(id));
  std::vector<Component> comps;
  comps.reserve(components_.size());
  for (const auto& comp : components_) {
    Component out;
    out.reserve(comp.size());
    for (const auto& e : comp)
      if (e.chord != id) out.push_back(e);
    comps.push_back(std::move(out));
  }
  auto signs = signs_;
  signs.erase(id);
  return GaussDiagram(std::move(comps), std::move(signs));
}

FlatDiagram GaussDiagram::flatten() const {
  std::vector<FlatDiagram::Component> comps;
  comps.reserve(components_.size());
  for (const auto& comp : components_) {
    FlatDiagram::Component out;
    out.reserve(comp.size());
    for (const auto& e : comp) out.push_back(e.chord);
    comps.push_back(std::move(out));
  }
  return FlatDiagram(std::move(comps));
}

bool GaussDiagram::operator==(const GaussDiagram& o) const {
  return components_ == o.components_ && signs_ == o.signs_;
}

FlatDiagram::FlatDiagram(std::vector<Component> components)
    : components_(std::move(components)) {
  index_and_validate();
}

void FlatDiagram::index_and_validate() {
  chord_positions_.clear();
  std::map<int, int> seen;
  for (int c = 0; c < static_cast<int>(components_.size()); ++c) {
    for (int p = 0; p < static_cast<int>(components_[c].size()); ++p) {
      int id = components_[c][p];
      int n = ++seen[id];
      if (n > 2) throw std::invalid_argument("flat chord appears more than twice");
      auto& locs = chord_positions_[id];
      (n == 1 ? locs.first : locs.second) = Loc{c, p};
    }
  }
  for (const auto& [id, n] : seen)
    if (n != 2) throw std::invalid_argument("flat chord must appear exactly twice");
}

std::vector<int> FlatDiagram::chord_ids() const {
  std::vector<int> ids;
  ids.reserve(chord_positions_.size());
  for (const auto& [id, locs] : chord_positions_) ids.push_back(id);
  return ids;
}

std::pair<Loc, Loc> FlatDiagram::chord_locs(int id) const {
  auto it = chord_positions_.find(id);
  if (it == chord_positions_.end())
    throw std::invalid_argument("unknown flat chord " + std::to_string(id));
  return it->second;
}

FlatDiagram FlatDiagram::remove_chord(int id) const {
  if (!chord_positions_.count(id))
    throw std::invalid_argument("unknown flat chord " + std::to_string(id));
  std::vector<Component> comps;
  comps.reserve(components_.size());
  for (const auto& comp : components_) {
    Component out;
    for (int x : comp)
      if (x != id) out.push_back(x);
    comps.push_back(std::move(out));
  }
  return FlatDiagram(std::move(comps));
}

}  // namespace vk
