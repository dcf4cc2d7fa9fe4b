#pragma once

#include <stdexcept>
#include <string>

#include "vk/diagram.hpp"

namespace vk {

struct ParseError : std::runtime_error {
  std::size_t position;  // byte offset into the input
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
};

// Grammar: component := token+ | "0" ; token := ("O"|"U") integer ("+"|"-"|U+2212) ;
// components joined by "|"; whitespace ignored. "0" denotes a chordless circle;
// the empty string is the empty diagram. Both sign mentions of a chord must agree.
GaussDiagram parse_gauss_code(const std::string& text);

// Raw code: emits components/rotations/ids exactly as stored. parse(raw(d)) == d.
std::string raw_code(const GaussDiagram& d);

// Canonical code: each component rotated so its emitted token string is
// lexicographically least, components ordered to minimize the full string,
// chord ids renumbered 1..k in first-appearance order.
std::string canonical_code(const GaussDiagram& d);

// Diagram rebuilt from the canonical code (renumbered representative).
GaussDiagram canonical_form(const GaussDiagram& d);

inline std::string serialize(const GaussDiagram& d) { return canonical_code(d); }

bool isomorphic(const GaussDiagram& a, const GaussDiagram& b);

std::string flat_canonical_code(const FlatDiagram& d);
bool flat_isomorphic(const FlatDiagram& a, const FlatDiagram& b);

}  // namespace vk
