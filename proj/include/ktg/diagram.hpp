#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ktg/error.hpp"
#include "ktg/ternary.hpp"

namespace ktg {

enum class CrossingKind { flat, virt };

inline std::string_view to_string(CrossingKind k) { return k == CrossingKind::flat ? "flat" : "virtual"; }

// Four region indices in cyclic order around the crossing. Corner 0 is the
// constrained one: f(c0) = [f(c1) f(c2) f(c3)].
struct Crossing {
  CrossingKind kind = CrossingKind::flat;
  std::array<std::size_t, 4> corners{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Flat (virtual) link diagram reduced to region incidence.
struct Diagram {
  std::string name;
  std::size_t regions = 0;
  std::vector<Crossing> crossings;

  bool has_virtual() const {
    for (const auto& c : crossings)
      if (c.kind == CrossingKind::virt) return true;
    return false;
  }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Empty iff the diagram is well formed.
inline std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> findings;
  if (d.regions == 0) findings.push_back("diagram has no regions");
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (d.crossings[i].corners[k] >= d.regions) {
        findings.push_back("crossing " + std::to_string(i) + " corner " + std::to_string(k) + ": region " +
                           std::to_string(d.crossings[i].corners[k]) + " out of range (regions " +
                           std::to_string(d.regions) + ")");
      }
    }
  }
  return findings;
}

// Grammar (line oriented, '#' starts a comment, blank runs separate
// fields):
//   regions <R>
//   crossing <flat|virtual> <c0> <c1> <c2> <c3>
inline Diagram parse_diagram(std::istream& is, std::string name = "") {
  Diagram d;
  d.name = std::move(name);
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    auto toks = detail::tokenize_line(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks[0].text != "regions") throw ParseError(lineno, toks[0].column, "expected 'regions', got '" + toks[0].text + "'");
      if (toks.size() != 2) {
        throw ParseError(lineno, toks.size() < 2 ? line.size() + 1 : toks[2].column, "expected 'regions <R>'");
      }
      d.regions = detail::token_to_index(toks[1], lineno);
      if (d.regions == 0) throw ParseError(lineno, toks[1].column, "region count must be positive");
      header = true;
      continue;
    }
    if (toks[0].text != "crossing") throw ParseError(lineno, toks[0].column, "expected 'crossing', got '" + toks[0].text + "'");
    if (toks.size() < 2) throw ParseError(lineno, line.size() + 1, "expected crossing kind");
    Crossing c;
    if (toks[1].text == "flat") {
      c.kind = CrossingKind::flat;
    } else if (toks[1].text == "virtual") {
      c.kind = CrossingKind::virt;
    } else {
      throw ParseError(lineno, toks[1].column, "bad crossing kind '" + toks[1].text + "'");
    }
    if (toks.size() != 6) {
      throw ParseError(lineno, toks.size() < 6 ? line.size() + 1 : toks[6].column, "expected four corner regions");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      c.corners[k] = detail::token_to_index(toks[2 + k], lineno);
      if (c.corners[k] >= d.regions) {
        throw ParseError(lineno, toks[2 + k].column,
                         "region " + toks[2 + k].text + " out of range (regions " + std::to_string(d.regions) + ")");
      }
    }
    d.crossings.push_back(c);
  }
  if (!header) throw ParseError(lineno + 1, 1, "missing 'regions <R>' header");
  return d;
}

inline Diagram parse_diagram(std::string_view text, std::string name = "") {
  std::istringstream is{std::string(text)};
  return parse_diagram(is, std::move(name));
}

inline std::string format_diagram(const Diagram& d) {
  std::string s = "regions " + std::to_string(d.regions) + "\n";
  for (const auto& c : d.crossings) {
    s += "crossing ";
    s += to_string(c.kind);
    for (auto r : c.corners) s += " " + std::to_string(r);
    s += "\n";
  }
  return s;
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"unlink2", "loop2", "kishino", "hopf_fv"};
  return names;
}

inline Diagram builtin(std::string_view name) {
  using K = CrossingKind;
  if (name == "unlink2") return Diagram{"unlink2", 3, {}};
  if (name == "loop2") return Diagram{"loop2", 2, {}};
  if (name == "kishino") {
    Crossing c{K::flat, {0, 1, 1, 1}};
    return Diagram{"kishino", 2, {c, c, c, c}};
  }
  if (name == "hopf_fv") {
    return Diagram{"hopf_fv", 4, {Crossing{K::flat, {0, 1, 2, 3}}, Crossing{K::virt, {0, 1, 2, 3}}}};
  }
  throw std::invalid_argument("unknown builtin diagram '" + std::string(name) + "'");
}

}  // namespace ktg
