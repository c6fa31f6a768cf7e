#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ktg/abelian.hpp"
#include "ktg/error.hpp"

namespace ktg {

// Knot-theoretic ternary group T((A,+),a): [xyz] = x - y + z + a with
// a + a = 0, skew x -> x + a.
class CanonicalKT {
 public:
  CanonicalKT(AbelianGroup group, Element a) : group_(std::move(group)), a_(std::move(a)) {
    group_.require(a_);
    if (group_.scale(a_, 2) != group_.zero()) {
      throw std::invalid_argument("translation " + group_.format(a_) + " has order " +
                                  std::to_string(group_.element_order(a_)) +
                                  " in " + group_.to_string() + "; it must be at most 2");
    }
  }

  const AbelianGroup& group() const noexcept { return group_; }
  const Element& translation() const noexcept { return a_; }
  bool is_idempotent() const { return a_ == group_.zero(); }

  Element eval(const Element& x, const Element& y, const Element& z) const {
    return group_.add(group_.add(group_.sub(x, y), z), a_);
  }
  Element skew(const Element& x) const { return group_.add(x, a_); }

  // Index view over the lexicographic enumeration of the group.
  std::size_t size() const noexcept { return group_.size(); }
  std::size_t bracket(std::size_t x, std::size_t y, std::size_t z) const {
    return group_.index_of(eval(group_.element_at(x), group_.element_at(y), group_.element_at(z)));
  }
  std::size_t skew(std::size_t x) const { return group_.index_of(skew(group_.element_at(x))); }

  // "Z4xZ2@(0,1)", "Z4@2", "Z1@0".
  std::string to_string() const { return group_.to_string() + "@" + group_.format(a_); }

  friend bool operator==(const CanonicalKT& l, const CanonicalKT& r) {
    return l.group_ == r.group_ && l.a_ == r.a_;
  }

 private:
  AbelianGroup group_;
  Element a_;
};

inline CanonicalKT kt_make(const AbelianGroup& g, const Element& a) { return CanonicalKT(g, a); }
inline Element kt_eval(const CanonicalKT& t, const Element& x, const Element& y, const Element& z) {
  return t.eval(x, y, z);
}
inline Element kt_skew(const CanonicalKT& t, const Element& x) { return t.skew(x); }

// Ternary groupoid on {0..n-1} given by its Cayley cube. The skew of each
// element (unique z with [x z x] = x) is computed once at construction;
// elements without a unique skew are recorded as such.
class TernaryTable {
 public:
  static constexpr std::size_t kNoSkew = static_cast<std::size_t>(-1);
  static constexpr std::size_t kManySkews = static_cast<std::size_t>(-2);

  TernaryTable() = default;
  TernaryTable(std::size_t n, std::vector<std::size_t> cube) : n_(n), cube_(std::move(cube)) {
    if (n_ == 0) throw std::invalid_argument("ternary table needs a nonempty carrier");
    if (cube_.size() != n_ * n_ * n_) throw std::invalid_argument("cube must have n^3 entries");
    for (auto v : cube_) {
      if (v >= n_) throw std::invalid_argument("cube entry out of range");
    }
    skew_.assign(n_, kNoSkew);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t z = 0; z < n_; ++z) {
        if ((*this)(x, z, x) != x) continue;
        skew_[x] = skew_[x] == kNoSkew ? z : kManySkews;
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t operator()(std::size_t x, std::size_t y, std::size_t z) const {
    return cube_[(x * n_ + y) * n_ + z];
  }
  std::size_t bracket(std::size_t x, std::size_t y, std::size_t z) const { return (*this)(x, y, z); }
  const std::vector<std::size_t>& cube() const noexcept { return cube_; }

  bool has_skew(std::size_t x) const { return skew_[x] < n_; }
  bool has_total_skew() const {
    for (std::size_t x = 0; x < n_; ++x)
      if (!has_skew(x)) return false;
    return true;
  }
  // Throws StructureError when [x z x] = x has no or several solutions.
  std::size_t skew(std::size_t x) const {
    if (x >= n_) throw std::out_of_range("element out of range");
    if (skew_[x] == kNoSkew) throw StructureError("[x z x] = x has no solution for x = " + std::to_string(x));
    if (skew_[x] == kManySkews)
      throw StructureError("[x z x] = x has several solutions for x = " + std::to_string(x));
    return skew_[x];
  }

  friend bool operator==(const TernaryTable& a, const TernaryTable& b) {
    return a.n_ == b.n_ && a.cube_ == b.cube_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> cube_;
  std::vector<std::size_t> skew_;
};

inline std::size_t table_skew(const TernaryTable& t, std::size_t x) { return t.skew(x); }

// Default carrier bound for materializing canonical structures as tables.
inline constexpr std::size_t kDefaultTableBound = 64;

inline TernaryTable table_from_canonical(const CanonicalKT& t, std::size_t bound = kDefaultTableBound) {
  const std::size_t n = t.size();
  if (n > bound) {
    throw BudgetExceeded("structure of order " + std::to_string(n) + " exceeds the table bound " +
                         std::to_string(bound));
  }
  const auto& g = t.group();
  const auto elems = g.elements();
  std::vector<std::size_t> cube(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        cube[(x * n + y) * n + z] = g.index_of(t.eval(elems[x], elems[y], elems[z]));
  return TernaryTable(n, std::move(cube));
}

// ---------------------------------------------------------------------------
// Text formats.

// kt := groupspec "@" element; element is "(c1,...,ck)" against the
// written factors, or a bare integer for single-factor groups.
inline CanonicalKT parse_kt_spec(std::string_view text) {
  auto at = text.find('@');
  if (at == std::string_view::npos) {
    parse_written_moduli(text);
    throw ParseError(1, text.size() + 1, "expected '@' after group spec");
  }
  auto moduli = parse_written_moduli(text.substr(0, at));
  std::string_view el = text.substr(at + 1);
  const std::size_t col0 = at + 2;
  std::vector<Int> values;
  std::size_t pos = 0;
  if (el.empty()) throw ParseError(1, col0, "expected element after '@'");
  if (el[0] == '(') {
    pos = 1;
    if (pos < el.size() && el[pos] == ')') {
      ++pos;
    } else {
      while (true) {
        values.push_back(detail::parse_uint(el, pos, col0, 1));
        if (pos >= el.size()) throw ParseError(1, col0 + pos, "unterminated element, expected ')'");
        if (el[pos] == ')') {
          ++pos;
          break;
        }
        if (el[pos] != ',') throw ParseError(1, col0 + pos, "expected ',' or ')'");
        ++pos;
      }
    }
  } else {
    values.push_back(detail::parse_uint(el, pos, col0, 1));
  }
  if (pos != el.size()) throw ParseError(1, col0 + pos, "trailing characters after element");
  if (values.empty() && !(moduli.size() == 1 && moduli[0] == 1)) {
    throw ParseError(1, col0, "empty element");
  }
  if (values.empty()) values.push_back(0);
  if (values.size() != moduli.size()) {
    throw ParseError(1, col0,
                     "element has " + std::to_string(values.size()) + " coordinates, group has " +
                         std::to_string(moduli.size()) + " factors");
  }
  Element a;
  try {
    a = embed_written(moduli, values);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, col0, e.what());
  }
  AbelianGroup g = group_from_written(moduli);
  try {
    return CanonicalKT(g, a);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, col0, e.what());
  }
}

// Table file: "ternary n" followed by n^3 lines "i j k v".
inline void write_table(std::ostream& os, const TernaryTable& t) {
  const std::size_t n = t.size();
  os << "ternary " << n << '\n';
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) os << i << ' ' << j << ' ' << k << ' ' << t(i, j, k) << '\n';
}

namespace detail {

// Whitespace-separated tokens of one line with their 1-based columns.
struct Token {
  std::string text;
  std::size_t column;
};

inline std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t s = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(s, i - s), s + 1});
  }
  return out;
}

inline std::size_t token_to_index(const Token& tok, std::size_t line) {
  if (tok.text.empty() || tok.text.size() > 12) throw ParseError(line, tok.column, "bad integer '" + tok.text + "'");
  std::size_t v = 0;
  for (char c : tok.text) {
    if (c < '0' || c > '9') throw ParseError(line, tok.column, "bad integer '" + tok.text + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

inline TernaryTable read_table(std::istream& is) {
  std::string line;
  std::size_t lineno = 0, n = 0;
  bool header = false;
  std::vector<std::size_t> cube;
  std::vector<char> seen;
  while (std::getline(is, line)) {
    ++lineno;
    auto toks = detail::tokenize_line(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks[0].text != "ternary") throw ParseError(lineno, toks[0].column, "expected 'ternary'");
      if (toks.size() != 2) throw ParseError(lineno, toks[0].column, "expected 'ternary <n>'");
      n = detail::token_to_index(toks[1], lineno);
      if (n == 0 || n > 256) throw ParseError(lineno, toks[1].column, "carrier size must be in 1..256");
      cube.assign(n * n * n, 0);
      seen.assign(n * n * n, 0);
      header = true;
      continue;
    }
    if (toks.size() != 4) throw ParseError(lineno, toks[0].column, "expected 'i j k v'");
    std::array<std::size_t, 4> v{};
    for (std::size_t c = 0; c < 4; ++c) {
      v[c] = detail::token_to_index(toks[c], lineno);
      if (v[c] >= n) throw ParseError(lineno, toks[c].column, "value " + toks[c].text + " out of range");
    }
    std::size_t idx = (v[0] * n + v[1]) * n + v[2];
    if (seen[idx]) throw ParseError(lineno, toks[0].column, "duplicate entry");
    seen[idx] = 1;
    cube[idx] = v[3];
  }
  if (!header) throw ParseError(lineno + 1, 1, "missing 'ternary <n>' header");
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw ParseError(lineno + 1, 1,
                       "missing entry for " + std::to_string(i / (n * n)) + " " +
                           std::to_string(i / n % n) + " " + std::to_string(i % n));
    }
  }
  return TernaryTable(n, std::move(cube));
}

// Crossing relations of a one-sided surface diagram colored by
// T(Z2xZ2,(1,1)), kept as regression data: value = [x y z].
struct CrossingRelation {
  std::array<Int, 2> value, x, y, z;
};
inline constexpr std::array<CrossingRelation, 3> kRegressionRelations{{
    {{0, 0}, {0, 1}, {1, 0}, {0, 0}},
    {{1, 0}, {0, 1}, {0, 0}, {0, 0}},
    {{1, 0}, {0, 0}, {0, 1}, {0, 0}},
}};

}  // namespace ktg
