#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ktg/error.hpp"

namespace ktg {

using Int = std::int64_t;

// ---------------------------------------------------------------------------
// Small number theory helpers.

struct PrimePower {
  Int prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline Int ipow(Int base, int exp) {
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

// Trial division; the artifact never factors anything large.
inline std::vector<PrimePower> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

// Decomposes a prime power q = p^e; throws when q is not one.
inline PrimePower as_prime_power(Int q) {
  auto f = factorize(q);
  if (f.size() != 1) {
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
  }
  return f.front();
}

// ---------------------------------------------------------------------------

// An element of a finite abelian group: one residue per cyclic factor.
// Elements are plain values; the owning AbelianGroup validates membership.
struct Element {
  std::vector<Int> coords;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;
};

// Finite abelian group stored in primary decomposition: factors are prime
// powers sorted by prime ascending, then exponent descending. Two groups
// are isomorphic iff their factor lists are equal.
class AbelianGroup {
 public:
  // The trivial group Z1.
  AbelianGroup() = default;

  // Product of cyclic groups Z_m for each modulus (m >= 2). The factors
  // are split by CRT and sorted into the canonical order.
  explicit AbelianGroup(const std::vector<Int>& moduli) {
    for (Int m : moduli) {
      if (m < 2) {
        throw std::invalid_argument("cyclic factor modulus must be >= 2, got " +
                                    std::to_string(m));
      }
      for (auto [p, e] : factorize(m)) parts_.push_back({p, e});
    }
    std::stable_sort(parts_.begin(), parts_.end(), part_order);
    for (const auto& pp : parts_) factors_.push_back(ipow(pp.prime, pp.exponent));
    order_ = 1;
    for (Int q : factors_) order_ *= q;
  }

  static AbelianGroup cyclic(Int n) {
    return n == 1 ? AbelianGroup{} : AbelianGroup(std::vector<Int>{n});
  }

  const std::vector<Int>& factors() const noexcept { return factors_; }
  const std::vector<PrimePower>& prime_powers() const noexcept { return parts_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  Int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(order_); }

  // True iff 2x = 0 for every x (includes the trivial group).
  bool is_elementary_two() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](Int q) { return q == 2; });
  }

  bool contains(const Element& x) const {
    if (x.coords.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) return false;
    }
    return true;
  }

  void require(const Element& x) const {
    if (!contains(x)) {
      throw std::invalid_argument("element " + format(x) + " is not in " +
                                  to_string());
    }
  }

  Element zero() const { return Element{std::vector<Int>(factors_.size(), 0)}; }

  Element add(const Element& x, const Element& y) const {
    require(x);
    require(y);
    Element r = x;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      r.coords[i] = (x.coords[i] + y.coords[i]) % factors_[i];
    }
    return r;
  }

  Element negate(const Element& x) const {
    require(x);
    Element r = x;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      r.coords[i] = (factors_[i] - x.coords[i]) % factors_[i];
    }
    return r;
  }

  Element sub(const Element& x, const Element& y) const { return add(x, negate(y)); }

  Element scale(const Element& x, Int k) const {
    require(x);
    Element r = x;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      r.coords[i] = mod(mod(k, factors_[i]) * x.coords[i], factors_[i]);
    }
    return r;
  }

  // Least m >= 1 with m*x = 0.
  Int element_order(const Element& x) const {
    require(x);
    Int m = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Int qi = factors_[i] / std::gcd(factors_[i], x.coords[i]);
      m = std::lcm(m, qi);
    }
    return m;
  }

  // Lexicographic enumeration index (first coordinate most significant).
  std::size_t index_of(const Element& x) const {
    require(x);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      idx = idx * static_cast<std::size_t>(factors_[i]) +
            static_cast<std::size_t>(x.coords[i]);
    }
    return idx;
  }

  Element element_at(std::size_t idx) const {
    if (idx >= size()) throw std::out_of_range("element index out of range");
    Element x = zero();
    for (std::size_t i = factors_.size(); i-- > 0;) {
      auto q = static_cast<std::size_t>(factors_[i]);
      x.coords[i] = static_cast<Int>(idx % q);
      idx /= q;
    }
    return x;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(element_at(i));
    return out;
  }

  // All x with x + x = 0, lexicographic; 2^(number of even factors) of them.
  std::vector<Element> two_torsion() const {
    std::vector<Element> out{zero()};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] % 2 != 0) continue;
      std::size_t n = out.size();
      for (std::size_t j = 0; j < n; ++j) {
        Element y = out[j];
        y.coords[i] = factors_[i] / 2;
        out.push_back(std::move(y));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Divisibility chain d1 | d2 | ... with product |G|.
  std::vector<Int> invariant_factors() const {
    // Group exponents per prime, largest first; the k-th largest invariant
    // factor collects the k-th largest power of every prime.
    std::vector<std::vector<Int>> per_prime;
    Int last = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i].prime != last) {
        per_prime.emplace_back();
        last = parts_[i].prime;
      }
      per_prime.back().push_back(factors_[i]);
    }
    std::size_t len = 0;
    for (const auto& v : per_prime) len = std::max(len, v.size());
    std::vector<Int> out(len, 1);
    for (const auto& v : per_prime) {
      for (std::size_t k = 0; k < v.size(); ++k) out[len - 1 - k] *= v[k];
    }
    return out;
  }

  // "Z4xZ2", or "Z1" for the trivial group.
  std::string to_string() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += 'x';
      s += 'Z' + std::to_string(factors_[i]);
    }
    return s;
  }

  // "(1,0)"; a single-factor element prints bare, the trivial group's
  // only element prints as "0".
  std::string format(const Element& x) const {
    if (x.coords.empty()) return "0";
    if (x.coords.size() == 1) return std::to_string(x.coords[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(x.coords[i]);
    }
    return s + ")";
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  static bool part_order(const PrimePower& a, const PrimePower& b) {
    if (a.prime != b.prime) return a.prime < b.prime;
    return a.exponent > b.exponent;
  }

  std::vector<PrimePower> parts_;
  std::vector<Int> factors_;
  Int order_ = 1;
};

// ---------------------------------------------------------------------------
// Group-spec grammar: "Z1" | Zn ("x" Zn)*, n >= 2, no whitespace.

namespace detail {

inline Int parse_uint(std::string_view text, std::size_t& pos, std::size_t column0,
                      std::size_t line) {
  std::size_t start = pos;
  Int v = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    if (v > (Int{1} << 40)) throw ParseError(line, column0 + start, "integer too large");
    v = v * 10 + (text[pos] - '0');
    ++pos;
  }
  if (pos == start) {
    throw ParseError(line, column0 + pos, "expected digits");
  }
  return v;
}

}  // namespace detail

// Moduli exactly as written, e.g. "Z2xZ4" -> {2,4}; "Z1" -> {1}.
inline std::vector<Int> parse_written_moduli(std::string_view text, std::size_t line = 1,
                                             std::size_t column0 = 1) {
  std::vector<Int> moduli;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError(line, column0, "empty group spec");
  while (true) {
    if (pos >= text.size() || text[pos] != 'Z') {
      throw ParseError(line, column0 + pos, "expected 'Z'");
    }
    ++pos;
    std::size_t num_col = pos;
    Int n = detail::parse_uint(text, pos, column0, line);
    if (n == 0) throw ParseError(line, column0 + num_col, "modulus must be positive");
    moduli.push_back(n);
    if (pos == text.size()) break;
    if (text[pos] != 'x') {
      throw ParseError(line, column0 + pos,
                       std::string("unexpected character '") + text[pos] + "'");
    }
    ++pos;
  }
  if (moduli.size() == 1 && moduli[0] == 1) return moduli;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 2) {
      throw ParseError(line, column0, "Z1 is only allowed as the whole group spec");
    }
  }
  return moduli;
}

inline AbelianGroup group_from_written(const std::vector<Int>& moduli) {
  if (moduli.size() == 1 && moduli[0] == 1) return AbelianGroup{};
  return AbelianGroup(moduli);
}

inline AbelianGroup parse_group_spec(std::string_view text) {
  return group_from_written(parse_written_moduli(text));
}

// Maps residues given against the written moduli (e.g. Z2xZ4 with (1,2))
// onto the normalized coordinates of the same group.
inline Element embed_written(const std::vector<Int>& moduli, const std::vector<Int>& values) {
  if (moduli.size() != values.size()) {
    throw std::invalid_argument("expected " + std::to_string(moduli.size()) +
                                " coordinates, got " + std::to_string(values.size()));
  }
  AbelianGroup g = group_from_written(moduli);
  if (g.rank() == 0) {
    if (!values.empty() && values[0] != 0) {
      throw std::invalid_argument("the trivial group has only the element 0");
    }
    return g.zero();
  }
  // Slots in the same stable order the constructor uses.
  struct Slot {
    PrimePower pp;
    std::size_t written;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (values[i] < 0 || values[i] >= moduli[i]) {
      throw std::invalid_argument("coordinate " + std::to_string(values[i]) +
                                  " out of range for Z" + std::to_string(moduli[i]));
    }
    for (auto pp : factorize(moduli[i])) slots.push_back({pp, i});
  }
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.pp.prime != b.pp.prime) return a.pp.prime < b.pp.prime;
    return a.pp.exponent > b.pp.exponent;
  });
  Element x = g.zero();
  for (std::size_t k = 0; k < slots.size(); ++k) {
    x.coords[k] = values[slots[k].written] % ipow(slots[k].pp.prime, slots[k].pp.exponent);
  }
  return x;
}

// All isomorphism types of abelian groups of order n: for every prime the
// partitions of its exponent in reverse-lexicographic order, combined with
// the smallest prime varying slowest.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline std::vector<AbelianGroup> abelian_group_types(Int n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  std::vector<std::vector<Int>> acc{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<Int>> next;
    for (const auto& prefix : acc) {
      for (const auto& part : partitions(e)) {
        auto v = prefix;
        for (int k : part) v.push_back(ipow(p, k));
        next.push_back(std::move(v));
      }
    }
    acc = std::move(next);
  }
  std::vector<AbelianGroup> out;
  for (const auto& v : acc) out.emplace_back(v);
  return out;
}

}  // namespace ktg
