#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ktg/error.hpp"
#include "ktg/ternary.hpp"

namespace ktg {

// Anything with a finite carrier {0..size()-1}, a bracket and a skew.
template <class S>
concept TernaryStructure = requires(const S& s, std::size_t i) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.bracket(i, i, i) } -> std::convertible_to<std::size_t>;
  { s.skew(i) } -> std::convertible_to<std::size_t>;
};

// Term over variables, the ternary bracket, and the skew.
struct Term {
  enum class Kind { var, bracket, skew };
  Kind kind = Kind::var;
  std::size_t var = 0;
  std::vector<Term> args;

  static Term variable(std::size_t i) { return Term{Kind::var, i, {}}; }
  static Term br(Term x, Term y, Term z) {
    return Term{Kind::bracket, 0, {std::move(x), std::move(y), std::move(z)}};
  }
  static Term skew_of(Term x) { return Term{Kind::skew, 0, {std::move(x)}}; }

  bool uses_skew() const {
    if (kind == Kind::skew) return true;
    return std::any_of(args.begin(), args.end(), [](const Term& t) { return t.uses_skew(); });
  }

  std::size_t max_var() const {
    std::size_t m = kind == Kind::var ? var + 1 : 0;
    for (const auto& a : args) m = std::max(m, a.max_var());
    return m;
  }

  friend bool operator==(const Term&, const Term&) = default;
};

// Postfix form of a Term for fast repeated evaluation.
class CompiledTerm {
 public:
  explicit CompiledTerm(const Term& t) { emit(t); }

  template <TernaryStructure S>
  std::size_t eval(const S& s, const std::size_t* env) const {
    std::array<std::size_t, 64> stack{};
    std::size_t sp = 0;
    for (auto code : code_) {
      if (code >= kVarBase) {
        stack[sp++] = env[code - kVarBase];
      } else if (code == kBracket) {
        std::size_t z = stack[--sp], y = stack[--sp], x = stack[--sp];
        stack[sp++] = s.bracket(x, y, z);
      } else {
        stack[sp - 1] = s.skew(stack[sp - 1]);
      }
    }
    return stack[0];
  }

 private:
  static constexpr std::uint32_t kBracket = 0, kSkew = 1, kVarBase = 2;

  void emit(const Term& t) {
    switch (t.kind) {
      case Term::Kind::var:
        code_.push_back(kVarBase + static_cast<std::uint32_t>(t.var));
        break;
      case Term::Kind::bracket:
        for (const auto& a : t.args) emit(a);
        code_.push_back(kBracket);
        break;
      case Term::Kind::skew:
        emit(t.args[0]);
        code_.push_back(kSkew);
        break;
    }
    if (code_.size() > 60) throw std::invalid_argument("term too deep");
  }

  std::vector<std::uint32_t> code_;
};

template <TernaryStructure S>
std::size_t eval_term(const S& s, const Term& t, const std::vector<std::size_t>& env) {
  if (env.size() < t.max_var()) throw std::invalid_argument("environment does not cover the term's variables");
  return CompiledTerm(t).eval(s, env.data());
}

// A chain of terms that must all be equal: "lhs = rhs" or "t1 = t2 = t3".
struct Identity {
  std::string name;
  std::string text;
  std::vector<Term> sides;
  std::vector<char> var_names;  // letter of each variable, by index

  std::size_t nvars() const { return var_names.size(); }
  const Term& lhs() const { return sides.front(); }
  const Term& rhs() const { return sides.back(); }
  bool uses_skew() const {
    return std::any_of(sides.begin(), sides.end(), [](const Term& t) { return t.uses_skew(); });
  }
};

// Grammar: identity := term ("=" term)+ ; term := letter | "~" term |
// "[" term term term "]". Letters a..z are variables, numbered by first
// appearance. Blanks are ignored.
inline Identity parse_identity(std::string name, std::string_view text) {
  Identity id{std::move(name), std::string(text), {}, {}};
  std::map<char, std::size_t> vars;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto rec = [&](auto&& self) -> Term {
    skip();
    if (pos >= text.size()) throw ParseError(1, pos + 1, "unexpected end of identity");
    char c = text[pos];
    if (c == '~') {
      ++pos;
      return Term::skew_of(self(self));
    }
    if (c == '[') {
      ++pos;
      Term x = self(self), y = self(self), z = self(self);
      skip();
      if (pos >= text.size() || text[pos] != ']') throw ParseError(1, pos + 1, "expected ']'");
      ++pos;
      return Term::br(std::move(x), std::move(y), std::move(z));
    }
    if (c >= 'a' && c <= 'z') {
      ++pos;
      auto [it, fresh] = vars.emplace(c, vars.size());
      if (fresh) id.var_names.push_back(c);
      return Term::variable(it->second);
    }
    throw ParseError(1, pos + 1, std::string("unexpected character '") + c + "'");
  };
  id.sides.push_back(rec(rec));
  skip();
  while (pos < text.size()) {
    if (text[pos] != '=') throw ParseError(1, pos + 1, "expected '='");
    ++pos;
    id.sides.push_back(rec(rec));
    skip();
  }
  if (id.sides.size() < 2) throw ParseError(1, pos + 1, "identity needs at least two sides");
  return id;
}

// The built-in identity catalog, in fixed order.
inline const std::vector<Identity>& identity_catalog() {
  static const std::vector<Identity> catalog = [] {
    const std::pair<const char*, const char*> entries[] = {
        {"A3L", "[[abc]cd]=[[ab[bcd]][bcd]d]"},
        {"A3R", "[ab[bcd]]=[a[abc][[abc]cd]]"},
        {"assoc12", "[[abc]de]=[a[bcd]e]"},
        {"assoc23", "[a[bcd]e]=[ab[cde]]"},
        {"assoc_full", "[[abc]de]=[a[bcd]e]=[ab[cde]]"},
        {"idempotent", "[aaa]=a"},
        {"semicommutative", "[abc]=[cba]"},
        {"commutative", "[abc]=[bac]=[acb]=[cba]"},
        {"malcev", "[abb]=[bba]=a"},
        {"entropic", "[[abc][def][ghi]]=[[adg][beh][cfi]]"},
        {"sk1", "[~aaa]=[a~aa]=[aa~a]=a"},
        {"sk2", "[ba~a]=[b~aa]=[a~ab]=[~aab]=b"},
        {"sk3", "~[abc]=[~c~b~a]"},
        {"sk4", "~~a=a"},
        {"eq22", "[abb]=~a=[bba]"},
        {"eq4", "[~abc]=[a~bc]=[ab~c]"},
        {"eq23", "[abb]=~a"},
        {"a1_exchange", "[[abc]de]=[[adc]be]"},
        {"a2_exchange", "[a[bcd]e]=[a[bed]c]"},
        {"a3_neutral", "[~aax]=[xa~a]=x"},
        {"dud80", "[ab~a]=b"},
        {"all_neutral", "[eea]=[eae]=[aee]=a"},
        {"malcev_1M", "[[xyz]zt]=[xyt]"},
        {"malcev_2M", "[xy[yzt]]=[xzt]"},
    };
    std::vector<Identity> out;
    for (auto [name, text] : entries) out.push_back(parse_identity(name, text));
    return out;
  }();
  return catalog;
}

inline const Identity& catalog_identity(std::string_view name) {
  for (const auto& id : identity_catalog())
    if (id.name == name) return id;
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

// How check_identity covers the n^nvars assignments.
struct CheckMode {
  enum class Kind { exhaustive, sampled, automatic };
  Kind kind = Kind::automatic;
  std::uint64_t budget = 10'000'000;  // max tuples for exhaustive scans
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;

  static CheckMode exhaustive(std::uint64_t budget = 10'000'000) {
    return {Kind::exhaustive, budget, 0, 0};
  }
  static CheckMode sampled(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::sampled, 0, samples, seed};
  }
  // Exhaustive within budget, otherwise seeded sampling.
  static CheckMode automatic(std::uint64_t budget = 10'000'000, std::uint64_t samples = 100'000,
                             std::uint64_t seed = 1) {
    return {Kind::automatic, budget, samples, seed};
  }
};

struct IdentityReport {
  std::string name;
  bool holds = true;
  bool sampled = false;
  std::uint64_t tuples = 0;
  std::optional<std::vector<std::size_t>> counterexample;
  std::pair<std::size_t, std::size_t> failing_sides{0, 0};
};

// n^k, saturating at UINT64_MAX.
inline std::uint64_t tuple_count(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && r > UINT64_MAX / n) return UINT64_MAX;
    r *= n;
  }
  return r;
}

namespace detail {

template <TernaryStructure S>
bool sides_agree(const S& s, const std::vector<CompiledTerm>& sides, const std::size_t* env,
                 std::pair<std::size_t, std::size_t>& bad) {
  std::size_t first = sides[0].eval(s, env);
  for (std::size_t k = 1; k < sides.size(); ++k) {
    if (sides[k].eval(s, env) != first) {
      bad = {0, k};
      return false;
    }
  }
  return true;
}

template <class S>
bool skew_available(const S& s) {
  if constexpr (requires { s.has_total_skew(); }) {
    return s.has_total_skew();
  } else {
    return true;
  }
}

}  // namespace detail

// Exhaustive scans run in lexicographic order of the assignment (first
// variable most significant), so the reported counterexample is the least.
template <TernaryStructure S>
IdentityReport check_identity(const S& s, const Identity& id, CheckMode mode = CheckMode::automatic()) {
  IdentityReport r;
  r.name = id.name;
  if (id.uses_skew() && !detail::skew_available(s)) {
    throw StructureError("identity " + id.name + " needs the skew, which is not defined on this structure");
  }
  const std::size_t n = s.size(), k = id.nvars();
  std::vector<CompiledTerm> sides;
  for (const auto& t : id.sides) sides.emplace_back(t);
  const std::uint64_t total = tuple_count(n, k);

  bool exhaustive = mode.kind == CheckMode::Kind::exhaustive ||
                    (mode.kind == CheckMode::Kind::automatic && total <= mode.budget);
  if (mode.kind == CheckMode::Kind::exhaustive && total > mode.budget) {
    throw BudgetExceeded("identity " + id.name + " needs " + std::to_string(n) + "^" + std::to_string(k) +
                         " assignments, over the budget of " + std::to_string(mode.budget));
  }

  std::vector<std::size_t> env(k, 0);
  if (exhaustive) {
    for (std::uint64_t t = 0; t < total; ++t) {
      ++r.tuples;
      if (!detail::sides_agree(s, sides, env.data(), r.failing_sides)) {
        r.holds = false;
        r.counterexample = env;
        return r;
      }
      for (std::size_t i = k; i-- > 0;) {
        if (++env[i] < n) break;
        env[i] = 0;
      }
    }
    return r;
  }

  r.sampled = true;
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t t = 0; t < mode.samples; ++t) {
    for (auto& v : env) v = pick(rng);
    ++r.tuples;
    if (!detail::sides_agree(s, sides, env.data(), r.failing_sides)) {
      r.holds = false;
      r.counterexample = env;
      return r;
    }
  }
  return r;
}

inline IdentityReport check_identity(const CanonicalKT& t, const Identity& id,
                                     CheckMode mode = CheckMode::automatic()) {
  return check_identity(table_from_canonical(t), id, mode);
}

}  // namespace ktg
