#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ktg/classify.hpp"
#include "ktg/coloring.hpp"
#include "ktg/identity.hpp"
#include "ktg/properties.hpp"
#include "ktg/structure.hpp"

namespace ktg {

enum class Format { text, lines };

inline const char* to_bool(bool b) { return b ? "true" : "false"; }

// Renders a carrier index; canonical structures print group coordinates.
using ElementFormatter = std::function<std::string(std::size_t)>;

inline ElementFormatter index_formatter() {
  return [](std::size_t i) { return std::to_string(i); };
}

inline ElementFormatter group_formatter(const AbelianGroup& g) {
  return [g](std::size_t i) { return g.format(g.element_at(i)); };
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string render_properties(const PropertyReport& r, Format fmt) {
  std::string out;
  for (const auto& e : r.entries) {
    if (fmt == Format::lines) {
      out += e.name + "=" + to_bool(e.value);
      if (e.sampled) out += " sampled=true";
    } else {
      out += pad(e.name, 28) + to_bool(e.value);
      if (e.sampled) out += "  (sampled)";
    }
    out += '\n';
  }
  return out;
}

inline std::string render_assignment(const Identity& id, const std::vector<std::size_t>& env,
                                     const ElementFormatter& fmt) {
  std::string s;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (i) s += ',';
    s += id.var_names[i];
    s += '=';
    s += fmt(env[i]);
  }
  return s;
}

inline std::string render_identity(const IdentityReport& r, const Identity& id, const ElementFormatter& fmt,
                                   Format format) {
  std::string out;
  if (format == Format::lines) {
    out = "identity=" + r.name + " holds=" + to_bool(r.holds) + " sampled=" + to_bool(r.sampled) +
          " tuples=" + std::to_string(r.tuples);
    if (r.counterexample) out += " counterexample=" + render_assignment(id, *r.counterexample, fmt);
  } else {
    out = pad(r.name, 18) + pad(r.holds ? "holds" : "FAILS", 7) + (r.sampled ? " (sampled)" : "");
    if (r.counterexample) out += "  at " + render_assignment(id, *r.counterexample, fmt);
  }
  return out + '\n';
}

inline std::string render_quadruple(const Quadruple& q, const ElementFormatter& fmt) {
  return "(" + fmt(q[0]) + "," + fmt(q[1]) + "," + fmt(q[2]) + "," + fmt(q[3]) + ")";
}

inline std::string render_enumeration(const ClassificationReport& r) {
  std::string out = "n=" + std::to_string(r.order) + " all=" + std::to_string(r.counts.all) +
                    " idempotent=" + std::to_string(r.counts.idempotent) +
                    " commutative=" + std::to_string(r.counts.commutative) + '\n';
  for (const auto& t : r.representatives) {
    out += "rep=" + t.to_string() + " idempotent=" + to_bool(t.is_idempotent()) +
           " commutative=" + to_bool(t.group().is_elementary_two()) + '\n';
  }
  return out;
}

inline std::string render_audit_row(const AuditRow& row) {
  return "n=" + std::to_string(row.n) + " paper=" + format_counts(row.reference) +
         " computed=" + format_counts(row.computed) + " match=" + to_bool(row.match);
}

inline std::string render_audit(const CountAudit& a, Format fmt) {
  std::string out;
  if (fmt == Format::lines) {
    for (const auto& row : a.rows) out += render_audit_row(row) + '\n';
    for (const auto& row : a.rows) {
      if (row.pairwise) {
        out += "recheck n=" + std::to_string(row.n) + " computed=" + format_counts(row.computed) +
               " pairwise=" + format_counts(*row.pairwise) + " agree=" + to_bool(*row.pairwise == row.computed) + '\n';
      }
    }
  } else {
    out += "   n  reference    computed    match\n";
    for (const auto& row : a.rows) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%4lld  %-11s  %-10s  %s", static_cast<long long>(row.n),
                    format_counts(row.reference).c_str(), format_counts(row.computed).c_str(),
                    row.match ? "yes" : "NO");
      out += buf;
      if (row.pairwise) out += "  (pairwise recheck " + format_counts(*row.pairwise) + ")";
      out += '\n';
    }
  }
  std::string mism;
  for (auto n : a.mismatches) mism += (mism.empty() ? "" : ",") + std::to_string(n);
  out += "mismatches=" + (mism.empty() ? std::string("none") : mism) + " routes_agree=" + to_bool(a.routes_agree) + '\n';
  return out;
}

inline std::string render_coloring(const std::string& diagram, const ColoringPair& p, const ColoringReport& r) {
  return "diagram=" + diagram + " flat=" + p.flat.to_string() + " virt=" + p.virt_string() +
         " count=" + std::to_string(r.count) + " method=" + std::string(to_string(r.method)) + '\n';
}

inline std::string render_coloring_list(const std::vector<std::size_t>& f, const AbelianGroup& g) {
  std::string s = "coloring=";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += g.format(g.element_at(f[i]));
  }
  return s + '\n';
}

}  // namespace ktg
