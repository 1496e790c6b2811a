#pragma once

// Structured-text problem files and transform-table files.
//
// Problem format, one directive per line ('#' starts a comment):
//
//   scalar rational            optional; "rational" (default) or "float"
//   ground a,b,c               required once, before members/weights;
//                              comma-separated labels define bit order
//   member KEY                 one family member; KEY = comma-joined labels,
//                              empty KEY = the empty set
//   weight KEY = VALUE         rational "p/q" (or integer), or a float
//
// Subset keys are canonical when their labels are lexicographically sorted;
// the parser accepts any order but rejects duplicate or unknown labels.
//
// Table format (output of `transform`, input of `invert`): one row per
// subset, "KEY<TAB>VALUE", nothing else.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/ground.hpp"
#include "semilat/rational.hpp"
#include "semilat/transform.hpp"

namespace semilat {

enum class ScalarKind { rational, float64 };

namespace io_detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '#' || c == '=')
      return false;
  return true;
}

}  // namespace io_detail

/// Canonical subset key: member labels sorted lexicographically, joined by
/// ','. The empty set's key is the empty string.
inline std::string subset_key(const GroundSet& ground, const Subset& a) {
  if (!ground.labeled())
    throw BadArguments("subset keys need a labeled ground set");
  std::vector<std::string> labels;
  for (int i = 0; i < ground.size(); ++i)
    if (a.contains(i)) labels.push_back(ground.label(i));
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i];
  }
  return out;
}

/// Parses a subset key against a labeled ground set. Accepts labels in any
/// order; rejects unknown and duplicate labels.
inline Subset parse_subset_key(const GroundSet& ground, std::string_view key) {
  key = io_detail::trim(key);
  if (key.empty()) return ground.empty_set();
  Mask m = 0;
  for (const std::string& raw : io_detail::split(key, ',')) {
    std::string_view label = io_detail::trim(raw);
    int idx = ground.index_of(label);
    if (idx < 0)
      throw ParseError("unknown label '" + std::string(label) + "' in subset key '" +
                       std::string(key) + "'");
    Mask bit = Mask{1} << idx;
    if (m & bit)
      throw ParseError("duplicate label '" + std::string(label) + "' in subset key '" +
                       std::string(key) + "'");
    m |= bit;
  }
  return ground.subset(m);
}

inline std::string format_scalar(const Rational& r) { return r.to_string(); }
inline std::string format_scalar(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

inline Rational parse_rational_value(std::string_view text) {
  try {
    return Rational::parse(io_detail::trim(text));
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

inline double parse_float_value(std::string_view text) {
  std::string s(io_detail::trim(text));
  if (s.empty()) throw ParseError("empty number");
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v))
    throw ParseError("cannot parse float value '" + s + "'");
  return v;
}

/// A parsed problem: labeled ground, validated family, and one weight per
/// member in the file's scalar mode.
struct ProblemFile {
  GroundSet ground;
  SetFamily family;
  ScalarKind kind;
  std::vector<Rational> rational_values;  // aligned with family, rational mode
  std::vector<double> float_values;       // aligned with family, float mode

  WeightFn<Rational> rational_weights() const {
    if (kind != ScalarKind::rational)
      throw BadArguments("problem is not in rational mode");
    return WeightFn<Rational>(family, rational_values);
  }
  WeightFn<double> float_weights() const {
    if (kind != ScalarKind::float64)
      throw BadArguments("problem is not in float mode");
    return WeightFn<double>(family, float_values);
  }
};

/// Reads a problem file. With apply_closure the declared members are closed
/// under union and members without an explicit weight default to zero;
/// without it the declared members must already form a union-closed family
/// containing the empty set, each with exactly one weight line.
inline ProblemFile load_problem(std::istream& in, bool apply_closure = false) {
  std::optional<GroundSet> ground;
  ScalarKind kind = ScalarKind::rational;
  bool kind_seen = false;
  std::vector<std::pair<int, std::string>> member_lines;  // (line, key)
  std::vector<std::pair<int, std::pair<std::string, std::string>>> weight_lines;

  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    if (std::size_t hash = body.find('#'); hash != std::string_view::npos)
      body = body.substr(0, hash);
    body = io_detail::trim(body);
    if (body.empty()) continue;

    std::size_t space = body.find_first_of(" \t");
    std::string_view directive = body.substr(0, space);
    std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : body.substr(space + 1);

    if (directive == "scalar") {
      if (kind_seen) fail("repeated scalar directive");
      kind_seen = true;
      std::string_view k = io_detail::trim(rest);
      if (k == "rational")
        kind = ScalarKind::rational;
      else if (k == "float")
        kind = ScalarKind::float64;
      else
        fail("scalar must be 'rational' or 'float'");
    } else if (directive == "ground") {
      if (ground) fail("repeated ground directive");
      std::vector<std::string> labels;
      for (const std::string& raw : io_detail::split(io_detail::trim(rest), ',')) {
        std::string label(io_detail::trim(raw));
        if (!io_detail::valid_label(label))
          fail("invalid element label '" + label + "'");
        labels.push_back(std::move(label));
      }
      try {
        ground.emplace(std::move(labels));
      } catch (const InvalidGround& e) {
        fail(e.what());
      }
    } else if (directive == "member") {
      if (!ground) fail("member before ground");
      member_lines.emplace_back(lineno, std::string(io_detail::trim(rest)));
    } else if (directive == "weight") {
      if (!ground) fail("weight before ground");
      std::size_t eq = rest.find('=');
      if (eq == std::string_view::npos) fail("weight line needs KEY = VALUE");
      weight_lines.emplace_back(
          lineno, std::make_pair(std::string(io_detail::trim(rest.substr(0, eq))),
                                 std::string(io_detail::trim(rest.substr(eq + 1)))));
    } else {
      fail("unknown directive '" + std::string(directive) + "'");
    }
  }

  if (!ground) throw ParseError("missing ground directive");

  std::vector<Subset> declared;
  std::unordered_set<Mask> declared_masks;
  for (const auto& [ln, key] : member_lines) {
    lineno = ln;
    Subset s = ground->empty_set();
    try {
      s = parse_subset_key(*ground, key);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (!declared_masks.insert(s.mask()).second) fail("duplicate member '" + key + "'");
    declared.push_back(s);
  }

  std::optional<SetFamily> family;
  if (apply_closure) {
    family.emplace(union_closure(*ground, declared));
  } else {
    lineno = 0;
    if (!is_semilattice(*ground, declared))
      throw ParseError(
          "declared members are not a union-closed family containing the empty set "
          "(use --close to take the union closure)");
    family.emplace(*ground, std::move(declared));
  }

  std::vector<Rational> rat(static_cast<std::size_t>(family->size()));
  std::vector<double> dbl(static_cast<std::size_t>(family->size()), 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(family->size()), false);

  for (const auto& [ln, kv] : weight_lines) {
    lineno = ln;
    Subset s = ground->empty_set();
    try {
      s = parse_subset_key(*ground, kv.first);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    int idx = family->index_of(s.mask());
    if (idx < 0) fail("weight for non-member '" + kv.first + "'");
    if (seen[static_cast<std::size_t>(idx)]) fail("duplicate weight for '" + kv.first + "'");
    seen[static_cast<std::size_t>(idx)] = true;
    try {
      if (kind == ScalarKind::rational)
        rat[static_cast<std::size_t>(idx)] = parse_rational_value(kv.second);
      else
        dbl[static_cast<std::size_t>(idx)] = parse_float_value(kv.second);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  if (!apply_closure) {
    for (int i = 0; i < family->size(); ++i)
      if (!seen[static_cast<std::size_t>(i)]) {
        lineno = 0;
        throw ParseError("missing weight for member '" +
                         subset_key(*ground, family->member(i)) + "'");
      }
  }

  return ProblemFile{*ground, std::move(*family), kind, std::move(rat), std::move(dbl)};
}

/// One transform-table row.
template <class Scalar>
void write_table_row(std::ostream& out, const GroundSet& ground, const Subset& x,
                     const Scalar& value) {
  out << subset_key(ground, x) << '\t' << format_scalar(value) << '\n';
}

/// A transform table read back from rows, with the ground inferred from the
/// labels appearing in the keys (sorted lexicographically).
struct TableFile {
  GroundSet ground;
  std::unordered_map<std::string, std::string> rows;  // canonical key -> raw value

  bool has(const std::string& key) const { return rows.count(key) != 0; }
};

inline TableFile read_table(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::unordered_set<std::string> labels_seen;
  std::vector<std::string> labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": table row needs KEY<TAB>VALUE");
    std::string key = line.substr(0, tab);
    std::string value = line.substr(tab + 1);
    if (!key.empty()) {
      for (const std::string& part : io_detail::split(key, ',')) {
        std::string label(io_detail::trim(part));
        if (!io_detail::valid_label(label))
          throw ParseError("line " + std::to_string(lineno) + ": invalid label '" +
                           label + "'");
        if (labels_seen.insert(label).second) labels.push_back(label);
      }
    }
    raw.emplace_back(std::move(key), std::move(value));
  }
  if (labels.empty())
    throw ParseError("table defines no labels; cannot infer the ground set");
  std::sort(labels.begin(), labels.end());

  GroundSet ground(labels);
  TableFile table{std::move(ground), {}};
  for (auto& [key, value] : raw) {
    Subset s = parse_subset_key(table.ground, key);
    std::string canonical = subset_key(table.ground, s);
    if (!table.rows.emplace(std::move(canonical), std::move(value)).second)
      throw ParseError("duplicate table row for key '" + key + "'");
  }
  return table;
}

}  // namespace semilat
