#pragma once

// JSON encodings and the comma-separated argument syntax used by the CLI.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tableau.hpp"

namespace kschur {

using json = nlohmann::json;

inline std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw Error("invalid integer list: \"" + std::string(s) + "\"");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline Partition parse_partition(std::string_view s) { return Partition(parse_int_list(s)); }
inline Composition parse_composition(std::string_view s) { return Composition(parse_int_list(s)); }

inline json to_json(const Partition& p) { return json(p.parts()); }
inline json to_json(const Composition& c) { return json(c.parts()); }
inline json to_json(const Cell& c) { return json::array({c.row, c.col}); }
inline json to_json(const SkewShape& s) { return {{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}}; }

namespace detail {

inline std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be a JSON array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(std::string(what) + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline Partition partition_from_json(const json& j) { return Partition(detail::int_array(j, "partition")); }
inline Composition composition_from_json(const json& j) { return Composition(detail::int_array(j, "composition")); }

inline Cell cell_from_json(const json& j) {
  const auto v = detail::int_array(j, "cell");
  if (v.size() != 2) throw Error("cell must be [row, col]");
  return Cell{v[0], v[1]};
}

inline SkewShape skew_from_json(const json& j) {
  return SkewShape(partition_from_json(detail::field(j, "outer")), partition_from_json(detail::field(j, "inner")));
}

/// "outer" and "inner" are the core shapes; "rows" lists the skew cells of
/// each row, bottom row first.
inline json to_json(const KTableau& t) {
  json j{{"k", t.k}, {"outer", to_json(t.outer)}, {"inner", to_json(t.inner)}, {"rows", t.rows}};
  if (t.mode == Mode::transposed) j["transposed"] = true;
  return j;
}

inline KTableau tableau_from_json(const json& j) {
  const json& kj = detail::field(j, "k");
  if (!kj.is_number_integer() || kj.get<int>() < 1) throw Error("k must be a positive integer");
  KTableau t{kj.get<int>(), partition_from_json(detail::field(j, "outer")),
             j.contains("inner") ? partition_from_json(j.at("inner")) : Partition{}, {}, Mode::column_strict};
  if (j.contains("transposed")) {
    if (!j.at("transposed").is_boolean()) throw Error("\"transposed\" must be a boolean");
    if (j.at("transposed").get<bool>()) t.mode = Mode::transposed;
  }
  const json& rows = detail::field(j, "rows");
  if (!rows.is_array()) throw Error("rows must be a JSON array");
  for (const auto& r : rows) t.rows.push_back(detail::int_array(r, "row"));
  if (!t.outer.contains(t.inner)) throw Error("inner shape not contained in outer shape");
  if (t.rows.size() != static_cast<std::size_t>(t.outer.length())) throw Error("row count does not match shape");
  for (int r = 1; r <= t.outer.length(); ++r)
    if (t.rows[static_cast<std::size_t>(r - 1)].size() != static_cast<std::size_t>(t.outer.row(r) - t.inner.row(r)))
      throw Error("row " + std::to_string(r) + " length does not match shape");
  return t;
}

inline json to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [p, c] : f.terms()) terms.push_back({{"index", to_json(p)}, {"coeff", c}});
  json j{{"basis", to_string(f.basis())}};
  if (f.basis() == Basis::kschur) j["k"] = f.k();
  j["degree"] = f.degree();
  j["terms"] = std::move(terms);
  return j;
}

inline SymFunc symfunc_from_json(const json& j) {
  const json& b = detail::field(j, "basis");
  if (!b.is_string()) throw Error("basis must be a string");
  const Basis basis = parse_basis(b.get<std::string>());
  const int k = basis == Basis::kschur ? detail::field(j, "k").get<int>() : 0;
  const json& terms = detail::field(j, "terms");
  if (!terms.is_array()) throw Error("terms must be a JSON array");
  int degree = 0;
  if (j.contains("degree")) degree = j.at("degree").get<int>();
  else if (!terms.empty()) degree = static_cast<int>(partition_from_json(detail::field(terms[0], "index")).degree());
  SymFunc f(basis, degree, k);
  for (const auto& t : terms) {
    const json& c = detail::field(t, "coeff");
    if (!c.is_number_integer()) throw Error("coeff must be an integer");
    f.add(partition_from_json(detail::field(t, "index")), c.get<std::int64_t>());
  }
  return f;
}

inline json to_json(const KostkaMatrix& m) {
  json order = json::array();
  for (const auto& p : m.order) order.push_back(to_json(p));
  return {{"version", 1}, {"k", m.k}, {"degree", m.degree}, {"order", std::move(order)}, {"K", m.K}};
}

/// Parses and validates a Kostka cache document: version, index order and
/// unitriangularity must all check out.
inline KostkaMatrix kostka_from_json(const json& j) {
  if (detail::field(j, "version") != 1) throw Error("unsupported Kostka cache version");
  KostkaMatrix m;
  m.k = detail::field(j, "k").get<int>();
  m.degree = detail::field(j, "degree").get<int>();
  for (const auto& p : detail::field(j, "order")) m.order.push_back(partition_from_json(p));
  if (m.order != k_bounded_partitions(m.degree, m.k)) throw Error("Kostka cache has the wrong index order");
  for (const auto& row : detail::field(j, "K")) m.K.push_back(row.get<std::vector<std::int64_t>>());
  check_unitriangular(m);
  return m;
}

}  // namespace kschur
