#pragma once

// k-tableaux on (skew) core shapes.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kschur/shapes.hpp"

namespace kschur {

/// column_strict: rows weakly increase, columns strictly increase.
/// transposed: rows strictly increase, columns weakly increase.
enum class Mode { column_strict, transposed };

/// A filling of the skew core outer/inner. `rows[i]` lists, left to right,
/// the letters of row i+1 at columns inner_{i+1}+1 .. outer_{i+1}.
struct KTableau {
  int k = 1;
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;
  Mode mode = Mode::column_strict;

  int modulus() const { return k + 1; }

  bool in_skew(const Cell& c) const {
    return c.is_cell() && c.col > inner.row(c.row) && c.col <= outer.row(c.row);
  }

  /// Letter at `c`, or 0 when `c` is not a cell of the skew diagram.
  int at(const Cell& c) const {
    if (!in_skew(c) || c.row > static_cast<int>(rows.size())) return 0;
    const auto& row = rows[static_cast<std::size_t>(c.row - 1)];
    const auto idx = static_cast<std::size_t>(c.col - inner.row(c.row) - 1);
    return idx < row.size() ? row[idx] : 0;
  }

  void set(const Cell& c, int letter) {
    rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - inner.row(c.row) - 1)] = letter;
  }

  /// Skew cells in row-major order, bottom row first.
  std::vector<std::pair<Cell, int>> cells() const {
    std::vector<std::pair<Cell, int>> out;
    for (int r = 1; r <= static_cast<int>(rows.size()); ++r) {
      const auto& row = rows[static_cast<std::size_t>(r - 1)];
      for (std::size_t i = 0; i < row.size(); ++i)
        out.emplace_back(Cell{r, inner.row(r) + 1 + static_cast<int>(i)}, row[i]);
    }
    return out;
  }

  int max_letter() const {
    int m = 0;
    for (const auto& row : rows)
      for (int x : row) m = std::max(m, x);
    return m;
  }

  friend bool operator==(const KTableau&, const KTableau&) = default;
  friend auto operator<=>(const KTableau& a, const KTableau& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.mode <=> b.mode; c != 0) return c;
    if (auto c = a.outer <=> b.outer; c != 0) return c;
    if (auto c = a.inner <=> b.inner; c != 0) return c;
    return a.rows <=> b.rows;
  }
};

/// Builds a tableau whose skew rows are given bottom row first.
inline KTableau make_tableau(int k, const Partition& outer, const Partition& inner,
                             std::vector<std::vector<int>> rows, Mode mode = Mode::column_strict) {
  KTableau t{k, outer, inner, std::move(rows), mode};
  return t;
}

/// Residues (mod k+1) occupied by `letter`.
inline std::set<int> letter_residues(const KTableau& t, int letter) {
  std::set<int> out;
  for (const auto& [c, x] : t.cells())
    if (x == letter) out.insert(residue(c, t.modulus()));
  return out;
}

/// Residue counts per letter 1..max_letter.
inline Composition k_weight(const KTableau& t) {
  std::vector<std::set<int>> res(static_cast<std::size_t>(t.max_letter()));
  for (const auto& [c, x] : t.cells())
    if (x >= 1) res[static_cast<std::size_t>(x - 1)].insert(residue(c, t.modulus()));
  std::vector<int> w;
  for (const auto& s : res) w.push_back(static_cast<int>(s.size()));
  return Composition(std::move(w));
}

struct Validation {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks every k-tableau condition for the given weight.
inline Validation validate(const KTableau& t, const Composition& weight) {
  Validation v;
  auto fail = [&](std::string s) { v.issues.push_back(std::move(s)); };
  if (t.k < 1) {
    fail("k must be positive");
    return v;
  }
  if (!t.outer.contains(t.inner)) {
    fail("inner shape not contained in outer shape");
    return v;
  }
  const bool outer_core = is_p_core(t.outer, t.modulus());
  const bool inner_core = is_p_core(t.inner, t.modulus());
  if (!outer_core) fail("outer shape is not a (k+1)-core");
  if (!inner_core) fail("inner shape is not a (k+1)-core");
  if (t.rows.size() != static_cast<std::size_t>(t.outer.length())) {
    fail("row count does not match outer shape");
    return v;
  }
  for (int r = 1; r <= t.outer.length(); ++r)
    if (t.rows[static_cast<std::size_t>(r - 1)].size() !=
        static_cast<std::size_t>(t.outer.row(r) - t.inner.row(r))) {
      fail("row " + std::to_string(r) + " does not cover the shape");
      return v;
    }
  const int r_letters = weight.length();
  for (const auto& [c, x] : t.cells()) {
    if (x < 1 || x > r_letters) fail("letter out of range at " + to_string(c));
    const Cell left{c.row, c.col - 1}, below{c.row - 1, c.col};
    if (t.in_skew(left)) {
      const int y = t.at(left);
      if (t.mode == Mode::column_strict && y > x) fail("row not weakly increasing at " + to_string(c));
      if (t.mode == Mode::transposed && y >= x) fail("row not strictly increasing at " + to_string(c));
    }
    if (t.in_skew(below)) {
      const int y = t.at(below);
      if (t.mode == Mode::column_strict && y >= x) fail("column not strictly increasing at " + to_string(c));
      if (t.mode == Mode::transposed && y > x) fail("column not weakly increasing at " + to_string(c));
    }
  }
  if (outer_core && inner_core) {
    const auto expected = kbounded_of(t.outer, t.k).degree() - kbounded_of(t.inner, t.k).degree();
    if (weight.degree() != expected) fail("weight does not sum to the number of k-bounded hooks");
  }
  for (int x = 1; x <= std::max(r_letters, t.max_letter()); ++x) {
    const auto n = static_cast<int>(letter_residues(t, x).size());
    if (n != weight(x))
      fail("letter " + std::to_string(x) + " occupies " + std::to_string(n) + " residues, expected " +
           std::to_string(weight(x)));
  }
  return v;
}

}  // namespace kschur
