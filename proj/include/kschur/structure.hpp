#pragma once

// Structure of k-tableaux: the total order on letter instances, restriction
// T_{≤x(j)} / T_{<x(j)}, married/divorced/single entries for a letter pair
// (a, a+1), and fundamental rows.

#include <map>
#include <set>
#include <vector>

#include "kschur/tableau.hpp"

namespace kschur {

/// Residues j_1, j_2, ... of a letter in decreasing instance order: j_1 is
/// the residue of its lowest, rightmost cell; j_{t+1} is found the same way
/// after deleting every cell of that letter with residue j_t.
struct LetterInstanceOrder {
  int letter = 0;
  std::vector<int> residues;
};

inline LetterInstanceOrder instance_order(const KTableau& t, int letter) {
  LetterInstanceOrder order{letter, {}};
  std::vector<std::pair<Cell, int>> remaining;
  for (const auto& [c, x] : t.cells())
    if (x == letter) remaining.emplace_back(c, residue(c, t.modulus()));
  while (!remaining.empty()) {
    // cells() is row-major, so the lowest row comes first; take its last cell.
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      const Cell& a = remaining[i].first;
      const Cell& b = remaining[best].first;
      if (a.row < b.row || (a.row == b.row && a.col > b.col)) best = i;
    }
    const int j = remaining[best].second;
    order.residues.push_back(j);
    std::erase_if(remaining, [j](const auto& e) { return e.second == j; });
  }
  return order;
}

/// Deletes every cell larger than x(j_rank) (weakly larger when `strict`).
/// The result keeps the inner shape; its outer shape is what remains.
inline KTableau restrict(const KTableau& t, int letter, int rank, bool strict) {
  const LetterInstanceOrder order = instance_order(t, letter);
  if (rank < 1 || rank > static_cast<int>(order.residues.size())) throw Error("rank out of range");
  std::set<int> dropped(order.residues.begin(), order.residues.begin() + (rank - 1));
  if (strict) dropped.insert(order.residues[static_cast<std::size_t>(rank - 1)]);
  auto keep = [&](const Cell& c, int x) {
    if (x > letter) return false;
    if (x < letter) return true;
    return !dropped.contains(residue(c, t.modulus()));
  };
  std::vector<int> lengths;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= t.outer.length(); ++r) {
    const auto& row = t.rows[static_cast<std::size_t>(r - 1)];
    std::vector<int> kept;
    bool gap = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell c{r, t.inner.row(r) + 1 + static_cast<int>(i)};
      if (keep(c, row[i])) {
        if (gap) throw Error("restriction does not leave a shape");
        kept.push_back(row[i]);
      } else {
        gap = true;
      }
    }
    lengths.push_back(t.inner.row(r) + static_cast<int>(kept.size()));
    rows.push_back(std::move(kept));
  }
  Partition outer = Partition::from_row_lengths(lengths);
  if (!outer.contains(t.inner)) throw Error("restriction does not leave a shape");
  rows.resize(static_cast<std::size_t>(outer.length()));
  return KTableau{t.k, std::move(outer), t.inner, std::move(rows), t.mode};
}

enum class EntryTag { married, divorced, single };

inline const char* to_string(EntryTag tag) {
  switch (tag) {
    case EntryTag::married: return "married";
    case EntryTag::divorced: return "divorced";
    case EntryTag::single: return "single";
  }
  return "?";
}

/// Classification of the letters a and b = a+1 of a column-strict tableau.
struct Classification {
  int a = 0;
  std::map<Cell, EntryTag> tags;
  // Indexed by row − 1.
  std::vector<std::set<int>> res_a, res_b, ures_a, ures_b;

  int b() const { return a + 1; }
  int rows() const { return static_cast<int>(res_a.size()); }

  static const std::set<int>& row_of(const std::vector<std::set<int>>& v, int row) {
    static const std::set<int> empty;
    return row >= 1 && row <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(row - 1)] : empty;
  }
  const std::set<int>& res(int letter_is_b, int row) const { return row_of(letter_is_b ? res_b : res_a, row); }
  /// URes_r(a, b) = URes_r(a) ∪ URes_r(b).
  std::set<int> ures(int row) const {
    std::set<int> s = row_of(ures_a, row);
    const auto& sb = row_of(ures_b, row);
    s.insert(sb.begin(), sb.end());
    return s;
  }
  bool unmarried(const Cell& c) const {
    auto it = tags.find(c);
    return it != tags.end() && it->second != EntryTag::married;
  }
};

inline Classification classify(const KTableau& t, int a) {
  const int b = a + 1;
  const int m = t.modulus();
  Classification cl;
  cl.a = a;
  const auto n = static_cast<std::size_t>(t.outer.length());
  cl.res_a.assign(n, {});
  cl.res_b.assign(n, {});
  cl.ures_a.assign(n, {});
  cl.ures_b.assign(n, {});
  std::set<int> married_a, married_b;
  for (const auto& [c, x] : t.cells()) {
    if (x == a && t.at(Cell{c.row + 1, c.col}) == b) {
      cl.tags[c] = EntryTag::married;
      married_a.insert(residue(c, m));
    } else if (x == b && t.at(Cell{c.row - 1, c.col}) == a) {
      cl.tags[c] = EntryTag::married;
      married_b.insert(residue(c, m));
    }
  }
  for (const auto& [c, x] : t.cells()) {
    if (x != a && x != b) continue;
    const int res = residue(c, m);
    const auto row = static_cast<std::size_t>(c.row - 1);
    (x == a ? cl.res_a : cl.res_b)[row].insert(res);
    if (cl.tags.contains(c)) continue;
    const auto& married = x == a ? married_a : married_b;
    cl.tags[c] = married.contains(res) ? EntryTag::divorced : EntryTag::single;
    (x == a ? cl.ures_a : cl.ures_b)[row].insert(res);
  }
  return cl;
}

/// Fundamental rows (lowest first) and the class of every row with a
/// non-empty unmarried residue set.
struct FundamentalRows {
  std::vector<int> rows;
  std::map<int, int> class_of;  // row -> its fundamental row
};

inline bool is_subset(const std::set<int>& s, const std::set<int>& of) {
  return std::includes(of.begin(), of.end(), s.begin(), s.end());
}

inline FundamentalRows fundamental_rows(const Classification& cl) {
  FundamentalRows fr;
  for (int m = 1; m <= cl.rows(); ++m) {
    const auto u = cl.ures(m);
    if (u.empty()) continue;
    int home = m;
    for (int r = 1; r < m; ++r)
      if (is_subset(u, cl.ures(r))) {
        home = r;
        break;
      }
    if (home == m) fr.rows.push_back(m);
    fr.class_of[m] = home;
  }
  // Fundamental rows carry pairwise disjoint residue sets, so the lowest
  // containing row is the only one.
  for (std::size_t i = 0; i < fr.rows.size(); ++i)
    for (std::size_t j = i + 1; j < fr.rows.size(); ++j) {
      const auto ui = cl.ures(fr.rows[i]), uj = cl.ures(fr.rows[j]);
      for (int x : uj)
        if (ui.contains(x)) throw Error("invariant violated: fundamental rows share a residue");
    }
  for (const auto& [row, home] : fr.class_of)
    if (std::find(fr.rows.begin(), fr.rows.end(), home) == fr.rows.end())
      throw Error("invariant violated: row class has no fundamental row");
  return fr;
}

inline FundamentalRows fundamental_rows(const KTableau& t, int a) { return fundamental_rows(classify(t, a)); }

}  // namespace kschur
