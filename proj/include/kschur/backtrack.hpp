#pragma once

// Cell-by-cell backtracking enumeration of k-tableaux straight from the
// definition: fill every cell, keep the row/column conditions of the mode,
// and require letter i to occupy exactly weight_i residues. It never looks
// at intermediate shapes, which makes it the reference for the chain engine.

#include <algorithm>
#include <vector>

#include "kschur/tableau.hpp"

namespace kschur {

inline std::vector<KTableau> enumerate_backtracking(int k, const Partition& outer_core, const Partition& inner_core,
                                                    const Composition& weight, Mode mode = Mode::column_strict) {
  if (k < 1) throw Error("k must be positive");
  if (!is_p_core(outer_core, k + 1) || !is_p_core(inner_core, k + 1)) throw Error("not a core");
  if (!outer_core.contains(inner_core)) throw Error("inner core not contained in outer core");
  const auto expected = kbounded_of(outer_core, k).degree() - kbounded_of(inner_core, k).degree();
  if (weight.degree() != expected) throw Error("weight sum does not match the number of k-bounded hooks");

  const int modulus = k + 1;
  const int letters = weight.length();
  KTableau t{k, outer_core, inner_core, {}, mode};
  std::vector<Cell> order;
  for (int r = 1; r <= outer_core.length(); ++r) {
    t.rows.emplace_back(static_cast<std::size_t>(outer_core.row(r) - inner_core.row(r)), 0);
    for (int c = inner_core.row(r) + 1; c <= outer_core.row(r); ++c) order.push_back(Cell{r, c});
  }
  // uses[letter][residue] = number of cells of that letter and residue.
  std::vector<std::vector<int>> uses(static_cast<std::size_t>(letters + 1),
                                     std::vector<int>(static_cast<std::size_t>(modulus), 0));
  std::vector<int> distinct(static_cast<std::size_t>(letters + 1), 0);
  std::vector<KTableau> out;

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      for (int x = 1; x <= letters; ++x)
        if (distinct[static_cast<std::size_t>(x)] != weight(x)) return;
      out.push_back(t);
      return;
    }
    const Cell c = order[idx];
    int lo = 1;
    const Cell left{c.row, c.col - 1}, below{c.row - 1, c.col};
    if (t.in_skew(left)) lo = std::max(lo, t.at(left) + (mode == Mode::transposed ? 1 : 0));
    if (t.in_skew(below)) lo = std::max(lo, t.at(below) + (mode == Mode::column_strict ? 1 : 0));
    const int res = residue(c, modulus);
    for (int x = lo; x <= letters; ++x) {
      auto& u = uses[static_cast<std::size_t>(x)][static_cast<std::size_t>(res)];
      auto& d = distinct[static_cast<std::size_t>(x)];
      const bool fresh = u == 0;
      if (fresh && d + 1 > weight(x)) continue;
      ++u;
      if (fresh) ++d;
      t.set(c, x);
      self(self, idx + 1);
      --u;
      if (fresh) --d;
    }
    t.set(c, 0);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kschur
