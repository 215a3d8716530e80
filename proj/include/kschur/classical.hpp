#pragma once

// Classical semistandard tableaux and the Bender-Knuth involution, used as
// references for the large-k limit.

#include <algorithm>
#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

/// Rows bottom first, each weakly increasing, columns strictly increasing upward.
using TableauRows = std::vector<std::vector<int>>;

/// Every semistandard filling of `shape` with content `weight`, sorted.
inline std::vector<TableauRows> classical_ssyt(const Partition& shape, const Composition& weight) {
  std::vector<TableauRows> out;
  if (shape.degree() != weight.degree()) return out;
  TableauRows rows(static_cast<std::size_t>(shape.length()));
  for (int r = 1; r <= shape.length(); ++r) rows[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.row(r)), 0);
  std::vector<int> left(static_cast<std::size_t>(weight.length()));
  for (int i = 1; i <= weight.length(); ++i) left[static_cast<std::size_t>(i - 1)] = weight(i);
  std::vector<Cell> order;
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.row(r); ++c) order.push_back(Cell{r, c});
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      out.push_back(rows);
      return;
    }
    const auto [r, c] = order[idx];
    int lo = 1;
    if (c > 1) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)]);
    if (r > 1) lo = std::max(lo, rows[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] + 1);
    for (int x = lo; x <= weight.length(); ++x) {
      auto& n = left[static_cast<std::size_t>(x - 1)];
      if (n == 0) continue;
      --n;
      rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = x;
      self(self, idx + 1);
      ++n;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Bender-Knuth involution exchanging the contents of a and a+1.
inline TableauRows bender_knuth(const TableauRows& t, int a) {
  const int b = a + 1;
  auto at = [&](int r, int c) {
    if (r < 1 || r > static_cast<int>(t.size())) return 0;
    const auto& row = t[static_cast<std::size_t>(r - 1)];
    return c >= 1 && c <= static_cast<int>(row.size()) ? row[static_cast<std::size_t>(c - 1)] : 0;
  };
  TableauRows out = t;
  for (int r = 1; r <= static_cast<int>(t.size()); ++r) {
    std::vector<int> free_cols;
    int na = 0;
    for (int c = 1; c <= static_cast<int>(t[static_cast<std::size_t>(r - 1)].size()); ++c) {
      const int x = at(r, c);
      if (x == a && at(r + 1, c) != b) free_cols.push_back(c), ++na;
      else if (x == b && at(r - 1, c) != a) free_cols.push_back(c);
    }
    const int nb = static_cast<int>(free_cols.size()) - na;
    for (std::size_t i = 0; i < free_cols.size(); ++i)
      out[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(free_cols[i] - 1)] =
          static_cast<int>(i) < nb ? a : b;
  }
  return out;
}

}  // namespace kschur
