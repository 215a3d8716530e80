#pragma once

// Weight-permuting involution on k-tableaux exchanging the k-weights of the
// letters a and a+1. For k at least the main hook it is the Bender-Knuth
// involution.

#include <map>
#include <set>
#include <vector>

#include "kschur/structure.hpp"

namespace kschur {

/// Tableaux after stage 1(a), 1(b) and 2.
struct TauTrace {
  KTableau stage_1a, stage_1b, stage_2;
};

namespace detail {

inline std::set<Cell> married_cells(const Classification& cl) {
  std::set<Cell> out;
  for (const auto& [c, tag] : cl.tags)
    if (tag == EntryTag::married) out.insert(c);
  return out;
}

// Marriages are never created or broken by relabeling unmarried entries.
inline void check_marriages(const KTableau& t, int a, const std::set<Cell>& expected) {
  if (married_cells(classify(t, a)) != expected) throw Error("invariant violated: marriage changed under tau");
}

}  // namespace detail

inline KTableau tau(const KTableau& t, int a, TauTrace* trace = nullptr) {
  if (a < 1 || a >= t.max_letter()) throw Error("a out of range");
  if (t.mode != Mode::column_strict) throw Error("tau requires a column-strict tableau");
  const int b = a + 1;
  const int m = t.modulus();
  const Classification cl = classify(t, a);
  const FundamentalRows fr = fundamental_rows(cl);
  const std::set<Cell> married = detail::married_cells(cl);

  KTableau out = t;
  struct RowChange {
    int from = 0;  // letter being relabeled
    int to = 0;
    std::set<int> residues;
    bool more_single_a = false;
  };
  std::map<int, RowChange> changes;

  // Stage 1(a): the single a^t b^s of a fundamental row become a^s b^t.
  for (int r : fr.rows) {
    std::vector<Cell> singles;
    int t_count = 0, s_count = 0;
    for (int c = t.inner.row(r) + 1; c <= t.outer.row(r); ++c) {
      const Cell cell{r, c};
      auto it = cl.tags.find(cell);
      if (it == cl.tags.end() || it->second != EntryTag::single) continue;
      singles.push_back(cell);
      (t.at(cell) == a ? t_count : s_count)++;
    }
    RowChange& ch = changes[r];
    ch.more_single_a = t_count > s_count;
    ch.from = ch.more_single_a ? a : b;
    ch.to = ch.more_single_a ? b : a;
    for (std::size_t i = 0; i < singles.size(); ++i) {
      const int letter = static_cast<int>(i) < s_count ? a : b;
      if (out.at(singles[i]) != letter) {
        out.set(singles[i], letter);
        ch.residues.insert(residue(singles[i], m));
      }
    }
  }
  detail::check_marriages(out, a, married);
  if (trace) trace->stage_1a = out;

  // Stage 1(b): restore a weakly increasing row.
  for (int r : fr.rows) {
    RowChange& ch = changes[r];
    const int lo = t.inner.row(r) + 1, hi = t.outer.row(r);
    if (ch.more_single_a) {
      bool seen_b = false;
      for (int c = lo; c <= hi; ++c) {
        const Cell cell{r, c};
        if (out.at(cell) == b) seen_b = true;
        else if (out.at(cell) == a && seen_b) {
          out.set(cell, b);
          ch.residues.insert(residue(cell, m));
        }
      }
    } else {
      bool seen_a = false;
      for (int c = hi; c >= lo; --c) {
        const Cell cell{r, c};
        if (out.at(cell) == a) seen_a = true;
        else if (out.at(cell) == b && seen_a) {
          out.set(cell, a);
          ch.residues.insert(residue(cell, m));
        }
      }
    }
  }
  detail::check_marriages(out, a, married);
  if (trace) trace->stage_1b = out;

  // Stage 2: propagate the relabeled residues to unmarried entries above.
  for (int r : fr.rows) {
    const RowChange& ch = changes[r];
    if (ch.residues.empty()) continue;
    for (int above = r + 1; above <= t.outer.length(); ++above) {
      for (int c = t.inner.row(above) + 1; c <= t.outer.row(above); ++c) {
        const Cell cell{above, c};
        if (t.at(cell) != ch.from || !cl.unmarried(cell) || !ch.residues.contains(residue(cell, m))) continue;
        auto home = fr.class_of.find(above);
        if (home == fr.class_of.end() || home->second != r)
          throw Error("invariant violated: tau relabels a row outside its class");
        out.set(cell, ch.to);
      }
    }
  }
  detail::check_marriages(out, a, married);
  if (trace) trace->stage_2 = out;
  return out;
}

}  // namespace kschur
