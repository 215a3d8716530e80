#pragma once

// Two-letter fillings x < y of c(mu)/c(nu): the x cells form a transposed
// skew k-tableau of k-weight (r), the y cells a skew k-tableau of k-weight
// (l − r) on top of them. The map `m_involution` pairs fillings of
// opposite sign.

#include <climits>
#include <set>
#include <utility>
#include <vector>

#include "kschur/enumerate.hpp"

namespace kschur {

inline constexpr int kLetterX = 1;
inline constexpr int kLetterY = 2;

struct TwoLetterFilling {
  /// Letters kLetterX / kLetterY on the skew core outer/inner.
  KTableau filling;
  int l = 0;

  int k() const { return filling.k; }
  const Partition& outer() const { return filling.outer; }
  const Partition& inner() const { return filling.inner; }

  /// The shape of T_{≤x}.
  Partition x_shape() const {
    std::vector<int> rows;
    for (int r = 1; r <= outer().length(); ++r) {
      int n = inner().row(r);
      for (int x : filling.rows[static_cast<std::size_t>(r - 1)])
        if (x == kLetterX) ++n;
      rows.push_back(n);
    }
    return Partition::from_row_lengths(rows);
  }

  /// (number of x residues, number of y residues).
  std::pair<int, int> weight() const {
    return {static_cast<int>(letter_residues(filling, kLetterX).size()),
            static_cast<int>(letter_residues(filling, kLetterY).size())};
  }

  int sign() const { return weight().first % 2 == 0 ? 1 : -1; }

  friend bool operator==(const TwoLetterFilling& a, const TwoLetterFilling& b) { return a.filling == b.filling; }
  friend auto operator<=>(const TwoLetterFilling& a, const TwoLetterFilling& b) { return a.filling <=> b.filling; }
};

/// Checks both defining conditions directly on the cells.
inline bool is_valid_two_letter(const TwoLetterFilling& f) {
  const KTableau& t = f.filling;
  const int k = t.k;
  if (!is_p_core(t.outer, k + 1) || !is_p_core(t.inner, k + 1) || !t.outer.contains(t.inner)) return false;
  for (int r = 1; r <= t.outer.length(); ++r) {
    const auto& row = t.rows[static_cast<std::size_t>(r - 1)];
    if (row.size() != static_cast<std::size_t>(t.outer.row(r) - t.inner.row(r))) return false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != kLetterX && row[i] != kLetterY) return false;
      if (i > 0 && row[i - 1] == kLetterY && row[i] == kLetterX) return false;
    }
  }
  const Partition delta = f.x_shape();
  const auto [r, s] = f.weight();
  if (r + s != f.l) return false;
  if (!t.outer.contains(delta) || !is_p_core(delta, k + 1)) return false;
  if (!is_vertical_strip(delta, t.inner) || !is_horizontal_strip(t.outer, delta)) return false;
  const auto size_of = [k](const Partition& core) { return kbounded_of(core, k).degree(); };
  return size_of(delta) - size_of(t.inner) == r && size_of(t.outer) - size_of(delta) == s;
}

/// All fillings of c(mu)/c(nu) of every weight (r, l − r), 0 ≤ r ≤ l.
inline std::vector<TwoLetterFilling> enumerate_A(int k, const Partition& nu, int l, const Partition& mu) {
  std::vector<TwoLetterFilling> out;
  if (l < 0 || l > k) throw Error("Pieri degree exceeds k");
  const Partition outer = core_of(mu, k), inner = core_of(nu, k);
  if (!outer.contains(inner)) return out;
  for (int r = 0; r <= l; ++r) {
    for (const Partition& delta : detail::core_strip_extensions(inner, outer, k, Mode::transposed, r)) {
      if (kbounded_of(delta, k).degree() - nu.degree() != r) continue;
      for (const Partition& top : detail::core_strip_extensions(delta, outer, k, Mode::column_strict, l - r)) {
        if (top != outer || mu.degree() - kbounded_of(delta, k).degree() != l - r) continue;
        KTableau t{k, outer, inner, {}, Mode::column_strict};
        for (int row = 1; row <= outer.length(); ++row) {
          std::vector<int> letters;
          for (int c = inner.row(row) + 1; c <= outer.row(row); ++c)
            letters.push_back(c <= delta.row(row) ? kLetterX : kLetterY);
          t.rows.push_back(std::move(letters));
        }
        out.push_back(TwoLetterFilling{std::move(t), l});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Free x residues (every x of that residue tops its column) and free y
/// residues (no y of that residue is right-adjacent to an x or y), each
/// with the lowest row holding such an entry. Row INT_MAX stands for ∞.
struct FreeEntries {
  std::vector<std::pair<int, int>> x;  // (residue, lowest row)
  std::vector<std::pair<int, int>> y;
  int r1 = INT_MAX, i = -1;  // lowest free x row and its residue
  int r2 = INT_MAX, j = -1;  // lowest free y row and its residue
  bool tie() const { return r1 == r2 && r1 != INT_MAX; }
};

inline FreeEntries free_entries(const TwoLetterFilling& f) {
  const KTableau& t = f.filling;
  const int m = t.modulus();
  std::map<int, std::pair<bool, int>> xs, ys;  // residue -> (free so far, lowest row)
  for (const auto& [c, letter] : t.cells()) {
    const int res = residue(c, m);
    if (letter == kLetterX) {
      auto [it, fresh] = xs.try_emplace(res, true, c.row);
      it->second.second = std::min(it->second.second, c.row);
      if (t.outer.contains(Cell{c.row + 1, c.col})) it->second.first = false;
    } else {
      auto [it, fresh] = ys.try_emplace(res, true, c.row);
      it->second.second = std::min(it->second.second, c.row);
      if (t.in_skew(Cell{c.row, c.col - 1})) it->second.first = false;
    }
  }
  FreeEntries fe;
  for (const auto& [res, st] : xs)
    if (st.first) {
      fe.x.emplace_back(res, st.second);
      if (st.second < fe.r1) fe.r1 = st.second, fe.i = res;
    }
  for (const auto& [res, st] : ys)
    if (st.first) {
      fe.y.emplace_back(res, st.second);
      if (st.second < fe.r2) fe.r2 = st.second, fe.j = res;
    }
  if (fe.x.empty() && fe.y.empty()) throw Error("invariant violated");
  return fe;
}

/// If the lowest free x lies strictly below the lowest free y, every x of
/// its residue becomes y; otherwise every y of the lowest free y's residue
/// becomes x.
inline TwoLetterFilling m_involution(const TwoLetterFilling& f) {
  const FreeEntries fe = free_entries(f);
  TwoLetterFilling out = f;
  const int m = f.filling.modulus();
  const bool x_to_y = fe.r1 < fe.r2;
  const int from = x_to_y ? kLetterX : kLetterY;
  const int to = x_to_y ? kLetterY : kLetterX;
  const int res = x_to_y ? fe.i : fe.j;
  for (const auto& [c, letter] : f.filling.cells())
    if (letter == from && residue(c, m) == res) out.filling.set(c, to);
  return out;
}

}  // namespace kschur
