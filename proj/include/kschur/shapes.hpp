#pragma once

// Hooks, residues, cores and the bijection between k-bounded partitions
// and (k+1)-cores.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

/// p ⊵ q: equal degree and every partial sum of p is at least that of q.
inline bool dominates(const Partition& p, const Partition& q) {
  if (p.degree() != q.degree()) return false;
  std::int64_t sp = 0, sq = 0;
  const int n = std::max(p.length(), q.length());
  for (int i = 1; i <= n; ++i) {
    sp += p.row(i);
    sq += q.row(i);
    if (sp < sq) return false;
  }
  return true;
}

/// Multiset union of the parts.
inline Partition union_of(const Partition& p, const Partition& q) {
  std::vector<int> parts = p.parts();
  parts.insert(parts.end(), q.parts().begin(), q.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

/// Number of cells of the skew diagram inside the hook cornered at `s`.
/// `s` may lie below the skew part (inside the inner shape).
inline int hook_length(const SkewShape& shape, const Cell& s) {
  if (!shape.outer().contains(s)) throw Error("cell not in shape");
  const int outer_row = shape.outer().row(s.row);
  const int first_skew_col = shape.inner().row(s.row) + 1;
  int arm = outer_row - std::max(s.col + 1, first_skew_col) + 1;
  if (arm < 0) arm = 0;
  int leg = 0;
  for (int r = s.row + 1; r <= shape.outer().length(); ++r)
    if (shape.contains(Cell{r, s.col})) ++leg;
  return arm + leg + (shape.contains(s) ? 1 : 0);
}

inline int hook_length(const Partition& p, const Cell& s) {
  if (!p.contains(s)) throw Error("cell not in shape");
  int arm = p.row(s.row) - s.col;
  int leg = 0;
  for (int r = s.row + 1; r <= p.length() && p.row(r) >= s.col; ++r) ++leg;
  return arm + leg + 1;
}

/// True when no cell of `p` has hook-length exactly `modulus`.
inline bool is_p_core(const Partition& p, int modulus) {
  if (modulus < 2) throw Error("modulus must be at least 2");
  const Partition conj = conjugate(p);
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.row(r); ++c)
      if ((p.row(r) - c) + (conj.row(c) - r) + 1 == modulus) return false;
  return true;
}

/// (col − row) mod modulus, non-negative.
inline int residue(const Cell& c, int modulus) {
  if (modulus < 1) throw Error("modulus must be positive");
  int r = (c.col - c.row) % modulus;
  return r < 0 ? r + modulus : r;
}

struct Corners {
  std::vector<Cell> removable;
  std::vector<Cell> addable;
};

inline Corners corners(const Partition& p) {
  Corners out;
  for (int i = 1; i <= p.length(); ++i)
    if (p.row(i + 1) < p.row(i)) out.removable.push_back(Cell{i, p.row(i)});
  for (int i = 1; i <= p.length() + 1; ++i)
    if (i == 1 || p.row(i - 1) > p.row(i)) out.addable.push_back(Cell{i, p.row(i) + 1});
  return out;
}

/// The k-skew diagram of a k-bounded partition: row i has length p_i, all
/// cells have hook ≤ k and every square below the diagram has hook > k.
/// The inner shape holds the row offsets.
inline SkewShape k_skew(const Partition& p, int k) {
  if (k < 1) throw Error("k must be positive");
  if (!p.is_k_bounded(k)) throw Error("part exceeds k");
  struct Row {
    int offset;
    int length;
  };
  // Rows of the partial diagram, bottom first. Rows are attached from the
  // shortest part downwards.
  std::vector<Row> rows;
  for (int i = p.length(); i >= 1; --i) {
    const int len = p.row(i);
    int offset = rows.empty() ? 0 : rows.front().offset;
    for (;; ++offset) {
      bool ok = true;
      for (int c = offset + 1; c <= offset + len && ok; ++c) {
        int leg = 0;
        for (const Row& r : rows)
          if (r.offset < c && c <= r.offset + r.length) ++leg;
        if ((offset + len - c) + leg + 1 > k) ok = false;
      }
      if (ok) break;
    }
    rows.insert(rows.begin(), Row{offset, len});
  }
  std::vector<int> outer, inner;
  for (const Row& r : rows) {
    outer.push_back(r.offset + r.length);
    inner.push_back(r.offset);
  }
  SkewShape shape(Partition::from_row_lengths(outer), Partition::from_row_lengths(inner));
  for (int r = 1; r <= shape.outer().length(); ++r) {
    if (shape.outer().row(r) - shape.inner().row(r) != p.row(r))
      throw Error("k-skew construction violated: row length");
    for (int c = 1; c <= shape.outer().row(r); ++c) {
      const int h = hook_length(shape, Cell{r, c});
      if (shape.contains(Cell{r, c}) && h > k) throw Error("k-skew construction violated: hook exceeds k");
      if (!shape.contains(Cell{r, c}) && h <= k)
        throw Error("k-skew construction violated: square below has bounded hook");
    }
  }
  return shape;
}

/// The (k+1)-core associated with a k-bounded partition.
inline Partition core_of(const Partition& p, int k) { return k_skew(p, k).outer(); }

/// Row i of the result counts the cells of row i of `core` with hook ≤ k.
inline Partition kbounded_of(const Partition& core, int k) {
  if (k < 1) throw Error("k must be positive");
  if (!is_p_core(core, k + 1)) throw Error("not a core");
  const Partition conj = conjugate(core);
  std::vector<int> rows;
  for (int r = 1; r <= core.length(); ++r) {
    int count = 0;
    for (int c = 1; c <= core.row(r); ++c)
      if ((core.row(r) - c) + (conj.row(c) - r) + 1 <= k) ++count;
    rows.push_back(count);
  }
  return Partition::from_row_lengths(std::move(rows));
}

inline Partition k_conjugate(const Partition& p, int k) { return kbounded_of(conjugate(core_of(p, k)), k); }

enum class StripType { horizontal, vertical, both, neither, not_contained };

inline const char* to_string(StripType t) {
  switch (t) {
    case StripType::horizontal: return "horizontal";
    case StripType::vertical: return "vertical";
    case StripType::both: return "both";
    case StripType::neither: return "neither";
    case StripType::not_contained: return "not-contained";
  }
  return "?";
}

/// At most one cell of outer/inner per column.
inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer.row(i + 1) > inner.row(i)) return false;
  return true;
}

/// At most one cell of outer/inner per row.
inline bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer.row(i) - inner.row(i) > 1) return false;
  return true;
}

inline StripType strip_type(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return StripType::not_contained;
  const bool h = is_horizontal_strip(outer, inner);
  const bool v = is_vertical_strip(outer, inner);
  if (h && v) return StripType::both;
  if (h) return StripType::horizontal;
  if (v) return StripType::vertical;
  return StripType::neither;
}

/// mu/nu is a horizontal l-strip and their k-conjugates differ by a
/// vertical l-strip.
inline bool is_l_admissible(const Partition& mu, const Partition& nu, int l, int k) {
  if (l < 0 || mu.degree() - nu.degree() != l) return false;
  if (!is_horizontal_strip(mu, nu)) return false;
  return is_vertical_strip(k_conjugate(mu, k), k_conjugate(nu, k));
}

/// Distinct residues (mod `modulus`) carried by the cells of outer/inner.
inline std::set<int> skew_residues(const Partition& outer, const Partition& inner, int modulus) {
  std::set<int> out;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.row(r) + 1; c <= outer.row(r); ++c) out.insert(residue(Cell{r, c}, modulus));
  return out;
}

namespace detail {

template <typename RowRange, typename Emit>
void strip_rec(int row, int rows, int remaining, std::vector<int>& cur, RowRange&& range, Emit&& emit) {
  if (row > rows) {
    if (remaining == 0) emit(Partition::from_row_lengths(cur));
    return;
  }
  auto [lo, hi] = range(row, cur);
  for (int len = lo; len <= hi; ++len) {
    const int used = len - lo;
    if (used > remaining) break;
    cur.push_back(len);
    strip_rec(row + 1, rows, remaining - used, cur, range, emit);
    cur.pop_back();
  }
}

inline void sort_desc(std::vector<Partition>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace detail

/// All lambda ⊇ nu with lambda/nu a horizontal l-strip and lambda_1 ≤ max_part.
inline std::vector<Partition> add_horizontal_strips(const Partition& nu, int l, int max_part) {
  std::vector<Partition> out;
  if (l < 0) return out;
  std::vector<int> cur;
  detail::strip_rec(
      1, nu.length() + 1, l, cur,
      [&](int row, const std::vector<int>&) {
        const int lo = nu.row(row);
        const int hi = row == 1 ? max_part : nu.row(row - 1);
        return std::pair{lo, std::max(lo - 1, hi)};
      },
      [&](Partition p) { out.push_back(std::move(p)); });
  detail::sort_desc(out);
  return out;
}

/// All lambda ⊇ nu with lambda/nu a vertical l-strip and lambda_1 ≤ max_part.
inline std::vector<Partition> add_vertical_strips(const Partition& nu, int l, int max_part) {
  std::vector<Partition> out;
  if (l < 0) return out;
  std::vector<int> cur;
  detail::strip_rec(
      1, nu.length() + l, l, cur,
      [&](int row, const std::vector<int>& prefix) {
        const int lo = nu.row(row);
        int hi = lo + 1;
        if (row == 1) hi = std::min(hi, max_part);
        else hi = std::min(hi, prefix.back());
        return std::pair{lo, std::max(lo - 1, hi)};
      },
      [&](Partition p) { out.push_back(std::move(p)); });
  detail::sort_desc(out);
  return out;
}

/// All nu ⊆ mu with mu/nu a horizontal l-strip.
inline std::vector<Partition> remove_horizontal_strips(const Partition& mu, int l) {
  std::vector<Partition> out;
  if (l < 0) return out;
  std::vector<int> cur;
  // Enumerate nu_i ∈ [mu_{i+1}, mu_i]; the amount removed is mu_i − nu_i.
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (row > mu.length()) {
      if (remaining == 0) out.push_back(Partition::from_row_lengths(cur));
      return;
    }
    for (int len = mu.row(row); len >= mu.row(row + 1); --len) {
      const int removed = mu.row(row) - len;
      if (removed > remaining) break;
      cur.push_back(len);
      rec(row + 1, remaining - removed);
      cur.pop_back();
    }
  };
  rec(1, l);
  detail::sort_desc(out);
  return out;
}

}  // namespace kschur
