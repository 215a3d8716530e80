#pragma once

// Chain-based enumeration of k-tableaux.
//
// Every prefix T_{≤i} of a (skew) k-tableau is itself a k-tableau, so a
// tableau is a chain of (k+1)-cores where letter i adds a horizontal strip
// (vertical in transposed mode) carrying exactly weight_i residues. The
// enumeration walks those chains; counting memoizes on (letter, core).

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kschur/tableau.hpp"

namespace kschur {

namespace detail {

inline void require_modulus_fits(int k) {
  if (k < 1) throw Error("k must be positive");
  if (k + 1 > 64) throw Error("k too large");
}

/// Cores reachable from `core` inside `bound` by adding one strip whose
/// cells carry exactly `count` distinct residues. Rows are placed top down,
/// so every hook of a row is final once the row is placed and a hook of
/// length k+1 prunes the branch at once.
inline std::vector<Partition> core_strip_extensions(const Partition& core, const Partition& bound, int k, Mode mode,
                                                    int count) {
  std::vector<Partition> out;
  if (count == 0) {
    out.push_back(core);
    return out;
  }
  if (!bound.contains(core)) return out;
  const int modulus = k + 1;
  const int rows = bound.length();
  std::vector<int> cur(static_cast<std::size_t>(rows), 0);
  // heights[c] = number of placed rows (all above the current one) reaching column c.
  std::vector<int> heights(static_cast<std::size_t>(bound.row(1) + 1), 0);
  const auto row_is_clean = [&](int len) {
    for (int c = 1; c <= len; ++c)
      if (len - c + heights[static_cast<std::size_t>(c)] + 1 == modulus) return false;
    return true;
  };
  auto rec = [&](auto&& self, int row, std::uint64_t mask, int seen) -> void {
    if (row == 0) {
      if (seen == count) out.push_back(Partition::from_row_lengths(cur));
      return;
    }
    const int base = core.row(row);
    const int need = row < rows ? std::max(base, cur[static_cast<std::size_t>(row)]) : base;
    int hi = bound.row(row);
    if (mode == Mode::column_strict) {
      if (row > 1) hi = std::min(hi, core.row(row - 1));
    } else {
      hi = std::min(hi, base + 1);
    }
    std::uint64_t m = mask;
    int n = seen;
    for (int len = base; len <= hi; ++len) {
      if (len > base) {
        const std::uint64_t bit = std::uint64_t{1} << residue(Cell{row, len}, modulus);
        if (!(m & bit)) ++n;
        m |= bit;
      }
      if (n > count) break;
      if (len < need || !row_is_clean(len)) continue;
      cur[static_cast<std::size_t>(row - 1)] = len;
      for (int c = 1; c <= len; ++c) ++heights[static_cast<std::size_t>(c)];
      self(self, row - 1, m, n);
      for (int c = 1; c <= len; ++c) --heights[static_cast<std::size_t>(c)];
    }
    cur[static_cast<std::size_t>(row - 1)] = 0;
  };
  rec(rec, rows, 0, 0);
  return out;
}

inline void check_core_preconditions(int k, const Partition& outer_core, const Partition& inner_core,
                                     const Composition& weight) {
  require_modulus_fits(k);
  if (!is_p_core(outer_core, k + 1)) throw Error("outer shape is not a (k+1)-core");
  if (!is_p_core(inner_core, k + 1)) throw Error("inner shape is not a (k+1)-core");
  if (!outer_core.contains(inner_core)) throw Error("inner core not contained in outer core");
  const auto expected = kbounded_of(outer_core, k).degree() - kbounded_of(inner_core, k).degree();
  if (weight.degree() != expected) throw Error("weight sum does not match the number of k-bounded hooks");
}

class ChainEngine {
 public:
  ChainEngine(int k, Partition outer, Partition inner, Composition weight, Mode mode)
      : k_(k),
        outer_(std::move(outer)),
        inner_(std::move(inner)),
        weight_(std::move(weight)),
        mode_(mode),
        count_memo_(static_cast<std::size_t>(weight_.length() + 1)) {}

  std::int64_t count() { return count_from(1, inner_); }

  std::vector<KTableau> list() {
    std::vector<KTableau> out;
    if (count() == 0) return out;
    KTableau t{k_, outer_, inner_, {}, mode_};
    for (int r = 1; r <= outer_.length(); ++r)
      t.rows.emplace_back(static_cast<std::size_t>(outer_.row(r) - inner_.row(r)), 0);
    list_from(1, inner_, t, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const std::vector<Partition>& extensions(int letter, const Partition& core) {
    auto& memo = ext_memo_[weight_(letter)];
    auto it = memo.find(core);
    if (it != memo.end()) return it->second;
    return memo.emplace(core, core_strip_extensions(core, outer_, k_, mode_, weight_(letter))).first->second;
  }

  std::int64_t count_from(int letter, const Partition& core) {
    if (letter > weight_.length()) return core == outer_ ? 1 : 0;
    auto& memo = count_memo_[static_cast<std::size_t>(letter)];
    if (auto it = memo.find(core); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (const Partition& next : extensions(letter, core)) total = checked_add(total, count_from(letter + 1, next));
    memo.emplace(core, total);
    return total;
  }

  void list_from(int letter, const Partition& core, KTableau& t, std::vector<KTableau>& out) {
    if (letter > weight_.length()) {
      if (core == outer_) out.push_back(t);
      return;
    }
    for (const Partition& next : extensions(letter, core)) {
      if (count_from(letter + 1, next) == 0) continue;
      for (int r = 1; r <= next.length(); ++r)
        for (int c = core.row(r) + 1; c <= next.row(r); ++c) t.set(Cell{r, c}, letter);
      list_from(letter + 1, next, t, out);
    }
  }

  int k_;
  Partition outer_, inner_;
  Composition weight_;
  Mode mode_;
  // Keyed by strip residue count, then by core.
  std::map<int, std::map<Partition, std::vector<Partition>>> ext_memo_;
  // Indexed by letter, then keyed by core.
  std::vector<std::map<Partition, std::int64_t>> count_memo_;
};

}  // namespace detail

/// All k-tableaux of shape outer_core/inner_core and the given k-weight,
/// sorted canonically.
inline std::vector<KTableau> enumerate_on_cores(int k, const Partition& outer_core, const Partition& inner_core,
                                                const Composition& weight, Mode mode = Mode::column_strict) {
  detail::check_core_preconditions(k, outer_core, inner_core, weight);
  return detail::ChainEngine(k, outer_core, inner_core, weight, mode).list();
}

inline std::int64_t count_on_cores(int k, const Partition& outer_core, const Partition& inner_core,
                                   const Composition& weight, Mode mode = Mode::column_strict) {
  detail::check_core_preconditions(k, outer_core, inner_core, weight);
  return detail::ChainEngine(k, outer_core, inner_core, weight, mode).count();
}

namespace detail {

inline std::pair<Partition, Partition> cores_for(int k, const Partition& outer, const Partition& inner,
                                                 const Composition& weight) {
  if (k < 1) throw Error("k must be positive");
  Partition oc = core_of(outer, k), ic = core_of(inner, k);
  if (!oc.contains(ic)) throw Error("inner core not contained in outer core");
  if (weight.degree() != outer.degree() - inner.degree()) throw Error("weight sum does not match shape");
  return {std::move(oc), std::move(ic)};
}

}  // namespace detail

/// Enumeration indexed by k-bounded partitions (shapes are their cores).
inline std::vector<KTableau> enumerate(int k, const Partition& outer, const Partition& inner,
                                       const Composition& weight, Mode mode = Mode::column_strict) {
  auto [oc, ic] = detail::cores_for(k, outer, inner, weight);
  return enumerate_on_cores(k, oc, ic, weight, mode);
}

inline std::int64_t k_kostka(int k, const Partition& mu, const Composition& weight) {
  auto [oc, ic] = detail::cores_for(k, mu, Partition{}, weight);
  return count_on_cores(k, oc, ic, weight);
}

inline std::int64_t skew_k_kostka(int k, const Partition& outer, const Partition& inner, const Composition& weight) {
  auto [oc, ic] = detail::cores_for(k, outer, inner, weight);
  return count_on_cores(k, oc, ic, weight);
}

inline std::int64_t transposed_skew_kostka(int k, const Partition& outer, const Partition& inner,
                                           const Composition& weight) {
  auto [oc, ic] = detail::cores_for(k, outer, inner, weight);
  return count_on_cores(k, oc, ic, weight, Mode::transposed);
}

}  // namespace kschur
