#pragma once

// Partitions, cells, skew shapes and compositions.
//
// Diagrams use French notation throughout: row 1 is the bottom row and
// column 1 the leftmost column. All row/column indices are 1-based.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "kschur/checked.hpp"

namespace kschur {

struct Cell {
  int row = 0;
  int col = 0;

  /// Cells sit in the positive quadrant; row 0 / col 0 are the extremal
  /// squares just outside a diagram.
  constexpr bool is_cell() const { return row >= 1 && col >= 1; }

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Throws Error if the parts are not weakly decreasing and positive.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw Error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
      degree_ = checked_add(degree_, parts_[i]);
    }
  }

  /// Builds a partition from a sequence that may carry trailing zeros.
  static Partition from_row_lengths(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::int64_t degree() const { return degree_; }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Length of row `row` (1-based); 0 beyond the last row.
  int row(int row) const {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  bool contains(const Cell& c) const { return c.is_cell() && c.col <= row(c.row); }

  bool contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
      if (other.row(i) > row(i)) return false;
    return true;
  }

  bool is_k_bounded(int k) const { return largest() <= k; }

  std::int64_t main_hook() const { return empty() ? 0 : parts_.front() + length() - 1; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on parts; reverse of this order extends dominance.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::int64_t degree_ = 0;
};

/// Skew diagram outer/inner; requires inner ⊆ outer.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw Error("inner shape not contained in outer shape");
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  bool contains(const Cell& c) const {
    return c.is_cell() && c.col <= outer_.row(c.row) && c.col > inner_.row(c.row);
  }

  std::int64_t size() const { return outer_.degree() - inner_.degree(); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Sequence of non-negative integers; a zero part is an absent letter.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 0) throw Error("composition parts must be non-negative");
      degree_ = checked_add(degree_, p);
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::int64_t degree() const { return degree_; }
  /// Component for letter `letter` (1-based); 0 beyond the end.
  int operator()(int letter) const {
    return letter >= 1 && letter <= length() ? parts_[static_cast<std::size_t>(letter - 1)] : 0;
  }

  /// Weakly decreasing rearrangement with zeros dropped.
  Partition sorted() const {
    std::vector<int> p = parts_;
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition::from_row_lengths(std::move(p));
  }

  /// Exchanges components a and a+1.
  Composition swapped(int a) const {
    std::vector<int> p = parts_;
    if (a >= 1 && a < length()) std::swap(p[static_cast<std::size_t>(a - 1)], p[static_cast<std::size_t>(a)]);
    return Composition(std::move(p));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::int64_t degree_ = 0;
};

inline Composition to_composition(const Partition& p) { return Composition(p.parts()); }

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Partitions of n with parts ≤ max_part, in reverse-lexicographic order
/// (largest first).
inline std::vector<Partition> partitions(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  detail::partitions_rec(n, max_part, cur, out);
  return out;
}

inline std::vector<Partition> partitions(int n) { return partitions(n, n); }

inline std::vector<Partition> k_bounded_partitions(int n, int k) { return partitions(n, k); }

/// Compositions of n with positive parts, lexicographic.
inline std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace kschur
