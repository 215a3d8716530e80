#pragma once

// Exact integer symmetric functions in the bases h, e, s and s^(k).
//
// The k-Schur functions are defined by inverting the unitriangular system
//   h_λ = Σ_μ K^(k)_{μλ} s^(k)_μ        (λ k-bounded)
// so every basis change here goes through a k-Kostka matrix or the
// classical Kostka matrix K^(n), n = degree.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "kschur/enumerate.hpp"

namespace kschur {

enum class Basis { h, e, schur, kschur };

inline const char* to_string(Basis b) {
  switch (b) {
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::schur: return "schur";
    case Basis::kschur: return "kschur";
  }
  return "?";
}

inline Basis parse_basis(const std::string& s) {
  if (s == "h") return Basis::h;
  if (s == "e") return Basis::e;
  if (s == "schur" || s == "s") return Basis::schur;
  if (s == "kschur") return Basis::kschur;
  throw Error("unknown basis: " + s);
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Homogeneous integer combination of basis elements. Zero coefficients
/// are never stored; kschur indices are k-bounded.
class SymFunc {
 public:
  using Terms = std::map<Partition, std::int64_t, std::greater<>>;

  SymFunc(Basis basis, int degree, int k = 0) : basis_(basis), k_(basis == Basis::kschur ? k : 0), degree_(degree) {
    if (degree < 0) throw Error("degree must be non-negative");
    if (basis == Basis::kschur && k < 1) throw Error("k must be positive");
  }

  static SymFunc element(Basis basis, const Partition& index, int k = 0) {
    SymFunc f(basis, static_cast<int>(index.degree()), k);
    f.add(index, 1);
    return f;
  }

  Basis basis() const { return basis_; }
  int k() const { return k_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Partition& index, std::int64_t c) {
    if (index.degree() != degree_) throw Error("term degree " + std::to_string(index.degree()) + " != " +
                                                std::to_string(degree_));
    if (basis_ == Basis::kschur && !index.is_k_bounded(k_)) throw Error("part exceeds k");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(index, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  SymFunc& operator+=(const SymFunc& o) {
    check_compatible(o);
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    check_compatible(o);
    for (const auto& [p, c] : o.terms_) add(p, checked_mul(c, -1));
    return *this;
  }
  SymFunc scaled(std::int64_t s) const {
    SymFunc out(basis_, degree_, k_);
    for (const auto& [p, c] : terms_) out.add(p, checked_mul(c, s));
    return out;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }

  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis_ == b.basis_ && a.k_ == b.k_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    const std::string name = basis_ == Basis::kschur ? "s" + std::to_string(k_)
                             : basis_ == Basis::schur ? std::string("s")
                                                      : to_string(basis_);
    for (const auto& [p, c] : terms_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const auto a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += name + p.str();
    }
    return s;
  }

 private:
  void check_compatible(const SymFunc& o) const {
    if (o.basis_ != basis_ || o.k_ != k_ || o.degree_ != degree_) throw Error("incompatible symmetric functions");
  }

  Basis basis_;
  int k_;
  int degree_;
  Terms terms_;
};

/// K^(k)_{μλ} over the k-bounded partitions of one degree, indexed in
/// reverse-lexicographic order (a linear extension of dominance, largest
/// first), so the matrix is upper unitriangular.
struct KostkaMatrix {
  int k = 1;
  int degree = 0;
  std::vector<Partition> order;
  IntMatrix K;

  int index_of(const Partition& p) const {
    auto it = std::lower_bound(order.begin(), order.end(), p, std::greater<>());
    if (it == order.end() || *it != p) throw Error("partition " + p.str() + " not indexed");
    return static_cast<int>(it - order.begin());
  }
  std::int64_t at(const Partition& mu, const Partition& lambda) const {
    return K[static_cast<std::size_t>(index_of(mu))][static_cast<std::size_t>(index_of(lambda))];
  }
};

/// Throws unless K is unit upper triangular with zeros wherever the row
/// index does not dominate the column index.
inline void check_unitriangular(const KostkaMatrix& m) {
  const std::size_t n = m.order.size();
  if (m.K.size() != n) throw Error("invariant violated: Kostka matrix shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (m.K[i].size() != n) throw Error("invariant violated: Kostka matrix shape");
    if (m.K[i][i] != 1) throw Error("invariant violated: K_" + m.order[i].str() + m.order[i].str() + " != 1");
    for (std::size_t j = 0; j < n; ++j)
      if (m.K[i][j] != 0 && i != j && !dominates(m.order[i], m.order[j]))
        throw Error("invariant violated: K_" + m.order[i].str() + m.order[j].str() + " != 0");
  }
}

/// Direct computation by counting k-tableaux.
inline KostkaMatrix kostka_matrix(int k, int degree) {
  if (k < 1) throw Error("k must be positive");
  if (degree < 0) throw Error("degree must be non-negative");
  KostkaMatrix m{k, degree, k_bounded_partitions(degree, k), {}};
  const std::size_t n = m.order.size();
  m.K.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.K[i][j] = k_kostka(k, m.order[i], to_composition(m.order[j]));
  check_unitriangular(m);
  return m;
}

/// Inverse of a unit upper triangular matrix by back-substitution.
inline IntMatrix unitriangular_inverse(const IntMatrix& u) {
  const std::size_t n = u.size();
  IntMatrix inv(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].size() != n || u[i][i] != 1) throw Error("matrix is not unit upper triangular");
    for (std::size_t j = 0; j < i; ++j)
      if (u[i][j] != 0) throw Error("matrix is not unit upper triangular");
  }
  // Column by column: solve U x = e_j from the bottom up.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j + 1; ii-- > 0;) {
      std::int64_t v = ii == j ? 1 : 0;
      for (std::size_t t = ii + 1; t <= j; ++t) v = checked_sub(v, checked_mul(u[ii][t], inv[t][j]));
      inv[ii][j] = v;
    }
  }
  return inv;
}

using KostkaSource = std::function<KostkaMatrix(int k, int degree)>;

namespace detail {

struct KostkaCache {
  std::mutex mutex;
  KostkaSource source = kostka_matrix;
  std::map<std::pair<int, int>, std::unique_ptr<const KostkaMatrix>> matrices;
  std::map<std::pair<int, int>, std::unique_ptr<const IntMatrix>> inverses;
};

inline KostkaCache& kostka_cache() {
  static KostkaCache cache;
  return cache;
}

}  // namespace detail

/// Replaces the provider behind `kostka()` (e.g. with an on-disk cache) and
/// drops everything memoized so far.
inline void set_kostka_source(KostkaSource source) {
  auto& c = detail::kostka_cache();
  std::lock_guard lock(c.mutex);
  c.source = source ? std::move(source) : KostkaSource(kostka_matrix);
  c.matrices.clear();
  c.inverses.clear();
}

/// Process-wide memoized K^(k) for one degree. Builders are serialized, so
/// a caller never observes a partially built matrix.
inline const KostkaMatrix& kostka(int k, int degree) {
  auto& c = detail::kostka_cache();
  std::lock_guard lock(c.mutex);
  auto& slot = c.matrices[{k, degree}];
  if (!slot) {
    auto m = std::make_unique<const KostkaMatrix>(c.source(k, degree));
    if (m->k != k || m->degree != degree) throw Error("Kostka source returned the wrong matrix");
    check_unitriangular(*m);
    slot = std::move(m);
  }
  return *slot;
}

/// Inverse of K^(k): the h-expansion of the k-Schur functions.
inline const IntMatrix& kostka_inverse(int k, int degree) {
  const KostkaMatrix& m = kostka(k, degree);
  auto& c = detail::kostka_cache();
  std::lock_guard lock(c.mutex);
  auto& slot = c.inverses[{k, degree}];
  if (!slot) slot = std::make_unique<const IntMatrix>(unitriangular_inverse(m.K));
  return *slot;
}

inline IntMatrix kschur_to_h_inverse(int k, int degree) { return kostka_inverse(k, degree); }

/// Classical Kostka numbers are K^(n) with n = degree.
inline int classical_k(int degree) { return std::max(degree, 1); }

inline SymFunc to_h(const SymFunc& f);

inline SymFunc to_schur(const SymFunc& f) {
  const int n = f.degree();
  switch (f.basis()) {
    case Basis::schur: return f;
    case Basis::h:
    case Basis::e: {
      const KostkaMatrix& cl = kostka(classical_k(n), n);
      SymFunc out(Basis::schur, n);
      for (const auto& [lambda, c] : f.terms()) {
        const auto col = static_cast<std::size_t>(cl.index_of(lambda));
        for (std::size_t i = 0; i < cl.order.size(); ++i)
          if (cl.K[i][col] != 0) {
            const Partition& mu = cl.order[i];
            out.add(f.basis() == Basis::h ? mu : conjugate(mu), checked_mul(c, cl.K[i][col]));
          }
      }
      return out;
    }
    case Basis::kschur: return to_schur(to_h(f));
  }
  throw Error("unknown basis");
}

namespace detail {

// s_μ = Σ_λ inv[λ][μ] h_λ for the matrix behind h_λ = Σ_μ K[μ][λ] s_μ.
inline void add_via_inverse(SymFunc& out, const KostkaMatrix& m, const IntMatrix& inv, const Partition& mu,
                            std::int64_t c) {
  const auto col = static_cast<std::size_t>(m.index_of(mu));
  for (std::size_t i = 0; i < m.order.size(); ++i)
    if (inv[i][col] != 0) out.add(m.order[i], checked_mul(c, inv[i][col]));
}

}  // namespace detail

inline SymFunc to_h(const SymFunc& f) {
  const int n = f.degree();
  switch (f.basis()) {
    case Basis::h: return f;
    case Basis::schur: {
      const int kc = classical_k(n);
      const KostkaMatrix& cl = kostka(kc, n);
      const IntMatrix& inv = kostka_inverse(kc, n);
      SymFunc out(Basis::h, n);
      for (const auto& [mu, c] : f.terms()) detail::add_via_inverse(out, cl, inv, mu, c);
      return out;
    }
    case Basis::kschur: {
      const KostkaMatrix& km = kostka(f.k(), n);
      const IntMatrix& inv = kostka_inverse(f.k(), n);
      SymFunc out(Basis::h, n);
      for (const auto& [mu, c] : f.terms()) detail::add_via_inverse(out, km, inv, mu, c);
      return out;
    }
    case Basis::e: return to_h(to_schur(f));
  }
  throw Error("unknown basis");
}

/// Expansion in s^(k); only defined on the span of k-bounded h_λ.
inline SymFunc to_kschur(const SymFunc& f, int k) {
  if (f.basis() == Basis::kschur && f.k() == k) return f;
  const SymFunc h = to_h(f);
  const int n = f.degree();
  SymFunc out(Basis::kschur, n, k);
  for (const auto& [lambda, c] : h.terms())
    if (!lambda.is_k_bounded(k)) throw Error("not in the k-bounded subspace");
  const KostkaMatrix& km = kostka(k, n);
  for (const auto& [lambda, c] : h.terms()) {
    const auto col = static_cast<std::size_t>(km.index_of(lambda));
    for (std::size_t i = 0; i < km.order.size(); ++i)
      if (km.K[i][col] != 0) out.add(km.order[i], checked_mul(c, km.K[i][col]));
  }
  return out;
}

/// h_λ = Σ_ν K^(k)_{νλ} s^(k)_ν.
inline SymFunc h_expand(int k, const Partition& lambda) {
  if (!lambda.is_k_bounded(k)) throw Error("part exceeds k");
  return to_kschur(SymFunc::element(Basis::h, lambda), k);
}

/// Members of H^(k)_{ν,l}: horizontal l-strips whose k-conjugates differ by
/// a vertical l-strip.
inline std::vector<Partition> h_pieri_set(int k, const Partition& nu, int l) {
  if (l > k) throw Error("Pieri degree exceeds k");
  if (l < 0) throw Error("Pieri degree must be non-negative");
  if (!nu.is_k_bounded(k)) throw Error("part exceeds k");
  std::vector<Partition> out;
  const Partition nu_conj = k_conjugate(nu, k);
  for (Partition& mu : add_horizontal_strips(nu, l, k))
    if (is_vertical_strip(k_conjugate(mu, k), nu_conj)) out.push_back(std::move(mu));
  return out;
}

/// Members of E^(k)_{ν,l}: vertical l-strips whose k-conjugates differ by a
/// horizontal l-strip.
inline std::vector<Partition> e_pieri_set(int k, const Partition& nu, int l) {
  if (l > k) throw Error("Pieri degree exceeds k");
  if (l < 0) throw Error("Pieri degree must be non-negative");
  if (!nu.is_k_bounded(k)) throw Error("part exceeds k");
  std::vector<Partition> out;
  const Partition nu_conj = k_conjugate(nu, k);
  for (Partition& lam : add_vertical_strips(nu, l, k))
    if (is_horizontal_strip(k_conjugate(lam, k), nu_conj)) out.push_back(std::move(lam));
  return out;
}

namespace detail {

inline SymFunc pieri(int l, const SymFunc& f, bool vertical) {
  if (l < 0) throw Error("Pieri degree must be non-negative");
  SymFunc out(f.basis(), f.degree() + l, f.k());
  for (const auto& [nu, c] : f.terms()) {
    std::vector<Partition> targets;
    switch (f.basis()) {
      case Basis::kschur:
        targets = vertical ? e_pieri_set(f.k(), nu, l) : h_pieri_set(f.k(), nu, l);
        break;
      case Basis::schur:
        targets = vertical ? add_vertical_strips(nu, l, nu.largest() + 1) : add_horizontal_strips(nu, l, nu.largest() + l);
        break;
      case Basis::h:
      case Basis::e:
        targets = {l == 0 ? nu : union_of(nu, Partition{l})};
        break;
    }
    for (const Partition& p : targets) out.add(p, c);
  }
  return out;
}

}  // namespace detail

/// h_l · f. Schur basis uses the classical Pieri rule, s^(k) the k-Pieri rule.
inline SymFunc multiply_h(int l, const SymFunc& f) {
  if (f.basis() == Basis::e) throw Error("multiply_h is not defined on the e basis");
  if (f.basis() == Basis::kschur && l > f.k()) throw Error("Pieri degree exceeds k");
  return detail::pieri(l, f, false);
}

/// e_l · f.
inline SymFunc multiply_e(int l, const SymFunc& f) {
  if (f.basis() == Basis::h) throw Error("multiply_e is not defined on the h basis");
  if (f.basis() == Basis::kschur && l > f.k()) throw Error("Pieri degree exceeds k");
  return detail::pieri(l, f, true);
}

/// a · b in the Schur basis, by iterating the classical h-Pieri rule over
/// the h-expansion of a.
inline SymFunc multiply(const SymFunc& a, const SymFunc& b) {
  const SymFunc ah = to_h(a);
  const SymFunc bs = to_schur(b);
  SymFunc out(Basis::schur, a.degree() + b.degree());
  for (const auto& [lambda, c] : ah.terms()) {
    SymFunc g = bs;
    for (int part : lambda.parts()) g = multiply_h(part, g);
    out += g.scaled(c);
  }
  return out;
}

/// ω: s_λ ↦ s_λ', s^(k)_λ ↦ s^(k)_{λ^ω_k}, h_λ ↔ e_λ.
inline SymFunc omega(const SymFunc& f) {
  const Basis target = f.basis() == Basis::h ? Basis::e : f.basis() == Basis::e ? Basis::h : f.basis();
  SymFunc out(target, f.degree(), f.k());
  for (const auto& [p, c] : f.terms()) {
    switch (f.basis()) {
      case Basis::schur: out.add(conjugate(p), c); break;
      case Basis::kschur: out.add(k_conjugate(p, f.k()), c); break;
      default: out.add(p, c); break;
    }
  }
  return out;
}

/// The k-rectangle (l^{k−l+1}).
inline Partition k_rectangle(int k, int l) {
  if (l < 1 || l > k) throw Error("rectangle width must lie in 1..k");
  return Partition(std::vector<int>(static_cast<std::size_t>(k - l + 1), l));
}

/// Multiplication by s_□ for the k-rectangle of width l: s^(k)_μ ↦ s^(k)_{μ∪□}.
inline SymFunc rectangle_multiply(int k, int l, const SymFunc& f) {
  if (f.basis() != Basis::kschur || f.k() != k) throw Error("rectangle_multiply expects the s^(k) basis");
  const Partition rect = k_rectangle(k, l);
  SymFunc out(Basis::kschur, f.degree() + static_cast<int>(rect.degree()), k);
  for (const auto& [mu, c] : f.terms()) out.add(union_of(mu, rect), c);
  return out;
}

}  // namespace kschur
