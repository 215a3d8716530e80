#pragma once

// Exhaustive property sweeps over k ≤ max_k and degrees ≤ max_degree.
// Every suite returns a report with a check count, a failure count and the
// first few counterexamples; it never throws for a failed property.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "kschur/backtrack.hpp"
#include "kschur/chains.hpp"
#include "kschur/classical.hpp"
#include "kschur/io.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tau.hpp"
#include "kschur/two_letter.hpp"

namespace kschur {

struct VerifyOptions {
  int max_k = 3;
  int max_degree = 7;
};

struct SuiteReport {
  static constexpr std::size_t kMaxCounterexamples = 10;

  std::string suite;
  VerifyOptions options;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  json counterexamples = json::array();
  json notes = json::object();

  bool passed() const { return failures == 0; }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(describe());
  }

  /// Runs `body`, turning an exception into a failed check.
  template <class Body, class Describe>
  void guarded(Body&& body, Describe&& describe) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] {
        json j = describe();
        j["error"] = e.what();
        return j;
      });
    }
  }

  void note(const std::string& key, std::int64_t n) {
    notes[key] = notes.value(key, std::int64_t{0}) + n;
  }
};

inline json to_json(const SuiteReport& r) {
  return {{"suite", r.suite},
          {"k", r.options.max_k},
          {"max_degree", r.options.max_degree},
          {"passed", r.passed()},
          {"checks", r.checks},
          {"failures", r.failures},
          {"counterexamples", r.counterexamples},
          {"notes", r.notes}};
}

/// Violations of the per-letter structure of a k-tableau: residue-set
/// containment between rows, and deletion closure of every restriction.
inline std::vector<std::string> tableau_violations(const KTableau& t, const Composition& weight) {
  std::vector<std::string> out;
  const int m = t.modulus();
  const int rows = t.outer.length();
  for (int x = 1; x <= weight.length(); ++x) {
    std::vector<std::set<int>> res(static_cast<std::size_t>(rows));
    for (const auto& [c, letter] : t.cells())
      if (letter == x) res[static_cast<std::size_t>(c.row - 1)].insert(residue(c, m));
    for (int r = 1; r <= rows; ++r)
      for (int s = r + 1; s <= rows; ++s) {
        const auto& lo = res[static_cast<std::size_t>(r - 1)];
        const auto& hi = res[static_cast<std::size_t>(s - 1)];
        bool shared = false;
        for (int i : hi) shared = shared || lo.contains(i);
        if (shared && !is_subset(hi, lo))
          out.push_back("Res_" + std::to_string(s) + "(" + std::to_string(x) + ") not within Res_" + std::to_string(r));
      }

    const int w = weight(x);
    const LetterInstanceOrder order = instance_order(t, x);
    for (int rank = 1; rank <= w; ++rank) {
      for (bool strict : {false, true}) {
        std::vector<int> parts(weight.parts().begin(), weight.parts().begin() + x);
        parts.back() = w - (rank - 1) - (strict ? 1 : 0);
        try {
          const KTableau sub = restrict(t, x, rank, strict);
          const Validation v = validate(sub, Composition(parts));
          if (!v.ok())
            out.push_back("restriction of letter " + std::to_string(x) + " rank " + std::to_string(rank) +
                          (strict ? " (strict)" : "") + " invalid: " + v.issues.front());
          if (!strict) {
            // The lowest, rightmost x of the restriction has residue j_rank and ends its row.
            Cell best{0, 0};
            for (const auto& [c, letter] : sub.cells())
              if (letter == x && (best.row == 0 || c.row < best.row || (c.row == best.row && c.col > best.col)))
                best = c;
            if (best.row == 0 || residue(best, m) != order.residues[static_cast<std::size_t>(rank - 1)] ||
                best.col != sub.outer.row(best.row))
              out.push_back("restriction of letter " + std::to_string(x) + " rank " + std::to_string(rank) +
                            " does not end with x(j_rank)");
          }
        } catch (const std::exception& e) {
          out.push_back(std::string("restriction failed: ") + e.what());
        }
      }
    }
  }
  return out;
}

/// Violations of the married/divorced/single bookkeeping for letters a, a+1.
inline std::vector<std::string> pair_violations(const KTableau& t, int a) {
  std::vector<std::string> out;
  const int b = a + 1;
  const int m = t.modulus();
  const Classification cl = classify(t, a);
  const auto tag = [&](const Cell& c) { return cl.tags.at(c); };

  // Married a's open the a-run of their row; married b's close the b-run.
  for (int r = 1; r <= t.outer.length(); ++r) {
    bool a_unmarried_seen = false, b_married_seen = false;
    for (int c = t.inner.row(r) + 1; c <= t.outer.row(r); ++c) {
      const Cell cell{r, c};
      const int x = t.at(cell);
      if (x == a) {
        if (tag(cell) == EntryTag::married && a_unmarried_seen) out.push_back("married a after unmarried a in row " + std::to_string(r));
        if (tag(cell) != EntryTag::married) a_unmarried_seen = true;
      } else if (x == b) {
        if (tag(cell) == EntryTag::married) b_married_seen = true;
        else if (b_married_seen) out.push_back("unmarried b after married b in row " + std::to_string(r));
      }
    }
  }

  std::map<int, std::vector<Cell>> cells_a, cells_b;
  for (const auto& [c, x] : t.cells()) {
    if (x == a) cells_a[residue(c, m)].push_back(c);
    if (x == b) cells_b[residue(c, m)].push_back(c);
  }
  const auto highest_unmarried = [&](const std::vector<Cell>& cells) {
    int h = 0;
    for (const Cell& c : cells)
      if (cl.unmarried(c)) h = std::max(h, c.row);
    return h;
  };

  for (const auto& [j, bs] : cells_b) {
    const int hb = highest_unmarried(bs);
    if (hb == 0) continue;
    const auto it = cells_a.find(j);
    const bool has_a = it != cells_a.end();
    if (has_a)
      for (const Cell& c : it->second)
        if (tag(c) != EntryTag::married || c.row < hb)
          out.push_back("a(" + std::to_string(j) + ") at " + to_string(c) + " not married weakly above unmarried b");
    for (const Cell& c : bs) {
      if (!cl.unmarried(c)) continue;
      const Cell left{c.row, c.col - 1};
      const bool divorced_left = t.at(left) == b && tag(left) == EntryTag::divorced;
      if (divorced_left != has_a) out.push_back("divorced b left of unmarried b at " + to_string(c) + " mismatches a(" + std::to_string(j) + ")");
    }
  }
  for (const auto& [j, as] : cells_a) {
    const int ha = highest_unmarried(as);
    if (ha == 0) continue;
    const auto it = cells_b.find(j);
    const bool has_b = it != cells_b.end();
    if (has_b)
      for (const Cell& c : it->second)
        if (tag(c) != EntryTag::married || c.row <= ha)
          out.push_back("b(" + std::to_string(j) + ") at " + to_string(c) + " not married strictly above unmarried a");
    for (const Cell& c : as) {
      if (!cl.unmarried(c)) continue;
      const Cell right{c.row, c.col + 1};
      const bool divorced_right = t.at(right) == a && tag(right) == EntryTag::divorced;
      if (divorced_right != has_b) out.push_back("divorced a right of unmarried a at " + to_string(c) + " mismatches b(" + std::to_string(j) + ")");
    }
  }

  // Overlapping unmarried residue sets are nested letter by letter.
  for (int r = 1; r <= cl.rows(); ++r)
    for (int s = r + 1; s <= cl.rows(); ++s) {
      const auto ur = cl.ures(r), us = cl.ures(s);
      bool meet = false;
      for (int x : us) meet = meet || ur.contains(x);
      if (!meet) continue;
      if (!is_subset(cl.ures_a[static_cast<std::size_t>(s - 1)], cl.ures_a[static_cast<std::size_t>(r - 1)]) ||
          !is_subset(cl.ures_b[static_cast<std::size_t>(s - 1)], cl.ures_b[static_cast<std::size_t>(r - 1)]))
        out.push_back("URes of rows " + std::to_string(r) + " and " + std::to_string(s) + " meet without nesting");
    }

  try {
    fundamental_rows(cl);
  } catch (const std::exception& e) {
    out.push_back(e.what());
  }
  return out;
}

namespace detail {

inline json case_json(int k, const Partition& mu) { return {{"k", k}, {"mu", to_json(mu)}}; }

inline json case_json(int k, const Partition& mu, const Composition& alpha) {
  return {{"k", k}, {"mu", to_json(mu)}, {"weight", to_json(alpha)}};
}

inline SymFunc kschur_element(int k, const Partition& p) { return SymFunc::element(Basis::kschur, p, k); }

inline void for_each_k_bounded(const VerifyOptions& o, int min_degree, const std::function<void(int, const Partition&)>& f) {
  for (int k = 1; k <= o.max_k; ++k)
    for (int n = min_degree; n <= o.max_degree; ++n)
      for (const Partition& p : k_bounded_partitions(n, k)) f(k, p);
}

inline void suite_triangularity(SuiteReport& rep) {
  const VerifyOptions& o = rep.options;
  for (int k = 1; k <= o.max_k; ++k)
    for (int n = 0; n <= o.max_degree; ++n) {
      const auto ctx = [&] { return json{{"k", k}, {"degree", n}}; };
      rep.guarded(
          [&] {
            const auto order = k_bounded_partitions(n, k);
            for (std::size_t i = 0; i < order.size(); ++i)
              for (std::size_t j = i + 1; j < order.size(); ++j)
                rep.expect(!dominates(order[j], order[i]), [&] {
                  return json{{"k", k}, {"order_violation", {to_json(order[i]), to_json(order[j])}}};
                });
            const KostkaMatrix& km = kostka(k, n);
            for (std::size_t i = 0; i < order.size(); ++i)
              for (std::size_t j = 0; j < order.size(); ++j) {
                const auto v = k_kostka(k, order[i], to_composition(order[j]));
                const bool ok = i == j ? v == 1 : (v == 0 || dominates(order[i], order[j]));
                rep.expect(ok && km.K[i][j] == v, [&] {
                  return json{{"k", k}, {"mu", to_json(order[i])}, {"lambda", to_json(order[j])}, {"K", v}};
                });
              }
            const IntMatrix& inv = kostka_inverse(k, n);
            for (std::size_t i = 0; i < order.size(); ++i)
              for (std::size_t j = 0; j < order.size(); ++j) {
                std::int64_t s = 0;
                for (std::size_t t = 0; t < order.size(); ++t) s = checked_add(s, checked_mul(inv[i][t], km.K[t][j]));
                rep.expect(s == (i == j ? 1 : 0), [&] { return json{{"k", k}, {"degree", n}, {"inverse_entry", {i, j}}}; });
              }
          },
          ctx);
    }
}

inline void suite_weight_symmetry(SuiteReport& rep) {
  for_each_k_bounded(rep.options, 0, [&](int k, const Partition& mu) {
    const int n = static_cast<int>(mu.degree());
    rep.guarded(
        [&] {
          for (const Composition& alpha : compositions(n)) {
            const auto lhs = k_kostka(k, mu, alpha);
            const auto rhs = k_kostka(k, mu, to_composition(alpha.sorted()));
            rep.expect(lhs == rhs, [&] { return case_json(k, mu, alpha); });
            // Peeling the last letter: K_{μ,α} = Σ_ν K_{ν,α'} over α_r-admissible ν.
            if (alpha.length() == 0) continue;
            const int last = alpha(alpha.length());
            if (last > k) continue;
            std::vector<int> head(alpha.parts().begin(), alpha.parts().end() - 1);
            std::int64_t sum = 0;
            for (const Partition& nu : remove_horizontal_strips(mu, last))
              if (is_l_admissible(mu, nu, last, k)) sum = checked_add(sum, k_kostka(k, nu, Composition(head)));
            rep.expect(sum == lhs, [&] {
              json j = case_json(k, mu, alpha);
              j["recursion"] = "last";
              return j;
            });
          }
          // K_{μ,(ℓ,λ)} = Σ_ν K_{νλ} with the new letter first.
          for (int l = 1; l <= std::min(k, n); ++l)
            for (const Partition& lambda : k_bounded_partitions(n - l, k)) {
              std::vector<int> parts{l};
              parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
              std::int64_t sum = 0;
              for (const Partition& nu : remove_horizontal_strips(mu, l))
                if (is_l_admissible(mu, nu, l, k)) sum = checked_add(sum, k_kostka(k, nu, to_composition(lambda)));
              rep.expect(sum == k_kostka(k, mu, Composition(parts)), [&] {
                json j = case_json(k, mu, Composition(parts));
                j["recursion"] = "first";
                return j;
              });
            }
        },
        [&] { return case_json(k, mu); });
  });
}

inline void suite_tau(SuiteReport& rep) {
  for_each_k_bounded(rep.options, 1, [&](int k, const Partition& mu) {
    for (const Composition& alpha : compositions(static_cast<int>(mu.degree()))) {
      for (int a = 1; a < alpha.length(); ++a) {
        const auto ctx = [&] {
          json j = case_json(k, mu, alpha);
          j["a"] = a;
          return j;
        };
        rep.guarded(
            [&] {
              const Composition swapped = alpha.swapped(a);
              const auto src = enumerate(k, mu, {}, alpha);
              const auto dst = enumerate(k, mu, {}, swapped);
              std::vector<KTableau> images;
              for (const KTableau& t : src) {
                for (const std::string& v : pair_violations(t, a))
                  rep.expect(false, [&] {
                    json j = ctx();
                    j["tableau"] = to_json(t);
                    j["violation"] = v;
                    return j;
                  });
                KTableau u = tau(t, a);
                rep.expect(validate(u, swapped).ok() && u.outer == t.outer && u.inner == t.inner, [&] {
                  json j = ctx();
                  j["tableau"] = to_json(t);
                  j["image"] = to_json(u);
                  return j;
                });
                rep.expect(tau(u, a) == t, [&] {
                  json j = ctx();
                  j["not_involutive"] = to_json(t);
                  return j;
                });
                images.push_back(std::move(u));
              }
              std::sort(images.begin(), images.end());
              rep.expect(images == dst, [&] {
                json j = ctx();
                j["bijection"] = {{"source", src.size()}, {"target", dst.size()}};
                return j;
              });
              rep.note("tableaux", static_cast<std::int64_t>(src.size()));
            },
            ctx);
      }
    }
  });
}

inline std::vector<std::pair<Partition, Partition>> skew_pairs(int k, int max_degree) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int n = 1; n <= max_degree; ++n)
    for (const Partition& mu : k_bounded_partitions(n, k)) {
      const Partition outer = core_of(mu, k);
      for (int d = 1; d < n; ++d)
        for (const Partition& nu : k_bounded_partitions(d, k))
          if (outer.contains(core_of(nu, k))) out.emplace_back(mu, nu);
    }
  return out;
}

inline void suite_chains(SuiteReport& rep) {
  for_each_k_bounded(rep.options, 0, [&](int k, const Partition& mu) {
    const Partition core = core_of(mu, k);
    for (const Composition& alpha : compositions(static_cast<int>(mu.degree()))) {
      rep.guarded(
          [&] {
            const auto fast = enumerate_on_cores(k, core, {}, alpha, Mode::column_strict);
            rep.expect(static_cast<std::int64_t>(enumerate_chains(k, mu, alpha).size()) ==
                           static_cast<std::int64_t>(fast.size()),
                       [&] { return case_json(k, mu, alpha); });
            rep.expect(enumerate_backtracking(k, core, {}, alpha, Mode::column_strict) == fast, [&] {
              json j = case_json(k, mu, alpha);
              j["engines"] = "column-strict";
              return j;
            });
            rep.expect(enumerate_backtracking(k, core, {}, alpha, Mode::transposed) ==
                           enumerate_on_cores(k, core, {}, alpha, Mode::transposed),
                       [&] {
                         json j = case_json(k, mu, alpha);
                         j["engines"] = "transposed";
                         return j;
                       });
            for (const KTableau& t : fast) {
              const Validation v = validate(t, alpha);
              rep.expect(v.ok(), [&] { return json{{"invalid", to_json(t)}, {"issue", v.issues.front()}}; });
              for (const std::string& s : tableau_violations(t, alpha))
                rep.expect(false, [&] { return json{{"tableau", to_json(t)}, {"violation", s}}; });
            }
            rep.note("tableaux", static_cast<std::int64_t>(fast.size()));
          },
          [&] { return case_json(k, mu, alpha); });
    }
  });
  for (int k = 1; k <= rep.options.max_k; ++k)
    for (const auto& [mu, nu] : skew_pairs(k, rep.options.max_degree)) {
      const Partition outer = core_of(mu, k), inner = core_of(nu, k);
      for (const Composition& alpha : compositions(static_cast<int>(mu.degree() - nu.degree()))) {
        const auto ctx = [&] {
          json j = case_json(k, mu, alpha);
          j["nu"] = to_json(nu);
          return j;
        };
        rep.guarded(
            [&] {
              for (Mode mode : {Mode::column_strict, Mode::transposed}) {
                const auto fast = enumerate_on_cores(k, outer, inner, alpha, mode);
                rep.expect(enumerate_backtracking(k, outer, inner, alpha, mode) == fast, ctx);
                if (mode == Mode::column_strict)
                  for (const KTableau& t : fast)
                    for (const std::string& s : tableau_violations(t, alpha))
                      rep.expect(false, [&] { return json{{"tableau", to_json(t)}, {"violation", s}}; });
                rep.note("skew_tableaux", static_cast<std::int64_t>(fast.size()));
              }
            },
            ctx);
      }
    }
}

// Cores differing by a strip of one orientation carry exactly l residues.
inline bool core_strip_with_residues(const Partition& mu, const Partition& nu, int l, int k, bool vertical) {
  const Partition o = core_of(mu, k), i = core_of(nu, k);
  if (!o.contains(i)) return false;
  if (vertical ? !is_vertical_strip(o, i) : !is_horizontal_strip(o, i)) return false;
  return static_cast<int>(skew_residues(o, i, k + 1).size()) == l;
}

inline void suite_pieri(SuiteReport& rep, bool vertical) {
  const VerifyOptions& o = rep.options;
  for (int k = 1; k <= o.max_k; ++k) {
    rep.expect(
        [&] {
          try {
            vertical ? e_pieri_set(k, {}, k + 1) : h_pieri_set(k, {}, k + 1);
          } catch (const Error&) {
            return true;
          }
          return false;
        }(),
        [&] { return json{{"k", k}, {"missing_error", "Pieri degree exceeds k"}}; });
  }
  for_each_k_bounded(o, 0, [&](int k, const Partition& nu) {
    const SymFunc f = kschur_element(k, nu);
    for (int l = 0; l <= k; ++l) {
      const auto ctx = [&] { return json{{"k", k}, {"nu", to_json(nu)}, {"l", l}}; };
      rep.guarded(
          [&] {
            const auto set = vertical ? e_pieri_set(k, nu, l) : h_pieri_set(k, nu, l);
            const auto strips = vertical ? add_vertical_strips(nu, l, k) : add_horizontal_strips(nu, l, k);
            for (const Partition& lam : strips) {
              const bool in_set = std::binary_search(set.begin(), set.end(), lam, std::greater<>());
              rep.expect(in_set == core_strip_with_residues(lam, nu, l, k, vertical), [&] {
                json j = ctx();
                j["lambda"] = to_json(lam);
                j["strip_residues"] = in_set;
                return j;
              });
              if (!vertical)
                rep.expect(in_set == is_l_admissible(lam, nu, l, k), [&] {
                  json j = ctx();
                  j["lambda"] = to_json(lam);
                  return j;
                });
            }
            const SymFunc prod = vertical ? multiply_e(l, f) : multiply_h(l, f);
            const SymFunc classical = vertical ? multiply_e(l, to_schur(f)) : multiply_h(l, to_schur(f));
            rep.expect(to_schur(prod) == classical, ctx);
            if (vertical && l >= 1) {
              // Σ_{r<l} (−1)^r h_{l−r} e_r s^(k)_ν + (−1)^l e_l s^(k)_ν = 0.
              const SymFunc g = to_schur(f);
              SymFunc total(Basis::schur, f.degree() + l);
              for (int r = 0; r < l; ++r) total += multiply_h(l - r, multiply_e(r, g)).scaled(r % 2 == 0 ? 1 : -1);
              total += to_schur(prod).scaled(l % 2 == 0 ? 1 : -1);
              rep.expect(total.is_zero(), [&] {
                json j = ctx();
                j["newton_residual"] = to_json(total);
                return j;
              });
            }
          },
          ctx);
    }
  });
  // Skew Kostka numbers as coefficients of iterated Pieri products.
  for_each_k_bounded(o, 0, [&](int k, const Partition& mu) {
    const int base = static_cast<int>(mu.degree());
    for (int d = 1; base + d <= o.max_degree; ++d)
      for (const Partition& lambda : k_bounded_partitions(d, k)) {
        const auto ctx = [&] { return json{{"k", k}, {"mu", to_json(mu)}, {"lambda", to_json(lambda)}}; };
        rep.guarded(
            [&] {
              SymFunc g = kschur_element(k, mu);
              for (int part : lambda.parts()) g = vertical ? multiply_e(part, g) : multiply_h(part, g);
              const Partition inner = core_of(mu, k);
              for (const Partition& nu : k_bounded_partitions(base + d, k)) {
                const Partition outer = core_of(nu, k);
                std::int64_t expected = 0;
                if (outer.contains(inner)) {
                  const auto alpha = to_composition(lambda);
                  expected = vertical ? transposed_skew_kostka(k, nu, mu, alpha) : skew_k_kostka(k, nu, mu, alpha);
                }
                rep.expect(g.coeff(nu) == expected, [&] {
                  json j = ctx();
                  j["nu"] = to_json(nu);
                  j["coeff"] = g.coeff(nu);
                  j["expected"] = expected;
                  return j;
                });
              }
            },
            ctx);
      }
  });
  if (!vertical)
    for_each_k_bounded(o, 0, [&](int k, const Partition& lambda) {
      rep.guarded(
          [&] {
            SymFunc g = kschur_element(k, {});
            for (int part : lambda.parts()) g = multiply_h(part, g);
            rep.expect(g == h_expand(k, lambda), [&] { return json{{"k", k}, {"h_expand", to_json(lambda)}}; });
          },
          [&] { return json{{"k", k}, {"h_expand", to_json(lambda)}}; });
    });
}

inline void suite_msign(SuiteReport& rep) {
  const VerifyOptions& o = rep.options;
  for (int k = 1; k <= o.max_k; ++k)
    for (int l = 1; l <= k; ++l)
      for (int n = l; n <= o.max_degree; ++n)
        for (const Partition& mu : k_bounded_partitions(n, k))
          for (const Partition& nu : k_bounded_partitions(n - l, k)) {
            const auto ctx = [&] { return json{{"k", k}, {"l", l}, {"mu", to_json(mu)}, {"nu", to_json(nu)}}; };
            rep.guarded(
                [&] {
                  const auto fillings = enumerate_A(k, nu, l, mu);
                  std::int64_t signed_sum = 0;
                  std::vector<std::int64_t> by_r(static_cast<std::size_t>(l + 1), 0);
                  for (const TwoLetterFilling& t : fillings) {
                    const auto [r, s] = t.weight();
                    rep.expect(is_valid_two_letter(t), [&] {
                      json j = ctx();
                      j["invalid"] = to_json(t.filling);
                      return j;
                    });
                    if (free_entries(t).tie()) rep.note("ties", 1);
                    const TwoLetterFilling u = m_involution(t);
                    const auto [r2, s2] = u.weight();
                    const bool ok = is_valid_two_letter(u) && m_involution(u) == t && u.sign() == -t.sign() &&
                                    std::abs(r2 - r) == 1 && r2 - r == s - s2 &&
                                    std::binary_search(fillings.begin(), fillings.end(), u);
                    rep.expect(ok, [&] {
                      json j = ctx();
                      j["filling"] = to_json(t.filling);
                      j["image"] = to_json(u.filling);
                      return j;
                    });
                    signed_sum += t.sign();
                    ++by_r[static_cast<std::size_t>(r)];
                  }
                  rep.expect(signed_sum == 0, [&] {
                    json j = ctx();
                    j["signed_sum"] = signed_sum;
                    return j;
                  });
                  // Fillings of weight (r, l−r) count s^(k)_μ in h_{l−r} e_r s^(k)_ν.
                  const SymFunc f = kschur_element(k, nu);
                  for (int r = 0; r <= l; ++r) {
                    const auto c = multiply_h(l - r, multiply_e(r, f)).coeff(mu);
                    rep.expect(c == by_r[static_cast<std::size_t>(r)], [&] {
                      json j = ctx();
                      j["r"] = r;
                      j["fillings"] = by_r[static_cast<std::size_t>(r)];
                      j["coeff"] = c;
                      return j;
                    });
                  }
                  rep.note("fillings", static_cast<std::int64_t>(fillings.size()));
                },
                ctx);
          }
  if (!rep.notes.contains("ties")) rep.notes["ties"] = 0;
}

inline void suite_omega(SuiteReport& rep) {
  rep.notes["d_negative"] = 0;
  for_each_k_bounded(rep.options, 0, [&](int k, const Partition& lambda) {
    rep.guarded(
        [&] {
          const SymFunc f = kschur_element(k, lambda);
          const SymFunc fs = to_schur(f);
          rep.expect(to_schur(omega(f)) == omega(fs), [&] { return case_json(k, lambda); });
          rep.expect(omega(omega(f)) == f && omega(omega(fs)) == fs, [&] { return case_json(k, lambda); });
          rep.expect(to_schur(omega(to_h(f))) == omega(fs), [&] {
            json j = case_json(k, lambda);
            j["via"] = "e";
            return j;
          });
          bool tri = fs.coeff(lambda) == 1;
          for (const auto& [mu, c] : fs.terms()) {
            if (mu != lambda && !dominates(mu, lambda)) tri = false;
            if (c < 0) rep.note("d_negative", 1);
          }
          rep.expect(tri, [&] {
            json j = case_json(k, lambda);
            j["schur"] = to_json(fs);
            return j;
          });
        },
        [&] { return case_json(k, lambda); });
  });
}

inline void suite_rectangle(SuiteReport& rep) {
  for_each_k_bounded(rep.options, 0, [&](int k, const Partition& mu) {
    for (int l = 1; l <= k; ++l) {
      const auto ctx = [&] {
        json j = case_json(k, mu);
        j["width"] = l;
        return j;
      };
      rep.guarded(
          [&] {
            const Partition rect = k_rectangle(k, l);
            const SymFunc f = kschur_element(k, mu);
            const SymFunc lhs = to_schur(rectangle_multiply(k, l, f));
            const SymFunc rhs = multiply(SymFunc::element(Basis::schur, rect), to_schur(f));
            rep.expect(lhs == rhs, ctx);
            if (mu.empty())
              rep.expect(to_schur(kschur_element(k, rect)) == SymFunc::element(Basis::schur, rect), ctx);
          },
          ctx);
    }
  });
}

inline void suite_reduction(SuiteReport& rep) {
  for_each_k_bounded(rep.options, 0, [&](int k, const Partition& lambda) {
    if (lambda.main_hook() > k) return;
    rep.guarded(
        [&] {
          rep.expect(to_schur(kschur_element(k, lambda)) == SymFunc::element(Basis::schur, lambda),
                     [&] { return case_json(k, lambda); });
          rep.expect(core_of(lambda, k) == lambda, [&] { return case_json(k, lambda); });
          for (const Composition& alpha : compositions(static_cast<int>(lambda.degree()))) {
            const auto ts = enumerate(k, lambda, {}, alpha);
            std::vector<TableauRows> rows;
            for (const KTableau& t : ts) rows.push_back(t.rows);
            rep.expect(rows == classical_ssyt(lambda, alpha), [&] { return case_json(k, lambda, alpha); });
            for (int a = 1; a < alpha.length(); ++a)
              for (const KTableau& t : ts)
                rep.expect(tau(t, a).rows == bender_knuth(t.rows, a), [&] {
                  json j = case_json(k, lambda, alpha);
                  j["a"] = a;
                  j["tableau"] = to_json(t);
                  return j;
                });
          }
        },
        [&] { return case_json(k, lambda); });
  });
  for (int n = 0; n <= rep.options.max_degree; ++n) {
    rep.guarded(
        [&] {
          const KostkaMatrix& cl = kostka(classical_k(n), n);
          for (std::size_t i = 0; i < cl.order.size(); ++i)
            for (std::size_t j = 0; j < cl.order.size(); ++j) {
              const auto count = static_cast<std::int64_t>(classical_ssyt(cl.order[i], to_composition(cl.order[j])).size());
              rep.expect(cl.K[i][j] == count, [&] {
                return json{{"classical_kostka", {to_json(cl.order[i]), to_json(cl.order[j])}}, {"K", cl.K[i][j]}, {"ssyt", count}};
              });
            }
        },
        [&] { return json{{"degree", n}}; });
  }
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"triangularity", "weight-symmetry", "tau",   "chains",
                                              "pieri-h",       "pieri-e",         "msign", "omega",
                                              "rectangle",     "reduction"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (options.max_k < 1) throw Error("k must be positive");
  if (options.max_degree < 0) throw Error("max degree must be non-negative");
  SuiteReport rep;
  rep.suite = name;
  rep.options = options;
  if (name == "triangularity") detail::suite_triangularity(rep);
  else if (name == "weight-symmetry") detail::suite_weight_symmetry(rep);
  else if (name == "tau") detail::suite_tau(rep);
  else if (name == "chains") detail::suite_chains(rep);
  else if (name == "pieri-h") detail::suite_pieri(rep, false);
  else if (name == "pieri-e") detail::suite_pieri(rep, true);
  else if (name == "msign") detail::suite_msign(rep);
  else if (name == "omega") detail::suite_omega(rep);
  else if (name == "rectangle") detail::suite_rectangle(rep);
  else if (name == "reduction") detail::suite_reduction(rep);
  else throw Error("unknown suite: " + name);
  return rep;
}

/// `all` expands to every suite in the order of `suite_names()`.
inline std::vector<SuiteReport> run_verify(const std::string& name, const VerifyOptions& options) {
  std::vector<SuiteReport> out;
  if (name == "all")
    for (const auto& s : suite_names()) out.push_back(run_suite(s, options));
  else
    out.push_back(run_suite(name, options));
  return out;
}

}  // namespace kschur
