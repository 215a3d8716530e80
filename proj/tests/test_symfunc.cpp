#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <thread>

#include "kschur/cache.hpp"
#include "kschur/io.hpp"
#include "kschur/symfunc.hpp"
#include "oracles.hpp"

using namespace kschur;

namespace {

SymFunc ks(int k, const Partition& p) { return SymFunc::element(Basis::kschur, p, k); }
SymFunc s(const Partition& p) { return SymFunc::element(Basis::schur, p); }

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<std::int64_t>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j)
      for (std::size_t t = 0; t < b.size(); ++t) c[i][j] += a[i][t] * b[t][j];
  return c;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("kschur-test-" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "-" +
             std::to_string(counter_++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace

TEST(SymFunc, TermsAndArithmetic) {
  SymFunc f(Basis::schur, 3);
  f.add(Partition{2, 1}, 2);
  f.add(Partition{3}, 1);
  f.add(Partition{2, 1}, -2);
  EXPECT_EQ(f, s(Partition{3}));
  EXPECT_EQ(f.terms().size(), 1u);
  EXPECT_EQ((s(Partition{3}) - s(Partition{3})).is_zero(), true);
  EXPECT_EQ((s(Partition{3}) + s(Partition{2, 1})).coeff(Partition{2, 1}), 1);
  EXPECT_EQ(s(Partition{3}).scaled(-4).coeff(Partition{3}), -4);
  EXPECT_THROW(f.add(Partition{2}, 1), Error);
  EXPECT_THROW(SymFunc(Basis::kschur, 3, 2).add(Partition{3}, 1), Error);
  EXPECT_THROW(s(Partition{3}) + ks(3, Partition{3}), Error);
  EXPECT_EQ(ks(2, Partition{2, 1}).str(), "s2(2,1)");
  EXPECT_EQ(parse_basis("s"), Basis::schur);
  EXPECT_THROW(parse_basis("m"), Error);
}

TEST(Kostka, Examples) {
  const KostkaMatrix m = kostka_matrix(2, 3);
  EXPECT_EQ(m.order, (std::vector<Partition>{{2, 1}, {1, 1, 1}}));
  EXPECT_EQ(m.K, (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(unitriangular_inverse(m.K), (IntMatrix{{1, -1}, {0, 1}}));
  EXPECT_EQ(kschur_to_h_inverse(2, 3), (IntMatrix{{1, -1}, {0, 1}}));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(kostka_matrix(1, n).K, (IntMatrix{{1}}));
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(kostka_inverse(k, 0), (IntMatrix{{1}}));
}

TEST(Kostka, LargeKIsClassical) {
  for (int n = 1; n <= 6; ++n) {
    const KostkaMatrix m = kostka_matrix(n, n);
    for (const auto& mu : m.order)
      for (const auto& lam : m.order) EXPECT_EQ(m.at(mu, lam), oracle::kostka(mu.parts(), lam.parts()));
  }
}

TEST(Kostka, InverseTimesMatrixIsIdentity) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 8; ++n) {
      const KostkaMatrix& m = kostka(k, n);
      EXPECT_NO_THROW(check_unitriangular(m));
      EXPECT_EQ(product(kostka_inverse(k, n), m.K), identity(m.order.size()));
    }
}

TEST(Kostka, InverseErrors) {
  EXPECT_THROW(unitriangular_inverse(IntMatrix{{1, 0}, {1, 1}}), Error);
  EXPECT_THROW(unitriangular_inverse(IntMatrix{{2}}), Error);
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(unitriangular_inverse(IntMatrix{{1, big, 0}, {0, 1, big}, {0, 0, 1}}), OverflowError);
  EXPECT_THROW(kostka_matrix(0, 3), Error);
}

TEST(ToSchur, Examples) {
  EXPECT_EQ(to_schur(ks(2, Partition{2, 1})), s(Partition{3}) + s(Partition{2, 1}));
  EXPECT_EQ(to_schur(ks(2, Partition{1, 1, 1})), s(Partition{2, 1}) + s(Partition{1, 1, 1}));
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 7; ++n)
      for (const auto& lam : k_bounded_partitions(n, k))
        if (lam.main_hook() <= k) {
          EXPECT_EQ(to_schur(ks(k, lam)), s(lam));
        }
}

TEST(ToSchur, Unitriangular) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 7; ++n)
      for (const auto& lam : k_bounded_partitions(n, k)) {
        const SymFunc f = to_schur(ks(k, lam));
        EXPECT_EQ(f.coeff(lam), 1);
        for (const auto& [mu, c] : f.terms()) EXPECT_TRUE(mu == lam || dominates(mu, lam)) << mu.str() << lam.str();
      }
}

TEST(Bases, RoundTrips) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const auto& lam : k_bounded_partitions(n, k)) {
        EXPECT_EQ(to_kschur(to_h(ks(k, lam)), k), ks(k, lam));
        EXPECT_EQ(to_kschur(ks(k, lam), k), ks(k, lam));
        const SymFunc h = SymFunc::element(Basis::h, lam);
        EXPECT_EQ(to_h(to_kschur(h, k)), h);
        EXPECT_EQ(to_h(to_schur(h)), h);
      }
  // s_(3) has no expansion in the 2-Schur functions.
  EXPECT_THROW(to_kschur(s(Partition{3}), 2), Error);
}

TEST(HExpand, Examples) {
  EXPECT_EQ(h_expand(2, Partition{1, 1, 1}), ks(2, Partition{1, 1, 1}) + ks(2, Partition{2, 1}));
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= k; ++l) EXPECT_EQ(h_expand(k, Partition(std::vector<int>{l})), ks(k, Partition(std::vector<int>{l})));
  EXPECT_THROW(h_expand(2, Partition{3}), Error);
}

TEST(HExpand, CoefficientsAreSkewKostkaNumbers) {
  for (int k = 1; k <= 3; ++k)
    for (int total = 0; total <= 6; ++total)
      for (const auto& nu : k_bounded_partitions(total, k))
        for (int m = 0; m <= total; ++m)
          for (const auto& mu : k_bounded_partitions(m, k))
            for (const auto& lam : k_bounded_partitions(total - m, k)) {
              SymFunc f = ks(k, mu);
              for (int part : lam.parts()) f = multiply_h(part, f);
              const bool nested = core_of(nu, k).contains(core_of(mu, k));
              EXPECT_EQ(f.coeff(nu), nested ? skew_k_kostka(k, nu, mu, to_composition(lam)) : 0);
            }
}

TEST(Pieri, Sets) {
  EXPECT_EQ(h_pieri_set(2, Partition{1, 1}, 1), (std::vector<Partition>{{1, 1, 1}}));
  EXPECT_EQ(h_pieri_set(2, Partition{2}, 1), (std::vector<Partition>{{2, 1}}));
  for (int k = 1; k <= 3; ++k)
    for (const auto& nu : k_bounded_partitions(4, k)) {
      EXPECT_EQ(h_pieri_set(k, nu, 0), std::vector<Partition>{nu});
      EXPECT_EQ(e_pieri_set(k, nu, 0), std::vector<Partition>{nu});
    }
  EXPECT_THROW(h_pieri_set(2, Partition{1}, 3), Error);
  EXPECT_THROW(e_pieri_set(2, Partition{1}, 3), Error);
}

TEST(Pieri, Products) {
  EXPECT_EQ(multiply_h(1, ks(2, Partition{1, 1})), ks(2, Partition{1, 1, 1}));
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= k; ++l) EXPECT_EQ(multiply_h(l, ks(k, Partition{})), ks(k, Partition(std::vector<int>{l})));
  EXPECT_THROW(multiply_h(3, ks(2, Partition{1})), Error);
  EXPECT_THROW(multiply_e(3, ks(2, Partition{1})), Error);
  EXPECT_THROW(multiply_h(1, SymFunc::element(Basis::e, Partition{1})), Error);
  EXPECT_THROW(multiply_e(1, SymFunc::element(Basis::h, Partition{1})), Error);
}

TEST(Pieri, AgreesWithClassicalProducts) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const auto& nu : k_bounded_partitions(n, k)) {
        const SymFunc f = ks(k, nu), fs = to_schur(f);
        for (int l = 0; l <= k; ++l) {
          const Partition row = l == 0 ? Partition{} : Partition(std::vector<int>{l});
          const Partition col = l == 0 ? Partition{} : Partition(std::vector<int>(static_cast<std::size_t>(l), 1));
          EXPECT_EQ(to_schur(multiply_h(l, f)), multiply(s(row), fs));
          EXPECT_EQ(to_schur(multiply_e(l, f)), multiply(s(col), fs));
        }
      }
}

TEST(Multiply, SmallProducts) {
  EXPECT_EQ(multiply(s(Partition{1}), s(Partition{1})), s(Partition{2}) + s(Partition{1, 1}));
  EXPECT_EQ(multiply(s(Partition{2}), s(Partition{1})), s(Partition{3}) + s(Partition{2, 1}));
  EXPECT_EQ(multiply(s(Partition{1, 1}), s(Partition{1, 1})),
            s(Partition{2, 2}) + s(Partition{2, 1, 1}) + s(Partition{1, 1, 1, 1}));
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(ks(2, Partition{2, 1})), ks(2, Partition{1, 1, 1}));
  EXPECT_EQ(omega(s(Partition{3})), s(Partition{1, 1, 1}));
  EXPECT_EQ(omega(SymFunc::element(Basis::h, Partition{2, 1})), SymFunc::element(Basis::e, Partition{2, 1}));
}

TEST(Omega, CommutesWithSchurExpansion) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 7; ++n)
      for (const auto& lam : k_bounded_partitions(n, k)) {
        const SymFunc f = ks(k, lam);
        EXPECT_EQ(to_schur(omega(f)), omega(to_schur(f)));
        EXPECT_EQ(omega(omega(f)), f);
        EXPECT_EQ(to_schur(omega(to_h(f))), to_schur(omega(f)));
      }
}

TEST(Rectangle, Examples) {
  EXPECT_EQ(k_rectangle(2, 2), (Partition{2}));
  EXPECT_EQ(k_rectangle(2, 1), (Partition{1, 1}));
  EXPECT_EQ(rectangle_multiply(2, 2, ks(2, Partition{1})), ks(2, Partition{2, 1}));
  EXPECT_EQ(rectangle_multiply(2, 1, ks(2, Partition{})), ks(2, Partition{1, 1}));
  EXPECT_THROW(k_rectangle(2, 3), Error);
  EXPECT_THROW(rectangle_multiply(2, 1, s(Partition{1})), Error);
}

TEST(Rectangle, FactorsOutInSchurBasis) {
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= k; ++l) {
      const Partition rect = k_rectangle(k, l);
      EXPECT_EQ(to_schur(ks(k, rect)), s(rect));
      for (int n = 0; n <= 5; ++n)
        for (const auto& mu : k_bounded_partitions(n, k))
          EXPECT_EQ(to_schur(rectangle_multiply(k, l, ks(k, mu))), multiply(s(rect), to_schur(ks(k, mu))));
    }
}

TEST(Json, RoundTrips) {
  SymFunc f = ks(3, Partition{2, 1}) + ks(3, Partition{1, 1, 1}).scaled(-2);
  EXPECT_EQ(symfunc_from_json(to_json(f)), f);
  const json j = to_json(f);
  EXPECT_EQ(j["basis"], "kschur");
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["degree"], 3);
  const KostkaMatrix& m = kostka(3, 5);
  const KostkaMatrix back = kostka_from_json(to_json(m));
  EXPECT_EQ(back.order, m.order);
  EXPECT_EQ(back.K, m.K);
  json bad = to_json(m);
  bad["K"][1][0] = 1;
  EXPECT_THROW(kostka_from_json(bad), Error);
}

TEST(Cache, ConcurrentCallersShareOneMatrix) {
  set_kostka_source(nullptr);
  std::vector<const KostkaMatrix*> seen(8, nullptr);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i)
    threads.emplace_back([&seen, i] {
      seen[i] = &kostka(3, 8);
      kostka_inverse(3, 8);
    });
  for (auto& t : threads) t.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
  EXPECT_EQ(seen.front()->K, kostka_matrix(3, 8).K);
}

TEST(Cache, DiskRoundTrip) {
  TempDir dir;
  set_kostka_source(disk_kostka_source(dir.path()));
  const IntMatrix fresh = kostka(2, 5).K;
  const auto file = kostka_cache_file(dir.path(), 2, 5);
  ASSERT_TRUE(std::filesystem::exists(file));
  const auto loaded = load_kostka(file, 2, 5);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->K, fresh);
  EXPECT_FALSE(load_kostka(file, 2, 6).has_value());

  // A stored file is used as is, so an edited (still unitriangular) entry shows.
  json j = to_json(*loaded);
  j["K"][0][1] = 7;
  std::ofstream(file) << j.dump();
  set_kostka_source(disk_kostka_source(dir.path()));
  EXPECT_EQ(kostka(2, 5).K[0][1], 7);

  // Unreadable files are recomputed and replaced.
  std::ofstream(file) << "not json";
  set_kostka_source(disk_kostka_source(dir.path()));
  EXPECT_EQ(kostka(2, 5).K, fresh);
  EXPECT_EQ(load_kostka(file, 2, 5)->K, fresh);
  set_kostka_source(nullptr);
}

TEST(Checked, Overflow) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(checked_add(big, 1), OverflowError);
  EXPECT_THROW(checked_mul(big, 2), OverflowError);
  EXPECT_THROW(checked_sub(-big, 2), OverflowError);
  EXPECT_EQ(checked_add(2, 3), 5);
}
