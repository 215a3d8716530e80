#pragma once

// On-disk Kostka matrix cache: one JSON file per (k, degree) in the
// directory named by KSCHUR_CACHE_DIR. Unreadable or invalid files are
// recomputed and rewritten; write failures are ignored.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "kschur/io.hpp"

namespace kschur {

inline constexpr const char* kCacheEnvVar = "KSCHUR_CACHE_DIR";

inline std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* v = std::getenv(kCacheEnvVar);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

inline std::filesystem::path kostka_cache_file(const std::filesystem::path& dir, int k, int degree) {
  return dir / ("kostka_k" + std::to_string(k) + "_n" + std::to_string(degree) + ".json");
}

inline std::optional<KostkaMatrix> load_kostka(const std::filesystem::path& file, int k, int degree) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    KostkaMatrix m = kostka_from_json(json::parse(in));
    if (m.k != k || m.degree != degree) return std::nullopt;
    return m;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void store_kostka(const std::filesystem::path& file, const KostkaMatrix& m) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  // Write then rename so concurrent readers see either nothing or a whole file.
  std::filesystem::path tmp = file;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << to_json(m).dump() << '\n';
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

inline KostkaSource disk_kostka_source(std::filesystem::path dir) {
  return [dir = std::move(dir)](int k, int degree) {
    const auto file = kostka_cache_file(dir, k, degree);
    if (auto m = load_kostka(file, k, degree)) return *m;
    KostkaMatrix m = kostka_matrix(k, degree);
    store_kostka(file, m);
    return m;
  };
}

/// Installs the disk cache when KSCHUR_CACHE_DIR is set. Returns whether it did.
inline bool install_cache_from_env() {
  auto dir = cache_dir_from_env();
  if (!dir) return false;
  set_kostka_source(disk_kostka_source(*dir));
  return true;
}

}  // namespace kschur
