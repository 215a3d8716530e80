#pragma once

#include <algorithm>
#include <vector>

#include "kschur/shapes.hpp"

namespace kschur {

/// ∅ = shapes[0] ⊆ shapes[1] ⊆ ... ⊆ shapes[r] with consecutive pairs
/// weight_j-admissible.
struct AdmissibleChain {
  int k = 1;
  std::vector<Partition> shapes;
  Composition weight;

  friend bool operator==(const AdmissibleChain&, const AdmissibleChain&) = default;
  friend auto operator<=>(const AdmissibleChain& a, const AdmissibleChain& b) { return a.shapes <=> b.shapes; }
};

inline bool is_admissible_chain(const AdmissibleChain& ch) {
  if (ch.shapes.size() != static_cast<std::size_t>(ch.weight.length() + 1)) return false;
  if (!ch.shapes.front().empty()) return false;
  for (int j = 1; j <= ch.weight.length(); ++j)
    if (!is_l_admissible(ch.shapes[static_cast<std::size_t>(j)], ch.shapes[static_cast<std::size_t>(j - 1)],
                         ch.weight(j), ch.k))
      return false;
  return true;
}

inline std::vector<AdmissibleChain> enumerate_chains(int k, const Partition& mu, const Composition& weight) {
  if (!mu.is_k_bounded(k)) throw Error("part exceeds k");
  std::vector<AdmissibleChain> out;
  if (weight.degree() != mu.degree()) return out;
  const int r = weight.length();
  std::vector<Partition> shapes(static_cast<std::size_t>(r + 1));
  shapes[static_cast<std::size_t>(r)] = mu;
  auto rec = [&](auto&& self, int j) -> void {
    const Partition& top = shapes[static_cast<std::size_t>(j)];
    if (j == 0) {
      if (top.empty()) out.push_back(AdmissibleChain{k, shapes, weight});
      return;
    }
    for (Partition& nu : remove_horizontal_strips(top, weight(j))) {
      if (!is_l_admissible(top, nu, weight(j), k)) continue;
      shapes[static_cast<std::size_t>(j - 1)] = std::move(nu);
      self(self, j - 1);
    }
  };
  rec(rec, r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kschur
