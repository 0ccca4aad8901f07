#pragma once

// Test-only exact-cover oracle, independent of the library enumerator.
//
// Every placement of every allowed tile inside the strip is listed by anchor,
// and each one is either taken or skipped. A subset survives if its cell
// masks are pairwise disjoint and their union is {1..n}. The only pruning is
// that once all placements anchored at or below cell i have been decided,
// cell i must already be covered. Usable up to n = 31.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace hexstrip::oracle {

enum class Model { MD, MDT };

struct Placement {
  std::uint32_t mask;
  int anchor;
  int size;
  bool is_trimer;
};

// (monomers, dimers, trimers) -> number of tilings
using Histogram = std::map<std::tuple<int, int, int>, std::uint64_t>;

inline std::vector<Placement> placements(int n, Model model) {
  std::vector<Placement> out;
  auto bit = [](int cell) { return std::uint32_t{1} << (cell - 1); };
  for (int i = 1; i <= n; ++i) {
    out.push_back({bit(i), i, 1, false});
    if (i + 1 <= n) out.push_back({bit(i) | bit(i + 1), i, 2, false});
    if (model == Model::MD && i + 2 <= n) out.push_back({bit(i) | bit(i + 2), i, 2, false});
    if (model == Model::MDT && i + 2 <= n) out.push_back({bit(i) | bit(i + 1) | bit(i + 2), i, 3, true});
  }
  return out;
}

namespace detail {

struct Walk {
  const std::vector<Placement>& tiles;
  std::uint32_t full;
  Histogram& out;

  void step(std::size_t index, std::uint32_t covered, int monomers, int dimers, int trimers) {
    if (index == tiles.size()) {
      if (covered == full) ++out[{monomers, dimers, trimers}];
      return;
    }
    const Placement& p = tiles[index];
    const std::uint32_t below = (std::uint32_t{1} << (p.anchor - 1)) - 1;
    if ((covered & below) != below) return;
    if ((covered & p.mask) == 0) {
      step(index + 1, covered | p.mask, monomers + (p.size == 1), dimers + (p.size == 2), trimers + p.is_trimer);
    }
    step(index + 1, covered, monomers, dimers, trimers);
  }
};

}  // namespace detail

inline Histogram subset_cover_histogram(int n, Model model) {
  const auto tiles = placements(n, model);
  Histogram histogram;
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  detail::Walk{tiles, full, histogram}.step(0, 0, 0, 0, 0);
  return histogram;
}

inline std::uint64_t subset_cover_count(int n, Model model) {
  std::uint64_t total = 0;
  for (const auto& [key, count] : subset_cover_histogram(n, model)) total += count;
  return total;
}

}  // namespace hexstrip::oracle
