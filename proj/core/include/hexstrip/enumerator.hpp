#pragma once

// Exhaustive generation of strip tilings. This is the brute-force reference
// that every counting formula is checked against, so it deliberately knows
// nothing about recurrences.

#include <hexstrip/big_count.hpp>
#include <hexstrip/strip.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hexstrip {

inline constexpr int kDefaultEnumerationCap = 22;

struct EnumerationOptions {
  int cap = kDefaultEnumerationCap;
};

/// Calls `visit` once per tiling of the length-n strip, in canonical order:
/// cover the smallest uncovered cell, trying Monomer, SlantedDimer,
/// HorizontalDimer, Trimer in that order. n = 0 yields the empty tiling.
/// Throws CapExceeded when n > options.cap and IndexError when n < 0.
void for_each_tiling(int n, TileModel model, const std::function<void(const Tiling&)>& visit,
                     EnumerationOptions options = {});

std::vector<Tiling> enumerate_tilings(int n, TileModel model, EnumerationOptions options = {});

/// Per-kind tile counts of a tiling. For MD, `dimers` merges slanted and
/// horizontal dimers and `trimers` is always 0.
struct TileStatistics {
  std::size_t monomers = 0;
  std::size_t dimers = 0;
  std::size_t trimers = 0;

  friend bool operator==(const TileStatistics&, const TileStatistics&) = default;
};

/// Ordered by trimers, then dimers (ascending).
struct StatisticsOrder {
  bool operator()(const TileStatistics& x, const TileStatistics& y) const {
    if (x.trimers != y.trimers) return x.trimers < y.trimers;
    if (x.dimers != y.dimers) return x.dimers < y.dimers;
    return x.monomers < y.monomers;
  }
};

using StatisticsHistogram = std::map<TileStatistics, BigCount, StatisticsOrder>;

TileStatistics statistics(const Tiling& tiling);

StatisticsHistogram count_by_statistics(int n, TileModel model, EnumerationOptions options = {});

/// "(monomers=2,dimers=0)" for MD, "(monomers=1,dimers=1,trimers=0)" for MDT.
std::string statistics_key(const TileStatistics& stats, TileModel model);

/// Sum over MD tilings of a^monomers * b^dimers.
BigCount weighted_count(int n, const BigCount& a, const BigCount& b, EnumerationOptions options = {});

}  // namespace hexstrip
