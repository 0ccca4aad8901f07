#include <hexstrip/enumerator.hpp>
#include <hexstrip/errors.hpp>

#include <algorithm>
#include <string>

namespace hexstrip {
namespace {

constexpr TileKind kBranchOrder[] = {TileKind::Monomer, TileKind::SlantedDimer, TileKind::HorizontalDimer,
                                     TileKind::Trimer};

class Search {
 public:
  Search(int n, TileModel model, const std::function<void(const Tiling&)>& visit)
      : n_(n), model_(model), visit_(visit), covered_(static_cast<std::size_t>(n) + 3, false) {}

  void run() { descend(1); }

 private:
  bool free(int cell) const { return cell <= n_ && !covered_[static_cast<std::size_t>(cell)]; }

  void set(const CellSet& cells, bool value) {
    for (int cell : cells) covered_[static_cast<std::size_t>(cell)] = value;
  }

  // Cells below `cell` are covered; a tile covering `cell` is anchored there.
  void descend(int cell) {
    while (cell <= n_ && covered_[static_cast<std::size_t>(cell)]) ++cell;
    if (cell > n_) {
      visit_(Tiling(n_, model_, placed_));
      return;
    }
    for (TileKind kind : kBranchOrder) {
      if (!allows(model_, kind)) continue;
      const CellSet cells = covers(kind, cell);
      bool fits = true;
      for (int c : cells) fits = fits && free(c);
      if (!fits) continue;
      set(cells, true);
      placed_.push_back({kind, cell});
      descend(cell + 1);
      placed_.pop_back();
      set(cells, false);
    }
  }

  int n_;
  TileModel model_;
  const std::function<void(const Tiling&)>& visit_;
  std::vector<bool> covered_;
  std::vector<PlacedTile> placed_;
};

void check_length(int n, const EnumerationOptions& options) {
  if (n < 0) throw IndexError("strip length " + std::to_string(n) + " is negative");
  if (n > options.cap) {
    throw CapExceeded("strip length " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(options.cap));
  }
}

}  // namespace

void for_each_tiling(int n, TileModel model, const std::function<void(const Tiling&)>& visit,
                     EnumerationOptions options) {
  check_length(n, options);
  Search(n, model, visit).run();
}

std::vector<Tiling> enumerate_tilings(int n, TileModel model, EnumerationOptions options) {
  std::vector<Tiling> result;
  for_each_tiling(n, model, [&](const Tiling& tiling) { result.push_back(tiling); }, options);
  return result;
}

TileStatistics statistics(const Tiling& tiling) {
  return {tiling.count(TileKind::Monomer), tiling.dimer_count(), tiling.count(TileKind::Trimer)};
}

StatisticsHistogram count_by_statistics(int n, TileModel model, EnumerationOptions options) {
  StatisticsHistogram histogram;
  for_each_tiling(n, model, [&](const Tiling& tiling) { histogram[statistics(tiling)] += 1; }, options);
  return histogram;
}

std::string statistics_key(const TileStatistics& stats, TileModel model) {
  std::string key = "(monomers=" + std::to_string(stats.monomers) + ",dimers=" + std::to_string(stats.dimers);
  if (model == TileModel::MDT) key += ",trimers=" + std::to_string(stats.trimers);
  return key + ")";
}

BigCount weighted_count(int n, const BigCount& a, const BigCount& b, EnumerationOptions options) {
  std::vector<BigCount> a_pow(static_cast<std::size_t>(std::max(n, 0)) + 1, 1);
  std::vector<BigCount> b_pow(a_pow.size(), 1);
  for (std::size_t i = 1; i < a_pow.size(); ++i) {
    a_pow[i] = a_pow[i - 1] * a;
    b_pow[i] = b_pow[i - 1] * b;
  }
  BigCount total = 0;
  for_each_tiling(
      n, TileModel::MD,
      [&](const Tiling& tiling) {
        const TileStatistics s = statistics(tiling);
        total += a_pow[s.monomers] * b_pow[s.dimers];
      },
      options);
  return total;
}

}  // namespace hexstrip
