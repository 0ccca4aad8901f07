#include <hexstrip/errors.hpp>
#include <hexstrip/strip.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <span>
#include <string>

namespace hexstrip {

std::string_view name(TileKind kind) {
  switch (kind) {
    case TileKind::Monomer: return "Monomer";
    case TileKind::SlantedDimer: return "SlantedDimer";
    case TileKind::HorizontalDimer: return "HorizontalDimer";
    case TileKind::Trimer: return "Trimer";
  }
  return "?";
}

std::string_view name(TileModel model) { return model == TileModel::MD ? "MD" : "MDT"; }

TileKind parse_tile_kind(std::string_view text) {
  for (TileKind kind : {TileKind::Monomer, TileKind::SlantedDimer, TileKind::HorizontalDimer, TileKind::Trimer}) {
    if (text == name(kind)) return kind;
  }
  throw UnknownName("unknown tile kind '" + std::string(text) + "'");
}

TileModel parse_tile_model(std::string_view text) {
  if (text == "MD" || text == "md") return TileModel::MD;
  if (text == "MDT" || text == "mdt") return TileModel::MDT;
  throw UnknownName("unknown tile model '" + std::string(text) + "'");
}

bool allows(TileModel model, TileKind kind) {
  switch (kind) {
    case TileKind::Monomer:
    case TileKind::SlantedDimer: return true;
    case TileKind::HorizontalDimer: return model == TileModel::MD;
    case TileKind::Trimer: return model == TileModel::MDT;
  }
  return false;
}

int tile_size(TileKind kind) {
  switch (kind) {
    case TileKind::Monomer: return 1;
    case TileKind::SlantedDimer:
    case TileKind::HorizontalDimer: return 2;
    case TileKind::Trimer: return 3;
  }
  return 0;
}

CellSet covers(TileKind kind, int anchor) {
  switch (kind) {
    case TileKind::Monomer: return {anchor};
    case TileKind::SlantedDimer: return {anchor, anchor + 1};
    case TileKind::HorizontalDimer: return {anchor, anchor + 2};
    case TileKind::Trimer: return {anchor, anchor + 1, anchor + 2};
  }
  return {};
}

Tiling::Tiling(int n, TileModel model, std::vector<PlacedTile> tiles)
    : n_(n), model_(model), tiles_(std::move(tiles)) {
  std::stable_sort(tiles_.begin(), tiles_.end(),
                   [](const PlacedTile& x, const PlacedTile& y) { return x.anchor < y.anchor; });
}

std::size_t Tiling::count(TileKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(tiles_.begin(), tiles_.end(), [kind](const PlacedTile& tile) { return tile.kind == kind; }));
}

std::size_t Tiling::dimer_count() const {
  return count(TileKind::SlantedDimer) + count(TileKind::HorizontalDimer);
}

std::string_view name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Overlap: return "overlap";
    case Violation::Kind::Gap: return "gap";
    case Violation::Kind::OutOfRange: return "out-of-range";
    case Violation::Kind::KindNotInModel: return "kind-not-in-model";
  }
  return "?";
}

std::optional<Violation> validate(const Tiling& tiling, TileModel model) {
  const int n = tiling.length();
  if (n < 0) return Violation{Violation::Kind::OutOfRange, n, 0, "negative strip length"};

  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  const auto& tiles = tiling.tiles();
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const PlacedTile& tile = tiles[i];
    const std::string where = std::string(name(tile.kind)) + "@" + std::to_string(tile.anchor);
    if (!allows(model, tile.kind)) {
      return Violation{Violation::Kind::KindNotInModel, 0, i,
                       where + " is not allowed in model " + std::string(name(model))};
    }
    for (int cell : tile.cells()) {
      if (cell < 1 || cell > n) {
        return Violation{Violation::Kind::OutOfRange, cell, i,
                         where + " covers cell " + std::to_string(cell) + " outside 1.." + std::to_string(n)};
      }
      if (covered[static_cast<std::size_t>(cell)]) {
        return Violation{Violation::Kind::Overlap, cell, i,
                         where + " overlaps an earlier tile at cell " + std::to_string(cell)};
      }
      covered[static_cast<std::size_t>(cell)] = true;
    }
  }
  for (int cell = 1; cell <= n; ++cell) {
    if (!covered[static_cast<std::size_t>(cell)]) {
      return Violation{Violation::Kind::Gap, cell, 0, "cell " + std::to_string(cell) + " is not covered"};
    }
  }
  return std::nullopt;
}

std::vector<int> break_positions(const Tiling& tiling) {
  const int n = tiling.length();
  if (n < 2) return {};
  // spanned[k] is true when some tile covers cells on both sides of k|k+1
  std::vector<bool> spanned(static_cast<std::size_t>(n), false);
  for (const PlacedTile& tile : tiling.tiles()) {
    for (int k = tile.anchor; k < tile.last_cell(); ++k) {
      if (k >= 1 && k < n) spanned[static_cast<std::size_t>(k)] = true;
    }
  }
  std::vector<int> result;
  for (int k = 1; k < n; ++k) {
    if (!spanned[static_cast<std::size_t>(k)]) result.push_back(k);
  }
  return result;
}

std::size_t BlockWord::count(char letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::optional<int> letter_length(TileModel model, char letter) {
  switch (letter) {
    case 'm': return 1;
    case 'd': return 2;
    case 't': return 3;
    case 'v':
      if (model == TileModel::MD) return 4;
      return std::nullopt;
    default: return std::nullopt;
  }
}

int BlockWord::cell_length(TileModel model) const {
  int total = 0;
  for (char letter : letters_) {
    auto len = letter_length(model, letter);
    if (!len) {
      throw AlphabetMismatch("letter '" + std::string(1, letter) + "' is not in the " + std::string(name(model)) +
                             " block alphabet");
    }
    total += *len;
  }
  return total;
}

namespace {

// Name one unbreakable block; `tiles` are its tiles in anchor order and
// `start` its first cell.
char classify_block(TileModel model, std::span<const PlacedTile> tiles, int start) {
  auto is = [&](std::size_t i, TileKind kind, int anchor) {
    return tiles[i].kind == kind && tiles[i].anchor == anchor;
  };
  if (tiles.size() == 1 && is(0, TileKind::Monomer, start)) return 'm';
  if (tiles.size() == 1 && is(0, TileKind::SlantedDimer, start)) return 'd';
  if (model == TileModel::MDT) {
    if (tiles.size() == 1 && is(0, TileKind::Trimer, start)) return 't';
  } else if (tiles.size() == 2) {
    if (is(0, TileKind::HorizontalDimer, start) && is(1, TileKind::Monomer, start + 1)) return 't';
    if (is(0, TileKind::HorizontalDimer, start) && is(1, TileKind::HorizontalDimer, start + 1)) return 'v';
  }
  throw MalformedBlock("unbreakable block starting at cell " + std::to_string(start) + " matches no " +
                       std::string(name(model)) + " block");
}

}  // namespace

BlockWord to_block_word(const Tiling& tiling) {
  const auto breaks = break_positions(tiling);
  const auto& tiles = tiling.tiles();
  std::string letters;
  std::size_t next_tile = 0;
  int start = 1;
  auto emit_block = [&](int end) {
    std::size_t first = next_tile;
    while (next_tile < tiles.size() && tiles[next_tile].anchor <= end) ++next_tile;
    letters.push_back(classify_block(tiling.model(), std::span(tiles).subspan(first, next_tile - first), start));
    start = end + 1;
  };
  for (int k : breaks) emit_block(k);
  if (tiling.length() > 0) emit_block(tiling.length());
  if (next_tile != tiles.size()) throw MalformedBlock("tiles lie outside the strip");
  return BlockWord(std::move(letters));
}

Tiling from_block_word(const BlockWord& word, TileModel model) {
  const int n = word.cell_length(model);
  std::vector<PlacedTile> tiles;
  int at = 1;
  for (char letter : word.letters()) {
    switch (letter) {
      case 'm': tiles.push_back({TileKind::Monomer, at}); break;
      case 'd': tiles.push_back({TileKind::SlantedDimer, at}); break;
      case 't':
        if (model == TileModel::MDT) {
          tiles.push_back({TileKind::Trimer, at});
        } else {
          tiles.push_back({TileKind::HorizontalDimer, at});
          tiles.push_back({TileKind::Monomer, at + 1});
        }
        break;
      case 'v':
        tiles.push_back({TileKind::HorizontalDimer, at});
        tiles.push_back({TileKind::HorizontalDimer, at + 1});
        break;
    }
    at += *letter_length(model, letter);
  }
  return Tiling(n, model, std::move(tiles));
}

std::string to_json(const Tiling& tiling) {
  nlohmann::ordered_json tiles = nlohmann::ordered_json::array();
  for (const PlacedTile& tile : tiling.tiles()) {
    tiles.push_back({{"kind", name(tile.kind)}, {"anchor", tile.anchor}});
  }
  nlohmann::ordered_json doc;
  doc["n"] = tiling.length();
  doc["model"] = name(tiling.model());
  doc["tiles"] = std::move(tiles);
  return doc.dump();
}

Tiling tiling_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    std::vector<PlacedTile> tiles;
    for (const auto& tile : doc.at("tiles")) {
      tiles.push_back({parse_tile_kind(tile.at("kind").get<std::string>()), tile.at("anchor").get<int>()});
    }
    return Tiling(doc.at("n").get<int>(), parse_tile_model(doc.at("model").get<std::string>()), std::move(tiles));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad tiling JSON: ") + e.what());
  } catch (const UnknownName& e) {
    throw ParseError(std::string("bad tiling JSON: ") + e.what());
  }
}

}  // namespace hexstrip
