#pragma once

// Cell-set model of honeycomb-strip tilings.
//
// Cells are numbered 1..n along the strip; cell i touches i+1 and i+2. A tile
// is identified only by the cells it covers, so ascending and descending
// slanted dimers (which differ by anchor parity) are the same kind.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hexstrip {

enum class TileKind { Monomer, SlantedDimer, HorizontalDimer, Trimer };

/// MD: monomers, slanted and horizontal dimers.
/// MDT: monomers, slanted dimers and trimers (no horizontal dimers).
enum class TileModel { MD, MDT };

std::string_view name(TileKind kind);
std::string_view name(TileModel model);
TileKind parse_tile_kind(std::string_view text);
/// Accepts "MD"/"md" and "MDT"/"mdt".
TileModel parse_tile_model(std::string_view text);

bool allows(TileModel model, TileKind kind);

/// Number of cells covered by a tile of this kind.
int tile_size(TileKind kind);

using CellSet = std::vector<int>;

/// Cells covered by `kind` anchored at `anchor`, ascending.
CellSet covers(TileKind kind, int anchor);

struct PlacedTile {
  TileKind kind = TileKind::Monomer;
  int anchor = 1;

  CellSet cells() const { return covers(kind, anchor); }
  int last_cell() const { return anchor + (kind == TileKind::Monomer ? 0 : kind == TileKind::SlantedDimer ? 1 : 2); }

  friend bool operator==(const PlacedTile&, const PlacedTile&) = default;
  friend auto operator<=>(const PlacedTile&, const PlacedTile&) = default;
};

/// A tiling of the length-n strip. Tiles are kept sorted by anchor; the
/// constructor sorts whatever it is given. Whether the tiles actually form an
/// exact cover is checked by validate(), not enforced here.
class Tiling {
 public:
  Tiling() = default;
  Tiling(int n, TileModel model, std::vector<PlacedTile> tiles);

  int length() const { return n_; }
  TileModel model() const { return model_; }
  const std::vector<PlacedTile>& tiles() const { return tiles_; }

  std::size_t count(TileKind kind) const;
  /// Slanted plus horizontal dimers.
  std::size_t dimer_count() const;

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  int n_ = 0;
  TileModel model_ = TileModel::MD;
  std::vector<PlacedTile> tiles_;
};

struct Violation {
  enum class Kind { Overlap, Gap, OutOfRange, KindNotInModel };
  Kind kind;
  int cell = 0;               // offending cell, 0 when not cell-specific
  std::size_t tile_index = 0; // index into Tiling::tiles(); unused for Gap
  std::string message;
};

std::string_view name(Violation::Kind kind);

/// nullopt when `tiling` is an exact cover of 1..n using tiles of `model`;
/// otherwise the first violation found scanning tiles in anchor order.
std::optional<Violation> validate(const Tiling& tiling, TileModel model);
inline std::optional<Violation> validate(const Tiling& tiling) { return validate(tiling, tiling.model()); }

/// Positions k in 1..n-1 such that no tile spans the boundary k|k+1.
std::vector<int> break_positions(const Tiling& tiling);

/// Sequence of unbreakable-block letters.
///   MD:  m (monomer), d (slanted dimer), t (horizontal dimer around a
///        monomer, 3 cells), v (two interlocked horizontal dimers, 4 cells)
///   MDT: m (monomer), d (slanted dimer), t (trimer)
class BlockWord {
 public:
  BlockWord() = default;
  explicit BlockWord(std::string letters) : letters_(std::move(letters)) {}

  const std::string& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  std::size_t count(char letter) const;

  /// Total number of cells spelled by the word under `model`. Throws
  /// AlphabetMismatch for a letter outside the model's alphabet.
  int cell_length(TileModel model) const;

  friend bool operator==(const BlockWord&, const BlockWord&) = default;

 private:
  std::string letters_;
};

/// Cells spanned by one letter, or nullopt if the letter is not in the model.
std::optional<int> letter_length(TileModel model, char letter);

/// Splits at every break position and names each block. Throws MalformedBlock
/// if a block is not in the model's catalog (only possible for invalid input).
BlockWord to_block_word(const Tiling& tiling);

/// Inverse of to_block_word. Throws AlphabetMismatch.
Tiling from_block_word(const BlockWord& word, TileModel model);

/// {"n":..,"model":"MD","tiles":[{"kind":"Monomer","anchor":1},...]}
std::string to_json(const Tiling& tiling);
/// Throws ParseError on malformed input or unknown names.
Tiling tiling_from_json(std::string_view text);

}  // namespace hexstrip
