#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dehn/bigint.hpp"
#include "dehn/complexes.hpp"
#include "dehn/config.hpp"
#include "dehn/presentations.hpp"

namespace dehn {

/// Lazy description of an acting word: family, level, optional slot and an
/// exact length. The length may be given symbolically as w_{scale_k}(r),
/// which spheres at tower scales never materialize.
struct WordSchema {
  Family family = Family::U;
  int level = 0;
  int slot = 0;  // 0 = unspecified
  BigInt length;
  bool positive = true;
  int scale_k = -1;  // when >= 0, the length is w_{scale_k}(scale_r)
  int scale_r = 1;
  std::string render() const;
};

enum class MoveType { I, II };

struct MoveRecord {
  MoveType type;
  WordSchema acting;
  std::uint64_t target_id = 0;
};

/// Movable sphere pieces. Sites and strips are shared-locus ids: two half
/// pieces carrying the same id glue there.
struct DeltaPiece {
  std::uint64_t id = 0;
  DeltaSpec spec{0, 1, 2, 0, 1};
  // flanking strips, in side order [b_i, d_i, d_j, b_j]
  std::array<std::uint64_t, 4> flank_strips{};
};

struct ThetaPiece {
  std::uint64_t id = 0;
  ThetaSpec spec{0, 1, 0, 1};
  // the four lateral u-loci, [upper-left, upper-right, lower-left, lower-right]
  std::array<std::uint64_t, 4> u_sites{};
};

struct StripPiece {
  std::uint64_t id = 0;
  int scale_k = 0;  // length = w_{scale_k}(r)
  int r = 1;
};

struct HalfTheta {
  int n, i, k, r;
  std::uint64_t strip_site;  // pairs across this strip
  std::uint64_t corner_a, corner_b;
};

struct HalfDelta {
  int n, i, k, r;
  std::uint64_t u_site;                  // pairs along this u-locus
  std::uint64_t strip_horiz, strip_diag; // this move's flanking strips
};

struct IdGen {
  std::uint64_t next = 1;
  std::uint64_t fresh() { return next++; }
};

struct TypeIIResult {
  std::vector<HalfTheta> halves;       // four trapezoids
  std::uint64_t new_cell_id = 0;
  std::array<std::uint64_t, 4> corner_sites{};
  BigInt volume;        // >= area(target)/9
  BigInt area_removed;  // the covered Delta
};

struct TypeIResult {
  std::vector<HalfDelta> halves;  // four staircase halves
  std::vector<StripPiece> strips; // four new strips
  std::uint64_t new_cell_id = 0;
  std::array<std::uint64_t, 4> corner_sites{};
  BigInt volume;  // >= central strip length / 3
};

/// Combination move on a Delta piece: the quadrilateral is covered, four
/// trapezoid halves appear and join into next-generation Thetas.
/// `want_volume` skips the covered-area bookkeeping when the tower values
/// behind it exceed the recurrence cap.
TypeIIResult type_ii_move(const DeltaPiece& target, const MoveRecord& move,
                          IdGen& ids, const Config& cfg = Config{},
                          bool want_volume = true);

/// Subdivision move on a Theta piece: four staircase halves, four strips and
/// one balancing cell appear; halves pair along the u-loci into Deltas.
TypeIResult type_i_move(const ThetaPiece& target, const MoveRecord& move,
                        IdGen& ids, const Config& cfg = Config{},
                        bool want_volume = true);

struct InventoryPieceRow {
  std::string kind;  // "delta", "theta", "strip", "cell"
  DiagramSpec spec;
  std::uint64_t count;
  BigInt area_each;
};

/// Exact multiset accounting of one sphere.
struct Inventory {
  LevelTag level;
  int r = 1;
  std::vector<DeltaPiece> deltas;
  std::vector<ThetaPiece> thetas;
  std::vector<StripPiece> strips;
  std::uint64_t single_cells = 0;
  BigInt area;
  std::optional<BigInt> volume_lower;
  std::optional<BigInt> slab_reference;  // [w_.(r)]^2
  std::vector<std::uint64_t> attach_sites;
  std::vector<InventoryPieceRow> rows() const;
};

/// Exact 3-cell count of the slab, with the stated reference value.
struct SlabInfo {
  BigInt reference;    // [w_{k+1}(r)]^2
  BigInt exact_cells;  // 3-cells of the product complex
};
SlabInfo build_slab(int k, int r, const Config& cfg = Config{});

/// Piece areas at the final rendering.
BigInt delta_area(const DeltaSpec& s, const Config& cfg = Config{});
BigInt theta_area(const ThetaSpec& s, const Config& cfg = Config{});

/// Run the alternating move schedule from the slab. `want_volume` controls
/// whether tower values for the volume bound are computed (they can exceed
/// the recurrence cap at deep levels where the area is still cheap).
Inventory build_sphere(const LevelTag& level, int r, bool want_volume = true,
                       const Config& cfg = Config{});

/// Fully labeled sphere complexes for the small cases (G_0 and H_1).
CellComplex realize_explicit(const LevelTag& level, int r,
                             const Config& cfg = Config{});

}  // namespace dehn
