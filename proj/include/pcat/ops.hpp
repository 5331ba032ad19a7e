#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat {

// Named partitions used throughout.
TwoColoredPartition identity(Color c);          // one upper and one lower point, one block
TwoColoredPartition lower_pair(Color first, Color second);
TwoColoredPartition crossing_ww();              // up=ww; lo=ww; blocks=(U1 L2)(U2 L1)
TwoColoredPartition singletons_wb();            // lo=wb; blocks=(L1)(L2)
TwoColoredPartition four_block_wbwb();          // lo=wbwb; one block

/// ∅, identity white/black, lower pairs "wb" and "bw".
std::vector<TwoColoredPartition> base_partitions();

TwoColoredPartition tensor(const TwoColoredPartition& p, const TwoColoredPartition& q);
TwoColoredPartition tensor_power(const TwoColoredPartition& p, int n);
TwoColoredPartition involute(const TwoColoredPartition& p);

/// Upper row of `p` equals lower row of `q`, left to right.
bool composable(const TwoColoredPartition& p, const TwoColoredPartition& q);

/// Vertical concatenation with `q` stacked on top of `p`: lower row from `p`,
/// upper row from `q`. Components living only on the identified middle row
/// vanish. Throws Errc::not_composable.
TwoColoredPartition compose(const TwoColoredPartition& p, const TwoColoredPartition& q);

enum class RotationKind {
  down_left,    // leftmost upper point moves to the left end of the lower row
  down_right,   // rightmost upper point moves to the right end of the lower row
  up_left,      // leftmost lower point moves to the left end of the upper row
  up_right,     // rightmost lower point moves to the right end of the upper row
  cyclic_clockwise,         // up_left, then down_right
  cyclic_counterclockwise,  // down_left, then up_right
};

inline constexpr RotationKind basic_rotations[] = {RotationKind::down_left, RotationKind::down_right,
                                                   RotationKind::up_left, RotationKind::up_right};

const char* to_string(RotationKind kind) noexcept;

/// Whether `rotate(p, kind)` is defined.
bool can_rotate(const TwoColoredPartition& p, RotationKind kind) noexcept;

/// The moved point changes rows at the same side with inverted color and
/// keeps its block. Throws Errc::empty_source_row.
TwoColoredPartition rotate(const TwoColoredPartition& p, RotationKind kind);

TwoColoredPartition reflect(const TwoColoredPartition& p);
TwoColoredPartition color_invert(const TwoColoredPartition& p);
TwoColoredPartition verticolor_reflect(const TwoColoredPartition& p);

/// Cyclically adjacent pairs {a, successor(a)} with opposite normalized
/// colors, each reported once as (a, successor(a)).
std::vector<std::pair<Point, Point>> turns(const TwoColoredPartition& p);

/// Removes `erased`; every block meeting it merges into one block on the
/// surviving points (dropped if nothing survives). Survivors keep their
/// relative native order.
TwoColoredPartition erase(const TwoColoredPartition& p, std::span<const Point> erased);

}  // namespace pcat
