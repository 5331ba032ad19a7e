#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcat/error.hpp"

namespace pcat {

enum class Color : std::uint8_t { white, black };

constexpr Color invert(Color c) noexcept { return c == Color::white ? Color::black : Color::white; }

enum class Row : std::uint8_t { upper, lower };

/// A point addressed by its row and its 1-based rank in the native
/// left-to-right order of that row.
struct Point {
  Row row;
  int index;

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point upper(int index) { return {Row::upper, index}; }
inline Point lower(int index) { return {Row::lower, index}; }

std::string to_string(Point p);

/// Two rows of colored points together with a set partition of all points.
///
/// Blocks are stored as a label word over the reading order (upper row left
/// to right, then lower row left to right). The word is kept in
/// restricted-growth form, so two values compare equal exactly when they
/// describe the same partition.
class TwoColoredPartition {
 public:
  TwoColoredPartition() = default;

  /// `labels` assigns an arbitrary block id to each point in reading order.
  TwoColoredPartition(std::vector<Color> upper_colors, std::vector<Color> lower_colors,
                      std::vector<int> labels);

  /// Throws Errc::inconsistent_blocks unless `blocks` covers every point
  /// exactly once with nonempty blocks.
  static TwoColoredPartition from_blocks(std::vector<Color> upper_colors,
                                         std::vector<Color> lower_colors,
                                         const std::vector<std::vector<Point>>& blocks);

  int upper_size() const noexcept { return static_cast<int>(upper_.size()); }
  int lower_size() const noexcept { return static_cast<int>(lower_.size()); }
  int size() const noexcept { return upper_size() + lower_size(); }
  bool empty() const noexcept { return size() == 0; }
  int block_count() const noexcept { return block_count_; }

  std::span<const Color> upper_colors() const noexcept { return upper_; }
  std::span<const Color> lower_colors() const noexcept { return lower_; }
  std::span<const int> labels() const noexcept { return labels_; }

  bool contains(Point a) const noexcept;
  /// Throws Errc::point_out_of_range.
  Color color(Point a) const;
  int block_of(Point a) const;
  int reading_index(Point a) const;
  Point point_at_reading(int reading) const;

  /// Blocks in canonical order: by first occurrence in reading order, legs
  /// in reading order.
  std::vector<std::vector<Point>> blocks() const;
  std::vector<Point> points() const;

  friend bool operator==(const TwoColoredPartition&, const TwoColoredPartition&) = default;

 private:
  std::vector<Color> upper_;
  std::vector<Color> lower_;
  std::vector<int> labels_;
  int block_count_ = 0;
};

/// Total order used for deterministic listings: size, upper length, colors, labels.
bool canonical_less(const TwoColoredPartition& a, const TwoColoredPartition& b);

struct CanonicalEncoding {
  int upper_size = 0;
  int lower_size = 0;
  std::string upper_word;
  std::string lower_word;
  std::vector<int> block_word;

  std::string to_string() const;
  friend bool operator==(const CanonicalEncoding&, const CanonicalEncoding&) = default;
};

CanonicalEncoding canonicalize(const TwoColoredPartition& p);

std::string color_word(std::span<const Color> colors);

// Cyclic (counter-clockwise) order: lower row left to right, then upper row
// right to left.

/// Position 0..size-1 of `a` in the cyclic order.
int cyclic_position(const TwoColoredPartition& p, Point a);
Point point_at_cyclic(const TwoColoredPartition& p, int position);
std::vector<Point> cyclic_points(const TwoColoredPartition& p);

/// Throws Errc::empty_partition or Errc::point_out_of_range.
Point cyclic_successor(const TwoColoredPartition& p, Point a);

enum class IntervalKind { open, left_open, right_open, closed };

/// Points between `a` and `b` following the cyclic order. Limits must differ.
std::vector<Point> interval(const TwoColoredPartition& p, Point a, Point b, IntervalKind kind);

/// Ordered-tuple test for at least three pairwise distinct points.
bool is_ordered(const TwoColoredPartition& p, std::span<const Point> tuple);

/// Empty, a single point, an interval, or everything but one point.
bool is_consecutive(const TwoColoredPartition& p, std::span<const Point> set);

/// Unordered pairs (i, j), i < j, of canonical block indices that cross.
std::vector<std::pair<int, int>> crossing_block_pairs(const TwoColoredPartition& p);

bool is_non_crossing(const TwoColoredPartition& p);

}  // namespace pcat

template <>
struct std::hash<pcat::TwoColoredPartition> {
  std::size_t operator()(const pcat::TwoColoredPartition& p) const noexcept;
};
