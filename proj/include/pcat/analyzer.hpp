#pragma once

#include <set>
#include <span>
#include <string>

#include "pcat/partition.hpp"

namespace pcat {

/// +1 for normalized white, -1 for normalized black. Upper points count
/// with their color inverted.
int normalized_color(const TwoColoredPartition& p, Point a);

int sigma(const TwoColoredPartition& p, std::span<const Point> set);
int total_color_sum(const TwoColoredPartition& p);

/// Color distance from `a` to `b`.
int delta(const TwoColoredPartition& p, Point a, Point b);

struct ZProfile {
  std::set<int> F, V, Sigma, L, K, X;

  friend bool operator==(const ZProfile&, const ZProfile&) = default;
};

ZProfile z_profile(const TwoColoredPartition& p);
ZProfile z_profile(std::span<const TwoColoredPartition> ps);

/// Accumulates the profile of `p` into `out`.
void add_to_profile(ZProfile& out, const TwoColoredPartition& p);

/// `F={4} V={0} S={0} L={} K={0} X={}`
std::string to_string(const ZProfile& z);

/// delta in m*Z for every ordered pair of legs of a common block, including
/// a leg paired with itself (which pins the total color sum).
bool delta_same_block_all_pairs(const TwoColoredPartition& p, int m);

}  // namespace pcat
