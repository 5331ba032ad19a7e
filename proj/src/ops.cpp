#include "pcat/ops.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "union_find.hpp"

namespace pcat {

namespace {

// Mutable two-row view used to assemble results.
struct Rows {
  std::vector<Color> upper_colors, lower_colors;
  std::vector<int> upper_labels, lower_labels;

  explicit Rows(const TwoColoredPartition& p)
      : upper_colors(p.upper_colors().begin(), p.upper_colors().end()),
        lower_colors(p.lower_colors().begin(), p.lower_colors().end()),
        upper_labels(p.labels().begin(), p.labels().begin() + p.upper_size()),
        lower_labels(p.labels().begin() + p.upper_size(), p.labels().end()) {}

  TwoColoredPartition build() && {
    std::vector<int> labels = std::move(upper_labels);
    labels.insert(labels.end(), lower_labels.begin(), lower_labels.end());
    return TwoColoredPartition(std::move(upper_colors), std::move(lower_colors), std::move(labels));
  }
};

int normalized(const TwoColoredPartition& p, Point a) {
  const bool white = p.color(a) == Color::white;
  return (a.row == Row::lower) == white ? 1 : -1;
}

}  // namespace

TwoColoredPartition identity(Color c) { return TwoColoredPartition({c}, {c}, {0, 0}); }

TwoColoredPartition lower_pair(Color first, Color second) {
  return TwoColoredPartition({}, {first, second}, {0, 0});
}

TwoColoredPartition crossing_ww() {
  return TwoColoredPartition({Color::white, Color::white}, {Color::white, Color::white},
                             {0, 1, 1, 0});
}

TwoColoredPartition singletons_wb() {
  return TwoColoredPartition({}, {Color::white, Color::black}, {0, 1});
}

TwoColoredPartition four_block_wbwb() {
  return TwoColoredPartition({}, {Color::white, Color::black, Color::white, Color::black},
                             {0, 0, 0, 0});
}

std::vector<TwoColoredPartition> base_partitions() {
  return {TwoColoredPartition{}, identity(Color::white), identity(Color::black),
          lower_pair(Color::white, Color::black), lower_pair(Color::black, Color::white)};
}

TwoColoredPartition tensor(const TwoColoredPartition& p, const TwoColoredPartition& q) {
  Rows a(p);
  Rows b(q);
  const int shift = p.block_count();
  for (int& x : b.upper_labels) x += shift;
  for (int& x : b.lower_labels) x += shift;
  a.upper_colors.insert(a.upper_colors.end(), b.upper_colors.begin(), b.upper_colors.end());
  a.lower_colors.insert(a.lower_colors.end(), b.lower_colors.begin(), b.lower_colors.end());
  a.upper_labels.insert(a.upper_labels.end(), b.upper_labels.begin(), b.upper_labels.end());
  a.lower_labels.insert(a.lower_labels.end(), b.lower_labels.begin(), b.lower_labels.end());
  return std::move(a).build();
}

TwoColoredPartition tensor_power(const TwoColoredPartition& p, int n) {
  TwoColoredPartition out;
  for (int i = 0; i < n; ++i) out = tensor(out, p);
  return out;
}

TwoColoredPartition involute(const TwoColoredPartition& p) {
  Rows a(p);
  std::swap(a.upper_colors, a.lower_colors);
  std::swap(a.upper_labels, a.lower_labels);
  return std::move(a).build();
}

bool composable(const TwoColoredPartition& p, const TwoColoredPartition& q) {
  return std::ranges::equal(p.upper_colors(), q.lower_colors());
}

TwoColoredPartition compose(const TwoColoredPartition& p, const TwoColoredPartition& q) {
  const auto mid_p = p.upper_colors();
  const auto mid_q = q.lower_colors();
  if (!composable(p, q)) {
    std::size_t i = 0;
    while (i < mid_p.size() && i < mid_q.size() && mid_p[i] == mid_q[i]) ++i;
    throw Error(Errc::not_composable,
                "upper row of the lower factor and lower row of the upper factor differ at rank " +
                    std::to_string(i + 1),
                i + 1);
  }
  // Union-find over blocks of p (ids 0..bp-1) and q (ids bp..bp+bq-1); a
  // middle point glues its p-block to its q-block.
  const int bp = p.block_count();
  const int bq = q.block_count();
  UnionFind uf(bp + bq);
  const int middle = p.upper_size();
  for (int i = 0; i < middle; ++i) {
    uf.unite(p.labels()[i], bp + q.labels()[q.upper_size() + i]);
  }
  std::vector<int> labels;
  labels.reserve(q.upper_size() + p.lower_size());
  for (int i = 0; i < q.upper_size(); ++i) labels.push_back(uf.find(bp + q.labels()[i]));
  for (int i = 0; i < p.lower_size(); ++i) labels.push_back(uf.find(p.labels()[middle + i]));
  return TwoColoredPartition(
      std::vector<Color>(q.upper_colors().begin(), q.upper_colors().end()),
      std::vector<Color>(p.lower_colors().begin(), p.lower_colors().end()), std::move(labels));
}

const char* to_string(RotationKind kind) noexcept {
  switch (kind) {
    case RotationKind::down_left: return "down_left";
    case RotationKind::down_right: return "down_right";
    case RotationKind::up_left: return "up_left";
    case RotationKind::up_right: return "up_right";
    case RotationKind::cyclic_clockwise: return "cyclic_clockwise";
    case RotationKind::cyclic_counterclockwise: return "cyclic_counterclockwise";
  }
  return "unknown";
}

bool can_rotate(const TwoColoredPartition& p, RotationKind kind) noexcept {
  switch (kind) {
    case RotationKind::down_left:
    case RotationKind::down_right: return p.upper_size() > 0;
    case RotationKind::up_left:
    case RotationKind::up_right: return p.lower_size() > 0;
    case RotationKind::cyclic_clockwise:
    case RotationKind::cyclic_counterclockwise: return !p.empty();
  }
  return false;
}

TwoColoredPartition rotate(const TwoColoredPartition& p, RotationKind kind) {
  switch (kind) {
    case RotationKind::cyclic_clockwise:
      if (p.empty()) throw Error(Errc::empty_partition, "cyclic rotation of the empty partition");
      if (p.lower_size() == 0) {
        // Every point is upper: the composite is the same cyclic shift as
        // down_right followed by up_left.
        return rotate(rotate(p, RotationKind::down_right), RotationKind::up_left);
      }
      return rotate(rotate(p, RotationKind::up_left), RotationKind::down_right);
    case RotationKind::cyclic_counterclockwise:
      if (p.empty()) throw Error(Errc::empty_partition, "cyclic rotation of the empty partition");
      if (p.upper_size() == 0) {
        return rotate(rotate(p, RotationKind::up_right), RotationKind::down_left);
      }
      return rotate(rotate(p, RotationKind::down_left), RotationKind::up_right);
    default: break;
  }
  if (!can_rotate(p, kind)) {
    throw Error(Errc::empty_source_row,
                std::string("rotation ") + to_string(kind) + " needs a nonempty source row");
  }
  Rows a(p);
  switch (kind) {
    case RotationKind::down_left: {
      const Color c = invert(a.upper_colors.front());
      const int label = a.upper_labels.front();
      a.upper_colors.erase(a.upper_colors.begin());
      a.upper_labels.erase(a.upper_labels.begin());
      a.lower_colors.insert(a.lower_colors.begin(), c);
      a.lower_labels.insert(a.lower_labels.begin(), label);
      break;
    }
    case RotationKind::down_right: {
      const Color c = invert(a.upper_colors.back());
      const int label = a.upper_labels.back();
      a.upper_colors.pop_back();
      a.upper_labels.pop_back();
      a.lower_colors.push_back(c);
      a.lower_labels.push_back(label);
      break;
    }
    case RotationKind::up_left: {
      const Color c = invert(a.lower_colors.front());
      const int label = a.lower_labels.front();
      a.lower_colors.erase(a.lower_colors.begin());
      a.lower_labels.erase(a.lower_labels.begin());
      a.upper_colors.insert(a.upper_colors.begin(), c);
      a.upper_labels.insert(a.upper_labels.begin(), label);
      break;
    }
    case RotationKind::up_right: {
      const Color c = invert(a.lower_colors.back());
      const int label = a.lower_labels.back();
      a.lower_colors.pop_back();
      a.lower_labels.pop_back();
      a.upper_colors.push_back(c);
      a.upper_labels.push_back(label);
      break;
    }
    default: break;
  }
  return std::move(a).build();
}

TwoColoredPartition reflect(const TwoColoredPartition& p) {
  Rows a(p);
  std::ranges::reverse(a.upper_colors);
  std::ranges::reverse(a.lower_colors);
  std::ranges::reverse(a.upper_labels);
  std::ranges::reverse(a.lower_labels);
  return std::move(a).build();
}

TwoColoredPartition color_invert(const TwoColoredPartition& p) {
  Rows a(p);
  for (Color& c : a.upper_colors) c = invert(c);
  for (Color& c : a.lower_colors) c = invert(c);
  return std::move(a).build();
}

TwoColoredPartition verticolor_reflect(const TwoColoredPartition& p) {
  return color_invert(reflect(p));
}

std::vector<std::pair<Point, Point>> turns(const TwoColoredPartition& p) {
  std::vector<std::pair<Point, Point>> out;
  const int n = p.size();
  if (n < 2) return out;
  // With two points both adjacencies describe the same set.
  const int adjacencies = n == 2 ? 1 : n;
  for (int i = 0; i < adjacencies; ++i) {
    const Point a = point_at_cyclic(p, i);
    const Point b = point_at_cyclic(p, (i + 1) % n);
    if (normalized(p, a) + normalized(p, b) == 0) out.emplace_back(a, b);
  }
  return out;
}

TwoColoredPartition erase(const TwoColoredPartition& p, std::span<const Point> erased) {
  std::vector<char> gone(p.size(), 0);
  std::set<int> merged;
  for (const Point& a : erased) {
    const int r = p.reading_index(a);
    gone[r] = 1;
    merged.insert(p.labels()[r]);
  }
  const int joint = p.block_count();
  std::vector<Color> up, lo;
  std::vector<int> labels;
  for (int r = 0; r < p.size(); ++r) {
    if (gone[r]) continue;
    const int label = p.labels()[r];
    labels.push_back(merged.contains(label) ? joint : label);
    if (r < p.upper_size()) up.push_back(p.upper_colors()[r]);
    else lo.push_back(p.lower_colors()[r - p.upper_size()]);
  }
  return TwoColoredPartition(std::move(up), std::move(lo), std::move(labels));
}

}  // namespace pcat
