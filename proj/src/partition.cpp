#include "pcat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace pcat {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::point_out_of_range: return "point-out-of-range";
    case Errc::empty_partition: return "empty-partition";
    case Errc::equal_limits: return "equal-limits";
    case Errc::duplicate_points: return "duplicate-points";
    case Errc::syntax_error: return "syntax-error";
    case Errc::inconsistent_blocks: return "inconsistent-blocks";
    case Errc::not_composable: return "not-composable";
    case Errc::empty_source_row: return "empty-source-row";
    case Errc::invalid_params: return "invalid-params";
    case Errc::empty_list: return "empty-list";
  }
  return "unknown";
}

std::string to_string(Point p) {
  return (p.row == Row::upper ? "U" : "L") + std::to_string(p.index);
}

namespace {

// Relabels to restricted-growth form; returns the number of blocks.
int normalize_labels(std::vector<int>& labels) {
  std::unordered_map<int, int> remap;
  for (int& label : labels) {
    auto [it, inserted] = remap.try_emplace(label, static_cast<int>(remap.size()));
    label = it->second;
  }
  return static_cast<int>(remap.size());
}

[[noreturn]] void out_of_range(Point a) {
  throw Error(Errc::point_out_of_range, "point " + to_string(a) + " is not in the partition");
}

}  // namespace

TwoColoredPartition::TwoColoredPartition(std::vector<Color> upper_colors,
                                         std::vector<Color> lower_colors, std::vector<int> labels)
    : upper_(std::move(upper_colors)), lower_(std::move(lower_colors)), labels_(std::move(labels)) {
  if (labels_.size() != upper_.size() + lower_.size()) {
    throw Error(Errc::inconsistent_blocks, "label word length " + std::to_string(labels_.size()) +
                                               " does not match point count " +
                                               std::to_string(upper_.size() + lower_.size()));
  }
  block_count_ = normalize_labels(labels_);
}

TwoColoredPartition TwoColoredPartition::from_blocks(std::vector<Color> upper_colors,
                                                     std::vector<Color> lower_colors,
                                                     const std::vector<std::vector<Point>>& blocks) {
  const int k = static_cast<int>(upper_colors.size());
  const int l = static_cast<int>(lower_colors.size());
  std::vector<int> labels(k + l, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(Errc::inconsistent_blocks, "empty block");
    for (const Point& a : blocks[b]) {
      const int limit = a.row == Row::upper ? k : l;
      if (a.index < 1 || a.index > limit) {
        throw Error(Errc::inconsistent_blocks, "block point " + to_string(a) + " does not exist");
      }
      const int r = a.row == Row::upper ? a.index - 1 : k + a.index - 1;
      if (labels[r] != -1) {
        throw Error(Errc::inconsistent_blocks, "point " + to_string(a) + " appears twice");
      }
      labels[r] = static_cast<int>(b);
    }
  }
  for (int r = 0; r < k + l; ++r) {
    if (labels[r] == -1) {
      const Point a = r < k ? upper(r + 1) : lower(r - k + 1);
      throw Error(Errc::inconsistent_blocks, "point " + to_string(a) + " is in no block");
    }
  }
  return TwoColoredPartition(std::move(upper_colors), std::move(lower_colors), std::move(labels));
}

bool TwoColoredPartition::contains(Point a) const noexcept {
  const int limit = a.row == Row::upper ? upper_size() : lower_size();
  return a.index >= 1 && a.index <= limit;
}

int TwoColoredPartition::reading_index(Point a) const {
  if (!contains(a)) out_of_range(a);
  return a.row == Row::upper ? a.index - 1 : upper_size() + a.index - 1;
}

Point TwoColoredPartition::point_at_reading(int reading) const {
  if (reading < 0 || reading >= size()) {
    throw Error(Errc::point_out_of_range, "reading index " + std::to_string(reading));
  }
  return reading < upper_size() ? upper(reading + 1) : lower(reading - upper_size() + 1);
}

Color TwoColoredPartition::color(Point a) const {
  if (!contains(a)) out_of_range(a);
  return a.row == Row::upper ? upper_[a.index - 1] : lower_[a.index - 1];
}

int TwoColoredPartition::block_of(Point a) const { return labels_[reading_index(a)]; }

std::vector<std::vector<Point>> TwoColoredPartition::blocks() const {
  std::vector<std::vector<Point>> out(block_count_);
  for (int r = 0; r < size(); ++r) out[labels_[r]].push_back(point_at_reading(r));
  return out;
}

std::vector<Point> TwoColoredPartition::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (int r = 0; r < size(); ++r) out.push_back(point_at_reading(r));
  return out;
}

bool canonical_less(const TwoColoredPartition& a, const TwoColoredPartition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.upper_size() != b.upper_size()) return a.upper_size() < b.upper_size();
  auto ua = a.upper_colors(), ub = b.upper_colors();
  if (auto c = std::lexicographical_compare_three_way(ua.begin(), ua.end(), ub.begin(), ub.end());
      c != 0) {
    return c < 0;
  }
  auto la = a.lower_colors(), lb = b.lower_colors();
  if (auto c = std::lexicographical_compare_three_way(la.begin(), la.end(), lb.begin(), lb.end());
      c != 0) {
    return c < 0;
  }
  auto xa = a.labels(), xb = b.labels();
  return std::lexicographical_compare(xa.begin(), xa.end(), xb.begin(), xb.end());
}

std::string color_word(std::span<const Color> colors) {
  std::string s;
  s.reserve(colors.size());
  for (Color c : colors) s.push_back(c == Color::white ? 'w' : 'b');
  return s;
}

std::string CanonicalEncoding::to_string() const {
  const bool wide = std::any_of(block_word.begin(), block_word.end(), [](int x) { return x > 9; });
  std::ostringstream os;
  os << '(' << upper_size << ',' << lower_size << ",\"" << upper_word << "\",\"" << lower_word
     << "\",\"";
  for (std::size_t i = 0; i < block_word.size(); ++i) {
    if (wide && i > 0) os << '.';
    os << block_word[i];
  }
  os << "\")";
  return os.str();
}

CanonicalEncoding canonicalize(const TwoColoredPartition& p) {
  return {p.upper_size(), p.lower_size(), color_word(p.upper_colors()),
          color_word(p.lower_colors()),
          std::vector<int>(p.labels().begin(), p.labels().end())};
}

int cyclic_position(const TwoColoredPartition& p, Point a) {
  if (!p.contains(a)) out_of_range(a);
  return a.row == Row::lower ? a.index - 1 : p.lower_size() + (p.upper_size() - a.index);
}

Point point_at_cyclic(const TwoColoredPartition& p, int position) {
  const int l = p.lower_size();
  if (position < 0 || position >= p.size()) {
    throw Error(Errc::point_out_of_range, "cyclic position " + std::to_string(position));
  }
  return position < l ? lower(position + 1) : upper(p.upper_size() - (position - l));
}

std::vector<Point> cyclic_points(const TwoColoredPartition& p) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) out.push_back(point_at_cyclic(p, i));
  return out;
}

Point cyclic_successor(const TwoColoredPartition& p, Point a) {
  if (p.empty()) throw Error(Errc::empty_partition, "cyclic order of the empty partition");
  return point_at_cyclic(p, (cyclic_position(p, a) + 1) % p.size());
}

std::vector<Point> interval(const TwoColoredPartition& p, Point a, Point b, IntervalKind kind) {
  if (p.empty()) throw Error(Errc::empty_partition, "interval in the empty partition");
  const int from = cyclic_position(p, a);
  const int to = cyclic_position(p, b);
  if (from == to) throw Error(Errc::equal_limits, "interval limits must differ");
  std::vector<Point> out;
  if (kind == IntervalKind::closed || kind == IntervalKind::right_open) out.push_back(a);
  for (int i = (from + 1) % p.size(); i != to; i = (i + 1) % p.size()) {
    out.push_back(point_at_cyclic(p, i));
  }
  if (kind == IntervalKind::closed || kind == IntervalKind::left_open) out.push_back(b);
  return out;
}

bool is_ordered(const TwoColoredPartition& p, std::span<const Point> tuple) {
  const std::size_t n = tuple.size();
  if (n < 3) throw Error(Errc::duplicate_points, "ordered tuples need at least three points");
  std::set<Point> seen;
  for (const Point& a : tuple) {
    if (!p.contains(a)) out_of_range(a);
    if (!seen.insert(a).second) {
      throw Error(Errc::duplicate_points, "point " + to_string(a) + " repeats in the tuple");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto inside = interval(p, tuple[i], tuple[j], IntervalKind::open);
      for (std::size_t k = 0; k < n; ++k) {
        const bool contained = std::find(inside.begin(), inside.end(), tuple[k]) != inside.end();
        if (contained != (i < k && k < j)) return false;
      }
    }
  }
  return true;
}

bool is_consecutive(const TwoColoredPartition& p, std::span<const Point> set) {
  const int n = p.size();
  std::vector<char> member(n, 0);
  int count = 0;
  for (const Point& a : set) {
    const int pos = cyclic_position(p, a);
    if (!member[pos]) ++count;
    member[pos] = 1;
  }
  if (count <= 1 || count >= n - 1) return true;
  // An interval with at least two points is a single run on the cycle.
  int runs = 0;
  for (int i = 0; i < n; ++i) {
    if (member[i] && !member[(i + n - 1) % n]) ++runs;
  }
  return runs == 1;
}

std::vector<std::pair<int, int>> crossing_block_pairs(const TwoColoredPartition& p) {
  const int n = p.size();
  std::vector<int> block_at(n);
  for (int i = 0; i < n; ++i) block_at[i] = p.block_of(point_at_cyclic(p, i));

  const int nb = p.block_count();
  std::vector<std::vector<int>> positions(nb);
  for (int i = 0; i < n; ++i) positions[block_at[i]].push_back(i);

  // B and B' cross iff some pair a < b of B-positions has B'-legs both
  // strictly inside (a, b) and outside [a, b].
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < nb; ++x) {
    for (int y = x + 1; y < nb; ++y) {
      bool crosses = false;
      const auto& bx = positions[x];
      for (std::size_t i = 0; i < bx.size() && !crosses; ++i) {
        for (std::size_t j = i + 1; j < bx.size() && !crosses; ++j) {
          bool inside = false, outside = false;
          for (int q : positions[y]) {
            if (q > bx[i] && q < bx[j]) inside = true;
            else outside = true;
          }
          crosses = inside && outside;
        }
      }
      if (crosses) out.emplace_back(x, y);
    }
  }
  return out;
}

bool is_non_crossing(const TwoColoredPartition& p) { return crossing_block_pairs(p).empty(); }

}  // namespace pcat

std::size_t std::hash<pcat::TwoColoredPartition>::operator()(
    const pcat::TwoColoredPartition& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.upper_size()) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto c : p.upper_colors()) mix(static_cast<std::size_t>(c));
  mix(0xff);
  for (auto c : p.lower_colors()) mix(static_cast<std::size_t>(c));
  for (int x : p.labels()) mix(static_cast<std::size_t>(x) + 3);
  return h;
}
