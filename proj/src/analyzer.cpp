#include "pcat/analyzer.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace pcat {

namespace {

// Normalized colors laid out along the cyclic order, with prefix sums so
// that any cyclic interval sum is O(1).
struct CyclicColors {
  int n = 0;
  std::vector<int> color;   // by cyclic position
  std::vector<int> prefix;  // prefix[i] = sum of color[0..i-1]

  explicit CyclicColors(const TwoColoredPartition& p) : n(p.size()), color(n), prefix(n + 1, 0) {
    for (int i = 0; i < n; ++i) {
      color[i] = normalized_color(p, point_at_cyclic(p, i));
      prefix[i + 1] = prefix[i] + color[i];
    }
  }

  int total() const { return prefix[n]; }

  // Sum over ]i, j] for i != j.
  int left_open(int i, int j) const {
    if (j > i) return prefix[j + 1] - prefix[i + 1];
    return total() - (prefix[i + 1] - prefix[j + 1]);
  }

  int distance(int i, int j) const {
    if (i == j) return total();
    if (color[i] != color[j]) return left_open(i, j) - color[j];
    return left_open(i, j);
  }
};

std::vector<std::vector<int>> block_positions(const TwoColoredPartition& p) {
  std::vector<std::vector<int>> out(p.block_count());
  for (int i = 0; i < p.size(); ++i) out[p.block_of(point_at_cyclic(p, i))].push_back(i);
  return out;
}

void print_set(std::ostream& os, const char* name, const std::set<int>& s) {
  os << name << "={";
  bool first = true;
  for (int x : s) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
}

}  // namespace

int normalized_color(const TwoColoredPartition& p, Point a) {
  const bool white = p.color(a) == Color::white;
  return (a.row == Row::lower) == white ? 1 : -1;
}

int sigma(const TwoColoredPartition& p, std::span<const Point> set) {
  int s = 0;
  for (const Point& a : set) s += normalized_color(p, a);
  return s;
}

int total_color_sum(const TwoColoredPartition& p) {
  int s = 0;
  for (Color c : p.lower_colors()) s += c == Color::white ? 1 : -1;
  for (Color c : p.upper_colors()) s += c == Color::white ? -1 : 1;
  return s;
}

int delta(const TwoColoredPartition& p, Point a, Point b) {
  const int i = cyclic_position(p, a);
  const int j = cyclic_position(p, b);
  return CyclicColors(p).distance(i, j);
}

void add_to_profile(ZProfile& z, const TwoColoredPartition& p) {
  const CyclicColors cc(p);
  z.Sigma.insert(cc.total());
  const auto blocks = block_positions(p);
  for (const auto& legs : blocks) {
    z.F.insert(static_cast<int>(legs.size()));
    int v = 0;
    for (int i : legs) v += cc.color[i];
    z.V.insert(v);
    // legs are sorted by cyclic position, so subsequent pairs are
    // neighbours in this list (with wrap-around).
    const std::size_t r = legs.size();
    if (r < 2) continue;
    for (std::size_t t = 0; t < r; ++t) {
      const int a = legs[t];
      const int b = legs[(t + 1) % r];
      const int d = cc.distance(a, b);
      (cc.color[a] + cc.color[b] != 0 ? z.L : z.K).insert(d);
      if (r == 2) {
        (cc.color[a] + cc.color[b] != 0 ? z.L : z.K).insert(cc.distance(b, a));
        break;
      }
    }
  }
  for (auto [x, y] : crossing_block_pairs(p)) {
    for (int a : blocks[x]) {
      for (int b : blocks[y]) {
        z.X.insert(cc.distance(a, b));
        z.X.insert(cc.distance(b, a));
      }
    }
  }
}

ZProfile z_profile(const TwoColoredPartition& p) {
  ZProfile z;
  add_to_profile(z, p);
  return z;
}

ZProfile z_profile(std::span<const TwoColoredPartition> ps) {
  ZProfile z;
  for (const auto& p : ps) add_to_profile(z, p);
  return z;
}

std::string to_string(const ZProfile& z) {
  std::ostringstream os;
  print_set(os, "F", z.F);
  os << ' ';
  print_set(os, "V", z.V);
  os << ' ';
  print_set(os, "S", z.Sigma);
  os << ' ';
  print_set(os, "L", z.L);
  os << ' ';
  print_set(os, "K", z.K);
  os << ' ';
  print_set(os, "X", z.X);
  return os.str();
}

bool delta_same_block_all_pairs(const TwoColoredPartition& p, int m) {
  const CyclicColors cc(p);
  for (const auto& legs : block_positions(p)) {
    for (int a : legs) {
      for (int b : legs) {
        const int d = cc.distance(a, b);
        if (m == 0 ? d != 0 : d % m != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace pcat
