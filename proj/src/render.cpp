#include "pcat/render.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace pcat {

namespace {

struct Segment {
  bool vertical;
  int fixed;     // column for vertical, row for horizontal
  int from, to;  // rows for vertical, columns for horizontal; from <= to
};

// Rows: 0 holds the upper points, then one bar row per block with upper
// legs, one transfer row per through block, one bar row per block with
// lower legs (innermost first), and finally the lower points.
struct Layout {
  int columns = 0;
  int rows = 2;
  std::vector<Segment> segments;
  std::vector<std::pair<int, int>> joints;  // (row, column) leg attachments
};

Layout layout(const TwoColoredPartition& p) {
  const auto blocks = p.blocks();
  int upper_bars = 0, transfers = 0, lower_bars = 0;
  std::vector<std::optional<int>> up_row(blocks.size()), mid_row(blocks.size()), lo_row(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    bool has_up = false, has_lo = false;
    for (const Point& a : blocks[b]) (a.row == Row::upper ? has_up : has_lo) = true;
    if (has_up) up_row[b] = ++upper_bars;
    if (has_up && has_lo) mid_row[b] = transfers++;
    if (has_lo) lo_row[b] = lower_bars++;
  }
  Layout out;
  out.columns = std::max({p.upper_size(), p.lower_size(), 1});
  out.rows = upper_bars + transfers + lower_bars + 2;
  const int bottom = out.rows - 1;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<int> up_cols, lo_cols;
    for (const Point& a : blocks[b]) (a.row == Row::upper ? up_cols : lo_cols).push_back(a.index - 1);
    std::optional<int> up_bar, lo_bar;
    if (up_row[b]) {
      up_bar = *up_row[b];
      for (int c : up_cols) {
        out.segments.push_back({true, c, 0, *up_bar});
        if (up_cols.size() > 1) out.joints.emplace_back(*up_bar, c);
      }
      out.segments.push_back({false, *up_bar, up_cols.front(), up_cols.back()});
    }
    if (lo_row[b]) {
      // innermost lower bar sits just above the lower points
      lo_bar = bottom - 1 - *lo_row[b];
      for (int c : lo_cols) {
        out.segments.push_back({true, c, *lo_bar, bottom});
        if (lo_cols.size() > 1) out.joints.emplace_back(*lo_bar, c);
      }
      out.segments.push_back({false, *lo_bar, lo_cols.front(), lo_cols.back()});
    }
    if (mid_row[b]) {
      const int mid = upper_bars + 1 + *mid_row[b];
      const int cu = up_cols.front(), cl = lo_cols.front();
      out.segments.push_back({true, cu, *up_bar, mid});
      out.segments.push_back({false, mid, std::min(cu, cl), std::max(cu, cl)});
      out.segments.push_back({true, cl, mid, *lo_bar});
      if (cu != cl) {
        out.joints.emplace_back(mid, cu);
        out.joints.emplace_back(mid, cl);
      }
    }
  }
  return out;
}

char glyph(Color c) { return c == Color::white ? 'o' : '*'; }

}  // namespace

std::string render_ascii(const TwoColoredPartition& p) {
  const Layout lay = layout(p);
  const int width = 2 * lay.columns - 1;
  std::vector<std::string> grid(lay.rows, std::string(width, ' '));
  for (const auto& s : lay.segments) {
    if (s.vertical || s.from == s.to) continue;
    for (int c = s.from; c <= s.to; ++c) {
      grid[s.fixed][2 * c] = '-';
      if (c < s.to) grid[s.fixed][2 * c + 1] = '-';
    }
  }
  for (const auto& s : lay.segments) {
    if (!s.vertical) continue;
    for (int r = std::max(s.from, 1); r <= std::min(s.to, lay.rows - 2); ++r) {
      if (grid[r][2 * s.fixed] != '+') grid[r][2 * s.fixed] = '|';
    }
  }
  for (auto [r, c] : lay.joints) grid[r][2 * c] = '+';
  for (int i = 0; i < p.upper_size(); ++i) grid.front()[2 * i] = glyph(p.upper_colors()[i]);
  for (int i = 0; i < p.lower_size(); ++i) grid.back()[2 * i] = glyph(p.lower_colors()[i]);
  std::string out;
  for (auto& line : grid) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const TwoColoredPartition& p) {
  constexpr int margin = 20, step = 30, row_gap = 14, radius = 5;
  const Layout lay = layout(p);
  const int width = 2 * margin + step * (lay.columns - 1);
  const int height = 2 * margin + row_gap * (lay.rows - 1) + 2 * row_gap;
  auto x_of = [&](int col) { return margin + step * col; };
  auto y_of = [&](int row) {
    // points sit one extra gap away from the bars
    if (row == 0) return margin;
    if (row == lay.rows - 1) return margin + row_gap * (row + 2);
    return margin + row_gap * (row + 1);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  const int x_end = width - margin / 2;
  for (int row : {0, lay.rows - 1}) {
    os << "  <line x1=\"" << margin / 2 << "\" y1=\"" << y_of(row) << "\" x2=\"" << x_end
       << "\" y2=\"" << y_of(row) << "\" stroke=\"gray\" stroke-dasharray=\"1,3\"/>\n";
  }
  for (const auto& s : lay.segments) {
    int x1, y1, x2, y2;
    if (s.vertical) {
      x1 = x2 = x_of(s.fixed);
      y1 = y_of(s.from);
      y2 = y_of(s.to);
    } else {
      y1 = y2 = y_of(s.fixed);
      x1 = x_of(s.from);
      x2 = x_of(s.to);
    }
    if (x1 == x2 && y1 == y2) continue;
    os << "  <polyline points=\"" << x1 << ',' << y1 << ' ' << x2 << ',' << y2
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  auto circle = [&](int col, int row, Color c) {
    os << "  <circle cx=\"" << x_of(col) << "\" cy=\"" << y_of(row) << "\" r=\"" << radius
       << "\" fill=\"" << (c == Color::white ? "white" : "black") << "\" stroke=\"black\"/>\n";
  };
  for (int i = 0; i < p.upper_size(); ++i) circle(i, 0, p.upper_colors()[i]);
  for (int i = 0; i < p.lower_size(); ++i) circle(i, lay.rows - 1, p.lower_colors()[i]);
  os << "</svg>\n";
  return os.str();
}

}  // namespace pcat
