#include "pcat/text.hpp"

#include <cctype>
#include <vector>

namespace pcat {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TwoColoredPartition run() {
    keyword("up");
    expect('=');
    auto up = colors();
    expect(';');
    keyword("lo");
    expect('=');
    auto lo = colors();
    expect(';');
    keyword("blocks");
    expect('=');
    std::vector<std::vector<Point>> blocks;
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      blocks.push_back(block());
      skip_space();
    }
    if (pos_ != text_.size()) fail("unexpected character");
    return TwoColoredPartition::from_blocks(std::move(up), std::move(lo), blocks);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::syntax_error, what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::vector<Color> colors() {
    skip_space();
    std::vector<Color> out;
    while (pos_ < text_.size() && (text_[pos_] == 'w' || text_[pos_] == 'b')) {
      out.push_back(text_[pos_] == 'w' ? Color::white : Color::black);
      ++pos_;
    }
    return out;
  }

  std::vector<Point> block() {
    std::vector<Point> legs;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced '('");
      const char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        if (legs.empty()) fail("empty block");
        return legs;
      }
      if (c != 'U' && c != 'L') fail("expected point");
      ++pos_;
      const std::size_t start = pos_;
      int index = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        if (index > 100000) fail("point index too large");
        index = index * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == start) fail("expected point index");
      legs.push_back({c == 'U' ? Row::upper : Row::lower, index});
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TwoColoredPartition parse_partition(std::string_view text) { return Parser(text).run(); }

std::string to_text(const TwoColoredPartition& p) {
  std::string out = "up=" + color_word(p.upper_colors()) + "; lo=" +
                    color_word(p.lower_colors()) + "; blocks=";
  for (const auto& block : p.blocks()) {
    out.push_back('(');
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += to_string(block[i]);
    }
    out.push_back(')');
  }
  return out;
}

}  // namespace pcat
