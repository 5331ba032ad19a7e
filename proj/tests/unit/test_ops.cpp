#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pcat/ops.hpp"
#include "pcat/text.hpp"

using namespace pcat;

namespace {

TwoColoredPartition P(const char* s) { return parse_partition(s); }

// Random partition whose lower row is exactly `lower_row`.
TwoColoredPartition with_lower(const std::vector<Color>& lower_row, int upper_len, std::uint64_t seed) {
  const int n = static_cast<int>(lower_row.size()) + upper_len;
  auto shape = sample_partitions(n, 1, seed).front();
  std::mt19937_64 rng(seed ^ 0x5bd1e995);
  std::vector<Color> up(upper_len);
  for (auto& c : up) c = rng() & 1 ? Color::black : Color::white;
  return TwoColoredPartition(up, lower_row, std::vector<int>(shape.labels().begin(), shape.labels().end()));
}

}  // namespace

TEST_CASE("tensor") {
  const auto id_w = identity(Color::white);
  CHECK(tensor(TwoColoredPartition{}, id_w) == id_w);
  CHECK(tensor(id_w, TwoColoredPartition{}) == id_w);
  CHECK(tensor(id_w, identity(Color::black)) == P("up=wb; lo=wb; blocks=(U1 L1)(U2 L2)"));
}

TEST_CASE("tensor product of the three-factor figure") {
  const auto p1 = P("up=; lo=bw; blocks=(L1 L2)");
  const auto p2 = P("up=bwbwb; lo=w; blocks=(L1 U3)(U1 U4)(U2 U5)");
  const auto p3 = P("up=; lo=wbbw; blocks=(L1 L3)(L2 L4)");
  const auto expected =
      P("up=bwbwb; lo=bwwwbbw; blocks=(L1 L2)(L4 L6)(L5 L7)(L3 U3)(U1 U4)(U2 U5)");
  CHECK(tensor(tensor(p1, p2), p3) == expected);
  CHECK(tensor(p1, tensor(p2, p3)) == expected);
}

TEST_CASE("tensor is associative with unit") {
  const auto ps = oracle::random_partitions(90, 0, 4, 21);
  for (std::size_t i = 0; i + 2 < ps.size(); i += 3) {
    CHECK(tensor(tensor(ps[i], ps[i + 1]), ps[i + 2]) == tensor(ps[i], tensor(ps[i + 1], ps[i + 2])));
    const auto t = tensor(ps[i], ps[i + 1]);
    CHECK(t.size() == ps[i].size() + ps[i + 1].size());
    CHECK(t.block_count() == ps[i].block_count() + ps[i + 1].block_count());
  }
}

TEST_CASE("tensor powers") {
  const auto p = crossing_ww();
  CHECK(tensor_power(p, 0) == TwoColoredPartition{});
  CHECK(tensor_power(p, 1) == p);
  CHECK(tensor_power(p, 2) == tensor(p, p));
}

TEST_CASE("involution") {
  CHECK(involute(identity(Color::white)) == identity(Color::white));
  CHECK(involute(P("up=; lo=ww; blocks=(L1 L2)")) == P("up=ww; lo=; blocks=(U1 U2)"));
  for (const auto& p : oracle::random_partitions(300, 0, 8, 22)) CHECK(involute(involute(p)) == p);
}

TEST_CASE("composability") {
  const auto up_wb = P("up=wb; lo=; blocks=(U1 U2)");
  CHECK(composable(up_wb, P("up=; lo=wb; blocks=(L1)(L2)")));
  CHECK_FALSE(composable(up_wb, P("up=; lo=bw; blocks=(L1)(L2)")));
  CHECK(composable(TwoColoredPartition{}, TwoColoredPartition{}));
  try {
    compose(up_wb, P("up=; lo=ww; blocks=(L1)(L2)"));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_composable);
    CHECK(*e.position() == 2);
  }
}

TEST_CASE("composition") {
  const auto id_w = identity(Color::white);
  CHECK(compose(id_w, id_w) == id_w);
  CHECK(compose(crossing_ww(), crossing_ww()) == tensor(id_w, id_w));
  // a closed loop in the middle vanishes
  const auto cap = P("up=wb; lo=; blocks=(U1 U2)");
  const auto cup = P("up=; lo=wb; blocks=(L1 L2)");
  CHECK(compose(cap, cup) == TwoColoredPartition{});
}

TEST_CASE("composition of the three-row figure") {
  const auto p = P("up=bwwbwbbw; lo=wwbwbw; blocks=(L1 L3)(L2 U2)(L4)(L5 U5)(L6 U6)(U1 U3 U4)(U7 U8)");
  const auto q = P("up=bwwwb; lo=bwwbwbbw; blocks=(L1)(L2 L4)(L3 L6)(L5 U5)(L7 L8)(U1 U2 U3)(U4)");
  const auto expected = P("up=bwwwb; lo=wwbwbw; blocks=(L1 L3)(L2 L6)(L4)(L5 U5)(U1 U2 U3)(U4)");
  CHECK(compose(p, q) == expected);
  CHECK(oracle::compose(p, q) == expected);
}

TEST_CASE("composition agrees with graph-search oracle") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    auto p = oracle::random_partitions(1, 0, 7, rng()).front();
    const int up_len = static_cast<int>(rng() % 4);
    auto q = with_lower(std::vector<Color>(p.upper_colors().begin(), p.upper_colors().end()), up_len, rng());
    REQUIRE(composable(p, q));
    const auto r = compose(p, q);
    CHECK(r == oracle::compose(p, q));
    CHECK(std::ranges::equal(r.lower_colors(), p.lower_colors()));
    CHECK(std::ranges::equal(r.upper_colors(), q.upper_colors()));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    auto a = oracle::random_partitions(1, 0, 6, rng()).front();
    auto b = with_lower(std::vector<Color>(a.upper_colors().begin(), a.upper_colors().end()), rng() % 4, rng());
    auto c = with_lower(std::vector<Color>(b.upper_colors().begin(), b.upper_colors().end()), rng() % 4, rng());
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    // involution reverses composition order
    CHECK(involute(compose(a, b)) == compose(involute(b), involute(a)));
  }
}

TEST_CASE("basic rotations") {
  const auto id_w = identity(Color::white);
  CHECK(rotate(id_w, RotationKind::down_right) == P("up=; lo=wb; blocks=(L1 L2)"));
  CHECK(rotate(id_w, RotationKind::down_left) == P("up=; lo=bw; blocks=(L1 L2)"));
  CHECK(rotate(id_w, RotationKind::up_left) == P("up=bw; lo=; blocks=(U1 U2)"));
  CHECK(rotate(id_w, RotationKind::up_right) == P("up=wb; lo=; blocks=(U1 U2)"));

  const auto p = P("up=wbw; lo=bwbb; blocks=(L1)(L2 U1 U2 U3)(L3 L4)");
  CHECK(rotate(p, RotationKind::down_left) == P("up=bw; lo=bbwbb; blocks=(L2)(L1 L3 U1 U2)(L4 L5)"));

  try {
    rotate(P("up=; lo=w; blocks=(L1)"), RotationKind::down_left);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_source_row);
  }
  CHECK_THROWS_AS(rotate(TwoColoredPartition{}, RotationKind::cyclic_clockwise), Error);
}

TEST_CASE("rotation inverses and cyclic rotations") {
  for (const auto& p : oracle::random_partitions(400, 1, 8, 25)) {
    if (p.upper_size() > 0) {
      CHECK(rotate(rotate(p, RotationKind::down_left), RotationKind::up_left) == p);
      CHECK(rotate(rotate(p, RotationKind::down_right), RotationKind::up_right) == p);
    }
    if (p.lower_size() > 0) {
      CHECK(rotate(rotate(p, RotationKind::up_left), RotationKind::down_left) == p);
      CHECK(rotate(rotate(p, RotationKind::up_right), RotationKind::down_right) == p);
    }
    const auto cw = rotate(p, RotationKind::cyclic_clockwise);
    CHECK(cw.upper_size() == p.upper_size());
    CHECK(rotate(cw, RotationKind::cyclic_counterclockwise) == p);
    CHECK(rotate(rotate(p, RotationKind::cyclic_counterclockwise), RotationKind::cyclic_clockwise) == p);
    // n clockwise steps return to p
    auto r = p;
    for (int i = 0; i < p.size(); ++i) r = rotate(r, RotationKind::cyclic_clockwise);
    CHECK(r == p);
  }
}

TEST_CASE("base partitions come from identity-white") {
  const auto id_w = identity(Color::white);
  const auto pair_wb = rotate(id_w, RotationKind::down_right);
  const auto pair_bw = rotate(id_w, RotationKind::down_left);
  const auto id_b = verticolor_reflect(id_w);
  const auto t = turns(pair_wb);
  REQUIRE(t.size() == 1);
  const Point s[] = {t[0].first, t[0].second};
  const auto none = erase(pair_wb, s);
  const auto base = base_partitions();
  CHECK(base.size() == 5);
  for (const auto& b : {none, id_w, id_b, pair_wb, pair_bw}) {
    CHECK(std::find(base.begin(), base.end(), b) != base.end());
  }
}

TEST_CASE("reflections") {
  const auto p = P("up=wbw; lo=bwbb; blocks=(L1)(L2 U1 U2 U3)(L3 L4)");
  CHECK(verticolor_reflect(p) == P("up=bwb; lo=wwbw; blocks=(L1 L2)(L3 U1 U2 U3)(L4)"));
  CHECK(color_invert(singletons_wb()) == P("up=; lo=bw; blocks=(L1)(L2)"));
  for (const auto& q : oracle::random_partitions(300, 0, 8, 26)) {
    CHECK(reflect(reflect(q)) == q);
    CHECK(color_invert(color_invert(q)) == q);
    CHECK(verticolor_reflect(verticolor_reflect(q)) == q);
    CHECK(reflect(color_invert(q)) == color_invert(reflect(q)));
  }
}

TEST_CASE("turns") {
  const auto pair_wb = P("up=; lo=wb; blocks=(L1 L2)");
  CHECK(turns(pair_wb).size() == 1);
  CHECK(turns(P("up=; lo=ww; blocks=(L1 L2)")).empty());
  const auto id = turns(identity(Color::white));
  REQUIRE(id.size() == 1);
  CHECK(std::set<Point>{id[0].first, id[0].second} == std::set<Point>{lower(1), upper(1)});
  CHECK(turns(P("up=; lo=w; blocks=(L1)")).empty());
  CHECK(turns(TwoColoredPartition{}).empty());
  // lower wbw: L1L2 and L2L3 are turns, the wrap L3L1 is not
  CHECK(turns(P("up=; lo=wbw; blocks=(L1)(L2)(L3)")).size() == 2);
  // every reported pair is adjacent and neutral
  for (const auto& q : oracle::random_partitions(300, 3, 8, 27)) {
    for (auto [a, b] : turns(q)) {
      CHECK(cyclic_successor(q, a) == b);
      CHECK(oracle::color_of(q, a) + oracle::color_of(q, b) == 0);
    }
  }
}

TEST_CASE("erase") {
  const auto pair_wb = P("up=; lo=wb; blocks=(L1 L2)");
  const Point both[] = {lower(1), lower(2)};
  CHECK(erase(pair_wb, both) == TwoColoredPartition{});

  const auto p = P("up=; lo=wwb; blocks=(L1)(L2 L3)");
  const Point last[] = {lower(2), lower(3)};
  CHECK(erase(p, last) == P("up=; lo=w; blocks=(L1)"));

  const auto fig = P("up=wbw; lo=bwbb; blocks=(L1)(L2 U1 U2 U3)(L3 L4)");
  const Point middle[] = {lower(2), lower(3)};
  CHECK(erase(fig, middle) == P("up=wbw; lo=bb; blocks=(L1)(L2 U1 U2 U3)"));

  // blocks meeting S merge even when they are far apart
  const auto q = P("up=b; lo=wwbw; blocks=(L1 U1)(L2)(L3 L4)");
  const Point s[] = {lower(1), lower(3)};
  CHECK(erase(q, s) == P("up=b; lo=ww; blocks=(L1)(L2 U1)"));

  const Point outside[] = {upper(1)};
  CHECK_THROWS_AS(erase(pair_wb, outside), Error);
}
