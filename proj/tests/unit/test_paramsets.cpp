#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pcat/ops.hpp"
#include "pcat/paramsets.hpp"
#include "pcat/text.hpp"

using namespace pcat;
using IS = IntegerSet;

namespace {

CatalogParams params(std::optional<long long> u, std::optional<long long> m,
                     std::optional<std::vector<long long>> D = std::nullopt) {
  CatalogParams p;
  p.u = u;
  p.m = m;
  p.D = std::move(D);
  return p;
}

CatalogParams with_E(std::vector<long long> e) {
  CatalogParams p;
  p.E = std::move(e);
  return p;
}

CatalogParams with_N(std::vector<long long> n) {
  CatalogParams p;
  p.N = std::move(n);
  return p;
}

CatalogParams with_m(long long m) {
  CatalogParams p;
  p.m = m;
  return p;
}

// One representative parameter choice per row.
std::vector<QCatalogEntry> sample_rows() {
  std::vector<QCatalogEntry> out;
  for (const char* r : {"1", "2", "3"}) out.push_back(realize_row(r, params(1, 2)));
  out.push_back(realize_row("4", with_m(3)));
  for (const char* r : {"5", "6", "7"}) out.push_back(realize_row(r, with_N({2, 3})));
  for (const char* r : {"8", "9", "10", "13"}) out.push_back(realize_row(r, params(1, 3, {{1}})));
  for (const char* r : {"11", "12", "14"}) out.push_back(realize_row(r, with_E({1})));
  return out;
}

bool set_equal_on(const IntegerSet& s, const std::set<long long>& expected, long long lo, long long hi) {
  for (long long n = lo; n <= hi; ++n) {
    if (s.contains(n) != expected.contains(n)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("membership of the constructors") {
  CHECK(IS::progression(0, 3).contains(6));
  CHECK_FALSE(IS::progression(0, 3).contains(7));
  CHECK(IS::progression(1, 4).contains(-3));
  CHECK_FALSE(IS::empty().contains(0));
  CHECK(IS::all().contains(-100));
  CHECK(IS::naturals().contains(1));
  CHECK_FALSE(IS::naturals().contains(0));

  const auto n23 = IS::semigroup({2, 3});
  CHECK_FALSE(n23.contains(1));
  CHECK(n23.contains(5));
  CHECK(n23.contains(2));
  CHECK_FALSE(n23.contains(0));
  CHECK_FALSE(n23.contains(-2));
  CHECK(IS::symmetric(n23).contains(-2));
  const auto n57 = IS::semigroup({5, 7});
  CHECK_FALSE(n57.contains(23));  // Frobenius number of <5,7>
  CHECK(n57.contains(24));

  const auto d = IS::mod_shift({1}, 5);
  CHECK(d.contains(4));
  CHECK(d.contains(1));
  CHECK(d.contains(6));
  CHECK(d.contains(-1));
  CHECK_FALSE(d.contains(2));
  CHECK_FALSE(d.contains(0));
  CHECK(IS::mod_shift({1}, 5, true).contains(10));

  CHECK(set_equal_on(IS::multiples(0), {0}, -10, 10));
  CHECK(set_equal_on(IS::symmetric(IS::finite({0, 2})), {-2, 0, 2}, -10, 10));
  CHECK(set_equal_on(IS::symmetric(IS::empty()), {}, -10, 10));
  CHECK(set_equal_on(~IS::finite({1}) & IS::finite({0, 1, 2}), {0, 2}, -10, 10));
  CHECK(set_equal_on(IS::finite({1}) | IS::singleton(3), {1, 3}, -10, 10));

  CHECK_THROWS_AS(IS::progression(0, 0), Error);
  CHECK_THROWS_AS(IS::semigroup({0, 2}), Error);
  CHECK_THROWS_AS(IS::semigroup({}), Error);
}

TEST_CASE("shifted hulls are symmetric and periodic") {
  for (long long m = 1; m <= 6; ++m) {
    for (unsigned mask = 0; mask < (1u << (m / 2 + 1)); ++mask) {
      std::vector<long long> d;
      for (long long i = 0; i <= m / 2; ++i)
        if (mask >> i & 1u) d.push_back(i);
      const auto dm = IS::mod_shift(d, m);
      for (long long n = -30; n <= 30; ++n) {
        CHECK(dm.contains(n) == dm.contains(-n));
        CHECK(dm.contains(n) == dm.contains(n + m));
      }
    }
  }
  const auto e0 = IS::symmetric(IS::finite({0, 2}));
  for (long long n = -10; n <= 10; ++n) CHECK(e0.contains(n) == e0.contains(-n));
}

TEST_CASE("printing") {
  CHECK(realize_row("1", params(1, 2)).realized.to_string() == "({2}, ±{0,2}, 4ℤ, 2ℤ, 2ℤ, ℤ)");
  CHECK(realize_row("4", with_m(3)).realized.to_string() == "({2}, {0}, {0}, ∅, 3ℤ, ℤ)");
  CHECK(realize_row("14", with_E({1})).realized.to_string() == "(ℕ, ℤ, {0}, {0}, {0}, ℤ∖±{1})");
  CHECK(realize_row("2", params(0, 3)).realized.to_string() == "({2}, ±{0,2}, {0}, 3+6ℤ, 6ℤ, ℤ)");
  CHECK(IS::semigroup({3, 2}).to_string() == "⟨2,3⟩");
}

TEST_CASE("realized rows") {
  const auto r1 = realize_row("1", params(1, 2)).realized;
  CHECK(set_equal_on(r1.f, {2}, -20, 20));
  CHECK(set_equal_on(r1.v, {-2, 0, 2}, -20, 20));
  CHECK(set_equal_on(r1.s, {-20, -16, -12, -8, -4, 0, 4, 8, 12, 16, 20}, -20, 20));
  CHECK(r1.l.contains(2));
  CHECK_FALSE(r1.l.contains(1));
  CHECK(r1.x.contains(7));

  const auto r4 = realize_row("4", with_m(3)).realized;
  CHECK(set_equal_on(r4.v, {0}, -20, 20));
  CHECK(set_equal_on(r4.l, {}, -20, 20));
  CHECK(r4.k.contains(-3));
  CHECK_FALSE(r4.k.contains(2));

  const auto r14 = realize_row("14", with_E({1})).realized;
  CHECK(r14.f.contains(7));
  CHECK_FALSE(r14.f.contains(0));
  CHECK_FALSE(r14.x.contains(1));
  CHECK_FALSE(r14.x.contains(-1));
  CHECK(r14.x.contains(0));
  CHECK(r14.x.contains(2));

  // N0 excludes the semigroup and its negatives; row 7 also excludes 0
  const auto r5 = realize_row("5", with_N({2})).realized;
  const auto r7 = realize_row("7", with_N({2})).realized;
  CHECK(r5.x.contains(0));
  CHECK_FALSE(r7.x.contains(0));
  CHECK_FALSE(r5.x.contains(-4));
  CHECK(r5.x.contains(3));

  const auto r8 = realize_row("8", params(1, 4, {{0}})).realized;
  CHECK_FALSE(r8.x.contains(8));
  CHECK(r8.x.contains(2));
  CHECK(r8.s.contains(4));
  CHECK_FALSE(r8.s.contains(2));

  const auto vg = realize_row("Vg", [] { CatalogParams p; p.g = 2; return p; }()).realized;
  CHECK(vg.v.contains(-2));
  CHECK_FALSE(vg.v.contains(1));
  CHECK(catalog_rows().size() == 15);
}

TEST_CASE("parameter validation") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::empty_list;
  };
  CHECK(code([] { realize_row("8", params(1, 3, {{2}})); }) == Errc::invalid_params);
  CHECK(code([] { realize_row("1", params(1, 1, {{0}})); }) == Errc::invalid_params);
  CHECK(code([] { realize_row("1", params(std::nullopt, 1)); }) == Errc::invalid_params);
  CHECK(code([] { realize_row("1", params(1, 0)); }) == Errc::invalid_params);
  CHECK(code([] { realize_row("15", params(1, 1)); }) == Errc::invalid_params);
  CHECK(code([] { realize_row("5", with_N({})); }) == Errc::invalid_params);
  CHECK(code([] { realize_row("11", with_E({-1})); }) == Errc::invalid_params);
  CHECK(code([] { meet({}); }) == Errc::empty_list);
  CHECK_NOTHROW(realize_row("8", params(0, 4, {{0, 1, 2}})));
  CHECK_NOTHROW(realize_row("11", CatalogParams{}));
}

TEST_CASE("profile comparison") {
  for (const auto& p : oracle::random_partitions(100, 0, 7, 41)) CHECK(in_R(p, top_tuple()));
  const auto r1 = realize_row("1", params(1, 1)).realized;
  CHECK_FALSE(profile_leq(z_profile(four_block_wbwb()), r1));
  CHECK(first_failing_component(z_profile(four_block_wbwb()), r1) == 0);
  CHECK(in_R(TwoColoredPartition{}, r1));
  for (const auto& e : sample_rows()) CHECK(in_R(TwoColoredPartition{}, e.realized));
}

TEST_CASE("base partitions and probes against the catalog") {
  for (const auto& e : sample_rows()) {
    CAPTURE(e.row_id);
    CHECK(in_R(identity(Color::white), e.realized));
    const bool has_one = e.realized.f.contains(1);
    CHECK(in_R(singletons_wb(), e.realized) == has_one);
    if (e.row_id != "13" && e.row_id != "14") CHECK_FALSE(in_R(four_block_wbwb(), e.realized));
  }
}

TEST_CASE("case detection") {
  CHECK(nho_case(realize_row("1", params(1, 1)).realized) == NhoCase::O);
  CHECK(nho_case(realize_row("13", params(1, 1, {{0}})).realized) == NhoCase::S);
  CHECK(nho_case(realize_row("11", with_E({})).realized) == NhoCase::B);
  CHECK(nho_case(top_tuple()) == NhoCase::S);
  // V in 2Z admits the four-block but not the singletons
  CatalogParams g2;
  g2.g = 2;
  CHECK(nho_case(realize_row("Vg", g2).realized) == NhoCase::H);
}

TEST_CASE("meets") {
  const auto q = realize_row("9", params(1, 2, {{1}})).realized;
  CHECK(equal_on_window(meet({q}), q, -30, 30));
  const auto a = tuple_S(4), b = tuple_KY(3);
  CHECK(equal_on_window(meet({a, b}), meet({b, a}), -30, 30));
  for (const auto& e : sample_rows()) {
    CAPTURE(e.row_id);
    CHECK(equal_on_window(row_as_meet(e.row_id, e.params), e.realized, -30, 30));
  }
}

TEST_CASE("meet membership is the conjunction") {
  const auto rows = sample_rows();
  for (const auto& p : oracle::random_partitions(200, 0, 6, 42)) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& q1 = rows[i].realized;
      const auto& q2 = rows[(i + 5) % rows.size()].realized;
      CHECK(in_R(p, meet({q1, q2})) == (in_R(p, q1) && in_R(p, q2)));
    }
  }
}
