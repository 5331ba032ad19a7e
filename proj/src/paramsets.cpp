#include "pcat/paramsets.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>

#include "pcat/ops.hpp"

namespace pcat {

namespace {

struct EmptyNode {};
struct AllNode {};
struct NaturalsNode {};
struct ProgressionNode { long long a, m; };
struct FiniteNode { std::vector<long long> values; };  // sorted, unique
struct SymmetricNode { IntegerSet inner; };
struct ModShiftNode { std::vector<long long> d; long long m; bool primed; };
struct SemigroupNode { std::vector<long long> gens; };
struct UnionNode { IntegerSet a, b; };
struct IntersectionNode { IntegerSet a, b; };
struct ComplementNode { IntegerSet a; };

long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

std::string list(const std::vector<long long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::vector<long long> sorted_unique(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::invalid_params, what); }

}  // namespace

struct IntegerSet::Node {
  std::variant<EmptyNode, AllNode, NaturalsNode, ProgressionNode, FiniteNode, SymmetricNode,
               ModShiftNode, SemigroupNode, UnionNode, IntersectionNode, ComplementNode>
      v;
};

namespace {
template <class T>
std::shared_ptr<const IntegerSet::Node> make(T t) {
  return std::make_shared<const IntegerSet::Node>(IntegerSet::Node{std::move(t)});
}
}  // namespace

IntegerSet::IntegerSet() : node_(make(EmptyNode{})) {}

IntegerSet IntegerSet::empty() { return IntegerSet(); }
IntegerSet IntegerSet::singleton(long long a) { return IntegerSet(make(FiniteNode{{a}})); }
IntegerSet IntegerSet::all() { return IntegerSet(make(AllNode{})); }
IntegerSet IntegerSet::naturals() { return IntegerSet(make(NaturalsNode{})); }

IntegerSet IntegerSet::progression(long long a, long long m) {
  if (m < 1) bad("progression step must be positive");
  return IntegerSet(make(ProgressionNode{floor_mod(a, m), m}));
}

IntegerSet IntegerSet::finite(std::vector<long long> values) {
  if (values.empty()) return empty();
  return IntegerSet(make(FiniteNode{sorted_unique(std::move(values))}));
}

IntegerSet IntegerSet::symmetric(IntegerSet s) {
  if (std::holds_alternative<EmptyNode>(s.node_->v)) return s;
  return IntegerSet(make(SymmetricNode{std::move(s)}));
}

IntegerSet IntegerSet::mod_shift(std::vector<long long> d, long long m, bool primed) {
  if (m < 0) bad("modulus must be nonnegative");
  return IntegerSet(make(ModShiftNode{sorted_unique(std::move(d)), m, primed}));
}

IntegerSet IntegerSet::semigroup(std::vector<long long> generators) {
  if (generators.empty()) bad("semigroup needs at least one generator");
  for (long long g : generators) {
    if (g < 1) bad("semigroup generators must be positive");
  }
  return IntegerSet(make(SemigroupNode{sorted_unique(std::move(generators))}));
}

IntegerSet IntegerSet::set_union(IntegerSet a, IntegerSet b) {
  return IntegerSet(make(UnionNode{std::move(a), std::move(b)}));
}

IntegerSet IntegerSet::intersection(IntegerSet a, IntegerSet b) {
  return IntegerSet(make(IntersectionNode{std::move(a), std::move(b)}));
}

IntegerSet IntegerSet::complement(IntegerSet a) { return IntegerSet(make(ComplementNode{std::move(a)})); }

IntegerSet IntegerSet::multiples(long long m) {
  if (m < 0) m = -m;
  return m == 0 ? singleton(0) : progression(0, m);
}

bool IntegerSet::contains(long long n) const {
  struct Visitor {
    long long n;
    bool operator()(const EmptyNode&) const { return false; }
    bool operator()(const AllNode&) const { return true; }
    bool operator()(const NaturalsNode&) const { return n >= 1; }
    bool operator()(const ProgressionNode& p) const { return floor_mod(n - p.a, p.m) == 0; }
    bool operator()(const FiniteNode& f) const {
      return std::binary_search(f.values.begin(), f.values.end(), n);
    }
    bool operator()(const SymmetricNode& s) const { return s.inner.contains(n) || s.inner.contains(-n); }
    bool operator()(const ModShiftNode& s) const {
      auto hit = [&](long long x) { return s.m == 0 ? n == x : floor_mod(n - x, s.m) == 0; };
      if (s.primed && hit(0)) return true;
      for (long long x : s.d) {
        if (hit(x) || hit(s.m - x)) return true;
      }
      return false;
    }
    bool operator()(const SemigroupNode& s) const {
      if (n < 1) return false;
      std::vector<char> reach(n + 1, 0);
      reach[0] = 1;
      for (long long i = 1; i <= n; ++i) {
        for (long long g : s.gens) {
          if (g > i) break;
          if (reach[i - g]) {
            reach[i] = 1;
            break;
          }
        }
      }
      return reach[n];
    }
    bool operator()(const UnionNode& u) const { return u.a.contains(n) || u.b.contains(n); }
    bool operator()(const IntersectionNode& x) const { return x.a.contains(n) && x.b.contains(n); }
    bool operator()(const ComplementNode& c) const { return !c.a.contains(n); }
  };
  return std::visit(Visitor{n}, node_->v);
}

std::string IntegerSet::to_string() const {
  struct Visitor {
    std::string operator()(const EmptyNode&) const { return "∅"; }
    std::string operator()(const AllNode&) const { return "ℤ"; }
    std::string operator()(const NaturalsNode&) const { return "ℕ"; }
    std::string operator()(const ProgressionNode& p) const {
      const std::string step = p.m == 1 ? "ℤ" : std::to_string(p.m) + "ℤ";
      return p.a == 0 ? step : std::to_string(p.a) + "+" + step;
    }
    std::string operator()(const FiniteNode& f) const { return list(f.values); }
    std::string operator()(const SymmetricNode& s) const { return "±" + s.inner.to_string(); }
    std::string operator()(const ModShiftNode& s) const {
      const std::string d = list(s.d);
      const std::string m = std::to_string(s.m);
      std::string out = "(" + d + "∪(" + m + "-" + d + ")";
      if (s.primed) out += "∪{0}";
      return out + ")+" + (s.m == 0 ? std::string("{0}") : m + "ℤ");
    }
    std::string operator()(const SemigroupNode& s) const {
      std::string out = "⟨";
      for (std::size_t i = 0; i < s.gens.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.gens[i]);
      }
      return out + "⟩";
    }
    std::string operator()(const UnionNode& u) const {
      return "(" + u.a.to_string() + "∪" + u.b.to_string() + ")";
    }
    std::string operator()(const IntersectionNode& x) const {
      return "(" + x.a.to_string() + "∩" + x.b.to_string() + ")";
    }
    std::string operator()(const ComplementNode& c) const { return "ℤ∖" + c.a.to_string(); }
  };
  return std::visit(Visitor{}, node_->v);
}

const IntegerSet& ParameterTuple::operator[](int i) const {
  switch (i) {
    case 0: return f;
    case 1: return v;
    case 2: return s;
    case 3: return l;
    case 4: return k;
    default: return x;
  }
}

std::string ParameterTuple::to_string() const {
  std::string out = "(";
  for (int i = 0; i < 6; ++i) {
    if (i > 0) out += ", ";
    out += (*this)[i].to_string();
  }
  return out + ")";
}

std::optional<int> first_failing_component(const ZProfile& z, const ParameterTuple& q) {
  const std::set<int>* parts[] = {&z.F, &z.V, &z.Sigma, &z.L, &z.K, &z.X};
  for (int i = 0; i < 6; ++i) {
    for (int value : *parts[i]) {
      if (!q[i].contains(value)) return i;
    }
  }
  return std::nullopt;
}

bool profile_leq(const ZProfile& z, const ParameterTuple& q) {
  return !first_failing_component(z, q).has_value();
}

bool in_R(const TwoColoredPartition& p, const ParameterTuple& q) {
  return profile_leq(z_profile(p), q);
}

bool equal_on_window(const ParameterTuple& a, const ParameterTuple& b, long long lo, long long hi) {
  for (int i = 0; i < 6; ++i) {
    for (long long n = lo; n <= hi; ++n) {
      if (a[i].contains(n) != b[i].contains(n)) return false;
    }
  }
  return true;
}

ParameterTuple meet(const std::vector<ParameterTuple>& qs) {
  if (qs.empty()) throw Error(Errc::empty_list, "meet of an empty list");
  ParameterTuple out = qs.front();
  for (std::size_t i = 1; i < qs.size(); ++i) {
    out = {out.f & qs[i].f, out.v & qs[i].v, out.s & qs[i].s,
           out.l & qs[i].l, out.k & qs[i].k, out.x & qs[i].x};
  }
  return out;
}

using IS = IntegerSet;

ParameterTuple top_tuple() { return {IS::naturals(), IS::all(), IS::all(), IS::all(), IS::all(), IS::all()}; }

ParameterTuple tuple_F2() {
  return {IS::singleton(2), IS::symmetric(IS::finite({0, 2})), IS::multiples(2),
          IS::all(),        IS::all(),                         IS::all()};
}

ParameterTuple tuple_F_le2() {
  return {IS::finite({1, 2}), IS::symmetric(IS::finite({0, 1, 2})), IS::all(),
          IS::all(),          IS::all(),                            IS::all()};
}

ParameterTuple tuple_V0() {
  return {IS::singleton(2), IS::singleton(0), IS::singleton(0), IS::empty(), IS::all(), IS::all()};
}

ParameterTuple tuple_V01() {
  return {IS::finite({1, 2}), IS::symmetric(IS::finite({0, 1})), IS::all(),
          IS::empty(),        IS::all(),                         IS::all()};
}

ParameterTuple tuple_S(long long m) {
  return {IS::naturals(), IS::all(), IS::multiples(m), IS::all(), IS::all(), IS::all()};
}

ParameterTuple tuple_K(long long m) {
  return {IS::naturals(),   IS::all(),        IS::multiples(m),
          IS::multiples(m), IS::multiples(m), IS::all()};
}

namespace {
// m + 2mZ; with m = 0 this degenerates to {0}.
IntegerSet odd_multiples(long long m) {
  return m == 0 ? IS::singleton(0) : IS::progression(m, 2 * m);
}
}  // namespace

ParameterTuple tuple_KY(long long m) {
  return {IS::finite({1, 2}),   IS::symmetric(IS::finite({0, 1, 2})), IS::multiples(2 * m),
          odd_multiples(m),     IS::multiples(2 * m),                  IS::all()};
}

ParameterTuple tuple_X(long long m, IntegerSet e) {
  return {IS::naturals(),   IS::all(),        IS::multiples(m),
          IS::multiples(m), IS::multiples(m), IS::complement(std::move(e))};
}

const std::vector<CatalogRowInfo>& catalog_rows() {
  static const std::vector<CatalogRowInfo> rows = {
      {"1", "u m", {"{2}", "±{0,2}", "2umℤ", "mℤ", "mℤ", "ℤ"}, "F2 S_2um K_m"},
      {"2", "u m", {"{2}", "±{0,2}", "2umℤ", "m+2mℤ", "2mℤ", "ℤ"}, "F2 S_2um KY_m"},
      {"3", "u m", {"{2}", "±{0,2}", "2umℤ", "m+2mℤ", "2mℤ", "ℤ∖mℤ"}, "F2 S_2um KY_m X_m,mℤ"},
      {"4", "m", {"{2}", "{0}", "{0}", "∅", "mℤ", "ℤ"}, "V0 K_m"},
      {"5", "N", {"{2}", "±{0,2}", "{0}", "{0}", "{0}", "ℤ∖±N"}, "F2 X_0,±N"},
      {"6", "N", {"{2}", "{0}", "{0}", "∅", "{0}", "ℤ∖±N"}, "V0 X_0,±N"},
      {"7", "N", {"{2}", "{0}", "{0}", "∅", "{0}", "ℤ∖(±N∪{0})"}, "V0 X_0,±N∪{0}"},
      {"8", "u m D", {"{1,2}", "±{0,1,2}", "umℤ", "mℤ", "mℤ", "ℤ∖D_m"}, "F≤2 S_um X_m,D_m"},
      {"9", "u m D", {"{1,2}", "±{0,1,2}", "2umℤ", "m+2mℤ", "2mℤ", "ℤ∖D_m"}, "S_2um KY_m X_m,D_m"},
      {"10", "u m D", {"{1,2}", "±{0,1}", "umℤ", "∅", "mℤ", "ℤ∖D_m"}, "V01 S_um X_m,D_m"},
      {"11", "E", {"{1,2}", "±{0,1,2}", "{0}", "{0}", "{0}", "ℤ∖±E"}, "F≤2 X_0,±E"},
      {"12", "E", {"{1,2}", "±{0,1}", "{0}", "∅", "{0}", "ℤ∖±E"}, "V01 X_0,±E"},
      {"13", "u m D", {"ℕ", "ℤ", "umℤ", "mℤ", "mℤ", "ℤ∖D_m"}, "S_um X_m,D_m"},
      {"14", "E", {"ℕ", "ℤ", "{0}", "{0}", "{0}", "ℤ∖±E"}, "X_0,±E"},
      {"Vg", "g", {"ℕ", "gℤ", "ℤ", "ℤ", "ℤ", "ℤ"}, "-"},
  };
  return rows;
}

namespace {

const CatalogRowInfo& find_row(std::string_view row_id) {
  for (const auto& row : catalog_rows()) {
    if (row.row_id == row_id) return row;
  }
  bad("unknown row '" + std::string(row_id) + "'");
}

// Validated parameter values with defaults for the optional sets.
struct Resolved {
  long long u = 0, m = 1, g = 0;
  std::vector<long long> D, E, N;
};

Resolved resolve(const CatalogRowInfo& row, const CatalogParams& p) {
  const std::string_view sig = row.signature;
  auto wants = [&](char c) { return sig.find(c) != std::string_view::npos; };
  auto reject_extra = [&](bool present, char c) {
    if (present && !wants(c)) {
      bad(std::string("row ") + std::string(row.row_id) + " takes no " + c + " parameter");
    }
  };
  reject_extra(p.u.has_value(), 'u');
  reject_extra(p.m.has_value(), 'm');
  reject_extra(p.g.has_value(), 'g');
  reject_extra(p.D.has_value(), 'D');
  reject_extra(p.E.has_value(), 'E');
  reject_extra(p.N.has_value(), 'N');

  Resolved r;
  auto require = [&](const std::optional<long long>& v, char c) {
    if (!v) bad(std::string("row ") + std::string(row.row_id) + " needs " + c);
    return *v;
  };
  if (wants('u')) {
    r.u = require(p.u, 'u');
    if (r.u < 0) bad("u must be >= 0");
  }
  if (wants('m')) {
    r.m = require(p.m, 'm');
    if (r.m < 1) bad("m must be >= 1");
  }
  if (wants('g')) {
    r.g = require(p.g, 'g');
    if (r.g < 0) bad("g must be >= 0");
  }
  if (wants('D')) {
    r.D = p.D.value_or(std::vector<long long>{});
    for (long long d : r.D) {
      if (d < 0 || d > r.m / 2) {
        bad("D must be a subset of {0,...," + std::to_string(r.m / 2) + "}, got " +
            std::to_string(d));
      }
    }
  }
  if (wants('E')) {
    r.E = p.E.value_or(std::vector<long long>{});
    for (long long e : r.E) {
      if (e < 0) bad("E must be a subset of {0,1,2,...}");
    }
  }
  if (wants('N')) {
    if (!p.N || p.N->empty()) bad(std::string("row ") + std::string(row.row_id) + " needs N");
    r.N = *p.N;
    for (long long n : r.N) {
      if (n < 1) bad("N generators must be positive");
    }
  }
  return r;
}

int row_number(std::string_view id) { return id == "Vg" ? 0 : std::stoi(std::string(id)); }

}  // namespace

QCatalogEntry realize_row(std::string_view row_id, const CatalogParams& params) {
  const CatalogRowInfo& row = find_row(row_id);
  const Resolved r = resolve(row, params);
  const long long u = r.u, m = r.m;
  const IS two = IS::singleton(2);
  const IS one_two = IS::finite({1, 2});
  const IS pm02 = IS::symmetric(IS::finite({0, 2}));
  const IS pm012 = IS::symmetric(IS::finite({0, 1, 2}));
  const IS pm01 = IS::symmetric(IS::finite({0, 1}));
  const IS zero = IS::singleton(0);
  const IS none = IS::empty();
  const IS Z = IS::all();
  const IS mZ = IS::multiples(m);
  const IS two_mZ = IS::multiples(2 * m);
  const IS odd_mZ = IS::progression(m, 2 * m);
  const IS Dm = IS::mod_shift(r.D, m);
  auto N0 = [&] { return IS::symmetric(IS::semigroup(r.N)); };
  const IS E0 = IS::symmetric(IS::finite(r.E));

  ParameterTuple t;
  switch (row_number(row_id)) {
    case 0: t = {IS::naturals(), IS::multiples(r.g), Z, Z, Z, Z}; break;
    case 1: t = {two, pm02, IS::multiples(2 * u * m), mZ, mZ, Z}; break;
    case 2: t = {two, pm02, IS::multiples(2 * u * m), odd_mZ, two_mZ, Z}; break;
    case 3: t = {two, pm02, IS::multiples(2 * u * m), odd_mZ, two_mZ, ~mZ}; break;
    case 4: t = {two, zero, zero, none, mZ, Z}; break;
    case 5: t = {two, pm02, zero, zero, zero, ~N0()}; break;
    case 6: t = {two, zero, zero, none, zero, ~N0()}; break;
    case 7: t = {two, zero, zero, none, zero, ~(N0() | zero)}; break;
    case 8: t = {one_two, pm012, IS::multiples(u * m), mZ, mZ, ~Dm}; break;
    case 9: t = {one_two, pm012, IS::multiples(2 * u * m), odd_mZ, two_mZ, ~Dm}; break;
    case 10: t = {one_two, pm01, IS::multiples(u * m), none, mZ, ~Dm}; break;
    case 11: t = {one_two, pm012, zero, zero, zero, ~E0}; break;
    case 12: t = {one_two, pm01, zero, none, zero, ~E0}; break;
    case 13: t = {IS::naturals(), Z, IS::multiples(u * m), mZ, mZ, ~Dm}; break;
    case 14: t = {IS::naturals(), Z, zero, zero, zero, ~E0}; break;
    default: bad("unknown row");
  }
  return {std::string(row_id), params, std::move(t)};
}

ParameterTuple row_as_meet(std::string_view row_id, const CatalogParams& params) {
  const CatalogRowInfo& row = find_row(row_id);
  const Resolved r = resolve(row, params);
  const long long u = r.u, m = r.m;
  const IS N0 = IS::symmetric(IS::semigroup(r.N.empty() ? std::vector<long long>{1} : r.N));
  const IS E0 = IS::symmetric(IS::finite(r.E));
  const IS Dm = IS::mod_shift(r.D, m);
  switch (row_number(row_id)) {
    case 0: return realize_row(row_id, params).realized;
    case 1: return meet({tuple_F2(), tuple_S(2 * u * m), tuple_K(m)});
    case 2: return meet({tuple_F2(), tuple_S(2 * u * m), tuple_KY(m)});
    case 3: return meet({tuple_F2(), tuple_S(2 * u * m), tuple_KY(m), tuple_X(m, IS::multiples(m))});
    case 4: return meet({tuple_V0(), tuple_K(m)});
    case 5: return meet({tuple_F2(), tuple_X(0, N0)});
    case 6: return meet({tuple_V0(), tuple_X(0, N0)});
    case 7: return meet({tuple_V0(), tuple_X(0, N0 | IS::singleton(0))});
    case 8: return meet({tuple_F_le2(), tuple_S(u * m), tuple_X(m, Dm)});
    case 9: return meet({tuple_S(2 * u * m), tuple_KY(m), tuple_X(m, Dm)});
    case 10: return meet({tuple_V01(), tuple_S(u * m), tuple_X(m, Dm)});
    case 11: return meet({tuple_F_le2(), tuple_X(0, E0)});
    case 12: return meet({tuple_V01(), tuple_X(0, E0)});
    case 13: return meet({tuple_S(u * m), tuple_X(m, Dm)});
    case 14: return meet({tuple_X(0, E0)});
  }
  bad("unknown row");
}

const char* to_string(NhoCase c) noexcept {
  switch (c) {
    case NhoCase::O: return "O";
    case NhoCase::B: return "B";
    case NhoCase::S: return "S";
    case NhoCase::H: return "H";
  }
  return "?";
}

NhoCase nho_case(const ParameterTuple& q) {
  const bool singletons = in_R(singletons_wb(), q);
  const bool four = in_R(four_block_wbwb(), q);
  if (singletons) return four ? NhoCase::S : NhoCase::B;
  return four ? NhoCase::H : NhoCase::O;
}

}  // namespace pcat
