#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/analyzer.hpp"
#include "pcat/partition.hpp"

namespace pcat {

/// Immutable symbolic subset of the integers with a membership test.
class IntegerSet {
 public:
  struct Node;

  /// The empty set.
  IntegerSet();

  static IntegerSet empty();
  static IntegerSet singleton(long long a);
  static IntegerSet all();
  /// a + mZ, m >= 1.
  static IntegerSet progression(long long a, long long m);
  static IntegerSet finite(std::vector<long long> values);
  /// S ∪ (-S).
  static IntegerSet symmetric(IntegerSet s);
  /// (D ∪ (m-D)) + mZ, plus 0 + mZ when `primed`. For m = 0 this is D ∪ -D.
  static IntegerSet mod_shift(std::vector<long long> d, long long m, bool primed = false);
  /// Numerical semigroup generated by positive integers (0 excluded).
  static IntegerSet semigroup(std::vector<long long> generators);
  static IntegerSet set_union(IntegerSet a, IntegerSet b);
  static IntegerSet intersection(IntegerSet a, IntegerSet b);
  static IntegerSet complement(IntegerSet a);

  /// {1, 2, 3, ...}
  static IntegerSet naturals();
  /// mZ for m >= 1, {0} for m = 0.
  static IntegerSet multiples(long long m);

  bool contains(long long n) const;
  std::string to_string() const;

 private:
  explicit IntegerSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline IntegerSet operator|(IntegerSet a, IntegerSet b) { return IntegerSet::set_union(a, b); }
inline IntegerSet operator&(IntegerSet a, IntegerSet b) { return IntegerSet::intersection(a, b); }
inline IntegerSet operator~(IntegerSet a) { return IntegerSet::complement(a); }

/// Element of P(Z)^6, compared against ZProfile components in order F V S L K X.
struct ParameterTuple {
  IntegerSet f, v, s, l, k, x;

  const IntegerSet& operator[](int i) const;
  std::string to_string() const;
};

inline constexpr std::array<const char*, 6> component_names = {"F", "V", "S", "L", "K", "X"};

/// Index 0..5 of the first component of `z` not contained in `q`.
std::optional<int> first_failing_component(const ZProfile& z, const ParameterTuple& q);
bool profile_leq(const ZProfile& z, const ParameterTuple& q);
bool in_R(const TwoColoredPartition& p, const ParameterTuple& q);

/// Pointwise equality of every component on [lo, hi].
bool equal_on_window(const ParameterTuple& a, const ParameterTuple& b, long long lo, long long hi);

ParameterTuple meet(const std::vector<ParameterTuple>& qs);

/// (N, Z, Z, Z, Z, Z)
ParameterTuple top_tuple();

// Building blocks of the catalog rows.
ParameterTuple tuple_F2();
ParameterTuple tuple_F_le2();
ParameterTuple tuple_V0();
ParameterTuple tuple_V01();
ParameterTuple tuple_S(long long m);
ParameterTuple tuple_K(long long m);
ParameterTuple tuple_KY(long long m);
ParameterTuple tuple_X(long long m, IntegerSet e);

struct CatalogParams {
  std::optional<long long> u, m, g;
  std::optional<std::vector<long long>> D, E, N;
};

struct QCatalogEntry {
  std::string row_id;  // "1".."14" or "Vg"
  CatalogParams params;
  ParameterTuple realized;
};

struct CatalogRowInfo {
  std::string_view row_id;
  std::string_view signature;  // parameter letters, e.g. "u m D"
  std::array<std::string_view, 6> formulas;
  std::string_view meet;  // factor names whose meet gives the row
};

/// 14 rows followed by the Vg entry.
const std::vector<CatalogRowInfo>& catalog_rows();

/// Throws Errc::invalid_params on an unknown row, a missing or extra
/// parameter, or a violated range constraint.
QCatalogEntry realize_row(std::string_view row_id, const CatalogParams& params);

/// The same row assembled as a meet of the building-block tuples.
ParameterTuple row_as_meet(std::string_view row_id, const CatalogParams& params);

enum class NhoCase { O, B, S, H };

const char* to_string(NhoCase c) noexcept;

/// Case from membership of the "wb" singletons and the four-block "wbwb".
NhoCase nho_case(const ParameterTuple& q);

}  // namespace pcat
