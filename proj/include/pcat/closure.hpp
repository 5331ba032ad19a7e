#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcat/paramsets.hpp"
#include "pcat/partition.hpp"

namespace pcat {

enum class OpSet {
  category,     // tensor, involution, composition; seeded with the five base partitions
  alternative,  // tensor, basic rotations, verticolor reflection, turn erasure; seeded with id_w
};

const char* to_string(OpSet ops) noexcept;

struct ClosureConfig {
  int max_points = 4;
  OpSet ops = OpSet::category;
  std::size_t max_elements = 200000;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct ClosureResult {
  std::vector<TwoColoredPartition> elements;  // sorted by canonical_less
  bool cap_exceeded = false;
  std::map<std::string, std::size_t> op_counts;
};

/// Everything reachable from the generators and the op set's seeds without
/// passing through partitions larger than max_points. Throws
/// Errc::invalid_params on a bad config or oversized generator.
/// Dispatches to the parallel kernel when workers > 1.
ClosureResult bounded_closure(const std::vector<TwoColoredPartition>& generators,
                              const ClosureConfig& cfg);

/// Worklist reference implementation.
ClosureResult bounded_closure_serial(const std::vector<TwoColoredPartition>& generators,
                                     const ClosureConfig& cfg);

/// Level-synchronous OpenMP version; same element set as the serial one.
ClosureResult bounded_closure_parallel(const std::vector<TwoColoredPartition>& generators,
                                       const ClosureConfig& cfg);

/// Number of elements of each size.
std::map<int, std::size_t> census(const std::vector<TwoColoredPartition>& elements);

/// Calls `f` on every two-colored partition with exactly `n_points` points.
void for_each_partition(int n_points, const std::function<void(const TwoColoredPartition&)>& f);

/// Uniform restricted-growth set partition, uniform row split 0..n and
/// uniform colors. n_points <= 25.
std::vector<TwoColoredPartition> sample_partitions(int n_points, std::size_t count,
                                                   std::uint64_t seed);

struct SampleInRResult {
  std::vector<TwoColoredPartition> members;
  std::size_t attempts = 0;
  bool exhausted = false;  // some item hit retry_cap rejections

  double acceptance_rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(members.size()) / attempts;
  }
};

/// Rejection sampling; each draw picks its size uniformly in [min_points, max_points].
SampleInRResult sample_in_R(const ParameterTuple& q, int min_points, int max_points,
                            std::size_t count, std::uint64_t seed, std::size_t retry_cap);

/// Members of R_Q among all partitions with at most max_points points,
/// grouped by size. Profiles of the enumerated universe are computed once.
class MemberPool {
 public:
  explicit MemberPool(int max_points);

  int max_points() const noexcept { return max_points_; }
  std::size_t universe_size() const noexcept { return universe_.size(); }

  /// Picks a size uniformly among sizes with members, then a member of that
  /// size uniformly. Empty if R_Q has no member in range.
  std::vector<TwoColoredPartition> sample(const ParameterTuple& q, std::size_t count,
                                          std::uint64_t seed) const;

 private:
  struct Entry {
    TwoColoredPartition p;
    ZProfile z;
  };
  int max_points_;
  std::vector<Entry> universe_;
};

struct Violation {
  std::string op;
  std::string input;
  std::string result;
  std::string component;  // first failing component of the result
};

struct RespectsReport {
  std::size_t samples = 0;
  std::size_t operations = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> op_counts;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  /// `RESULT ok ops=<n> seed=<s>` or `RESULT violations=<n> ops=<n> seed=<s>`.
  std::string result_line() const;
  /// Per-op counts, one line per violation, then the result line.
  std::string text() const;
};

/// Applies every category operation to the given members (and to pairs of
/// consecutive members) and records results outside R_Q. The five base
/// partitions are checked first; missing ones count as violations.
RespectsReport closure_respects(const ParameterTuple& q,
                                const std::vector<TwoColoredPartition>& members,
                                std::uint64_t seed);

/// Every partition reachable from `p` by basic rotations.
std::vector<TwoColoredPartition> rotation_orbit(const TwoColoredPartition& p);

}  // namespace pcat
