#include "pcat/closure.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcat/ops.hpp"
#include "pcat/text.hpp"

namespace pcat {

const char* to_string(OpSet ops) noexcept {
  return ops == OpSet::category ? "category" : "alternative";
}

namespace {

enum Op { op_tensor, op_involution, op_composition, op_rotation, op_verticolor, op_erase, op_count };
constexpr std::array<const char*, op_count> op_names = {"tensor",   "involution", "composition",
                                                        "rotation", "verticolor", "erase"};
using Counts = std::array<std::size_t, op_count>;

void add_counts(Counts& into, const Counts& from) {
  for (int i = 0; i < op_count; ++i) into[i] += from[i];
}

std::map<std::string, std::size_t> to_map(const Counts& c) {
  std::map<std::string, std::size_t> out;
  for (int i = 0; i < op_count; ++i) {
    if (c[i] > 0) out[op_names[i]] = c[i];
  }
  return out;
}

// Index over the elements known so far; index lists are ascending.
struct Buckets {
  std::vector<std::vector<std::size_t>> by_size;
  std::unordered_map<std::string, std::vector<std::size_t>> by_lower, by_upper;

  explicit Buckets(int max_points) : by_size(max_points + 1) {}

  void add(const TwoColoredPartition& p, std::size_t index) {
    by_size[p.size()].push_back(index);
    by_lower[color_word(p.lower_colors())].push_back(index);
    by_upper[color_word(p.upper_colors())].push_back(index);
  }
};

void validate(const std::vector<TwoColoredPartition>& generators, const ClosureConfig& cfg) {
  if (cfg.max_points < 2) throw Error(Errc::invalid_params, "max_points must be >= 2");
  if (cfg.max_elements < 1) throw Error(Errc::invalid_params, "max_elements must be >= 1");
  if (cfg.workers < 1) throw Error(Errc::invalid_params, "workers must be >= 1");
  for (const auto& g : generators) {
    if (g.size() > cfg.max_points) {
      throw Error(Errc::invalid_params, "generator " + to_text(g) + " exceeds max_points");
    }
  }
}

std::vector<TwoColoredPartition> seeds(const std::vector<TwoColoredPartition>& generators,
                                       const ClosureConfig& cfg) {
  std::vector<TwoColoredPartition> out =
      cfg.ops == OpSet::category ? base_partitions()
                                 : std::vector<TwoColoredPartition>{identity(Color::white)};
  out.insert(out.end(), generators.begin(), generators.end());
  return out;
}

// Applies the op set to `x` (at position gx of `known`) alone and together
// with every known element at a position <= gx.
template <class Emit>
void expand(const TwoColoredPartition& x, std::size_t gx,
            const std::vector<TwoColoredPartition>& known, const Buckets& buckets,
            const ClosureConfig& cfg, Counts& counts, Emit&& emit) {
  const int cap = cfg.max_points;
  if (cfg.ops == OpSet::category) {
    ++counts[op_involution];
    emit(involute(x));
  } else {
    for (RotationKind r : basic_rotations) {
      if (!can_rotate(x, r)) continue;
      ++counts[op_rotation];
      emit(rotate(x, r));
    }
    ++counts[op_verticolor];
    emit(verticolor_reflect(x));
    for (const auto& [a, b] : turns(x)) {
      const Point pair[] = {a, b};
      ++counts[op_erase];
      emit(erase(x, pair));
    }
  }

  for (int s = 0; s + x.size() <= cap; ++s) {
    for (std::size_t j : buckets.by_size[s]) {
      if (j > gx) break;
      counts[op_tensor] += 2;
      emit(tensor(x, known[j]));
      emit(tensor(known[j], x));
    }
  }

  if (cfg.ops != OpSet::category) return;
  // x below y: y's lower row must match x's upper row.
  if (auto it = buckets.by_lower.find(color_word(x.upper_colors())); it != buckets.by_lower.end()) {
    for (std::size_t j : it->second) {
      if (j > gx) break;
      ++counts[op_composition];
      emit(compose(x, known[j]));
    }
  }
  if (auto it = buckets.by_upper.find(color_word(x.lower_colors())); it != buckets.by_upper.end()) {
    for (std::size_t j : it->second) {
      if (j > gx) break;
      ++counts[op_composition];
      emit(compose(known[j], x));
    }
  }
}

ClosureResult finish(std::vector<TwoColoredPartition> elements, bool cap_exceeded,
                     const Counts& counts) {
  std::sort(elements.begin(), elements.end(), canonical_less);
  return {std::move(elements), cap_exceeded, to_map(counts)};
}

}  // namespace

ClosureResult bounded_closure_serial(const std::vector<TwoColoredPartition>& generators,
                                     const ClosureConfig& cfg) {
  validate(generators, cfg);
  std::unordered_set<TwoColoredPartition> found;
  std::deque<TwoColoredPartition> queue;
  std::vector<TwoColoredPartition> processed;
  Buckets buckets(cfg.max_points);
  Counts counts{};
  bool cap_exceeded = false;

  auto insert = [&](TwoColoredPartition p) {
    if (cap_exceeded || p.size() > cfg.max_points) return;
    if (!found.insert(p).second) return;
    queue.push_back(std::move(p));
    if (found.size() > cfg.max_elements) cap_exceeded = true;
  };
  for (auto& s : seeds(generators, cfg)) insert(std::move(s));

  while (!queue.empty() && !cap_exceeded) {
    TwoColoredPartition x = std::move(queue.front());
    queue.pop_front();
    const std::size_t gx = processed.size();
    processed.push_back(x);
    buckets.add(x, gx);
    expand(x, gx, processed, buckets, cfg, counts, insert);
  }
  return finish(std::vector<TwoColoredPartition>(found.begin(), found.end()), cap_exceeded, counts);
}

ClosureResult bounded_closure_parallel(const std::vector<TwoColoredPartition>& generators,
                                       const ClosureConfig& cfg) {
  validate(generators, cfg);
  std::unordered_set<TwoColoredPartition> found;
  std::vector<TwoColoredPartition> known;  // processed elements, then the current frontier
  Buckets buckets(cfg.max_points);
  Counts counts{};
  bool cap_exceeded = false;

  std::vector<TwoColoredPartition> frontier;
  for (auto& s : seeds(generators, cfg)) {
    if (found.insert(s).second) frontier.push_back(std::move(s));
  }
  std::sort(frontier.begin(), frontier.end(), canonical_less);
  cap_exceeded = found.size() > cfg.max_elements;

  while (!frontier.empty() && !cap_exceeded) {
    const std::size_t base = known.size();
    for (auto& x : frontier) {
      buckets.add(x, known.size());
      known.push_back(std::move(x));
    }
    const auto n = static_cast<std::ptrdiff_t>(known.size() - base);
    std::vector<std::vector<TwoColoredPartition>> produced(n);
    std::vector<Counts> local(n, Counts{});

#pragma omp parallel for schedule(dynamic) num_threads(cfg.workers)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const std::size_t gx = base + i;
      auto& out = produced[i];
      expand(known[gx], gx, known, buckets, cfg, local[i], [&](TwoColoredPartition p) {
        if (p.size() <= cfg.max_points && !found.contains(p)) out.push_back(std::move(p));
      });
    }

    std::vector<TwoColoredPartition> next;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      add_counts(counts, local[i]);
      for (auto& p : produced[i]) next.push_back(std::move(p));
    }
    std::sort(next.begin(), next.end(), canonical_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier.clear();
    for (auto& p : next) {
      found.insert(p);
      frontier.push_back(std::move(p));
      if (found.size() > cfg.max_elements) {
        cap_exceeded = true;
        break;
      }
    }
  }
  return finish(std::vector<TwoColoredPartition>(found.begin(), found.end()), cap_exceeded, counts);
}

ClosureResult bounded_closure(const std::vector<TwoColoredPartition>& generators,
                              const ClosureConfig& cfg) {
  return cfg.workers > 1 ? bounded_closure_parallel(generators, cfg)
                         : bounded_closure_serial(generators, cfg);
}

std::map<int, std::size_t> census(const std::vector<TwoColoredPartition>& elements) {
  std::map<int, std::size_t> out;
  for (const auto& p : elements) ++out[p.size()];
  return out;
}

void for_each_partition(int n, const std::function<void(const TwoColoredPartition&)>& f) {
  if (n < 0) return;
  // Restricted-growth strings of length n.
  std::vector<std::vector<int>> words;
  std::vector<int> word(n, 0);
  auto grow = [&](auto&& self, int pos, int blocks) -> void {
    if (pos == n) {
      words.push_back(word);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      word[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  grow(grow, 0, 0);

  for (int k = 0; k <= n; ++k) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Color> up(k), lo(n - k);
      for (int i = 0; i < n; ++i) {
        const Color c = (mask >> i) & 1u ? Color::black : Color::white;
        if (i < k) up[i] = c;
        else lo[i - k] = c;
      }
      for (const auto& w : words) f(TwoColoredPartition(up, lo, w));
    }
  }
}

namespace {

// T[r][c]: number of ways to finish a restricted-growth string with r
// positions left when c blocks are already open.
std::vector<std::vector<std::uint64_t>> completion_counts(int n) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (int c = 0; c <= n + 1; ++c) t[0][c] = 1;
  for (int r = 1; r <= n; ++r) {
    for (int c = 0; c + r <= n + 1 && c <= n; ++c) t[r][c] = c * t[r - 1][c] + t[r - 1][c + 1];
  }
  return t;
}

TwoColoredPartition draw(int n, const std::vector<std::vector<std::uint64_t>>& t,
                         std::mt19937_64& rng) {
  std::vector<int> labels(n);
  int open = 0;
  for (int pos = 0; pos < n; ++pos) {
    const int r = n - pos - 1;
    const std::uint64_t total = open * t[r][open] + t[r][open + 1];
    const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
    if (x < open * t[r][open]) {
      labels[pos] = static_cast<int>(x / t[r][open]);
    } else {
      labels[pos] = open++;
    }
  }
  const int k = std::uniform_int_distribution<int>(0, n)(rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Color> up(k), lo(n - k);
  for (auto& c : up) c = coin(rng) ? Color::black : Color::white;
  for (auto& c : lo) c = coin(rng) ? Color::black : Color::white;
  return TwoColoredPartition(std::move(up), std::move(lo), std::move(labels));
}

}  // namespace

std::vector<TwoColoredPartition> sample_partitions(int n_points, std::size_t count,
                                                   std::uint64_t seed) {
  if (n_points < 0 || n_points > 25) {
    throw Error(Errc::invalid_params, "sample size must be in 0..25");
  }
  const auto t = completion_counts(n_points);
  std::mt19937_64 rng(seed);
  std::vector<TwoColoredPartition> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw(n_points, t, rng));
  return out;
}

SampleInRResult sample_in_R(const ParameterTuple& q, int min_points, int max_points,
                            std::size_t count, std::uint64_t seed, std::size_t retry_cap) {
  if (min_points < 0 || max_points > 25 || min_points > max_points) {
    throw Error(Errc::invalid_params, "sample size range must lie in 0..25");
  }
  std::vector<std::vector<std::vector<std::uint64_t>>> tables;
  for (int n = 0; n <= max_points; ++n) tables.push_back(completion_counts(n));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(min_points, max_points);
  SampleInRResult out;
  while (out.members.size() < count) {
    std::size_t rejected = 0;
    for (;;) {
      const int n = size(rng);
      auto p = draw(n, tables[n], rng);
      ++out.attempts;
      if (in_R(p, q)) {
        out.members.push_back(std::move(p));
        break;
      }
      if (++rejected >= retry_cap) {
        out.exhausted = true;
        return out;
      }
    }
  }
  return out;
}

MemberPool::MemberPool(int max_points) : max_points_(max_points) {
  if (max_points < 0 || max_points > 7) {
    throw Error(Errc::invalid_params, "member pool supports at most 7 points");
  }
  for (int n = 0; n <= max_points; ++n) {
    for_each_partition(n, [&](const TwoColoredPartition& p) { universe_.push_back({p, z_profile(p)}); });
  }
}

std::vector<TwoColoredPartition> MemberPool::sample(const ParameterTuple& q, std::size_t count,
                                                    std::uint64_t seed) const {
  std::vector<std::vector<std::size_t>> by_size(max_points_ + 1);
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (profile_leq(universe_[i].z, q)) by_size[universe_[i].p.size()].push_back(i);
  }
  std::vector<int> sizes;
  for (int n = 0; n <= max_points_; ++n) {
    if (!by_size[n].empty()) sizes.push_back(n);
  }
  std::vector<TwoColoredPartition> out;
  if (sizes.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_size(0, sizes.size() - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& bucket = by_size[sizes[pick_size(rng)]];
    std::uniform_int_distribution<std::size_t> pick(0, bucket.size() - 1);
    out.push_back(universe_[bucket[pick(rng)]].p);
  }
  return out;
}

std::vector<TwoColoredPartition> rotation_orbit(const TwoColoredPartition& p) {
  std::unordered_set<TwoColoredPartition> seen{p};
  std::vector<TwoColoredPartition> out{p};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (RotationKind r : basic_rotations) {
      if (!can_rotate(out[i], r)) continue;
      auto q = rotate(out[i], r);
      if (seen.insert(q).second) out.push_back(std::move(q));
    }
  }
  return out;
}

std::string RespectsReport::result_line() const {
  std::string out = "RESULT ";
  out += ok() ? "ok" : "violations=" + std::to_string(violations.size());
  return out + " ops=" + std::to_string(operations) + " seed=" + std::to_string(seed);
}

std::string RespectsReport::text() const {
  std::ostringstream os;
  os << "samples " << samples << '\n';
  for (const auto& [name, n] : op_counts) os << "op " << name << ' ' << n << '\n';
  for (const auto& v : violations) {
    os << "violation " << v.op << " component=" << v.component << " input=[" << v.input
       << "] result=[" << v.result << "]\n";
  }
  os << result_line() << '\n';
  return os.str();
}

RespectsReport closure_respects(const ParameterTuple& q,
                                const std::vector<TwoColoredPartition>& members,
                                std::uint64_t seed) {
  RespectsReport report;
  report.seed = seed;
  report.samples = members.size();

  auto check = [&](const char* op, const std::string& input, const TwoColoredPartition& r) {
    ++report.operations;
    ++report.op_counts[op];
    const auto failing = first_failing_component(z_profile(r), q);
    if (failing) report.violations.push_back({op, input, to_text(r), component_names[*failing]});
  };

  for (const auto& b : base_partitions()) check("base", "", b);

  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& p = members[i];
    const auto& partner = members[(i + 1) % members.size()];
    const std::string in = to_text(p);
    const std::string pair = in + " | " + to_text(partner);

    check("tensor", pair, tensor(p, partner));
    check("tensor", pair, tensor(partner, p));
    check("involution", in, involute(p));
    for (RotationKind r : {RotationKind::down_left, RotationKind::down_right, RotationKind::up_left,
                           RotationKind::up_right, RotationKind::cyclic_clockwise,
                           RotationKind::cyclic_counterclockwise}) {
      if (can_rotate(p, r)) check(to_string(r), in, rotate(p, r));
    }
    check("verticolor", in, verticolor_reflect(p));
    for (const auto& [a, b] : turns(p)) {
      const Point t[] = {a, b};
      check("erase", in + " turn " + to_string(a) + " " + to_string(b), erase(p, t));
    }

    const auto star = involute(p);
    check("composition", in + " with its involution", compose(p, star));
    check("composition", in + " with its involution", compose(star, p));
    for (const auto& r : rotation_orbit(partner)) {
      if (composable(p, r)) check("composition", in + " | " + to_text(r), compose(p, r));
      if (composable(r, p)) check("composition", to_text(r) + " | " + in, compose(r, p));
    }
  }
  return report;
}

}  // namespace pcat
