#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pcat {

enum class Errc {
  point_out_of_range,
  empty_partition,
  equal_limits,
  duplicate_points,
  syntax_error,
  inconsistent_blocks,
  not_composable,
  empty_source_row,
  invalid_params,
  empty_list,
};

const char* to_string(Errc code) noexcept;

/// Every library failure is reported through this type. `position` carries the
/// character offset for syntax errors and the first mismatching rank for
/// non-composable pairs.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace pcat
