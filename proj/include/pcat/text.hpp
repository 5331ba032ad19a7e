#pragma once

#include <string>
#include <string_view>

#include "pcat/partition.hpp"

namespace pcat {

/// Parses `up=<colorword>; lo=<colorword>; blocks=(<pt> <pt> ...)(...)`.
/// Throws Errc::syntax_error (with character offset) or
/// Errc::inconsistent_blocks.
TwoColoredPartition parse_partition(std::string_view text);

/// Canonical text: blocks by first occurrence in reading order, legs in
/// reading order.
std::string to_text(const TwoColoredPartition& p);

}  // namespace pcat
