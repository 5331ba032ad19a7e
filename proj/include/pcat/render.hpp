#pragma once

#include <string>

#include "pcat/partition.hpp"

namespace pcat {

/// Text diagram: 'o' white, '*' black; upper row on top.
std::string render_ascii(const TwoColoredPartition& p);

/// Deterministic standalone SVG document.
std::string render_svg(const TwoColoredPartition& p);

}  // namespace pcat
