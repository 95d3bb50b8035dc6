// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "pinion/sweep.hpp"

namespace pinion {

enum class GridFormat { csv, json };

/// Render a raster. CSV carries the spec and metadata on '#' comment lines,
/// then a header naming the axes and class,m,n,sign,residual, then one row
/// per cell in row-major order. JSON nests the same content. Both embed the
/// fully resolved parameter set and round-trip losslessly through
/// parse_grid (numbers are written with 17 significant digits).
std::string format_grid(const GridResult& g, GridFormat format);
GridResult parse_grid(const std::string& text);

/// File variants; the format of an existing file is autodetected.
void write_grid(const GridResult& g, const std::string& path, GridFormat format);
GridResult read_grid(const std::string& path);

} // namespace pinion
