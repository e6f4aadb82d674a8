#pragma once

#include "sl4/alternation.hpp"

#include <string>
#include <vector>

namespace sl4 {

/// Deterministic fill color for a registry id ("#rrggbb"); the empty set
/// renders white.
std::string color_for_set(int set_id, bool is_empty_set);

std::string diagram_to_json(const Diagram& d);

/// "x,y,z,set_id" header plus one row per point.
std::string diagram_to_csv(const Diagram& d);

/// One SVG per fixed z slice: the (x,y) grid of the window at height z,
/// cells filled by alternation-set color.
std::string diagram_slice_to_svg(const Diagram& d, const LatticeWindow& win,
                                 long long z);

std::string empty_region_to_json(FWeight mu,
                                 const std::vector<RootCoords>& pts);

/// "x,y,z" header plus one row per empty-region point.
std::string empty_region_to_csv(const std::vector<RootCoords>& pts);

std::string empty_region_slice_to_svg(const std::vector<RootCoords>& pts,
                                      const LatticeWindow& win, long long z);

/// Write `content` to `path`; returns false on any I/O failure.
bool write_file(const std::string& path, const std::string& content);

} // namespace sl4
