#pragma once

#include <string>
#include <vector>

#include "mt/tree.hpp"

namespace mt {

// Sublevel-set merge tree of a piecewise-linear 1D terrain: leaves at strict
// local minima, internal vertices where components merge. Plateaus collapse.
merge_tree merge_tree_from_series(const std::vector<height>& values);

// Union-find sweep over cells sorted by (value, row-major index).
merge_tree merge_tree_from_grid(const std::vector<std::vector<height>>& grid, int connectivity);

// One exact value per line.
std::vector<height> parse_series_csv(const std::string& text);
// Comma-separated rows; must be rectangular.
std::vector<std::vector<height>> parse_grid_csv(const std::string& text);

}  // namespace mt
