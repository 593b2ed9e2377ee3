#pragma once

#include <string>

#include "mt/interleaving.hpp"

namespace mt {

// Static side-by-side drawing of two merge trees, with anchor arrows of an
// optional interleaving and shaded fans of optional constraint arrows.
// Pure function of its inputs; byte-identical across runs.
std::string render_svg(const tree_pair& tp, const anchored_interleaving* interleaving,
                       const partial_interleaving* constraints);

}  // namespace mt
