#pragma once

#include <vector>

#include "tqft/bracket/diagram.hpp"

namespace tqft::bracket {

/// Traversal data for a validated diagram. Each component is walked in one
/// direction (agreeing with the PD under-strand convention where it passes
/// under at least once). For crossing x, enter[x][0] is the slot (0 or 2)
/// where the under-strand enters and enter[x][1] the slot (1 or 3) where the
/// over-strand enters.
struct Orientation {
  std::vector<std::array<int, 2>> enter;
};

Orientation orient(const LinkDiagram& d);

}  // namespace tqft::bracket
