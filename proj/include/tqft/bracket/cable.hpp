#pragma once

#include <vector>

#include "tqft/bracket/diagram.hpp"

namespace tqft::bracket {

/// Replaces component k by widths[k] blackboard-parallel copies (width 0 deletes it).
/// The result is uncolored.
LinkDiagram cable(const LinkDiagram& d, const std::vector<unsigned>& widths);

}  // namespace tqft::bracket
