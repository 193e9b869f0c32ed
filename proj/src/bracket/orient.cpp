#include "tqft/bracket/orient.hpp"

#include <map>
#include <utility>

namespace tqft::bracket {

Orientation orient(const LinkDiagram& d) {
  using Slot = std::pair<size_t, int>;
  std::map<int, std::vector<Slot>> occ;
  for (size_t x = 0; x < d.crossings.size(); ++x)
    for (int s = 0; s < 4; ++s) occ[d.crossings[x][s]].push_back({x, s});

  Orientation o;
  o.enter.assign(d.crossings.size(), {-1, -1});
  std::vector<std::array<bool, 4>> seen(d.crossings.size(), {false, false, false, false});

  auto walk = [&](Slot start) {
    Slot cur = start;
    do {
      auto [x, s] = cur;
      seen[x][s] = true;
      o.enter[x][s % 2] = s;
      const int e = (s + 2) % 4;
      seen[x][e] = true;
      const auto& both = occ[d.crossings[x][e]];
      cur = both[0] == Slot{x, e} ? both[1] : both[0];
    } while (cur != start);
  };
  // Prefer starting at an under-strand entry so the PD convention is respected.
  for (size_t x = 0; x < d.crossings.size(); ++x)
    if (!seen[x][0]) walk({x, 0});
  for (size_t x = 0; x < d.crossings.size(); ++x)
    for (int s = 1; s < 4; s += 2)
      if (!seen[x][s]) walk({x, s});
  return o;
}

}  // namespace tqft::bracket
