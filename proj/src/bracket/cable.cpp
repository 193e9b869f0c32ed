#include "tqft/bracket/cable.hpp"

#include <map>

#include "tqft/bracket/orient.hpp"
#include "tqft/errors.hpp"

namespace tqft::bracket {

namespace {

struct Merge {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace

LinkDiagram cable(const LinkDiagram& d, const std::vector<unsigned>& widths) {
  const auto comps = components(d);
  if (widths.size() != comps.size()) throw DomainError("cable: one width per component required");
  std::map<int, unsigned> width_of;
  for (size_t k = 0; k < comps.size(); ++k)
    for (int l : comps[k]) width_of[l] = widths[k];

  Merge m;
  std::map<int, int> base;  // arc label -> first copy id (copies are consecutive)
  for (const auto& [l, w] : width_of) {
    base[l] = static_cast<int>(m.parent.size());
    for (unsigned s = 0; s < w; ++s) m.make();
  }
  auto copy = [&](int label, unsigned s) { return base[label] + static_cast<int>(s); };

  const Orientation o = orient(d);
  std::vector<std::array<int, 4>> out;
  for (size_t x = 0; x < d.crossings.size(); ++x) {
    const int r = o.enter[x][0];
    const auto& c0 = d.crossings[x];
    const int a = c0[r], b = c0[(r + 1) % 4], c = c0[(r + 2) % 4], dd = c0[(r + 3) % 4];
    const bool westward = (o.enter[x][1] - r + 4) % 4 == 1;
    const unsigned nu = width_of[a], no = width_of[b];
    if (nu == 0) {
      for (unsigned t = 0; t < no; ++t) m.unite(copy(b, t), copy(dd, t));
      continue;
    }
    if (no == 0) {
      for (unsigned s = 0; s < nu; ++s) m.unite(copy(a, s), copy(c, s));
      continue;
    }
    // u[s][y]: under copy s between over levels y-1 and y; h[y][s]: over level y west of under copy s.
    std::vector<std::vector<int>> u(nu, std::vector<int>(no + 1)), h(no, std::vector<int>(nu + 1));
    for (unsigned s = 0; s < nu; ++s) {
      u[s][0] = copy(a, s);
      u[s][no] = copy(c, s);
      for (unsigned y = 1; y < no; ++y) u[s][y] = m.make();
    }
    for (unsigned t = 0; t < no; ++t) {
      const unsigned y = westward ? t : no - 1 - t;
      h[y][0] = copy(dd, t);
      h[y][nu] = copy(b, t);
      for (unsigned s = 1; s < nu; ++s) h[y][s] = m.make();
    }
    for (unsigned s = 0; s < nu; ++s)
      for (unsigned y = 0; y < no; ++y) out.push_back({u[s][y], h[y][s + 1], u[s][y + 1], h[y][s]});
  }

  LinkDiagram res;
  std::map<int, bool> present;
  for (auto x : out) {
    for (int& l : x) {
      l = m.find(l);
      present[l] = true;
    }
    res.crossings.push_back(x);
  }
  for (size_t k = 0; k < comps.size(); ++k) {
    if (widths[k] == 0) continue;
    if (comps[k].empty()) {
      res.loops += widths[k];
      continue;
    }
    bool alive = false;
    for (int l : comps[k]) alive = alive || present.count(m.find(copy(l, 0)));
    if (!alive) res.loops += widths[k];
  }
  return res;
}

}  // namespace tqft::bracket
