#include "tqft/bracket/diagram.hpp"

#include <algorithm>
#include <map>
#include <cctype>

#include "tqft/bracket/orient.hpp"
#include "tqft/errors.hpp"

namespace tqft::bracket {

namespace {

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int r = find(it->second);
    parent[x] = r;
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

const std::vector<std::pair<ColorKind, std::string>> kColorNames = {
    {ColorKind::Uncolored, "z"},  {ColorKind::ZPower, "z^"},        {ColorKind::E, "e"},
    {ColorKind::V, "v"},          {ColorKind::ZPlus2, "z+2"},        {ColorKind::ZPlusQint2, "z+[2]"},
    {ColorKind::Omega, "omega"}};

}  // namespace

std::string to_string(const Color& c) {
  if (c.conj) {
    Color plain = c;
    plain.conj = false;
    return to_string(plain) + "*";
  }
  switch (c.kind) {
    case ColorKind::ZPower: return "z^" + std::to_string(c.index);
    case ColorKind::E: return "e" + std::to_string(c.index);
    default: break;
  }
  for (const auto& [k, name] : kColorNames)
    if (k == c.kind) return name;
  return "?";
}

Color color_from_string(const std::string& s) {
  if (!s.empty() && s.back() == '*') {
    Color c = color_from_string(s.substr(0, s.size() - 1));
    c.conj = true;
    return c;
  }
  if (s.rfind("z^", 0) == 0) return {ColorKind::ZPower, static_cast<unsigned>(std::stoul(s.substr(2)))};
  if (s.size() > 1 && s[0] == 'e' && std::isdigit(static_cast<unsigned char>(s[1])))
    return {ColorKind::E, static_cast<unsigned>(std::stoul(s.substr(1)))};
  for (const auto& [k, name] : kColorNames)
    if (name == s && k != ColorKind::ZPower) return {k, 0};
  throw DomainError("unknown color: " + s);
}

void validate(const LinkDiagram& d) {
  std::map<int, int> count;
  for (const auto& x : d.crossings)
    for (int l : x) ++count[l];
  for (const auto& [l, c] : count)
    if (c != 2) throw DomainError("arc label " + std::to_string(l) + " occurs " + std::to_string(c) + " times");
  if (!d.colors.empty() && d.colors.size() != component_count(d))
    throw DomainError("color list does not match the component count");
}

std::vector<std::vector<int>> components(const LinkDiagram& d) {
  UnionFind uf;
  for (const auto& x : d.crossings) {
    uf.unite(x[0], x[2]);
    uf.unite(x[1], x[3]);
  }
  std::map<int, std::vector<int>> by_root;
  for (const auto& x : d.crossings)
    for (int l : x) by_root[uf.find(l)].push_back(l);
  std::vector<std::vector<int>> out;
  for (auto& [root, labels] : by_root) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    out.push_back(std::move(labels));
  }
  // The union-find root is the smallest label, so map order is already by smallest label.
  for (unsigned k = 0; k < d.loops; ++k) out.emplace_back();
  return out;
}

unsigned component_count(const LinkDiagram& d) { return static_cast<unsigned>(components(d).size()); }

LinkDiagram sublink(const LinkDiagram& d, const std::vector<bool>& keep) {
  auto comps = components(d);
  if (keep.size() != comps.size()) throw DomainError("sublink mask has the wrong length");
  std::map<int, int> comp_of;
  for (size_t k = 0; k < comps.size(); ++k)
    for (int l : comps[k]) comp_of[l] = static_cast<int>(k);

  UnionFind merge;
  std::vector<std::array<int, 4>> kept;
  for (const auto& x : d.crossings) {
    const bool under_kept = keep[comp_of[x[0]]], over_kept = keep[comp_of[x[1]]];
    if (under_kept && over_kept) {
      kept.push_back(x);
    } else if (under_kept) {
      merge.unite(x[0], x[2]);
    } else if (over_kept) {
      merge.unite(x[1], x[3]);
    }
  }
  LinkDiagram out;
  for (auto x : kept) {
    for (int& l : x) l = merge.find(l);
    out.crossings.push_back(x);
  }
  std::map<int, bool> present;
  for (const auto& x : out.crossings)
    for (int l : x) present[l] = true;

  // New numbering: components that still cross something, by smallest label,
  // then components that became crossingless, then the original loops.
  std::vector<std::pair<int, Color>> alive;
  std::vector<Color> new_loops, old_loops;
  for (size_t k = 0; k < comps.size(); ++k) {
    if (!keep[k]) continue;
    const Color c = d.colors.empty() ? Color{} : d.colors[k];
    if (comps[k].empty()) {
      old_loops.push_back(c);
      continue;
    }
    int smallest = -1;
    for (int l : comps[k]) {
      const int r = merge.find(l);
      if (present.count(r) && (smallest < 0 || r < smallest)) smallest = r;
    }
    if (smallest < 0)
      new_loops.push_back(c);
    else
      alive.emplace_back(smallest, c);
  }
  out.loops = static_cast<unsigned>(new_loops.size() + old_loops.size());
  if (!d.colors.empty()) {
    std::sort(alive.begin(), alive.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& entry : alive) out.colors.push_back(entry.second);
    out.colors.insert(out.colors.end(), new_loops.begin(), new_loops.end());
    out.colors.insert(out.colors.end(), old_loops.begin(), old_loops.end());
  }
  return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
  const Orientation o = orient(d);
  LinkDiagram out = d;
  for (size_t k = 0; k < d.crossings.size(); ++k) {
    const auto& x = d.crossings[k];
    // The old over-strand becomes the under-strand; start at its entering slot.
    const int s = o.enter[k][1];
    out.crossings[k] = {x[s], x[(s + 1) % 4], x[(s + 2) % 4], x[(s + 3) % 4]};
  }
  return out;
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  int shift = 0;
  for (const auto& x : a.crossings)
    for (int l : x) shift = std::max(shift, l);
  int low = 0;
  bool any = false;
  for (const auto& x : b.crossings)
    for (int l : x) {
      low = any ? std::min(low, l) : l;
      any = true;
    }
  shift = shift + 1 - low;
  LinkDiagram out = a;
  for (auto x : b.crossings) {
    for (int& l : x) l += shift;
    out.crossings.push_back(x);
  }
  out.loops = a.loops + b.loops;
  if (!a.colors.empty() || !b.colors.empty()) {
    auto ca = a.colors.empty() ? std::vector<Color>(component_count(a)) : a.colors;
    auto cb = b.colors.empty() ? std::vector<Color>(component_count(b)) : b.colors;
    const unsigned na = component_count(a) - a.loops, nb = component_count(b) - b.loops;
    out.colors.assign(ca.begin(), ca.begin() + na);
    out.colors.insert(out.colors.end(), cb.begin(), cb.begin() + nb);
    out.colors.insert(out.colors.end(), ca.begin() + na, ca.end());
    out.colors.insert(out.colors.end(), cb.begin() + nb, cb.end());
  }
  return out;
}

}  // namespace tqft::bracket
