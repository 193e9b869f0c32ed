#pragma once

// Temperley-Lieb category evaluator at a root of unity: planar matchings with
// loop value -A^2 - A^-2, Jones-Wenzl projectors by Wenzl's recursion, and the
// theta network as a closed trace. Used only as a test oracle.

#include <functional>
#include <map>
#include <tuple>
#include <numeric>
#include <vector>

#include "tqft/ring/cyclotomic.hpp"

namespace tqft::testing::tl {

using ring::CycNum;

// Points 0..n-1 on the bottom, n..n+m-1 on the top, left to right.
struct Diagram {
  int n = 0, m = 0;
  std::vector<int> partner;
  bool operator<(const Diagram& o) const {
    return std::tie(n, m, partner) < std::tie(o.n, o.m, o.partner);
  }
};

using Element = std::map<Diagram, CycNum>;

inline CycNum delta(const ring::FieldPtr& f) { return -(ring::A(f).pow(2) + ring::A(f).pow(-2)); }

inline Diagram identity_diagram(int n) {
  Diagram d{n, n, std::vector<int>(2 * n)};
  for (int i = 0; i < n; ++i) {
    d.partner[i] = n + i;
    d.partner[n + i] = i;
  }
  return d;
}

// d2 stacked on top of d1; returns the diagram and the number of closed loops.
inline std::pair<Diagram, int> stack(const Diagram& d1, const Diagram& d2) {
  const int n = d1.n, mid = d1.m, k = d2.m, off = n + mid, total = off + mid + k;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int x = 0; x < off; ++x) unite(x, d1.partner[x]);
  for (int x = 0; x < mid + k; ++x) unite(off + x, off + d2.partner[x]);
  for (int j = 0; j < mid; ++j) unite(n + j, off + j);
  // Boundary: d1 bottoms and d2 tops.
  std::map<int, std::vector<int>> ends;
  for (int i = 0; i < n; ++i) ends[find(i)].push_back(i);
  for (int j = 0; j < k; ++j) ends[find(off + mid + j)].push_back(n + j);
  Diagram r{n, k, std::vector<int>(n + k)};
  for (const auto& [root, pts] : ends) {
    r.partner[pts[0]] = pts[1];
    r.partner[pts[1]] = pts[0];
  }
  int loops = 0;
  for (int v = 0; v < total; ++v)
    if (find(v) == v && !ends.count(v)) ++loops;
  return {r, loops};
}

inline Element compose(const Element& lower, const Element& upper, const ring::FieldPtr& f) {
  Element out;
  const CycNum dl = delta(f);
  for (const auto& [d1, c1] : lower)
    for (const auto& [d2, c2] : upper) {
      auto [d, loops] = stack(d1, d2);
      out[d] += c1 * c2 * dl.pow(loops);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline Diagram tensor(const Diagram& a, const Diagram& b) {
  Diagram r{a.n + b.n, a.m + b.m, std::vector<int>(a.n + b.n + a.m + b.m)};
  auto map_a = [&](int x) { return x < a.n ? x : r.n + (x - a.n); };
  auto map_b = [&](int x) { return x < b.n ? a.n + x : r.n + a.m + (x - b.n); };
  for (int x = 0; x < a.n + a.m; ++x) r.partner[map_a(x)] = map_a(a.partner[x]);
  for (int x = 0; x < b.n + b.m; ++x) r.partner[map_b(x)] = map_b(b.partner[x]);
  return r;
}

inline Element tensor(const Element& a, const Element& b) {
  Element out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) out[tensor(da, db)] += ca * cb;
  return out;
}

inline Element jones_wenzl(int n, const ring::FieldPtr& f) {
  auto loop = [&](int k) { return CycNum(f, k % 2 == 0 ? 1 : -1) * ring::qint(f, k + 1); };
  Element fn{{identity_diagram(n == 0 ? 0 : 1), CycNum(f, 1)}};
  if (n == 0) return fn;
  for (int k = 1; k < n; ++k) {
    // e_k on k+1 strands: cup-cap on the last two.
    Diagram e = identity_diagram(k + 1);
    const int s = k - 1, t = k, N = k + 1;
    e.partner[s] = t;
    e.partner[t] = s;
    e.partner[N + s] = N + t;
    e.partner[N + t] = N + s;
    Element ext = tensor(fn, Element{{identity_diagram(1), CycNum(f, 1)}});
    Element ee{{e, CycNum(f, 1)}};
    Element corr = compose(compose(ext, ee, f), ext, f);
    const CycNum coeff = loop(k - 1) / loop(k);
    fn = ext;
    for (const auto& [d, c] : corr) fn[d] -= coeff * c;
    for (auto it = fn.begin(); it != fn.end();) it = it->second.is_zero() ? fn.erase(it) : std::next(it);
  }
  return fn;
}

inline CycNum trace(const Element& x, const ring::FieldPtr& f) {
  CycNum out(f, 0);
  for (const auto& [d, c] : x) {
    std::vector<int> parent(d.n + d.m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (int v = 0; v < d.n + d.m; ++v) parent[find(v)] = find(d.partner[v]);
    for (int j = 0; j < d.n; ++j) parent[find(j)] = find(d.n + j);
    int loops = 0;
    for (int v = 0; v < d.n + d.m; ++v) loops += find(v) == v;
    out += c * delta(f).pow(loops);
  }
  return out;
}

// a+b strands -> c strands, capping the i innermost pairs between the groups.
inline Diagram merge_down(int a, int b, int i) {
  const int c = a + b - 2 * i;
  Diagram d{a + b, c, std::vector<int>(a + b + c)};
  for (int t = 0; t < i; ++t) {
    d.partner[a - 1 - t] = a + t;
    d.partner[a + t] = a - 1 - t;
  }
  int top = 0;
  for (int s = 0; s < a + b; ++s) {
    if (s >= a - i && s < a + i) continue;
    d.partner[s] = a + b + top;
    d.partner[a + b + top] = s;
    ++top;
  }
  return d;
}

inline Diagram flip(const Diagram& d) {
  Diagram r{d.m, d.n, std::vector<int>(d.n + d.m)};
  auto mp = [&](int x) { return x < d.n ? d.m + x : x - d.n; };
  for (int x = 0; x < d.n + d.m; ++x) r.partner[mp(x)] = mp(d.partner[x]);
  return r;
}

inline CycNum theta(int a, int b, int c, const ring::FieldPtr& f) {
  const int i = (a + b - c) / 2;
  Element ab = tensor(jones_wenzl(a, f), jones_wenzl(b, f));
  Diagram down = merge_down(a, b, i);
  Element x = compose(ab, Element{{down, CycNum(f, 1)}}, f);
  x = compose(x, jones_wenzl(c, f), f);
  x = compose(x, Element{{flip(down), CycNum(f, 1)}}, f);
  return trace(x, f);
}

}  // namespace tqft::testing::tl
