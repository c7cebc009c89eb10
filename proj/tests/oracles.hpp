#pragma once

// Test-only oracles. Each is written against the raw port/arc data along a
// different route than the library implementation it checks.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "adequa/diagram.hpp"
#include "adequa/kauffman.hpp"

namespace oracle {

using adequa::PlanarDiagram;

// Circle count of an arbitrary Kauffman state via union-find over crossing
// ports. state[x] = 0 applies the A-smoothing at crossing x, 1 the B one.
inline int circle_count(const PlanarDiagram& d, const std::vector<int>& state) {
  int V = d.crossing_count();
  std::vector<int> p(4 * V);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  auto unite = [&](int a, int b) { p[find(a)] = find(b); };
  for (const auto& arc : d.arcs())
    if (!arc.loop)
      unite(arc.ends[0].crossing * 4 + arc.ends[0].port,
            arc.ends[1].crossing * 4 + arc.ends[1].port);
  for (int x = 0; x < V; ++x) {
    if (state[x] == 0) {
      unite(4 * x + 0, 4 * x + 1);
      unite(4 * x + 2, 4 * x + 3);
    } else {
      unite(4 * x + 1, 4 * x + 2);
      unite(4 * x + 3, 4 * x + 0);
    }
  }
  std::set<int> roots;
  for (int i = 0; i < 4 * V; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size()) + d.loop_count();
}

inline int circle_count(const PlanarDiagram& d, adequa::ResolutionChoice c) {
  std::vector<int> st(d.crossing_count(), c == adequa::ResolutionChoice::A ? 0 : 1);
  return circle_count(d, st);
}

// Unordered crossing pairs cobounding a bigon face, detected purely from
// port adjacency: arcs a = arc(x,i) = arc(y,j+1) and b = arc(x,i+1) = arc(y,j)
// close up a two-corner face.
inline std::set<std::pair<int, int>> bigon_pairs(const PlanarDiagram& d) {
  std::set<std::pair<int, int>> out;
  int V = d.crossing_count();
  for (int x = 0; x < V; ++x)
    for (int y = 0; y < V; ++y) {
      if (x == y) continue;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          int a = d.arc_at(x, i), b = d.arc_at(x, (i + 1) % 4);
          if (a != b && a == d.arc_at(y, (j + 1) % 4) && b == d.arc_at(y, j))
            out.insert({std::min(x, y), std::max(x, y)});
        }
    }
  return out;
}

// Exhaustive primality oracle by the dual route: a transversal curve exists
// through arcs {a,b} exactly when they border the same two faces; the cut is
// a witness when the crossings split into two nonempty sides.
struct PrimeOracleResult {
  bool prime = true;
  std::pair<int, int> witness{-1, -1};
};

inline PrimeOracleResult prime_oracle(const PlanarDiagram& d) {
  adequa::FaceSet fs = adequa::faces(d);
  int E = d.arc_count() - d.loop_count();
  std::vector<std::pair<int, int>> arc_faces(E, {-1, -1});
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
    for (auto [a, side] : fs.faces[f].arc_sides) {
      if (d.arcs()[a].loop) continue;
      (side == 0 ? arc_faces[a].first : arc_faces[a].second) = f;
    }
  auto norm = [](std::pair<int, int> p) {
    return std::minmax(p.first, p.second);
  };
  int V = d.crossing_count();
  for (int a = 0; a < E; ++a)
    for (int b = a + 1; b < E; ++b) {
      if (norm(arc_faces[a]) != norm(arc_faces[b])) continue;
      // curve through the shared faces: count crossings on each side
      std::vector<int> side(V, -1);
      std::vector<int> stack{d.arcs()[a].ends[0].crossing};
      side[stack[0]] = 0;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int p = 0; p < 4; ++p) {
          int arc = d.arc_at(x, p);
          if (arc == a || arc == b) continue;
          int y = d.other_end(x, p).crossing;
          if (side[y] == -1) {
            side[y] = 0;
            stack.push_back(y);
          }
        }
      }
      bool other = false;
      for (int x = 0; x < V; ++x)
        if (side[x] == -1) other = true;
      if (other) return {false, {a, b}};
    }
  return {};
}

// Brute-force multigraph isomorphism for small instances.
struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // unordered, duplicates allowed
};

inline bool multigraph_isomorphic(Multigraph g, Multigraph h) {
  if (g.vertices != h.vertices || g.edges.size() != h.edges.size()) return false;
  int n = g.vertices;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto key = [](const Multigraph& m, const std::vector<int>* p) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : m.edges) {
      int a = p ? (*p)[u] : u, b = p ? (*p)[v] : v;
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    return es;
  };
  auto target = key(h, nullptr);
  do {
    if (key(g, &perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Multigraph to_multigraph(const adequa::StateGraph& g) {
  Multigraph m;
  m.vertices = g.vertices;
  for (const auto& e : g.edges) m.edges.emplace_back(e.u, e.v);
  return m;
}

}  // namespace oracle
