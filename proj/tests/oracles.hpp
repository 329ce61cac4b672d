#pragma once

// Test-side oracles, kept independent of the library code paths they check.

#include <map>
#include <set>
#include <vector>

#include "khoma/diagram.hpp"

namespace oracle {

// Circle count by breadth-first search over the join graph (independent of
// the library's union-find).
inline int count_circles_bfs(const khoma::PlanarDiagram& d, const khoma::ResolutionWord& w) {
  std::map<int, std::vector<int>> adj;
  for (int a : d.arcs()) adj[a];  // ensure isolated arcs appear
  for (int c = 0; c < d.crossing_count(); ++c)
    for (const auto& [a, b] : khoma::smoothing_joins(d.quad(c), w[c])) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  std::set<int> seen;
  int circles = 0;
  for (const auto& [start, _] : adj) {
    if (seen.count(start)) continue;
    ++circles;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return circles + static_cast<int>(d.free_circles().size());
}

// Integer determinant by cofactor expansion; fine for the tiny Laplacian
// minors that show up here.
inline long long det_cofactor(std::vector<std::vector<long long>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (int col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (int j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    long long term = m[0][col] * det_cofactor(minor);
    total += (col % 2 == 0) ? term : -term;
  }
  return total;
}

// Spanning-tree count by the matrix-tree theorem (loops dropped).
inline long long spanning_tree_count_matrix_tree(const khoma::BlackGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  if (n == 1) return 1;
  std::vector<std::vector<long long>> lap(n, std::vector<long long>(n, 0));
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    lap[u][u] += 1;
    lap[v][v] += 1;
    lap[u][v] -= 1;
    lap[v][u] -= 1;
  }
  std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
  return det_cofactor(minor);
}

}  // namespace oracle
