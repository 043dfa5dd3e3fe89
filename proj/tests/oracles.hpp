#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "coil/diagram.hpp"

namespace oracle {

/// |det| of the Fox coloring matrix with one row and column deleted.
/// Bareiss elimination over __int128; fine for a few hundred crossings.
inline std::int64_t determinant(const coil::PlanarDiagram& d) {
  const int n = static_cast<int>(d.crossing_count());
  if (n == 0) return d.component_count() == 1 ? 1 : 0;
  const int m = static_cast<int>(d.edges().size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : d.crossings()) parent[find(c.edges[1])] = find(c.edges[3]);
  std::vector<int> arc_id(m, -1);
  int arcs = 0;
  for (int e = 0; e < m; ++e) {
    if (arc_id[find(e)] < 0) arc_id[find(e)] = arcs++;
  }
  if (arcs != n) return -1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n, 0));
  for (int i = 0; i < n; ++i) {
    const auto& c = d.crossings()[i];
    a[i][arc_id[find(c.edges[1])]] += 2;
    a[i][arc_id[find(c.edges[0])]] -= 1;
    a[i][arc_id[find(c.edges[2])]] -= 1;
  }
  const int k = n - 1;
  if (k == 0) return 1;
  std::vector<std::vector<__int128>> b(k, std::vector<__int128>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b[i][j] = a[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (b[p][p] == 0) {
      int r = p + 1;
      while (r < k && b[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(b[p], b[r]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) b[i][j] = (b[i][j] * b[p][p] - b[i][p] * b[p][j]) / prev;
      b[i][p] = 0;
    }
    prev = b[p][p];
  }
  __int128 det = b[k - 1][k - 1] * sign;
  if (det < 0) det = -det;
  return static_cast<std::int64_t>(det);
}

}  // namespace oracle
