#include "coil/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "coil/error.hpp"

namespace coil {

std::string_view family_name(DiagramFamily f) noexcept {
  switch (f) {
    case DiagramFamily::None: return "none";
    case DiagramFamily::TwoBridge: return "two-bridge";
    case DiagramFamily::ClaspedTwoBridge: return "clasped-two-bridge";
    case DiagramFamily::DoubleCoil: return "double-coil";
    case DiagramFamily::Augmented: return "augmented";
    case DiagramFamily::FilledAugmented: return "filled-augmented";
  }
  return "none";
}

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, std::vector<Edge> edges, int components,
                             int free_loops, Provenance provenance)
    : crossings_(std::move(crossings)),
      edges_(std::move(edges)),
      components_(components),
      free_loops_(free_loops),
      provenance_(std::move(provenance)) {}

Dart PlanarDiagram::opposite(const Dart& d) const {
  const auto& e = edges_[edge_at(d)];
  return e.tail == d ? e.head : e.tail;
}

std::vector<int> PlanarDiagram::component_edges(int component) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].component == component) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> PlanarDiagram::component_crossings(int component) const {
  std::vector<int> out;
  for (int e : component_edges(component)) out.push_back(edges_[e].head.crossing);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PlanarDiagram with_provenance(const PlanarDiagram& d, Provenance p) {
  return PlanarDiagram(d.crossings(), d.edges(), d.crossing_components(), d.free_loops(), std::move(p));
}

std::vector<Face> faces(const PlanarDiagram& d) {
  const int n = static_cast<int>(d.crossing_count());
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  std::vector<Face> out;
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) {
      if (seen[x][s]) continue;
      Face face;
      Dart cur{x, s};
      while (!seen[cur.crossing][cur.slot]) {
        seen[cur.crossing][cur.slot] = true;
        face.push_back(cur);
        const Dart far = d.opposite(cur);
        cur = {far.crossing, (far.slot + 1) % 4};
      }
      out.push_back(std::move(face));
    }
  }
  if (n == 0) out.push_back({});
  return out;
}

namespace {

std::vector<int> piece_labels(const PlanarDiagram& d, int& pieces) {
  const int n = static_cast<int>(d.crossing_count());
  std::vector<int> label(n, -1);
  pieces = 0;
  for (int x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    std::vector<int> stack{x};
    label[x] = pieces;
    while (!stack.empty()) {
      const int y = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        const int z = d.opposite({y, s}).crossing;
        if (label[z] < 0) {
          label[z] = pieces;
          stack.push_back(z);
        }
      }
    }
    ++pieces;
  }
  return label;
}

}  // namespace

int connected_pieces(const PlanarDiagram& d) {
  int pieces = 0;
  piece_labels(d, pieces);
  return pieces;
}

bool satisfies_euler(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return true;
  int pieces = 0;
  const auto label = piece_labels(d, pieces);
  std::vector<long> chi(pieces, 0);
  for (std::size_t x = 0; x < d.crossing_count(); ++x) chi[label[x]] += 1 - 2;  // V - E, E = 2V
  for (const auto& f : faces(d)) chi[label[f.front().crossing]] += 1;
  return std::all_of(chi.begin(), chi.end(), [](long c) { return c == 2; });
}

TwistRegionPartition twist_regions(const PlanarDiagram& d) {
  const int n = static_cast<int>(d.crossing_count());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : faces(d)) {
    if (f.size() == 2 && f[0].crossing != f[1].crossing) {
      const int a = find(f[0].crossing);
      const int b = find(f[1].crossing);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < n; ++x) groups[find(x)].push_back(x);
  TwistRegionPartition out;
  for (auto& [root, members] : groups) out.regions.push_back(std::move(members));
  return out;
}

bool is_alternating(const PlanarDiagram& d) {
  for (int c = 0; c < d.crossing_components(); ++c) {
    const auto edges = d.component_edges(c);
    // Edges of a component are stored contiguously in traversal order.
    std::vector<bool> under;
    for (int e : edges) under.push_back(d.edges()[e].head.slot % 2 == 0);
    for (std::size_t i = 0; i < under.size(); ++i) {
      if (under[i] == under[(i + 1) % under.size()]) return false;
    }
  }
  return true;
}

std::vector<int> canonical_signature(const PlanarDiagram& d) {
  const int n = static_cast<int>(d.crossing_count());
  int pieces = 0;
  const auto label = piece_labels(d, pieces);

  // BFS code of one piece from a root crossing and under-slot base.
  auto code_from = [&](int root, int root_base) {
    std::vector<int> order(n, -1), base(n, -1);
    std::vector<int> queue{root};
    order[root] = 0;
    base[root] = root_base;
    std::vector<int> code;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (int k = 0; k < 4; ++k) {
        const Dart far = d.opposite({x, (base[x] + k) % 4});
        const int y = far.crossing;
        if (order[y] < 0) {
          order[y] = static_cast<int>(queue.size());
          base[y] = far.slot % 2 == 0 ? far.slot : (far.slot + 1) % 4;
          queue.push_back(y);
        }
        code.push_back(order[y]);
        code.push_back((far.slot - base[y] + 4) % 4);
      }
    }
    return code;
  };

  std::vector<std::vector<int>> piece_codes(pieces);
  for (int x = 0; x < n; ++x) {
    for (int b : {0, 2}) {
      auto code = code_from(x, b);
      auto& best = piece_codes[label[x]];
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  std::sort(piece_codes.begin(), piece_codes.end());
  std::vector<int> sig{n, d.free_loops()};
  for (const auto& c : piece_codes) {
    sig.push_back(-1);
    sig.insert(sig.end(), c.begin(), c.end());
  }
  return sig;
}

}  // namespace coil
