#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coil/slope.hpp"

namespace coil {

/// One end of an edge: the crossing it attaches to and the slot (0..3)
/// in that crossing's counterclockwise order.
struct Dart {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Slots are counterclockwise; slot 0 is the incoming under-strand, so the
/// under-strand occupies slots 0 and 2 and the over-strand slots 1 and 3.
struct Crossing {
  std::array<int, 4> edges{};
};

/// Oriented edge from tail to head.
struct Edge {
  Dart tail;
  Dart head;
  int component = -1;
};

enum class DiagramFamily { None, TwoBridge, ClaspedTwoBridge, DoubleCoil, Augmented, FilledAugmented };

std::string_view family_name(DiagramFamily f) noexcept;

/// A crossing circle laid flat around parallel strands. Rows list
/// crossings left to right in a frame where up_row sits above down_row;
/// strand i passes up_row[i] then down_row[i].
struct CircleRecord {
  std::string name;  // "C1", "C2" or "clasp"
  int component = -1;
  std::vector<int> up_row;
  std::vector<int> down_row;
};

struct Provenance {
  DiagramFamily family = DiagramFamily::None;
  std::optional<Slope> slope;
  std::optional<ContinuedFraction> cfrac;
  // Full twists per generalized twist region, in box order (D1 then D2).
  // Unfilled circles keep their slot empty.
  std::array<std::optional<std::int64_t>, 2> twists;
  std::vector<CircleRecord> circles;
};

/// A link diagram as a 4-valent graph embedded in the sphere through its
/// rotation system. Immutable once built.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  PlanarDiagram(std::vector<Crossing> crossings, std::vector<Edge> edges, int components, int free_loops,
                Provenance provenance);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  /// Strand components through crossings plus crossingless loops.
  int component_count() const noexcept { return components_ + free_loops_; }
  int crossing_components() const noexcept { return components_; }
  /// Unknotted components with no crossings; PD code cannot record them.
  int free_loops() const noexcept { return free_loops_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  /// The other end of the edge leaving through d.
  Dart opposite(const Dart& d) const;
  int edge_at(const Dart& d) const { return crossings_[d.crossing].edges[d.slot]; }
  /// Edges of one component in traversal order.
  std::vector<int> component_edges(int component) const;
  /// Crossing ids touched by a component.
  std::vector<int> component_crossings(int component) const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  int components_ = 0;
  int free_loops_ = 0;
  Provenance provenance_;
};

using Face = std::vector<Dart>;

/// Faces of the rotation system; each dart appears in exactly one face.
std::vector<Face> faces(const PlanarDiagram& d);

/// Number of connected pieces of the crossing graph.
int connected_pieces(const PlanarDiagram& d);

/// Checks V - E + F = 2 on every connected piece.
bool satisfies_euler(const PlanarDiagram& d);

struct TwistRegionPartition {
  std::vector<std::vector<int>> regions;  // sorted crossing ids, regions ordered by first id
  std::size_t count() const noexcept { return regions.size(); }
};

TwistRegionPartition twist_regions(const PlanarDiagram& d);

bool is_alternating(const PlanarDiagram& d);

/// Label-independent description of the unoriented diagram; equal
/// signatures mean the diagrams agree up to relabeling.
std::vector<int> canonical_signature(const PlanarDiagram& d);

/// Whitespace-separated X(a,b,c,d) terms, edge labels positive and each
/// used exactly twice; slots listed counterclockwise from the incoming
/// under-strand.
PlanarDiagram parse_pd(std::string_view text);
std::string emit_pd(const PlanarDiagram& d);

/// Returns a copy carrying the given provenance.
PlanarDiagram with_provenance(const PlanarDiagram& d, Provenance p);

}  // namespace coil
