#pragma once

#include <array>
#include <vector>

#include "coil/diagram.hpp"

namespace coil::detail {

// Incremental construction of a diagram from crossings with geometric
// counterclockwise slots. Endpoints are either crossing slots or relay
// points; a relay is joined to its partner by a crossing-free arc, and
// every live endpoint is linked to exactly one other endpoint.
class Builder {
 public:
  // over_pair 0: slots 0 and 2 carry the over-strand; 1: slots 1 and 3.
  int add_crossing(int over_pair, int preferred_incoming = -1);
  int slot(int crossing, int s) const { return crossings_[crossing].slots[s]; }
  int new_endpoint();
  void set_partner(int a, int b);
  void link(int a, int b);

  // Kills a crossing; its slots become dead endpoints.
  void kill_crossing(int crossing);
  // Turns a dead slot endpoint into a relay whose partner is a fresh
  // endpoint, which is returned for linking.
  int open_relay(int endpoint);
  bool alive(int crossing) const { return crossings_[crossing].alive; }
  int crossing_total() const { return static_cast<int>(crossings_.size()); }
  // With strict hints, a component whose orientation hints disagree is an
  // error; otherwise hints only pick the starting direction.
  void set_strict_hints(bool strict) { strict_hints_ = strict; }

  struct Result {
    PlanarDiagram diagram;
    std::vector<int> crossing_map;  // builder id -> final id, or -1
    std::vector<int> rotation;      // final id -> geometric slot that became slot 0

    int edge_at_geometric(int builder_crossing, int geometric_slot) const;
  };
  // Throws EdgePairingError on an unlinked endpoint or when orientation
  // hints on one component disagree.
  Result finish(Provenance provenance) const;

 private:
  struct Endpoint {
    int link = -1;
    int partner = -1;
    int crossing = -1;
    int slot = -1;
    bool dead = false;
  };
  struct BCrossing {
    std::array<int, 4> slots;
    int over_pair;
    int preferred_incoming;
    bool alive = true;
  };
  std::vector<Endpoint> ends_;
  std::vector<BCrossing> crossings_;
  bool strict_hints_ = false;
};

// Layered drawing helpers. Strands occupy positions left to right and the
// drawing proceeds downward; pos[i] is the dangling endpoint at position i.
using Positions = std::vector<int>;

// Braid generator on positions (i, i+1). Geometric slots are
// top-left, bottom-left, bottom-right, top-right.
void braid_generator(Builder& b, Positions& pos, std::size_t i, bool positive);
// Full twists on all strands: (s_1 ... s_{q-1})^q per twist, sign by count.
void full_twists(Builder& b, Positions& pos, std::int64_t count);
// Crossing circle around positions [first, first + count). The returned
// record holds builder crossing ids and no component yet.
CircleRecord crossing_ring(Builder& b, Positions& pos, std::size_t first, std::size_t count,
                           const char* name);

// Rebuilds a builder from a finished diagram, slots keeping their indices.
Builder builder_from(const PlanarDiagram& d);

}  // namespace coil::detail
