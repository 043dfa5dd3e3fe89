#include "builder.hpp"

#include <cstdlib>

#include "coil/error.hpp"

namespace coil::detail {

int Builder::add_crossing(int over_pair, int preferred_incoming) {
  const int id = static_cast<int>(crossings_.size());
  BCrossing c{{}, over_pair, preferred_incoming, true};
  for (int s = 0; s < 4; ++s) {
    c.slots[s] = static_cast<int>(ends_.size());
    ends_.push_back({-1, -1, id, s, false});
  }
  crossings_.push_back(c);
  return id;
}

int Builder::new_endpoint() {
  ends_.push_back({});
  return static_cast<int>(ends_.size()) - 1;
}

void Builder::set_partner(int a, int b) {
  ends_[a].partner = b;
  ends_[b].partner = a;
}

void Builder::link(int a, int b) {
  if (ends_[a].link != -1 || ends_[b].link != -1) {
    throw std::logic_error("builder endpoint linked twice");
  }
  ends_[a].link = b;
  ends_[b].link = a;
}

void Builder::kill_crossing(int crossing) {
  crossings_[crossing].alive = false;
  for (int e : crossings_[crossing].slots) ends_[e].dead = true;
}

int Builder::open_relay(int endpoint) {
  auto& e = ends_[endpoint];
  e.dead = false;
  e.crossing = -1;
  e.slot = -1;
  const int fresh = new_endpoint();
  set_partner(endpoint, fresh);
  return fresh;
}

int Builder::Result::edge_at_geometric(int builder_crossing, int geometric_slot) const {
  const int x = crossing_map.at(builder_crossing);
  const int s = (geometric_slot - rotation[x] + 4) % 4;
  return diagram.crossings()[x].edges[s];
}

Builder::Result Builder::finish(Provenance provenance) const {
  Result result;
  result.crossing_map.assign(crossings_.size(), -1);
  std::vector<int> live;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    if (crossings_[i].alive) {
      result.crossing_map[i] = static_cast<int>(live.size());
      live.push_back(static_cast<int>(i));
    }
  }
  const int n = static_cast<int>(live.size());

  auto broken = [](const char* what) { return Error(ErrorKind::EdgePairingError, what); };
  std::vector<bool> relay_seen(ends_.size(), false);
  // neighbor[x][s]: final (crossing, geometric slot) reached from slot s of x.
  std::vector<std::array<Dart, 4>> neighbor(n);
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) {
      int t = ends_[crossings_[live[x]].slots[s]].link;
      std::size_t guard = 0;
      while (true) {
        if (t < 0) throw broken("dangling endpoint");
        const auto& e = ends_[t];
        if (e.dead) throw broken("link into a removed crossing");
        if (e.crossing >= 0) break;
        relay_seen[t] = true;
        if (e.partner < 0) throw broken("relay without partner");
        relay_seen[e.partner] = true;
        t = ends_[e.partner].link;
        if (++guard > ends_.size()) throw broken("relay cycle");
      }
      neighbor[x][s] = {result.crossing_map[ends_[t].crossing], ends_[t].slot};
    }
  }

  int free_loops = 0;
  for (std::size_t e = 0; e < ends_.size(); ++e) {
    if (relay_seen[e] || ends_[e].dead || ends_[e].crossing >= 0) continue;
    ++free_loops;
    int cur = static_cast<int>(e);
    std::size_t guard = 0;
    do {
      relay_seen[cur] = true;
      const int mate = ends_[cur].partner;
      if (mate < 0) throw broken("relay without partner");
      relay_seen[mate] = true;
      cur = ends_[mate].link;
      if (cur < 0) throw broken("dangling relay");
      if (ends_[cur].crossing >= 0 || ends_[cur].dead) throw broken("relay chain ends inside a crossing");
      if (++guard > ends_.size()) throw broken("relay cycle");
    } while (cur != static_cast<int>(e));
  }

  // Orient and label strands component by component.
  std::vector<Edge> edges;
  std::vector<std::array<int, 4>> geo_edge(n, {-1, -1, -1, -1});
  std::vector<std::array<bool, 2>> pass_seen(n, {false, false});
  int components = 0;
  // Under-passes are visited first so that a component is oriented by a
  // crossing's hint whenever it passes under somewhere.
  for (int phase = 0; phase < 2; ++phase) {
    for (int x = 0; x < n; ++x) {
      const int under = crossings_[live[x]].over_pair == 0 ? 1 : 0;
      const int s = phase == 0 ? under : 1 - under;
      if (pass_seen[x][s % 2]) continue;
      int out = s;
      const int hint = crossings_[live[x]].preferred_incoming;
      if (hint >= 0 && hint % 2 == s % 2) out = (hint + 2) % 4;
      const Dart start{x, out};
      Dart cur = start;
      do {
        pass_seen[cur.crossing][cur.slot % 2] = true;
        const Dart next = neighbor[cur.crossing][cur.slot];
        const int id = static_cast<int>(edges.size());
        edges.push_back({cur, next, components});
        geo_edge[cur.crossing][cur.slot] = id;
        geo_edge[next.crossing][next.slot] = id;
        cur = {next.crossing, (next.slot + 2) % 4};
      } while (!(cur == start));
      ++components;
    }
  }

  std::vector<Crossing> crossings(n);
  result.rotation.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    const auto& bc = crossings_[live[x]];
    const int under_a = bc.over_pair == 0 ? 1 : 0;
    int incoming = -1;
    for (int u : {under_a, under_a + 2}) {
      if (edges[geo_edge[x][u]].head == Dart{x, u}) incoming = u;
    }
    if (incoming < 0) throw broken("under-strand has no incoming end");
    if (strict_hints_ && bc.preferred_incoming >= 0 && bc.preferred_incoming != incoming) {
      throw Error(ErrorKind::EdgePairingError, "edge orientations disagree along a component");
    }
    result.rotation[x] = incoming;
    for (int g = 0; g < 4; ++g) crossings[x].edges[(g - incoming + 4) % 4] = geo_edge[x][g];
  }
  for (auto& e : edges) {
    e.tail.slot = (e.tail.slot - result.rotation[e.tail.crossing] + 4) % 4;
    e.head.slot = (e.head.slot - result.rotation[e.head.crossing] + 4) % 4;
  }
  result.diagram = PlanarDiagram(std::move(crossings), std::move(edges), components, free_loops,
                                 std::move(provenance));
  return result;
}

void braid_generator(Builder& b, Positions& pos, std::size_t i, bool positive) {
  // The top-left to bottom-right strand (slots 0, 2) is over when positive.
  const int c = b.add_crossing(positive ? 0 : 1);
  b.link(pos[i], b.slot(c, 0));
  b.link(pos[i + 1], b.slot(c, 3));
  pos[i] = b.slot(c, 1);
  pos[i + 1] = b.slot(c, 2);
}

void full_twists(Builder& b, Positions& pos, std::int64_t count) {
  const std::size_t q = pos.size();
  const bool positive = count > 0;
  for (std::int64_t t = 0; t < std::llabs(count); ++t) {
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t i = 0; i + 1 < q; ++i) braid_generator(b, pos, i, positive);
    }
  }
}

CircleRecord crossing_ring(Builder& b, Positions& pos, std::size_t first, std::size_t count,
                           const char* name) {
  // Slots: 0 north, 1 west, 2 south, 3 east. The upper row passes over
  // the strands, the lower row under them.
  CircleRecord rec;
  rec.name = name;
  for (int row = 0; row < 2; ++row) {
    auto& ids = row == 0 ? rec.up_row : rec.down_row;
    for (std::size_t k = 0; k < count; ++k) {
      const int c = b.add_crossing(row == 0 ? 1 : 0);
      b.link(pos[first + k], b.slot(c, 0));
      pos[first + k] = b.slot(c, 2);
      if (k > 0) b.link(b.slot(ids.back(), 3), b.slot(c, 1));
      ids.push_back(c);
    }
  }
  b.link(b.slot(rec.up_row.front(), 1), b.slot(rec.down_row.front(), 1));
  b.link(b.slot(rec.up_row.back(), 3), b.slot(rec.down_row.back(), 3));
  return rec;
}

Builder builder_from(const PlanarDiagram& d) {
  Builder b;
  for (std::size_t x = 0; x < d.crossing_count(); ++x) b.add_crossing(1, 0);
  for (const auto& e : d.edges()) {
    b.link(b.slot(e.tail.crossing, e.tail.slot), b.slot(e.head.crossing, e.head.slot));
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    const int u = b.new_endpoint();
    const int v = b.new_endpoint();
    b.set_partner(u, v);
    b.link(u, v);
  }
  return b;
}

}  // namespace coil::detail
