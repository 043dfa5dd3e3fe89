#include "coil/svg.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace coil {

namespace {

constexpr double kPieceSize = 400.0;
constexpr double kMargin = 20.0;
constexpr double kGap = 0.22;  // fraction of the first segment left blank at an under-end

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

// Vertex ids: crossings first, then two subdivision points per edge.
struct Layout {
  int crossings = 0;
  int sub(int edge, int which) const { return crossings + 2 * edge + which; }
};

// Vertices of the walk along the edge leaving through dart t, excluding
// the far crossing.
void walk_edge(const PlanarDiagram& d, const Layout& lay, const Dart& t, std::vector<int>& out) {
  const int e = d.edge_at(t);
  const bool forward = d.edges()[e].tail == t;
  out.push_back(t.crossing);
  out.push_back(lay.sub(e, forward ? 0 : 1));
  out.push_back(lay.sub(e, forward ? 1 : 0));
}

std::vector<int> face_cycle(const PlanarDiagram& d, const Layout& lay, const Face& f) {
  std::vector<int> cyc;
  for (const Dart& t : f) walk_edge(d, lay, t, cyc);
  return cyc;
}

}  // namespace

std::string render_svg(const PlanarDiagram& d, std::uint64_t seed) {
  const int n = static_cast<int>(d.crossing_count());
  const int m = static_cast<int>(d.edges().size());
  Layout lay{n};
  const int verts = n + 2 * m;

  // Connected pieces of the crossing graph.
  std::vector<int> piece(n);
  std::iota(piece.begin(), piece.end(), 0);
  auto find = [&](int x) {
    while (piece[x] != x) x = piece[x] = piece[piece[x]];
    return x;
  };
  for (const auto& e : d.edges()) piece[find(e.tail.crossing)] = find(e.head.crossing);
  std::vector<int> roots;
  for (int x = 0; x < n; ++x) {
    if (find(x) == x) roots.push_back(x);
  }

  std::mt19937_64 rng(seed);
  std::vector<Point> pos(verts);
  const auto all_faces = faces(d);
  const int pieces = static_cast<int>(roots.size());
  for (int pi = 0; pi < pieces; ++pi) {
    const int root = roots[pi];
    const double ox = kMargin + pi * (kPieceSize + kMargin) + kPieceSize / 2;
    const double oy = kMargin + kPieceSize / 2;
    std::size_t best = 0;
    std::vector<std::size_t> ties;
    for (std::size_t fi = 0; fi < all_faces.size(); ++fi) {
      const auto& f = all_faces[fi];
      if (f.empty() || find(f.front().crossing) != root) continue;
      if (f.size() > best) {
        best = f.size();
        ties.clear();
      }
      if (f.size() == best) ties.push_back(fi);
    }
    const auto& outer = all_faces[ties[rng() % ties.size()]];
    std::vector<int> cyc = face_cycle(d, lay, outer);
    const std::size_t shift = rng() % cyc.size();
    std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(shift), cyc.end());

    std::vector<char> fixed(verts, 0);
    std::vector<int> boundary;
    for (int v : cyc) {
      if (!fixed[v]) {
        fixed[v] = 1;
        boundary.push_back(v);
      }
    }
    const double r = kPieceSize / 2 - kMargin;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(boundary.size());
      pos[boundary[i]] = {ox + r * std::cos(a), oy - r * std::sin(a)};
    }

    // Interior vertices of this piece.
    std::vector<std::vector<int>> nbr(verts);
    auto join = [&](int a, int b) {
      nbr[a].push_back(b);
      nbr[b].push_back(a);
    };
    std::vector<int> index(verts, -1);
    std::vector<int> interior;
    auto in_piece = [&](int v) {
      if (v < n) return find(v) == root;
      const int e = (v - n) / 2;
      return find(d.edges()[e].tail.crossing) == root;
    };
    for (int e = 0; e < m; ++e) {
      if (find(d.edges()[e].tail.crossing) != root) continue;
      join(d.edges()[e].tail.crossing, lay.sub(e, 0));
      join(lay.sub(e, 0), lay.sub(e, 1));
      join(lay.sub(e, 1), d.edges()[e].head.crossing);
    }
    for (int v = 0; v < verts; ++v) {
      if (in_piece(v) && !fixed[v]) {
        index[v] = static_cast<int>(interior.size());
        interior.push_back(v);
      }
    }
    if (interior.empty()) continue;
    const int k = static_cast<int>(interior.size());
    std::vector<Eigen::Triplet<double>> trips;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(k), by = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < k; ++i) {
      const int v = interior[i];
      trips.emplace_back(i, i, static_cast<double>(nbr[v].size()));
      for (int w : nbr[v]) {
        if (fixed[w]) {
          bx[i] += pos[w].x;
          by[i] += pos[w].y;
        } else {
          trips.emplace_back(i, index[w], -1.0);
        }
      }
    }
    Eigen::SparseMatrix<double> lap(k, k);
    lap.setFromTriplets(trips.begin(), trips.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
    const Eigen::VectorXd sx = solver.solve(bx);
    const Eigen::VectorXd sy = solver.solve(by);
    for (int i = 0; i < k; ++i) pos[interior[i]] = {sx[i], sy[i]};
  }

  const int loops = d.free_loops();
  const double width = kMargin + (pieces + loops) * (kPieceSize + kMargin);
  const double height = kPieceSize + 2 * kMargin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(std::max(width, 2 * kMargin))
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(std::max(width, 2 * kMargin)) << ' '
      << fmt(height) << "\">\n";

  auto under_end = [&](const Dart& t) { return t.slot == 0 || t.slot == 2; };
  auto cut = [&](Point a, Point b) { return Point{a.x + kGap * (b.x - a.x), a.y + kGap * (b.y - a.y)}; };
  for (int c = 0; c < d.crossing_components(); ++c) {
    out << "<g class=\"component\" id=\"component-" << c << "\" fill=\"none\" stroke=\"" << kPalette[c % 10]
        << "\" stroke-width=\"2\">\n";
    for (int e : d.component_edges(c)) {
      const auto& ed = d.edges()[e];
      Point pts[4] = {pos[ed.tail.crossing], pos[lay.sub(e, 0)], pos[lay.sub(e, 1)], pos[ed.head.crossing]};
      if (under_end(ed.tail)) pts[0] = cut(pts[0], pts[1]);
      if (under_end(ed.head)) pts[3] = cut(pts[3], pts[2]);
      out << "<path d=\"M " << fmt(pts[0].x) << ' ' << fmt(pts[0].y);
      for (int i = 1; i < 4; ++i) out << " L " << fmt(pts[i].x) << ' ' << fmt(pts[i].y);
      out << "\"/>\n";
    }
    out << "</g>\n";
  }
  for (int l = 0; l < loops; ++l) {
    const int c = d.crossing_components() + l;
    const double cx = kMargin + (pieces + l) * (kPieceSize + kMargin) + kPieceSize / 2;
    out << "<g class=\"component\" id=\"component-" << c << "\" fill=\"none\" stroke=\"" << kPalette[c % 10]
        << "\" stroke-width=\"2\">\n<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(height / 2) << "\" r=\""
        << fmt(kPieceSize / 4) << "\"/>\n</g>\n";
  }
  for (int x = 0; x < n; ++x) {
    out << "<g class=\"crossing\" id=\"crossing-" << x << "\">";
    out << "<circle cx=\"" << fmt(pos[x].x) << "\" cy=\"" << fmt(pos[x].y)
        << "\" r=\"1.5\" fill=\"#000000\"/></g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace coil
