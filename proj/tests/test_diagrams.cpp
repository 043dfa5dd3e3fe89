#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <regex>
#include <sstream>

#include "coil/diagram.hpp"
#include "coil/error.hpp"
#include "coil/generators.hpp"

using namespace coil;

namespace {

const char* const kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* const kFigure8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
// The trefoil with crossing 1 switched: strand 4 -> 5 now passes under.
const char* const kSwitchedTrefoil = "X(4,2,5,1) X(3,6,4,1) X(5,2,6,3)";

ErrorKind parse_error(const std::string& text) {
  try {
    parse_pd(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::PreconditionViolation;
}

std::vector<std::size_t> region_sizes(const PlanarDiagram& d) {
  std::vector<std::size_t> out;
  for (const auto& r : twist_regions(d).regions) out.push_back(r.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Shuffles crossing order and renames edge labels of a PD string.
std::string relabel(const std::string& pd, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<long, 4>> terms;
  const std::regex term(R"(X\((\d+),(\d+),(\d+),(\d+)\))");
  long max_label = 0;
  for (auto it = std::sregex_iterator(pd.begin(), pd.end(), term); it != std::sregex_iterator(); ++it) {
    std::array<long, 4> t{};
    for (int i = 0; i < 4; ++i) {
      t[i] = std::stol((*it)[i + 1]);
      max_label = std::max(max_label, t[i]);
    }
    terms.push_back(t);
  }
  std::vector<long> perm(max_label);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::shuffle(terms.begin(), terms.end(), rng);
  std::ostringstream out;
  for (const auto& t : terms) {
    out << "X(" << perm[t[0] - 1] << ',' << perm[t[1] - 1] << ',' << perm[t[2] - 1] << ',' << perm[t[3] - 1] << ") ";
  }
  return out.str();
}

}  // namespace

TEST(ParsePd, Trefoil) {
  const PlanarDiagram d = parse_pd(kTrefoil);
  EXPECT_EQ(d.crossing_count(), 3u);
  EXPECT_EQ(d.component_count(), 1);
  EXPECT_EQ(d.edges().size(), 6u);
  EXPECT_TRUE(satisfies_euler(d));
}

TEST(ParsePd, EmptyIsEmptyDiagram) {
  const PlanarDiagram d = parse_pd("");
  EXPECT_EQ(d.crossing_count(), 0u);
  EXPECT_EQ(parse_pd("  \n ").crossing_count(), 0u);
}

TEST(ParsePd, Errors) {
  EXPECT_EQ(parse_error("X(1,2,3)"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("X(1,2,3,4"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("Y(1,2,3,4)"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("X(0,1,1,2)"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("X(1,2,3,4,5)"), ErrorKind::NonQuadrivalent);
  EXPECT_EQ(parse_error("X(1,1,1,2)"), ErrorKind::EdgePairingError);
  EXPECT_EQ(parse_error("X(1,2,3,4)"), ErrorKind::EdgePairingError);
  EXPECT_EQ(parse_error("X(5,2,3,1) X(2,6,4,3) X(4,5,1,6)"), ErrorKind::NonPlanarRotation);
}

TEST(EmitPd, EmptyAndRoundTrips) {
  EXPECT_EQ(emit_pd(PlanarDiagram()), "");
  for (const std::string text : {kTrefoil, kFigure8}) {
    const PlanarDiagram d = parse_pd(text);
    const std::string once = emit_pd(d);
    EXPECT_EQ(canonical_signature(parse_pd(once)), canonical_signature(d));
    EXPECT_EQ(emit_pd(parse_pd(once)), once);
  }
  const PlanarDiagram two_bridge = gen_two_bridge(ContinuedFraction({2, 2}));
  const PlanarDiagram back = parse_pd(emit_pd(two_bridge));
  EXPECT_EQ(back.crossing_count(), 4u);
  EXPECT_EQ(canonical_signature(back), canonical_signature(two_bridge));
}

TEST(Faces, EulerCounts) {
  EXPECT_EQ(faces(parse_pd(kTrefoil)).size(), 5u);
  EXPECT_EQ(faces(parse_pd("X(1,1,2,2)")).size(), 3u);
  EXPECT_EQ(faces(PlanarDiagram()).size(), 1u);
  EXPECT_EQ(faces(parse_pd(kFigure8)).size(), 6u);
}

TEST(Faces, EveryDartOnce) {
  const PlanarDiagram d = parse_pd(kFigure8);
  std::vector<int> seen(4 * d.crossing_count(), 0);
  for (const auto& f : faces(d)) {
    for (const Dart& t : f) ++seen[4 * t.crossing + t.slot];
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST(TwistRegions, Examples) {
  EXPECT_EQ(region_sizes(parse_pd(kTrefoil)), (std::vector<std::size_t>{3}));
  EXPECT_EQ(region_sizes(parse_pd(kFigure8)), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(twist_regions(PlanarDiagram()).count(), 0u);
  EXPECT_EQ(twist_regions(parse_pd("X(1,1,2,2)")).count(), 1u);
}

TEST(TwistRegions, InvariantUnderRelabeling) {
  const std::vector<PlanarDiagram> samples{
      parse_pd(kFigure8), gen_two_bridge(cfrac_expand(Slope(5, 13))), gen_double_coil({2, 5, 1, -2}),
      gen_augmented(Slope(3, 7))};
  for (const auto& d : samples) {
    const std::string pd = emit_pd(d);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const PlanarDiagram r = parse_pd(relabel(pd, seed));
      EXPECT_EQ(twist_regions(r).count(), twist_regions(d).count());
      EXPECT_EQ(region_sizes(r), region_sizes(d));
      EXPECT_EQ(canonical_signature(r), canonical_signature(d));
      EXPECT_EQ(is_alternating(r), is_alternating(d));
    }
  }
}

TEST(IsAlternating, Examples) {
  EXPECT_TRUE(is_alternating(parse_pd(kTrefoil)));
  EXPECT_TRUE(is_alternating(parse_pd(kFigure8)));
  EXPECT_FALSE(is_alternating(parse_pd(kSwitchedTrefoil)));
}

TEST(Signature, DistinguishesCrossingChange) {
  EXPECT_NE(canonical_signature(parse_pd(kTrefoil)), canonical_signature(parse_pd(kSwitchedTrefoil)));
}
