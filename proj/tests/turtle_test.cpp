#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "padic/turtle.hpp"
#include "padic/valuation.hpp"

using padic::Angle;
using padic::Point;
using padic::PolylinePath;
using padic::TurnMapping;
using padic::TurnProgram;

namespace {

TurnProgram program(std::vector<std::int64_t> terms, Angle angle = Angle{90},
                    TurnMapping mapping = TurnMapping::ccw_count) {
  return {std::move(terms), angle, mapping};
}

std::vector<std::int64_t> valuation_terms(std::uint64_t p, std::size_t m) {
  const auto s = padic::generate_dci(p, m);
  return {s.terms().begin(), s.terms().end()};
}

}  // namespace

TEST(Angle, ParsingAndReduction) {
  EXPECT_EQ(Angle::parse("90"), Angle(90));
  EXPECT_EQ(Angle::parse("137.5"), Angle(275, 2));
  EXPECT_EQ(Angle::parse("360/7"), Angle(360, 7));
  EXPECT_EQ(Angle::parse("120.0"), Angle(120));
  EXPECT_EQ(Angle(90).heading_modulus(), 4);
  EXPECT_EQ(Angle(135).heading_modulus(), 8);
  EXPECT_EQ(Angle(135).units(), 3);
  EXPECT_EQ(Angle(275, 2).heading_modulus(), 144);
  EXPECT_EQ(Angle(180).heading_modulus(), 2);
  EXPECT_THROW(Angle::parse("0"), std::invalid_argument);
  EXPECT_THROW(Angle::parse("-90"), std::invalid_argument);
  EXPECT_THROW(Angle::parse("181"), std::invalid_argument);
  EXPECT_THROW(Angle::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Angle::parse("90/0"), std::invalid_argument);
}

TEST(Trace, GoldenTwoAdicPrefix) {
  const PolylinePath path = padic::trace(program({0, 1, 0, 2}));
  EXPECT_EQ(path.vertices, (std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}}));
  EXPECT_TRUE(path.lattice);
  EXPECT_EQ(path.headings, (std::vector<std::int64_t>{0, 0, 1, 1}));
  // The double turn at n = 4 sends the next step back down.
  const PolylinePath longer = padic::trace(program({0, 1, 0, 2, 0}));
  EXPECT_EQ(longer.vertices.back(), (Point{2, 1}));
}

TEST(Trace, StraightLineWithoutTurns) {
  for (const Angle a : {Angle(90), Angle(120), Angle(1), Angle(275, 2)}) {
    const PolylinePath path = padic::trace(program(std::vector<std::int64_t>(9, 0), a));
    ASSERT_EQ(path.vertices.size(), 10u);
    for (std::size_t k = 0; k < path.vertices.size(); ++k) {
      EXPECT_DOUBLE_EQ(path.vertices[k].x, static_cast<double>(k));
      EXPECT_DOUBLE_EQ(path.vertices[k].y, 0.0);
    }
  }
}

TEST(Trace, CategoricalMapping) {
  // A lone 2 is a left turn at the last vertex; a following step shows it.
  EXPECT_EQ(padic::trace(program({2}, Angle(90), TurnMapping::categorical_mod4)).vertices,
            (std::vector<Point>{{0, 0}, {1, 0}}));
  EXPECT_EQ(padic::trace(program({2, 0}, Angle(90), TurnMapping::categorical_mod4)).vertices,
            (std::vector<Point>{{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(padic::trace(program({0, 0}, Angle(90), TurnMapping::categorical_mod4)).vertices,
            (std::vector<Point>{{0, 0}, {1, 0}, {1, -1}}));
  EXPECT_EQ(padic::trace(program({1, 0}, Angle(90), TurnMapping::categorical_mod4)).vertices,
            (std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(padic::trace(program({3, 0}, Angle(90), TurnMapping::categorical_mod4)).vertices,
            (std::vector<Point>{{0, 0}, {1, 0}, {0, 0}}));
}

TEST(Trace, MirroredFlipsChirality) {
  TurnProgram p = program({0, 1, 0, 2, 0, 1});
  p.mirrored = true;
  const auto mirrored = padic::trace(p);
  const auto plain = padic::trace(program({0, 1, 0, 2, 0, 1}));
  ASSERT_EQ(mirrored.vertices.size(), plain.vertices.size());
  for (std::size_t i = 0; i < plain.vertices.size(); ++i) {
    EXPECT_EQ(mirrored.vertices[i].x, plain.vertices[i].x);
    EXPECT_EQ(mirrored.vertices[i].y, -plain.vertices[i].y);
  }
}

TEST(Trace, RejectsEmpty) { EXPECT_THROW(padic::trace(program({})), std::invalid_argument); }

TEST(Trace, LatticeMatchesQuarterTurnOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> turns(1 + rng() % 400);
    for (long& t : turns) t = static_cast<long>(rng() % 23) - 11;
    const auto want = oracle::lattice_trace(turns);
    const auto got = padic::trace(program({turns.begin(), turns.end()}));
    ASSERT_EQ(got.vertices.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      ASSERT_EQ(got.vertices[i].x, static_cast<double>(want[i].first));
      ASSERT_EQ(got.vertices[i].y, static_cast<double>(want[i].second));
    }
  }
}

TEST(Trace, ModReductionInvariance) {
  const auto terms = valuation_terms(2, 10'000);
  for (const Angle a : {Angle(90), Angle(120), Angle(60), Angle(72), Angle(45)}) {
    std::vector<std::int64_t> reduced = terms;
    for (auto& t : reduced) t %= a.heading_modulus();
    EXPECT_TRUE(padic::path_equal(padic::trace(program(terms, a)), padic::trace(program(reduced, a)), 0))
        << a.numerator();
  }
}

TEST(Trace, UnitSegments) {
  const auto terms = valuation_terms(5, 20'000);
  for (const Angle a : {Angle(120), Angle(135), Angle(60), Angle(275, 2), Angle(360, 7)}) {
    const auto path = padic::trace(program(terms, a));
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
      const double len =
          std::hypot(path.vertices[i].x - path.vertices[i - 1].x, path.vertices[i].y - path.vertices[i - 1].y);
      ASSERT_NEAR(len, 1.0, 1e-9);
    }
  }
}

// Every <0,1,0,2,0,1,0> block of v_2 at 90 degrees draws the same T shape.
TEST(Trace, SpikeTemplate) {
  const auto path = padic::trace(program(valuation_terms(2, 4096)));
  const std::vector<Point> tee{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {2, 1}, {2, 0}, {3, 0}, {4, 0}};
  for (std::size_t k = 0; 8 * k + 8 < path.vertices.size(); ++k) {
    const auto window = padic::normalized_subpath(path, 8 * k, 8 * k + 8);
    ASSERT_EQ(window.vertices, tee) << "k=" << k;
  }
}

TEST(Trace, VertexCountLaw) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> terms(1 + rng() % 500);
    for (auto& t : terms) t = static_cast<std::int64_t>(rng() % 50) - 25;
    const Angle a(static_cast<std::int64_t>(1 + rng() % 1800), 10);
    const auto mapping = rng() % 2 ? TurnMapping::ccw_count : TurnMapping::categorical_mod4;
    const auto path = padic::trace(program(terms, a, mapping));
    ASSERT_EQ(path.vertices.size(), terms.size() + 1);
    ASSERT_EQ(path.headings.size(), terms.size());
  }
}

TEST(PathEqual, Examples) {
  const auto terms = valuation_terms(2, 1000);
  std::vector<std::int64_t> mod4 = terms;
  for (auto& t : mod4) t %= 4;
  EXPECT_TRUE(padic::path_equal(padic::trace(program(terms)), padic::trace(program(mod4)), 0));

  const auto straight = padic::trace(program({0, 0, 0}));
  EXPECT_TRUE(padic::path_equal(straight, straight, 0));
  EXPECT_FALSE(padic::path_equal(straight, padic::trace(program({0, 1, 0})), 0));
  EXPECT_FALSE(padic::path_equal(straight, padic::trace(program({0, 0})), 1e9));
  EXPECT_TRUE(padic::path_equal(padic::trace(program({0, 0, 1, 0}, Angle(1))),
                                padic::trace(program({0, 0, 0, 0}, Angle(1))), 0.02));
  EXPECT_THROW(padic::path_equal(straight, straight, -1), std::invalid_argument);
}

TEST(ToSvg, SingleSegment) {
  const std::string svg = padic::to_svg(padic::trace(program({0})));
  EXPECT_NE(svg.find("points=\"0.000000,0.000000 1.000000,0.000000\""), std::string::npos) << svg;
  EXPECT_NE(svg.find("viewBox=\"-1.000000 -1.000000 3.000000 2.000000\""), std::string::npos) << svg;
  EXPECT_EQ(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_EQ(svg.find("<polyline"), svg.rfind("<polyline"));
}

TEST(ToSvg, FlipsYAxis) {
  const std::string svg = padic::to_svg(padic::trace(program({1, 0})), {0.5, 0, 100, "red"});
  // (1,1) in math coordinates is drawn at y = -1.
  EXPECT_NE(svg.find("points=\"0.000000,0.000000 1.000000,0.000000 1.000000,-1.000000\""), std::string::npos) << svg;
  EXPECT_NE(svg.find("viewBox=\"0.000000 -1.000000 1.000000 1.000000\""), std::string::npos) << svg;
  EXPECT_NE(svg.find("stroke=\"red\" stroke-width=\"0.500000\""), std::string::npos);
  EXPECT_NE(svg.find("width=\"100\""), std::string::npos);
  EXPECT_THROW(padic::to_svg(PolylinePath{}), std::invalid_argument);
}
