#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wrideal/game.hpp"

using namespace wrideal;

namespace {

GameState after(std::initializer_list<Point> picks) {
  GameState s;
  for (Point p : picks) s.moves.push_back({SetDescriptor{}, p});
  s.round = s.moves.size();
  return s;
}

}  // namespace

TEST(PlayerOneStrategy, Examples) {
  EXPECT_TRUE(player1_wr_strategy(after({})).empty());
  SetDescriptor one = SetDescriptor::columns(0, 0);
  one.add_point({0, 0});
  EXPECT_EQ(player1_wr_strategy(after({{0, 0}})), one);
  SetDescriptor two = SetDescriptor::columns(0, 8);
  two.add_points({{0, 0}, {1, 7}});
  EXPECT_EQ(player1_wr_strategy(after({{0, 0}, {1, 7}})), two);
}

TEST(PlayerOneStrategy, ExactSectionsAvoidEveryColorOnePartner) {
  const GameState s = after({{2, 3}, {9, 1}});
  const SetDescriptor x = player1_wr_strategy(s, SectionMode::Exact);
  EXPECT_TRUE(descriptor_in_ideal(IdealPresentation::wr(), x));
  for (Nat c = 0; c < 20; ++c) {
    for (Nat r = 0; r < 20; ++r) {
      const Point b{c, r};
      bool conflict = false;
      for (const auto& m : s.moves) conflict = conflict || b == m.k || !oracle::sparse_pair(b, m.k);
      EXPECT_EQ(x.contains(b), conflict) << to_string(b);
    }
  }
}

TEST(Game, LeastLexOpponent) {
  const GameState g = play(IdealPresentation::wr(), wr_strategy(), least_lex_player(), 3);
  EXPECT_EQ(g.picks(), (PointSet{{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_TRUE(verdict(g).second_type);
}

TEST(Game, EmptyStrategyLosesToColumnZero) {
  const GameState g = play(IdealPresentation::wr(), empty_strategy(), column_zero_player(), 3);
  EXPECT_EQ(g.picks(), (PointSet{{0, 0}, {0, 1}, {0, 2}}));
  const Verdict v = verdict(g);
  EXPECT_FALSE(v.second_type);
  EXPECT_EQ(v.phi, 1u);
}

TEST(Game, StrategyBeatsRandomOpponents) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (SectionMode mode : {SectionMode::Columns, SectionMode::Exact}) {
      const GameState g = play(IdealPresentation::wr(), wr_strategy(mode), random_player(seed), 50, seed);
      for (const auto& m : g.moves) {
        EXPECT_TRUE(descriptor_in_ideal(IdealPresentation::wr(), m.x));
        EXPECT_FALSE(m.x.contains(m.k));
      }
      const Verdict v = verdict(g);
      EXPECT_TRUE(v.second_type);
      EXPECT_EQ(v.phi, 1u);
    }
  }
}

TEST(Game, WrPiStrategyYieldsChains) {
  const auto ideal = IdealPresentation::wr_pi(pi_colhalf_map());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GameState g = play(ideal, wr_strategy(), random_player(seed), 12, seed);
    EXPECT_TRUE(verdict(g).second_type);
  }
}

TEST(Game, IllegalMovesNameThePlayer) {
  const PlayerTwo cheat = [](const GameState&, const SetDescriptor&) { return Point{0, 0}; };
  try {
    play(IdealPresentation::wr(), wr_strategy(), cheat, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("player II"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("round 1"), std::string::npos);
  }
  const PlayerOne greedy = [](const GameState&) { return SetDescriptor::columns(0, 1); };
  EXPECT_THROW(play(IdealPresentation::fin(), greedy, least_lex_player(), 1), Error);
}

TEST(Game, DeterministicForSeed) {
  const auto a = play(IdealPresentation::wr(), wr_strategy(), random_player(77), 30, 77);
  const auto b = play(IdealPresentation::wr(), wr_strategy(), random_player(77), 30, 77);
  EXPECT_EQ(a.picks(), b.picks());
}

TEST(ColoringTree, Examples) {
  const auto root_only = coloring_to_tree(lambda_color, [](Point) { return Color::One; }, 0, 4);
  EXPECT_EQ(root_only.ramification.size(), 1u);
  EXPECT_EQ(root_only.ramification.at({}).size(), 16u);

  const auto tree = coloring_to_tree(lambda_color, [](Point) { return Color::One; }, 1, 4);
  const PointSet& after00 = tree.ramification.at({{0, 0}});
  EXPECT_EQ(after00.size(), 12u);
  for (Point p : after00) EXPECT_GE(p.col, 1u);
  EXPECT_TRUE(tree.prefix_closed());
  EXPECT_EQ(tree.nodes_at_depth(1).size(), 16u);

  const PointColoring zero = [](Point, Point) { return Color::Zero; };
  const auto flat = coloring_to_tree(zero, [](Point) { return Color::One; }, 2, 3);
  for (const auto& [node, ram] : flat.ramification) {
    for (Point p : node) EXPECT_FALSE(ram.contains(p));
    EXPECT_EQ(ram.size() + node.size(), 9u);
  }
}

TEST(ColoringTree, BranchesAreSparse) {
  const auto tree = coloring_to_tree(lambda_color, [](Point) { return Color::One; }, 4, 8);
  std::size_t nodes = 0;
  for (const auto& [node, ram] : tree.ramification) {
    ++nodes;
    for (std::size_t i = 0; i < node.size(); ++i) {
      for (std::size_t j = i + 1; j < node.size(); ++j) EXPECT_TRUE(oracle::sparse_pair(node[i], node[j]));
    }
  }
  EXPECT_FALSE(tree.nodes_at_depth(4).empty());
  EXPECT_GT(nodes, 64u);
}

TEST(DecreasingChainColoring, Examples) {
  const auto above = decreasing_chain_to_coloring([](Nat n, Nat m) { return m > n; });
  for (Nat n = 0; n < 6; ++n) {
    for (Nat m = n + 1; m < 8; ++m) EXPECT_EQ(above(n, m), Color::Zero);
  }
  const auto even = decreasing_chain_to_coloring([](Nat n, Nat m) { return m > n && m % 2 == 0; });
  EXPECT_EQ(even(1, 4), Color::Zero);
  EXPECT_EQ(even(1, 3), Color::One);
  EXPECT_EQ(even(4, 1), Color::Zero);
  EXPECT_THROW(even(2, 2), Error);
}

TEST(NormalizeFamily, Examples) {
  const SequenceFamily single{{{}, {1, 2, 3}}};
  EXPECT_EQ(normalize_family(single), single);

  const SequenceFamily two{{{}, {1, 2, 3}}, {{5}, {2, 3, 4}}};
  const auto n = normalize_family(two);
  EXPECT_EQ(n.at({}), (std::set<Nat>{1, 2, 3}));
  EXPECT_EQ(n.at({5}), (std::set<Nat>{2, 3}));

  std::set<Nat> full;
  for (Nat i = 0; i < 10; ++i) full.insert(i);
  const SequenceFamily same{{{}, full}, {{0}, full}, {{0, 3}, full}};
  EXPECT_EQ(normalize_family(same), same);
}
