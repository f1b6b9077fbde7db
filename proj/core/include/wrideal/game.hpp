#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wrideal/covernum.hpp"
#include "wrideal/grid.hpp"
#include "wrideal/presentations.hpp"
#include "wrideal/reductions.hpp"

namespace wrideal {

struct Move {
  SetDescriptor x;
  Point k;
};

struct GameState {
  IdealPresentation presentation = IdealPresentation::wr();
  std::vector<Move> moves;
  Nat round = 0;
  std::optional<std::uint64_t> seed;

  PointSet picks() const;
};

using PlayerOne = std::function<SetDescriptor(const GameState&)>;
using PlayerTwo = std::function<Point(const GameState&, const SetDescriptor&)>;

// Columns: every column up to the largest relevant bound of a played point.
// Exact: for WR, the precise color-1 section of each played point.
enum class SectionMode { Columns, Exact };

// Player I against WR: Columns 0..max sum(p) plus the played points (or the
// exact lambda sections). Against WR^pi: Columns 0..max(col(p), pi(p)-1)
// plus the finitely many points with pi <= max pi(p). Empty in round 0.
SetDescriptor player1_wr_strategy(const GameState& state, SectionMode mode = SectionMode::Columns);

PlayerOne wr_strategy(SectionMode mode = SectionMode::Columns);
PlayerOne empty_strategy();

PlayerTwo least_lex_player();
// Least unpicked row of column 0 outside X (falls back to least-lex).
PlayerTwo column_zero_player();
// Uniform legal pick from a box just beyond the occupied columns.
PlayerTwo random_player(std::uint64_t seed);

// Plays the given number of rounds. Throws Error naming the offending player
// and round on an illegal move.
GameState play(const IdealPresentation& presentation, const PlayerOne& one, const PlayerTwo& two, Nat rounds,
               std::optional<std::uint64_t> seed = std::nullopt);

struct Verdict {
  PointSet picks;
  bool second_type = false;
  std::optional<Nat> phi;  // when the presentation has a generator system
};

Verdict verdict(const GameState& state);

// Finite prefix-closed tree with a ramification per node.
struct FiniteTree {
  std::map<std::vector<Point>, PointSet> ramification;

  bool prefix_closed() const;
  std::vector<std::vector<Point>> nodes_at_depth(std::size_t depth) const;
};

// The tree whose root ramification is the window and whose node s + (x) has
// ramification A_s minus x minus the small color section of x.
FiniteTree coloring_to_tree(const PointColoring& coloring, const std::function<Color(Point)>& small_class,
                            Nat depth, Nat window);

// f({n,m}) = 0 iff m is in X_n, for n < m; member(n, m) decides m in X_n.
IndexColoring decreasing_chain_to_coloring(std::function<bool(Nat, Nat)> member);

using SequenceFamily = std::map<std::vector<Nat>, std::set<Nat>>;

// X'_t = X_t intersected with every X_s, s in the family, with lh(s) <= lh(t)
// and max s <= max t (the empty sequence has the least maximum).
SequenceFamily normalize_family(const SequenceFamily& family);

}  // namespace wrideal
