#include "wrideal/game.hpp"

#include <algorithm>
#include <random>

namespace wrideal {

PointSet GameState::picks() const {
  std::vector<Point> pts;
  for (const auto& m : moves) pts.push_back(m.k);
  return PointSet(std::move(pts));
}

namespace {

SetDescriptor wr_columns(const PointSet& picks) {
  Nat top = 0;
  for (Point p : picks) top = std::max(top, sum(p));
  SetDescriptor d = SetDescriptor::columns(0, top);
  d.add_points(picks);
  return d;
}

SetDescriptor wr_exact(const PointSet& picks) {
  SetDescriptor d;
  for (Point p : picks) {
    for (Nat k = 0; k < p.col; ++k) d.add_tail(k, p.col - k);
    d = d.united(SetDescriptor::columns(p.col, sum(p)));
  }
  d.add_points(picks);
  return d;
}

SetDescriptor wrpi_columns(const IdealPresentation& ideal, const PointSet& picks) {
  const MapSpec& pi = ideal.pi();
  if (!pi.has_level_bound()) throw Error("player I needs a level bound for " + pi.name());
  Nat top = 0;
  Nat vmax = 0;
  for (Point p : picks) {
    const Nat v = pi.value(p);
    top = std::max({top, p.col, v == 0 ? Nat{0} : v - 1});
    vmax = std::max(vmax, v);
  }
  SetDescriptor d = SetDescriptor::columns(0, top);
  const Nat bound = *pi.level_bound(vmax);
  std::vector<Point> low;
  for (Nat c = top + 1; c < bound; ++c) {
    for (Nat r = 0; r < bound; ++r) {
      if (pi.value({c, r}) <= vmax) low.push_back({c, r});
    }
  }
  d.add_points(PointSet(std::move(low)));
  d.add_points(picks);
  return d;
}

}  // namespace

SetDescriptor player1_wr_strategy(const GameState& state, SectionMode mode) {
  const PointSet picks = state.picks();
  switch (state.presentation.family()) {
    case Family::WR:
      if (picks.empty()) return {};
      return mode == SectionMode::Exact ? wr_exact(picks) : wr_columns(picks);
    case Family::WRpi:
      if (picks.empty()) return {};
      return wrpi_columns(state.presentation, picks);
    default:
      throw Error("no player I strategy for " + state.presentation.name());
  }
}

PlayerOne wr_strategy(SectionMode mode) {
  return [mode](const GameState& s) { return player1_wr_strategy(s, mode); };
}

PlayerOne empty_strategy() {
  return [](const GameState&) { return SetDescriptor{}; };
}

PlayerTwo least_lex_player() {
  return [](const GameState&, const SetDescriptor& x) { return pick_outside(x); };
}

PlayerTwo column_zero_player() {
  return [](const GameState& s, const SetDescriptor& x) {
    const PointSet picked = s.picks();
    const auto& cols = x.column_atoms();
    if (!std::binary_search(cols.begin(), cols.end(), Nat{0})) {
      const auto t = x.tail_atoms().find(0);
      const Nat limit = t == x.tail_atoms().end() ? ~Nat{0} : t->second;
      for (Nat r = 0; r < limit; ++r) {
        if (!x.contains({0, r}) && !picked.contains({0, r})) return Point{0, r};
      }
    }
    return pick_outside(x);
  };
}

PlayerTwo random_player(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const GameState& s, const SetDescriptor& x) {
    Nat top = 0;
    for (Nat c : x.column_atoms()) top = std::max(top, c);
    for (const auto& [c, from] : x.tail_atoms()) top = std::max(top, c);
    for (Point p : x.point_atoms()) top = std::max(top, p.col);
    for (const auto& m : s.moves) top = std::max(top, m.k.col);
    std::uniform_int_distribution<Nat> col(0, top + 8);
    std::uniform_int_distribution<Nat> row(0, 15);
    while (true) {
      const Point p{col(*rng), row(*rng)};
      if (!x.contains(p)) return p;
    }
  };
}

GameState play(const IdealPresentation& presentation, const PlayerOne& one, const PlayerTwo& two, Nat rounds,
               std::optional<std::uint64_t> seed) {
  GameState state;
  state.presentation = presentation;
  state.seed = seed;
  for (Nat r = 0; r < rounds; ++r) {
    SetDescriptor x = one(state);
    if (!descriptor_in_ideal(presentation, x)) {
      throw Error("player I: move " + to_string(x) + " at round " + std::to_string(r) + " is not in " +
                  presentation.name());
    }
    const Point k = two(state, x);
    if (x.contains(k)) {
      throw Error("player II: pick " + to_string(k) + " at round " + std::to_string(r) + " lies in X_" +
                  std::to_string(r));
    }
    state.moves.push_back({std::move(x), k});
    state.round = r + 1;
  }
  return state;
}

Verdict verdict(const GameState& state) {
  Verdict v;
  v.picks = state.picks();
  const auto& ideal = state.presentation;
  if (ideal.family() == Family::WRpi) {
    v.second_type = is_second_type_wrpi(v.picks.points(), ideal.pi());
  } else {
    v.second_type = is_second_type_wr(v.picks);
  }
  switch (ideal.family()) {
    case Family::WR:
    case Family::ED:
    case Family::EDup:
      v.phi = phi(ideal, v.picks).value;
      break;
    case Family::WRpi:
      try {
        v.phi = phi(ideal, v.picks).value;
      } catch (const Error&) {
        // Too many picks for the exhaustive remainder solver; a second-type
        // pick set is still a single generator.
        if (v.second_type) v.phi = v.picks.empty() ? 0 : 1;
      }
      break;
    default:
      break;
  }
  return v;
}

bool FiniteTree::prefix_closed() const {
  for (const auto& [node, ram] : ramification) {
    for (std::size_t len = 0; len < node.size(); ++len) {
      if (!ramification.count(std::vector<Point>(node.begin(), node.begin() + static_cast<std::ptrdiff_t>(len)))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Point>> FiniteTree::nodes_at_depth(std::size_t depth) const {
  std::vector<std::vector<Point>> out;
  for (const auto& [node, ram] : ramification) {
    if (node.size() == depth) out.push_back(node);
  }
  return out;
}

FiniteTree coloring_to_tree(const PointColoring& coloring, const std::function<Color(Point)>& small_class,
                            Nat depth, Nat window) {
  FiniteTree tree;
  std::vector<Point> all;
  for (Nat c = 0; c < window; ++c) {
    for (Nat r = 0; r < window; ++r) all.push_back({c, r});
  }
  std::vector<std::vector<Point>> frontier{{}};
  tree.ramification.emplace(std::vector<Point>{}, PointSet(all));
  for (Nat d = 0; d < depth; ++d) {
    std::vector<std::vector<Point>> next;
    for (const auto& s : frontier) {
      const PointSet ram = tree.ramification.at(s);
      for (Point x : ram) {
        const Color small = small_class(x);
        std::vector<Point> kept;
        for (Point b : ram) {
          if (b != x && coloring(x, b) != small) kept.push_back(b);
        }
        auto child = s;
        child.push_back(x);
        tree.ramification.emplace(child, PointSet(std::move(kept)));
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

IndexColoring decreasing_chain_to_coloring(std::function<bool(Nat, Nat)> member) {
  return [member = std::move(member)](Nat n, Nat m) {
    if (n == m) throw Error("pair required");
    const Nat lo = std::min(n, m);
    const Nat hi = std::max(n, m);
    return member(lo, hi) ? Color::Zero : Color::One;
  };
}

SequenceFamily normalize_family(const SequenceFamily& family) {
  auto top = [](const std::vector<Nat>& s) -> std::optional<Nat> {
    if (s.empty()) return std::nullopt;
    return *std::max_element(s.begin(), s.end());
  };
  auto at_most = [](std::optional<Nat> a, std::optional<Nat> b) { return !a || (b && *a <= *b); };
  SequenceFamily out;
  for (const auto& [t, xt] : family) {
    std::set<Nat> acc = xt;
    for (const auto& [s, xs] : family) {
      if (s.size() > t.size() || !at_most(top(s), top(t))) continue;
      std::set<Nat> keep;
      std::set_intersection(acc.begin(), acc.end(), xs.begin(), xs.end(), std::inserter(keep, keep.begin()));
      acc = std::move(keep);
    }
    out.emplace(t, std::move(acc));
  }
  return out;
}

}  // namespace wrideal
