// Runs the nine reproduction criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mon_families.hpp"
#include "oracles.hpp"
#include "wrideal/covernum.hpp"
#include "wrideal/embedding.hpp"
#include "wrideal/game.hpp"
#include "wrideal/mon.hpp"
#include "wrideal/presentations.hpp"
#include "wrideal/reductions.hpp"
#include "wrideal/staged_sigma.hpp"

using namespace wrideal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }
};

// Calls visit on every subset of `universe` with at most max_size elements,
// in increasing index order.
void for_each_subset(const std::vector<Point>& universe, std::size_t max_size,
                     const std::function<void(const std::vector<Point>&)>& visit) {
  std::vector<Point> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    visit(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = from; i < universe.size(); ++i) {
      cur.push_back(universe[i]);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
}

std::vector<Point> box(Nat cols, Nat rows) {
  std::vector<Point> out;
  for (Nat c = 0; c < cols; ++c) {
    for (Nat r = 0; r < rows; ++r) out.push_back({c, r});
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t sets = 0;
  auto check = [&](const std::vector<Point>& pts) {
    ++sets;
    const PointSet a(pts);
    const std::pair<Nat, Nat> pairs[] = {
        {phi(IdealPresentation::wr(), a).value, brute_force_cover(a, CoverUniverse::wr()).cost()},
        {phi(IdealPresentation::ed(), a).value, brute_force_cover(a, CoverUniverse::ed()).cost()},
        {phi(IdealPresentation::ed_up(), a).value, brute_force_cover(a, CoverUniverse::ed_up()).cost()},
        {second_type_cover_number(a), brute_force_cover(a, CoverUniverse::second_type()).cost()},
    };
    for (const auto& [fast, slow] : pairs) {
      if (fast != slow) o.fail("mismatch on " + std::to_string(pts.size()) + "-point set starting " + to_string(pts[0]));
    }
  };
  for_each_subset(box(8, 8), 4, check);
  oracle::Gen g(1);
  for (int t = 0; t < 500; ++t) check(g.points(g.between(1, 6), 8, 8));
  o.detail = std::to_string(sets) + " sets, 4 solvers each";
  return o;
}

Outcome witness_families() {
  Outcome o;
  oracle::Gen g(2);
  std::size_t runs = 0;
  for (int family = 0; family < 100; ++family) {
    for (Nat k = 1; k <= 6; ++k) {
      std::vector<Nat> cols{g.below(4)};
      while (cols.size() < k + 1) cols.push_back(cols.back() + 1 + g.below(4));
      std::vector<Point> w;
      for (Nat c : cols) w.push_back({c, cols.back() - c + 1 + g.below(6)});
      const auto witness = remark21_check(w);
      ++runs;
      if (!witness || witness->level != k) {
        o.fail("generated family is not a level-" + std::to_string(k) + " witness");
        continue;
      }
      const PointSet a(w);
      if (second_type_cover_number(a) != k + 1) o.fail("cover number differs from k+1 at level " + std::to_string(k));
      if (brute_force_cover(a, CoverUniverse::second_type()).cost() != k + 1) o.fail("oracle differs from k+1");
    }
  }
  o.detail = std::to_string(runs) + " witnesses, levels 1..6";
  return o;
}

Outcome interleaving_reduction() {
  Outcome o;
  Nat round_trips = 0;
  for (Nat i = 0; i < 40; ++i) {
    for (Nat j = 0; j < 40; ++j) {
      const Point a{i, j};
      if (prop45_invert(prop45_apply(a)) != a || prop45_apply(prop45_invert(a)) != a) {
        o.fail("round trip fails at " + to_string(a));
      } else {
        ++round_trips;
      }
    }
  }
  oracle::Gen g(3);
  const auto up = IdealPresentation::ed_up();
  for (int t = 0; t < 200; ++t) {
    std::vector<Point> chain;
    Nat col = g.below(5);
    for (Nat k = g.between(1, 10); k > 0; --k) {
      chain.push_back({col, g.below(8)});
      col = sum(chain.back()) + 1 + g.below(4);
    }
    if (!is_second_type_wr(PointSet(chain))) o.fail("sample is not second-type");
    PointSet image;
    for (Point p : chain) image.insert(prop45_apply(p));
    if (phi(up, image).value > 2) o.fail("second-type image needs more than two generators");
  }
  for (int t = 0; t < 200; ++t) {
    const Nat c = g.below(30);
    PointSet line;
    for (Nat k = g.between(1, 12); k > 0; --k) line.insert({c, g.below(60)});
    PointSet image;
    for (Point p : line) image.insert(prop45_apply(p));
    if (phi(up, image).value > 2) o.fail("vertical-line image needs more than two generators");
  }
  o.detail = std::to_string(round_trips) + "/1600 round trips, 200 chains, 200 lines";
  return o;
}

Outcome pihat_predicate() {
  Outcome o;
  const std::function<Nat(Point)> raw = [](Point a) { return pihat_raw(a); };
  std::size_t sets = 0;
  // Depth-first with incremental pair checks; each visited set is compared
  // through both library predicates.
  const auto universe = box(10, 10);
  std::vector<Point> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    ++sets;
    if (is_second_type_wrpi(cur, raw) != is_second_type_wr(cur)) o.fail("predicates differ");
    if (cur.size() == 5) return;
    for (std::size_t i = from; i < universe.size(); ++i) {
      cur.push_back(universe[i]);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  o.detail = std::to_string(sets) + " sets in the 10x10 window";
  return o;
}

Outcome game_runs() {
  Outcome o;
  const auto wr = IdealPresentation::wr();
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    try {
      const GameState g = play(wr, wr_strategy(), random_player(seed), 200, seed);
      for (const auto& m : g.moves) {
        if (!descriptor_in_ideal(wr, m.x)) o.fail("move outside the ideal");
        if (m.x.contains(m.k)) o.fail("illegal pick");
      }
      const Verdict v = verdict(g);
      if (v.second_type && v.phi == Nat{1}) ++wins;
    } catch (const Error& e) {
      o.fail(e.what());
    }
  }
  if (wins != 50) o.fail(std::to_string(wins) + "/50 second-type outcomes");
  o.detail = std::to_string(wins) + "/50 runs of 200 rounds end in one generator";
  return o;
}

Outcome sigma_decomposition() {
  Outcome o;
  const std::vector<std::pair<MapSpec, MapSpec>> pairs{
      {pihat_map(), pihat_map()}, {pi_max_map(), pi_colhalf_map()}, {pi_shifted_map(), pi_max_map()}};
  const Nat window = 32;
  std::size_t samples = 0;
  for (const auto& [pi, pi0] : pairs) {
    const StagedSigma s(pi, pi0, window);
    std::map<Point, Point> seen;
    std::vector<Point> images;
    for (Point a : box(window, window)) {
      const Point q = s.apply(a);
      if (!seen.emplace(q, a).second) o.fail("sigma not injective for " + pi.name());
      images.push_back(q);
    }
    std::mt19937_64 rng(6);
    auto f = [&](Point a) { return s.pi().value(a); };
    for (int t = 0; t < 20; ++t) {
      const auto chain = sample_wrpi_chain(images, f, rng, 8);
      ++samples;
      try {
        const auto rep = verify_preimage_decomposition(s, PointSet(chain));
        if (!rep.ok) o.fail("decomposition fails for " + pi.name() + "/" + pi0.name());
      } catch (const Error& e) {
        o.fail(e.what());
      }
    }
  }
  o.detail = "3 map pairs, window 32, " + std::to_string(samples) + " chains";
  return o;
}

Outcome partition_embedding() {
  Outcome o;
  const Nat window = 64;
  std::size_t samples = 0;
  for (const auto& w : {PartitionWitness::dyadic(), PartitionWitness::random(71, window),
                        PartitionWitness::random(72, window)}) {
    const Embedding e = partition_to_embedding(w, window);
    std::map<Nat, std::vector<Nat>> pulled;
    for (Nat m = 0; m < window; ++m) pulled[e.sigma.at(m).col].push_back(m);
    for (Nat n = 0; n <= 2 * window + 1; ++n) {
      const auto members = w.members(n, window);
      const auto it = pulled.find(n);
      const std::vector<Nat> got = it == pulled.end() ? std::vector<Nat>{} : it->second;
      if (got != members) o.fail("column " + std::to_string(n) + " does not pull back to its class in " + w.name);
    }
    std::mt19937_64 rng(7);
    auto f = [&](Point a) { return e.pi.value(a); };
    for (int t = 0; t < 50; ++t) {
      const auto chain = sample_wrpi_chain(e.images, f, rng, 8);
      ++samples;
      const auto rep = check_jumping(w, e, chain);
      if (!rep.ok) o.fail("jumping fails in " + w.name + ": " + rep.issues.front());
    }
  }
  o.detail = "3 partitions, window 64, " + std::to_string(samples) + " chains";
  return o;
}

Outcome monotone_extraction() {
  Outcome o;
  oracle::Gen g(8);
  const MapSpec pi = cantor_map();
  const std::vector<std::pair<oracle::FamilyShape, MonCase>> shapes{
      {oracle::FamilyShape::IncreasingLimits, MonCase::LimitsIncreasing},
      {oracle::FamilyShape::EventuallyConstant, MonCase::ConstantEventually},
      {oracle::FamilyShape::CommonLimit, MonCase::ConstantIncreasing},
      {oracle::FamilyShape::DecreasingLimits, MonCase::LimitsDecreasing},
      {oracle::FamilyShape::Dual, MonCase::LimitsIncreasing}};
  std::size_t runs = 0;
  for (const auto& [shape, expected] : shapes) {
    for (int t = 0; t < 50; ++t) {
      const auto d = oracle::random_family(shape, g);
      ++runs;
      try {
        const auto c = extract_mon(pi, d, 20, 5);
        if (c.mon_case != expected) o.fail(oracle::to_string(shape) + " took an unexpected case");
        const auto check = verify_certificate(c, pi, d);
        if (!check.ok) o.fail(oracle::to_string(shape) + ": " + check.reasons.front());
        if (second_type_cover_number(PointSet(c.points)) < 6) o.fail("certificate cover number below 6");
        const auto& top = c.witnesses.back();
        if (brute_force_cover(PointSet(top.points), CoverUniverse::second_type()).cost() < 6) {
          o.fail("oracle finds fewer than 6 generators on the level-5 witness");
        }
      } catch (const Error& e) {
        o.fail(oracle::to_string(shape) + ": " + e.what());
      }
    }
  }
  o.detail = std::to_string(runs) + " descriptors over all four cases and the dual branch";
  return o;
}

Outcome adversarial_sequence() {
  Outcome o;
  const Nat n = 90;
  std::vector<Rational> y;
  std::vector<Nat> level;
  std::vector<Point> pts;
  for (Nat i = 0; i < n; ++i) {
    y.push_back(remark44_adversarial_value(i));
    level.push_back(remark44_class(i).level);
    pts.push_back(remark44_enumerate(i));
  }
  const auto up = IdealPresentation::ed_up();
  std::size_t sets = 0;
  std::vector<Nat> cur;
  auto check = [&] {
    ++sets;
    PointSet a;
    Nat top = 0;
    for (Nat i : cur) {
      a.insert(pts[i]);
      top = std::max(top, level[i]);
    }
    if (phi(up, a).value > 2 * (1 + top)) o.fail("bound exceeded");
  };
  // Nondecreasing index sets, then nonincreasing ones that are not constant.
  for (int pass = 0; pass < 2; ++pass) {
    std::function<void(Nat, bool)> go = [&](Nat from, bool strict_seen) {
      if (!cur.empty() && (pass == 0 || strict_seen)) check();
      if (cur.size() == 6) return;
      for (Nat i = from; i < n; ++i) {
        if (!cur.empty()) {
          const Rational& last = y[cur.back()];
          if (pass == 0 ? y[i] < last : y[i] > last) continue;
        }
        const bool strict = !cur.empty() && y[i] != y[cur.back()];
        cur.push_back(i);
        go(i + 1, strict_seen || strict);
        cur.pop_back();
      }
    };
    go(0, false);
  }
  o.detail = std::to_string(sets) + " monotone index sets of size <= 6";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"sparsity witnesses", witness_families},
      {"interleaving reduction", interleaving_reduction},
      {"sum-level predicate", pihat_predicate},
      {"game strategy", game_runs},
      {"staged injection", sigma_decomposition},
      {"partition embedding", partition_embedding},
      {"monotone extraction", monotone_extraction},
      {"adversarial sequence", adversarial_sequence},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%s; %.1fs)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs, o.pass ? "" : ": ", o.failure.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
