#include "wrideal/embedding.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "wrideal/reductions.hpp"

namespace wrideal {

PartitionWitness PartitionWitness::dyadic() {
  PartitionWitness w;
  w.name = "dyadic";
  w.all_infinite = true;
  w.class_of = [](Nat m) { return static_cast<Nat>(std::countr_zero(m + 1)); };
  w.element = [](Nat n, Nat k) -> std::optional<Nat> {
    if (n >= 62) return std::nullopt;
    return (Nat{1} << n) * (2 * k + 1) - 1;
  };
  return w;
}

PartitionWitness PartitionWitness::random(std::uint64_t seed, Nat size) {
  auto table = std::make_shared<std::vector<Nat>>();
  table->reserve(size);
  std::mt19937_64 rng(seed);
  for (Nat m = 0; m < size; ++m) table->push_back(std::uniform_int_distribution<Nat>(0, 2 * m + 1)(rng));
  PartitionWitness w;
  w.name = "random(" + std::to_string(seed) + ")";
  w.domain = size;
  w.class_of = [table](Nat m) {
    if (m >= table->size()) throw Error("element " + std::to_string(m) + " outside the partition table");
    return (*table)[m];
  };
  return w;
}

PartitionWitness PartitionWitness::from_classes(const std::vector<std::vector<Nat>>& classes) {
  auto owner = std::make_shared<std::map<Nat, std::vector<Nat>>>();
  Nat top = 0;
  for (Nat n = 0; n < classes.size(); ++n) {
    for (Nat m : classes[n]) {
      (*owner)[m].push_back(n);
      top = std::max(top, m + 1);
    }
  }
  PartitionWitness w;
  w.name = "explicit";
  w.domain = top;
  w.class_of = [owner](Nat m) {
    auto it = owner->find(m);
    if (it == owner->end()) throw Error("element " + std::to_string(m) + " has no class");
    if (it->second.size() > 1) throw Error("element " + std::to_string(m) + " lies in several classes");
    return it->second.front();
  };
  return w;
}

std::vector<Nat> PartitionWitness::members(Nat n, Nat bound) const {
  std::vector<Nat> out;
  for (Nat m = 0; m < bound; ++m) {
    if (class_of(m) == n) out.push_back(m);
  }
  return out;
}

std::vector<std::string> partition_issues(const PartitionWitness& w, Nat window) {
  std::vector<std::string> issues;
  if (w.domain && *w.domain < window) {
    issues.push_back("partition covers only [0," + std::to_string(*w.domain) + ") of the window");
  }
  const Nat upto = w.domain ? std::min(*w.domain, window) : window;
  for (Nat m = 0; m < upto; ++m) {
    try {
      w.class_of(m);
    } catch (const Error& e) {
      issues.emplace_back(e.what());
    }
  }
  return issues;
}

namespace {

Nat cantor_index(Point q) {
  const Nat d = q.col + q.row;
  return d * (d + 1) / 2 + q.col;
}

}  // namespace

Embedding partition_to_embedding(const PartitionWitness& w, Nat window, bool all_infinite_mode) {
  if (auto issues = partition_issues(w, window); !issues.empty()) {
    throw Error("witness classes do not partition the window: " + issues.front());
  }
  if (all_infinite_mode && !w.all_infinite) throw Error("all-infinite mode needs a partition into infinite classes");

  const Nat shift = all_infinite_mode ? 0 : 1;
  auto images = std::make_shared<std::vector<Point>>();
  auto index = std::make_shared<std::map<Point, Nat>>();
  std::map<Nat, Nat> seen;
  for (Nat m = 0; m < window; ++m) {
    const Nat c = w.class_of(m);
    const Point q{c, seen[c]++ + shift};
    images->push_back(q);
    index->emplace(q, m);
  }
  auto sorted_cantor = std::make_shared<std::vector<Nat>>();
  for (Point q : *images) sorted_cantor->push_back(cantor_index(q));
  std::sort(sorted_cantor->begin(), sorted_cantor->end());

  auto class_of = w.class_of;
  MapSpec sigma = MapSpec::index_to_point(
      "thm12-sigma",
      [images, class_of, shift](Nat m) {
        if (m < images->size()) return (*images)[m];
        const Nat c = class_of(m);
        Nat rank = 0;
        for (Nat x = 0; x < m; ++x) {
          if (class_of(x) == c) ++rank;
        }
        return Point{c, rank + shift};
      },
      [index](Point q) -> std::optional<Nat> {
        auto it = index->find(q);
        if (it == index->end()) return std::nullopt;
        return it->second;
      });
  sigma.with_params({{"partition", w.name}, {"window", window}, {"all_infinite", all_infinite_mode}})
      .with_window(window);

  MapSpec pi = all_infinite_mode
                   ? MapSpec::point_to_index("thm12-pi",
                                             [w](Point q) -> Nat {
                                               if (w.element) {
                                                 if (auto v = w.element(q.col, q.row)) return *v;
                                               }
                                               Nat k = 0;
                                               for (Nat m = 0;; ++m) {
                                                 if (w.class_of(m) == q.col && k++ == q.row) return m;
                                               }
                                             })
                   : MapSpec::point_to_index("thm12-pi", [index, sorted_cantor](Point q) -> Nat {
                       if (auto it = index->find(q); it != index->end()) return 2 * it->second;
                       const Nat c = cantor_index(q);
                       const auto before = static_cast<Nat>(
                           std::lower_bound(sorted_cantor->begin(), sorted_cantor->end(), c) - sorted_cantor->begin());
                       return 2 * (c - before) + 1;
                     });
  pi.with_params({{"partition", w.name}, {"window", window}, {"all_infinite", all_infinite_mode}}).with_window(window);

  return {sigma, pi, *images, all_infinite_mode};
}

JumpingReport check_jumping(const PartitionWitness& w, const Embedding& e, const std::vector<Point>& chain) {
  JumpingReport rep;
  std::vector<Nat> idx;
  for (Point g : chain) {
    const auto m = e.sigma.index_of(g);
    if (!m) {
      rep.ok = false;
      rep.issues.push_back(to_string(g) + " is not a sigma-image inside the window");
      return rep;
    }
    idx.push_back(*m);
  }
  std::sort(idx.begin(), idx.end());
  if (!idx.empty()) rep.h.assign(idx.begin() + 1, idx.end());
  for (std::size_t n = 0; n + 1 < rep.h.size(); ++n) {
    const Nat cur = rep.h[n];
    const Nat next = rep.h[n + 1];
    if (next <= cur) {
      rep.ok = false;
      rep.issues.push_back("h is not increasing at " + std::to_string(n));
    }
    if (w.class_of(next) <= cur) {
      rep.ok = false;
      rep.issues.push_back("h(" + std::to_string(n + 1) + ") = " + std::to_string(next) + " lies in X_" +
                           std::to_string(w.class_of(next)) + ", not above " + std::to_string(cur));
    }
  }
  return rep;
}

bool condition4_check(const PartitionWitness& w, const std::function<Nat(Nat)>& f, Nat window) {
  for (Nat n = 0; n + 1 < window; ++n) {
    const Nat cur = f(n);
    const Nat next = f(n + 1);
    if (next <= cur || w.class_of(next) <= cur) return false;
  }
  return true;
}

}  // namespace wrideal
