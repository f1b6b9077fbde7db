#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wrideal/grid.hpp"
#include "wrideal/map_spec.hpp"

namespace wrideal {

// A partition (X_n) of the naturals, given by the class of each element.
struct PartitionWitness {
  std::string name;
  std::function<Nat(Nat)> class_of;
  bool all_infinite = false;
  // Natural numbers the witness is defined on; unbounded when empty.
  std::optional<Nat> domain;
  // Optional closed-form k-th element of X_n.
  std::function<std::optional<Nat>(Nat, Nat)> element;

  // X_n = {2^n (2k+1) - 1 : k in omega}.
  static PartitionWitness dyadic();
  // class(m) drawn uniformly from [0, 2m+1] for m < size.
  static PartitionWitness random(std::uint64_t seed, Nat size);
  // Explicit finite classes; classes[n] lists X_n.
  static PartitionWitness from_classes(const std::vector<std::vector<Nat>>& classes);

  // Increasing enumeration of X_n below the bound.
  std::vector<Nat> members(Nat n, Nat bound) const;
};

// Problems with the witness on [0, window): elements without a class, or in
// several classes.
std::vector<std::string> partition_issues(const PartitionWitness& w, Nat window);

struct Embedding {
  // sigma(m) = (class(m), rank(m) + 1), rank counting earlier members of the
  // class; in the all-infinite mode sigma(m) = (class(m), rank(m)).
  MapSpec sigma;
  // pi(sigma(m)) = 2m for m < window; the other points receive the odd
  // numbers in diagonal order. In the all-infinite mode pi is sigma^{-1}.
  MapSpec pi;
  std::vector<Point> images;  // sigma(m), m < window
  bool all_infinite_mode = false;
};

// Throws when the witness does not partition [0, window).
Embedding partition_to_embedding(const PartitionWitness& w, Nat window, bool all_infinite_mode = false);

struct JumpingReport {
  bool ok = true;
  std::vector<Nat> h;  // sigma-preimages of the chain without its least one
  std::vector<std::string> issues;
};

// Pulls a chain of sigma-images back to indices and checks that consecutive
// indices satisfy h(n+1) in the union of X_i, i > h(n).
JumpingReport check_jumping(const PartitionWitness& w, const Embedding& e, const std::vector<Point>& chain);

// f strictly increasing on [0, window) and each f(n+1) in a class above f(n).
bool condition4_check(const PartitionWitness& w, const std::function<Nat(Nat)>& f, Nat window);

}  // namespace wrideal
