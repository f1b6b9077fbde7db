#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wrideal/grid.hpp"
#include "wrideal/map_spec.hpp"

namespace wrideal {

// Symbolic subset of omega x omega: a finite union of full columns, column
// tails {c} x [from, inf) and a finite point set. Always kept canonical, so two
// descriptors compare equal iff they denote the same set.
class SetDescriptor {
 public:
  SetDescriptor() = default;

  static SetDescriptor column(Nat c);
  static SetDescriptor columns(Nat first, Nat last);  // inclusive range
  static SetDescriptor tail(Nat c, Nat from);
  static SetDescriptor points(PointSet pts);

  SetDescriptor& add_column(Nat c);
  SetDescriptor& add_tail(Nat c, Nat from);
  SetDescriptor& add_point(Point p);
  SetDescriptor& add_points(const PointSet& pts);

  SetDescriptor united(const SetDescriptor& other) const;
  SetDescriptor intersected(const SetDescriptor& other) const;

  bool contains(Point p) const;
  bool empty() const { return columns_.empty() && tails_.empty() && points_.empty(); }
  bool is_finite() const { return columns_.empty() && tails_.empty(); }
  // Least column c such that the set meets {c} x omega in an infinite set.
  std::optional<Nat> first_infinite_column() const;

  const std::vector<Nat>& column_atoms() const { return columns_; }
  const std::map<Nat, Nat>& tail_atoms() const { return tails_; }
  const PointSet& point_atoms() const { return points_; }

  friend bool operator==(const SetDescriptor&, const SetDescriptor&) = default;

 private:
  void canonicalize();

  std::vector<Nat> columns_;
  std::map<Nat, Nat> tails_;  // column -> first row, always >= 1
  PointSet points_;
};

std::string to_string(const SetDescriptor& d);

enum class Family { Fin, WR, WRpi, ED, EDup, FinOtimesFin, EmptyOtimesFin, DirectSum, Restrict };

std::string to_string(Family f);

// A named ideal on omega x omega. Direct sums live on omega x omega through
// the column-parity identification: (2c, r) is (c, r) of the left summand,
// (2c+1, r) is (c, r) of the right one.
class IdealPresentation {
 public:
  static IdealPresentation fin();
  static IdealPresentation wr();
  static IdealPresentation wr_pi(MapSpec pi);
  static IdealPresentation ed();
  static IdealPresentation ed_up();
  static IdealPresentation fin_otimes_fin();
  static IdealPresentation empty_otimes_fin();

  Family family() const { return family_; }
  std::string name() const;

  // WRpi only.
  const MapSpec& pi() const;
  // DirectSum only.
  const IdealPresentation& left() const;
  const IdealPresentation& right() const;
  // Restrict only.
  const IdealPresentation& base() const;
  const SetDescriptor& carrier() const;

  friend IdealPresentation direct_sum(IdealPresentation left, IdealPresentation right);
  friend IdealPresentation restrict(IdealPresentation base, SetDescriptor carrier);

 private:
  explicit IdealPresentation(Family f) : family_(f) {}

  Family family_;
  std::shared_ptr<const MapSpec> pi_;
  std::shared_ptr<const IdealPresentation> left_;
  std::shared_ptr<const IdealPresentation> right_;
  std::shared_ptr<const SetDescriptor> carrier_;
};

IdealPresentation direct_sum(IdealPresentation left, IdealPresentation right);
IdealPresentation restrict(IdealPresentation base, SetDescriptor carrier);

// Column-parity embeddings of a descriptor into the left or right summand of
// a direct sum, and the split back into the two summands.
SetDescriptor embed_left(const SetDescriptor& d);
SetDescriptor embed_right(const SetDescriptor& d);
std::pair<SetDescriptor, SetDescriptor> split_summands(const SetDescriptor& d);

bool descriptor_in_ideal(const IdealPresentation& ideal, const SetDescriptor& d);

struct PickStrategy {
  enum class Kind { LeastLex, LeastColBeyond } kind = Kind::LeastLex;
  Nat beyond = 0;

  static PickStrategy least_lex() { return {}; }
  static PickStrategy least_col_beyond(Nat c) { return {Kind::LeastColBeyond, c}; }
};

// Deterministic point outside the denoted set.
Point pick_outside(const SetDescriptor& d, PickStrategy strategy = PickStrategy::least_lex());

// Pair condition of a WR^pi generator of the second type, lo the
// lexicographically smaller point: pi(lo) < pi(hi) and col(hi) >= pi(lo).
// Two points of one column qualify when pi(lo) <= col.
bool wrpi_pair(Point a, Point b, const std::function<Nat(Point)>& pi);

// The second-type predicate of WR^pi: every pair satisfies wrpi_pair.
bool is_second_type_wrpi(std::span<const Point> pts, const std::function<Nat(Point)>& pi);
bool is_second_type_wrpi(std::span<const Point> pts, const MapSpec& pi);

// Random chain g_0, g_1, ... of candidates, each step drawn uniformly among
// the candidates that extend the chain as a WR^pi second-type set.
std::vector<Point> sample_wrpi_chain(std::span<const Point> candidates, const std::function<Nat(Point)>& pi,
                                     std::mt19937_64& rng, std::size_t max_len);

// Membership rule for an infinite set that has no descriptor form. The greedy
// search scans columns and rows below search_bound.
struct InfiniteSetRule {
  std::function<bool(Point)> contains;
  Nat search_bound = 256;
};

// n points of an infinite set lying inside a single generator of a WR or WR^pi
// ideal. Descriptors always meet some column infinitely, so the result is the
// first n points of the least such column.
PointSet dense_subset(const IdealPresentation& ideal, const SetDescriptor& d, std::size_t n);

// Greedy chain x_0, x_1, ... inside the rule's set with x_k lexicographically
// before x, col(x) >= pi(x_k) and pi(x_k) < pi(x), taking the
// lexicographically least admissible point each time. WR uses i + j + 1 for pi.
PointSet dense_subset(const IdealPresentation& ideal, const InfiniteSetRule& rule, std::size_t n);

}  // namespace wrideal
