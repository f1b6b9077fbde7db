#include "wrideal/presentations.hpp"

#include <algorithm>
#include <set>

namespace wrideal {

// ---------------------------------------------------------------------------
// SetDescriptor

SetDescriptor SetDescriptor::column(Nat c) {
  SetDescriptor d;
  d.add_column(c);
  return d;
}

SetDescriptor SetDescriptor::columns(Nat first, Nat last) {
  SetDescriptor d;
  for (Nat c = first; c <= last; ++c) d.columns_.push_back(c);
  d.canonicalize();
  return d;
}

SetDescriptor SetDescriptor::tail(Nat c, Nat from) {
  SetDescriptor d;
  d.add_tail(c, from);
  return d;
}

SetDescriptor SetDescriptor::points(PointSet pts) {
  SetDescriptor d;
  d.points_ = std::move(pts);
  d.canonicalize();
  return d;
}

SetDescriptor& SetDescriptor::add_column(Nat c) {
  columns_.push_back(c);
  canonicalize();
  return *this;
}

SetDescriptor& SetDescriptor::add_tail(Nat c, Nat from) {
  auto it = tails_.find(c);
  if (it == tails_.end()) {
    tails_.emplace(c, from);
  } else {
    it->second = std::min(it->second, from);
  }
  canonicalize();
  return *this;
}

SetDescriptor& SetDescriptor::add_point(Point p) {
  points_.insert(p);
  canonicalize();
  return *this;
}

SetDescriptor& SetDescriptor::add_points(const PointSet& pts) {
  points_ = points_.united(pts);
  canonicalize();
  return *this;
}

void SetDescriptor::canonicalize() {
  std::sort(columns_.begin(), columns_.end());
  columns_.erase(std::unique(columns_.begin(), columns_.end()), columns_.end());
  auto is_column = [&](Nat c) { return std::binary_search(columns_.begin(), columns_.end(), c); };

  // Absorb rows directly below each tail; a tail reaching row 0 is a column.
  std::vector<Nat> promoted;
  for (auto it = tails_.begin(); it != tails_.end();) {
    if (is_column(it->first)) {
      it = tails_.erase(it);
      continue;
    }
    while (it->second > 0 && points_.erase({it->first, it->second - 1})) --it->second;
    if (it->second == 0) {
      promoted.push_back(it->first);
      it = tails_.erase(it);
    } else {
      ++it;
    }
  }
  if (!promoted.empty()) {
    columns_.insert(columns_.end(), promoted.begin(), promoted.end());
    std::sort(columns_.begin(), columns_.end());
  }

  std::vector<Point> kept;
  for (Point p : points_) {
    if (is_column(p.col)) continue;
    auto t = tails_.find(p.col);
    if (t != tails_.end() && p.row >= t->second) continue;
    kept.push_back(p);
  }
  points_ = PointSet(std::move(kept));
}

bool SetDescriptor::contains(Point p) const {
  if (std::binary_search(columns_.begin(), columns_.end(), p.col)) return true;
  auto t = tails_.find(p.col);
  if (t != tails_.end() && p.row >= t->second) return true;
  return points_.contains(p);
}

std::optional<Nat> SetDescriptor::first_infinite_column() const {
  std::optional<Nat> best;
  if (!columns_.empty()) best = columns_.front();
  if (!tails_.empty() && (!best || tails_.begin()->first < *best)) best = tails_.begin()->first;
  return best;
}

SetDescriptor SetDescriptor::united(const SetDescriptor& other) const {
  SetDescriptor out = *this;
  out.columns_.insert(out.columns_.end(), other.columns_.begin(), other.columns_.end());
  for (auto [c, from] : other.tails_) {
    auto it = out.tails_.find(c);
    if (it == out.tails_.end()) {
      out.tails_.emplace(c, from);
    } else {
      it->second = std::min(it->second, from);
    }
  }
  out.points_ = out.points_.united(other.points_);
  out.canonicalize();
  return out;
}

SetDescriptor SetDescriptor::intersected(const SetDescriptor& other) const {
  // Per column: infinite part is a tail from the larger start when both sides
  // are infinite there; below that every row is tested explicitly.
  auto infinite_from = [](const SetDescriptor& d, Nat c) -> std::optional<Nat> {
    if (std::binary_search(d.columns_.begin(), d.columns_.end(), c)) return Nat{0};
    auto t = d.tails_.find(c);
    if (t != d.tails_.end()) return t->second;
    return std::nullopt;
  };
  std::set<Nat> cols;
  for (const SetDescriptor* d : {this, &other}) {
    cols.insert(d->columns_.begin(), d->columns_.end());
    for (auto [c, from] : d->tails_) cols.insert(c);
    for (Point p : d->points_) cols.insert(p.col);
  }
  SetDescriptor out;
  std::vector<Point> pts;
  for (Nat c : cols) {
    const auto a = infinite_from(*this, c);
    const auto b = infinite_from(other, c);
    Nat bound = 0;
    if (a) bound = std::max(bound, *a);
    if (b) bound = std::max(bound, *b);
    for (const SetDescriptor* d : {this, &other}) {
      for (Point p : d->points_) {
        if (p.col == c) bound = std::max(bound, p.row + 1);
      }
    }
    if (a && b) out.tails_[c] = bound;
    for (Nat r = 0; r < bound; ++r) {
      if (contains({c, r}) && other.contains({c, r})) pts.push_back({c, r});
    }
  }
  out.points_ = PointSet(std::move(pts));
  for (auto it = out.tails_.begin(); it != out.tails_.end();) {
    if (it->second == 0) {
      out.columns_.push_back(it->first);
      it = out.tails_.erase(it);
    } else {
      ++it;
    }
  }
  out.canonicalize();
  return out;
}

std::string to_string(const SetDescriptor& d) {
  std::string s;
  auto sep = [&] {
    if (!s.empty()) s += " u ";
  };
  for (Nat c : d.column_atoms()) {
    sep();
    s += "Column(" + std::to_string(c) + ")";
  }
  for (auto [c, from] : d.tail_atoms()) {
    sep();
    s += "ColumnTail(" + std::to_string(c) + "," + std::to_string(from) + ")";
  }
  if (!d.point_atoms().empty()) {
    sep();
    s += "{";
    bool first = true;
    for (Point p : d.point_atoms()) {
      if (!first) s += ",";
      s += to_string(p);
      first = false;
    }
    s += "}";
  }
  return s.empty() ? "{}" : s;
}

// ---------------------------------------------------------------------------
// IdealPresentation

std::string to_string(Family f) {
  switch (f) {
    case Family::Fin: return "Fin";
    case Family::WR: return "WR";
    case Family::WRpi: return "WRpi";
    case Family::ED: return "ED";
    case Family::EDup: return "EDup";
    case Family::FinOtimesFin: return "FinxFin";
    case Family::EmptyOtimesFin: return "EmptyxFin";
    case Family::DirectSum: return "DirectSum";
    case Family::Restrict: return "Restrict";
  }
  return "unknown";
}

IdealPresentation IdealPresentation::fin() { return IdealPresentation(Family::Fin); }
IdealPresentation IdealPresentation::wr() { return IdealPresentation(Family::WR); }
IdealPresentation IdealPresentation::ed() { return IdealPresentation(Family::ED); }
IdealPresentation IdealPresentation::ed_up() { return IdealPresentation(Family::EDup); }
IdealPresentation IdealPresentation::fin_otimes_fin() { return IdealPresentation(Family::FinOtimesFin); }
IdealPresentation IdealPresentation::empty_otimes_fin() { return IdealPresentation(Family::EmptyOtimesFin); }

IdealPresentation IdealPresentation::wr_pi(MapSpec pi) {
  if (pi.kind() != MapKind::PointToIndex) throw Error("WRpi needs a point-to-index map");
  IdealPresentation p(Family::WRpi);
  p.pi_ = std::make_shared<const MapSpec>(std::move(pi));
  return p;
}

IdealPresentation direct_sum(IdealPresentation left, IdealPresentation right) {
  IdealPresentation p(Family::DirectSum);
  p.left_ = std::make_shared<const IdealPresentation>(std::move(left));
  p.right_ = std::make_shared<const IdealPresentation>(std::move(right));
  return p;
}

IdealPresentation restrict(IdealPresentation base, SetDescriptor carrier) {
  IdealPresentation p(Family::Restrict);
  p.left_ = std::make_shared<const IdealPresentation>(std::move(base));
  p.carrier_ = std::make_shared<const SetDescriptor>(std::move(carrier));
  return p;
}

std::string IdealPresentation::name() const {
  switch (family_) {
    case Family::WRpi: return "WRpi(" + pi_->name() + ")";
    case Family::DirectSum: return "(" + left_->name() + " + " + right_->name() + ")";
    case Family::Restrict: return left_->name() + "|" + to_string(*carrier_);
    default: return to_string(family_);
  }
}

const MapSpec& IdealPresentation::pi() const {
  if (family_ != Family::WRpi) throw Error("presentation " + name() + " has no pi");
  return *pi_;
}

const IdealPresentation& IdealPresentation::left() const {
  if (family_ != Family::DirectSum) throw Error("presentation " + name() + " is not a direct sum");
  return *left_;
}

const IdealPresentation& IdealPresentation::right() const {
  if (family_ != Family::DirectSum) throw Error("presentation " + name() + " is not a direct sum");
  return *right_;
}

const IdealPresentation& IdealPresentation::base() const {
  if (family_ != Family::Restrict) throw Error("presentation " + name() + " is not a restriction");
  return *left_;
}

const SetDescriptor& IdealPresentation::carrier() const {
  if (family_ != Family::Restrict) throw Error("presentation " + name() + " is not a restriction");
  return *carrier_;
}

namespace {

SetDescriptor map_columns(const SetDescriptor& d, Nat mul, Nat add) {
  SetDescriptor out;
  for (Nat c : d.column_atoms()) out.add_column(c * mul + add);
  for (auto [c, from] : d.tail_atoms()) out.add_tail(c * mul + add, from);
  std::vector<Point> pts;
  for (Point p : d.point_atoms()) pts.push_back({p.col * mul + add, p.row});
  out.add_points(PointSet(std::move(pts)));
  return out;
}

}  // namespace

SetDescriptor embed_left(const SetDescriptor& d) { return map_columns(d, 2, 0); }
SetDescriptor embed_right(const SetDescriptor& d) { return map_columns(d, 2, 1); }

std::pair<SetDescriptor, SetDescriptor> split_summands(const SetDescriptor& d) {
  SetDescriptor left;
  SetDescriptor right;
  for (Nat c : d.column_atoms()) (c % 2 == 0 ? left : right).add_column(c / 2);
  for (auto [c, from] : d.tail_atoms()) (c % 2 == 0 ? left : right).add_tail(c / 2, from);
  for (Point p : d.point_atoms()) (p.col % 2 == 0 ? left : right).add_point({p.col / 2, p.row});
  return {left, right};
}

bool descriptor_in_ideal(const IdealPresentation& ideal, const SetDescriptor& d) {
  switch (ideal.family()) {
    case Family::Fin:
    case Family::EmptyOtimesFin:
      return d.is_finite();
    case Family::WR:
    case Family::WRpi:
    case Family::ED:
    case Family::EDup:
    case Family::FinOtimesFin:
      // Finitely many columns plus a finite set: always covered by
      // generators of the first type and Fin.
      return true;
    case Family::DirectSum: {
      auto [l, r] = split_summands(d);
      return descriptor_in_ideal(ideal.left(), l) && descriptor_in_ideal(ideal.right(), r);
    }
    case Family::Restrict:
      return descriptor_in_ideal(ideal.base(), d.intersected(ideal.carrier()));
  }
  return false;
}

Point pick_outside(const SetDescriptor& d, PickStrategy strategy) {
  Nat c = strategy.kind == PickStrategy::Kind::LeastColBeyond ? strategy.beyond + 1 : 0;
  const auto& cols = d.column_atoms();
  for (;; ++c) {
    if (std::binary_search(cols.begin(), cols.end(), c)) continue;
    auto t = d.tail_atoms().find(c);
    const Nat limit = t == d.tail_atoms().end() ? ~Nat{0} : t->second;
    for (Nat r = 0; r < limit; ++r) {
      if (!d.point_atoms().contains({c, r})) return {c, r};
    }
  }
}

bool wrpi_pair(Point a, Point b, const std::function<Nat(Point)>& pi) {
  if (a == b) return false;
  const Point lo = lex_before(a, b) ? a : b;
  const Point hi = lex_before(a, b) ? b : a;
  const Nat pl = pi(lo);
  return pl < pi(hi) && hi.col >= pl;
}

bool is_second_type_wrpi(std::span<const Point> pts, const std::function<Nat(Point)>& pi) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!wrpi_pair(pts[i], pts[j], pi)) return false;
    }
  }
  return true;
}

bool is_second_type_wrpi(std::span<const Point> pts, const MapSpec& pi) {
  return is_second_type_wrpi(pts, [&pi](Point p) { return pi.value(p); });
}

std::vector<Point> sample_wrpi_chain(std::span<const Point> candidates, const std::function<Nat(Point)>& pi,
                                     std::mt19937_64& rng, std::size_t max_len) {
  std::vector<Point> chain;
  std::vector<Point> pool(candidates.begin(), candidates.end());
  while (chain.size() < max_len && !pool.empty()) {
    const Point next = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    chain.push_back(next);
    const Nat v = pi(next);
    std::vector<Point> kept;
    for (Point q : pool) {
      if (lex_before(next, q) && q.col >= v && pi(q) > v) kept.push_back(q);
    }
    pool = std::move(kept);
  }
  return chain;
}

namespace {

std::function<Nat(Point)> chain_index(const IdealPresentation& ideal) {
  switch (ideal.family()) {
    case Family::WR:
      return [](Point p) { return p.col + p.row + 1; };
    case Family::WRpi: {
      auto pi = std::make_shared<MapSpec>(ideal.pi());
      return [pi](Point p) { return pi->value(p); };
    }
    default:
      throw Error("dense subsets are only constructed for WR and WRpi, not " + ideal.name());
  }
}

}  // namespace

PointSet dense_subset(const IdealPresentation& ideal, const SetDescriptor& d, std::size_t n) {
  chain_index(ideal);  // family check
  const auto col = d.first_infinite_column();
  if (!col) throw Error("input set is finite");
  const auto t = d.tail_atoms().find(*col);
  const Nat from = t == d.tail_atoms().end() ? 0 : t->second;
  std::vector<Point> out;
  for (Nat r = 0; out.size() < n; ++r) {
    if (r >= from || d.contains({*col, r})) out.push_back({*col, r});
  }
  return PointSet(std::move(out));
}

PointSet dense_subset(const IdealPresentation& ideal, const InfiniteSetRule& rule, std::size_t n) {
  const auto pi = chain_index(ideal);
  std::vector<Point> chain;
  auto admissible = [&](Point x) {
    if (!rule.contains(x)) return false;
    if (chain.empty()) return true;
    const Point last = chain.back();
    const Nat pl = pi(last);
    return lex_before(last, x) && x.col >= pl && pl < pi(x);
  };
  while (chain.size() < n) {
    std::optional<Point> next;
    const Nat start = chain.empty() ? 0 : chain.back().col;
    for (Nat c = start; c < rule.search_bound && !next; ++c) {
      for (Nat r = 0; r < rule.search_bound; ++r) {
        if (admissible({c, r})) {
          next = Point{c, r};
          break;
        }
      }
    }
    if (!next) {
      if (chain.empty()) throw Error("input set is finite within the search bound");
      throw Error("search bound exhausted after " + std::to_string(chain.size()) + " points");
    }
    chain.push_back(*next);
  }
  return PointSet(std::move(chain));
}

}  // namespace wrideal
