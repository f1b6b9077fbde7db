#include "wrideal/grid.hpp"

#include <algorithm>
#include <iterator>

namespace wrideal {

std::string to_string(Point p) {
  return "(" + std::to_string(p.col) + "," + std::to_string(p.row) + ")";
}

namespace {

void require_pair(Point a, Point b) {
  if (a == b) throw Error("pair required");
}

}  // namespace

Color lambda_color(Point a, Point b) {
  require_pair(a, b);
  const auto [lo, hi] = std::minmax(a, b);
  return hi.col > sum(lo) ? Color::Zero : Color::One;
}

Color chi_up_color(Point a, Point b) {
  require_pair(a, b);
  const auto [lo, hi] = std::minmax(a, b);
  return (lo.col < hi.col && lo.row <= hi.row) ? Color::Zero : Color::One;
}

PointSet::PointSet(std::initializer_list<Point> pts) : PointSet(std::vector<Point>(pts)) {}

PointSet::PointSet(std::vector<Point> pts) : elems_(std::move(pts)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool PointSet::contains(Point p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PointSet::insert(Point p) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it != elems_.end() && *it == p) return false;
  elems_.insert(it, p);
  return true;
}

bool PointSet::erase(Point p) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || *it != p) return false;
  elems_.erase(it);
  return true;
}

PointSet PointSet::united(const PointSet& other) const {
  PointSet out;
  out.elems_.reserve(size() + other.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out.elems_));
  return out;
}

PointSet PointSet::minus(const PointSet& other) const {
  PointSet out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(out.elems_));
  return out;
}

bool PointSet::includes(const PointSet& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

std::size_t PointSet::column_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i == 0 || elems_[i].col != elems_[i - 1].col) ++n;
  }
  return n;
}

bool is_second_type_wr(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!second_type_pair(pts[i], pts[j])) return false;
    }
  }
  return true;
}

}  // namespace wrideal
