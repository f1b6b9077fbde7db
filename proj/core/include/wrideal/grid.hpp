#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrideal {

using Nat = std::uint64_t;

// Raised on invalid input to any library operation. The message is the
// short diagnostic the CLI reports (e.g. "pair required").
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point of the grid omega x omega. The defaulted ordering is the
// lexicographic order on (col, row).
struct Point {
  Nat col = 0;
  Nat row = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Nat sum(Point p) { return p.col + p.row; }

std::string to_string(Point p);

enum class Color : std::uint8_t { Zero = 0, One = 1 };

constexpr bool lex_before(Point a, Point b) { return a < b; }

// The WR pair coloring: with (i,j) the lexicographically smaller point and
// (k,l) the larger, the color is 0 iff k > i + j. Symmetric in its arguments.
Color lambda_color(Point a, Point b);

// The ED_up pair coloring: 0 iff the smaller point has strictly smaller column
// and row <= the larger point's row.
Color chi_up_color(Point a, Point b);

// Pair condition of a WR generator of the second type:
// i > k + l or k > i + j. False for equal points.
constexpr bool second_type_pair(Point a, Point b) {
  return a.col > sum(b) || b.col > sum(a);
}

// Finite set of grid points kept sorted by (col, row) without duplicates.
class PointSet {
 public:
  using const_iterator = std::vector<Point>::const_iterator;

  PointSet() = default;
  PointSet(std::initializer_list<Point> pts);
  explicit PointSet(std::vector<Point> pts);

  bool contains(Point p) const;
  bool insert(Point p);
  bool erase(Point p);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const_iterator begin() const { return elems_.begin(); }
  const_iterator end() const { return elems_.end(); }
  const Point& operator[](std::size_t i) const { return elems_[i]; }
  std::span<const Point> points() const { return elems_; }

  PointSet united(const PointSet& other) const;
  PointSet minus(const PointSet& other) const;
  bool includes(const PointSet& other) const;

  // Number of distinct columns met by the set.
  std::size_t column_count() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> elems_;
};

// True iff every unordered pair of distinct points satisfies the WR second-type
// condition (equivalently, every pair has lambda color 0). Vacuous for |A| <= 1.
bool is_second_type_wr(std::span<const Point> pts);
inline bool is_second_type_wr(const PointSet& a) { return is_second_type_wr(a.points()); }

}  // namespace wrideal
