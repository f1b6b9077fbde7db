#pragma once

#include <functional>
#include <vector>

#include "wrideal/grid.hpp"
#include "wrideal/map_spec.hpp"
#include "wrideal/rational.hpp"

namespace wrideal {

using PointColoring = std::function<Color(Point, Point)>;
using IndexColoring = std::function<Color(Nat, Nat)>;

// (i,2j) -> (i,i+j), (i,2j+1) -> (i+j+1,i). A bijection of the grid.
Point prop45_apply(Point a);
Point prop45_invert(Point p);

// i+j+1, except (0,1) -> 0. Onto and finite-to-one.
Nat pihat(Point a);
// i+j+1 everywhere. Not onto (misses 0); its second-type pair condition is
// exactly the WR one.
Nat pihat_raw(Point a);

// Block enumeration of the grid: block n starts at p = n(n+1) and lists
// (k,n) at p+2k and (n+1,n-k) at p+2k+1 for k = 0..n.
Point remark44_enumerate(Nat n);
Nat remark44_index(Point p);

// Upper part U = {(i,j): j >= i}; its complement is L.
constexpr bool in_upper(Point p) { return p.row >= p.col; }

// Class of an index: the column of its point when the point is in U, the row
// otherwise; rank counts earlier indices of the same class.
struct BlockClass {
  bool upper = true;
  Nat level = 0;
  Nat rank = 0;
};
BlockClass remark44_class(Nat n);

// level + 1/(rank+2): decreasing along each class, inside (level, level+1).
Rational remark44_adversarial_value(Nat n);

// chi({n,m}) = base(f(n), f(m)) when the images differ, 1 when they coincide.
IndexColoring pullback_coloring(const MapSpec& f, PointColoring base);

// Catalog constructors.
MapSpec prop45_map();
MapSpec prop45_inverse_map();
MapSpec pihat_map();
MapSpec pihat_raw_map();
MapSpec remark44_map();
MapSpec cantor_map();    // diagonal enumeration n -> (k, d-k)
MapSpec pi_max_map();    // max(i,j)
MapSpec pi_colhalf_map();  // i + floor(j/2)
MapSpec pi_shifted_map();  // |i-1| + j; takes value 0 only at (1,0)
// Finite index-to-point table; indices past the table are rejected.
MapSpec custom_table_map(std::vector<Point> table);

// pi'(0,0) = 0, pi'(0,n+1) = pi(0,n), pi' = pi off column 0. Ensures some
// point of column 0 takes the value 0 without changing the WR^pi ideal.
MapSpec adjust_for_column_zero(const MapSpec& pi);
bool hits_zero_in_column_zero(const MapSpec& pi);

}  // namespace wrideal
