#include "wrideal/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace wrideal {

Point prop45_apply(Point a) {
  const Nat i = a.col;
  const Nat j = a.row / 2;
  if (a.row % 2 == 0) return {i, i + j};
  return {i + j + 1, i};
}

Point prop45_invert(Point p) {
  const Nat n = p.col;
  const Nat m = p.row;
  if (n <= m) return {n, 2 * (m - n)};
  return {m, 2 * (n - m - 1) + 1};
}

Nat pihat(Point a) {
  if (a.col == 0 && a.row == 1) return 0;
  return a.col + a.row + 1;
}

Nat pihat_raw(Point a) { return a.col + a.row + 1; }

namespace {

// Largest b with b(b+1)/2 * scale <= n, i.e. the block or diagonal holding n.
Nat triangular_root(Nat n, Nat scale) {
  auto tri = [scale](Nat b) { return scale * (b * (b + 1) / 2); };
  Nat b = static_cast<Nat>(std::sqrt(2.0 * static_cast<double>(n) / static_cast<double>(scale)));
  while (b > 0 && tri(b) > n) --b;
  while (tri(b + 1) <= n) ++b;
  return b;
}

}  // namespace

Point remark44_enumerate(Nat n) {
  const Nat b = triangular_root(n, 2);
  const Nat off = n - b * (b + 1);
  const Nat k = off / 2;
  if (off % 2 == 0) return {k, b};
  return {b + 1, b - k};
}

Nat remark44_index(Point p) {
  if (in_upper(p)) return p.row * (p.row + 1) + 2 * p.col;
  const Nat n = p.col - 1;
  const Nat k = n - p.row;
  return n * (n + 1) + 2 * k + 1;
}

BlockClass remark44_class(Nat n) {
  const Point p = remark44_enumerate(n);
  if (in_upper(p)) return {true, p.col, p.row - p.col};
  return {false, p.row, p.col - 1 - p.row};
}

Rational remark44_adversarial_value(Nat n) {
  const auto cls = remark44_class(n);
  return Rational(static_cast<std::int64_t>(cls.level)) + Rational(1, static_cast<std::int64_t>(cls.rank + 2));
}

IndexColoring pullback_coloring(const MapSpec& f, PointColoring base) {
  auto map = std::make_shared<MapSpec>(f);
  return [map, base = std::move(base)](Nat n, Nat m) {
    const Point a = map->at(n);
    const Point b = map->at(m);
    if (a == b) return Color::One;
    return base(a, b);
  };
}

MapSpec prop45_map() {
  return MapSpec::point_map("prop45", prop45_apply, [](Point q) -> std::optional<Point> { return prop45_invert(q); });
}

MapSpec prop45_inverse_map() {
  return MapSpec::point_map("prop45-inverse", prop45_invert,
                            [](Point q) -> std::optional<Point> { return prop45_apply(q); });
}

MapSpec pihat_map() {
  return MapSpec::point_to_index("pihat", pihat, [](Nat v) { return v + 2; });
}

MapSpec pihat_raw_map() {
  return MapSpec::point_to_index("pihat-raw", pihat_raw, [](Nat v) { return v + 1; });
}

MapSpec remark44_map() {
  return MapSpec::index_to_point("remark44", remark44_enumerate,
                                 [](Point q) -> std::optional<Nat> { return remark44_index(q); });
}

MapSpec cantor_map() {
  return MapSpec::index_to_point(
      "cantor",
      [](Nat n) {
        const Nat d = triangular_root(n, 1);
        const Nat k = n - d * (d + 1) / 2;
        return Point{k, d - k};
      },
      [](Point q) -> std::optional<Nat> {
        const Nat d = q.col + q.row;
        return d * (d + 1) / 2 + q.col;
      });
}

MapSpec pi_max_map() {
  return MapSpec::point_to_index(
      "pi-max", [](Point a) { return std::max(a.col, a.row); }, [](Nat v) { return v + 1; });
}

MapSpec pi_colhalf_map() {
  return MapSpec::point_to_index(
      "pi-colhalf", [](Point a) { return a.col + a.row / 2; }, [](Nat v) { return 2 * v + 2; });
}

MapSpec pi_shifted_map() {
  return MapSpec::point_to_index(
      "pi-shifted", [](Point a) { return (a.col == 0 ? Nat{1} : a.col - 1) + a.row; },
      [](Nat v) { return v + 2; });
}

MapSpec custom_table_map(std::vector<Point> table) {
  auto t = std::make_shared<const std::vector<Point>>(std::move(table));
  nlohmann::json pts = nlohmann::json::array();
  for (Point p : *t) pts.push_back({p.col, p.row});
  MapSpec m = MapSpec::index_to_point(
      "custom-table",
      [t](Nat n) {
        if (n >= t->size()) throw Error("index " + std::to_string(n) + " outside the table");
        return (*t)[n];
      },
      [t](Point q) -> std::optional<Nat> {
        auto it = std::find(t->begin(), t->end(), q);
        if (it == t->end()) return std::nullopt;
        return static_cast<Nat>(it - t->begin());
      });
  m.with_params({{"table", pts}}).with_window(t->size());
  return m;
}

bool hits_zero_in_column_zero(const MapSpec& pi) {
  const Nat rows = pi.has_level_bound() ? *pi.level_bound(0) : pi.window();
  for (Nat r = 0; r < rows; ++r) {
    if (pi.value({0, r}) == 0) return true;
  }
  return false;
}

MapSpec adjust_for_column_zero(const MapSpec& pi) {
  auto base = std::make_shared<const MapSpec>(pi);
  MapSpec::LevelBoundFn bound;
  if (pi.has_level_bound()) bound = [base](Nat v) { return *base->level_bound(v) + 1; };
  MapSpec m = MapSpec::point_to_index(
      pi.name() + "-adjusted",
      [base](Point a) -> Nat {
        if (a.col != 0) return base->value(a);
        if (a.row == 0) return 0;
        return base->value({0, a.row - 1});
      },
      std::move(bound));
  m.with_params({{"base", pi.name()}, {"base_params", pi.params()}}).with_window(pi.window());
  return m;
}

}  // namespace wrideal
