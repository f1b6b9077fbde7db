#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wrideal/grid.hpp"

namespace wrideal {

enum class MapKind { PointMap, IndexToPoint, PointToIndex };

std::string to_string(MapKind kind);

// An explicit map on the grid or between the grid and the naturals, named by
// its catalog entry and parameters so it can be serialized and rebuilt.
//
// The window bounds finite evaluation: point maps and point-to-index maps are
// enumerated over [0,window) x [0,window), index maps over [0,window).
class MapSpec {
 public:
  using PointMapFn = std::function<Point(Point)>;
  using IndexToPointFn = std::function<Point(Nat)>;
  using PointToIndexFn = std::function<Nat(Point)>;
  using PointInverseFn = std::function<std::optional<Point>(Point)>;
  using IndexInverseFn = std::function<std::optional<Nat>(Point)>;
  // For a finite-to-one map: every a with value(a) <= v has col and row below
  // level_bound(v).
  using LevelBoundFn = std::function<Nat(Nat)>;

  static constexpr Nat kDefaultWindow = 64;

  static MapSpec point_map(std::string name, PointMapFn fn, PointInverseFn inverse = {});
  static MapSpec index_to_point(std::string name, IndexToPointFn fn, IndexInverseFn inverse = {});
  static MapSpec point_to_index(std::string name, PointToIndexFn fn, LevelBoundFn level_bound = {});

  MapKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const nlohmann::json& params() const { return params_; }
  Nat window() const { return window_; }

  MapSpec& with_params(nlohmann::json params);
  MapSpec& with_window(Nat window);

  Point apply(Point a) const;
  Point at(Nat n) const;
  Nat value(Point a) const;

  // Inverse of a point map; closed form when the catalog supplies one,
  // otherwise a search over the window.
  std::optional<Point> inverse(Point q) const;
  // Index of a point under an index-to-point map.
  std::optional<Nat> index_of(Point q) const;
  std::optional<Nat> level_bound(Nat v) const;
  bool has_level_bound() const { return static_cast<bool>(level_bound_); }

  std::vector<Point> point_preimages(Point q) const;
  std::vector<Nat> index_preimages(Point q) const;
  std::vector<Point> value_preimages(Nat v) const;

 private:
  MapSpec(MapKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  void require(MapKind kind) const;

  MapKind kind_;
  std::string name_;
  nlohmann::json params_ = nlohmann::json::object();
  Nat window_ = kDefaultWindow;

  PointMapFn point_fn_;
  IndexToPointFn index_fn_;
  PointToIndexFn value_fn_;
  PointInverseFn point_inverse_;
  IndexInverseFn index_inverse_;
  LevelBoundFn level_bound_;
};

struct MapValidation {
  bool ok = true;
  std::vector<std::string> issues;
};

// Bounded check that a point-to-index map is onto and finite-to-one. Every
// value below `values` must be hit inside [0,window)^2 and none of its
// preimages may touch the window boundary. Maps carrying a level bound also
// have the bound checked against the window.
MapValidation validate_onto_finite_to_one(const MapSpec& pi, Nat window = MapSpec::kDefaultWindow,
                                          Nat values = MapSpec::kDefaultWindow / 4);

// Bounded check that a point map or index map is injective on its window and
// that its closed-form inverse (if any) round-trips.
MapValidation validate_bijection(const MapSpec& map, Nat window);

}  // namespace wrideal
