#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wrideal/covernum.hpp"
#include "wrideal/embedding.hpp"
#include "wrideal/game.hpp"
#include "wrideal/grid.hpp"
#include "wrideal/map_spec.hpp"
#include "wrideal/mon.hpp"
#include "wrideal/presentations.hpp"
#include "wrideal/rational.hpp"

namespace wrideal {

using nlohmann::json;

// Points are [col, row]; descriptors {"columns":[..],"tails":[[c,from]..],"points":[[c,r]..]}.
// Readers throw Error with the offending field named.
json to_json(Point p);
Point point_from_json(const json& j);
json to_json(const PointSet& s);
json to_json(std::span<const Point> pts);
std::vector<Point> points_from_json(const json& j);

json to_json(const SetDescriptor& d);
SetDescriptor descriptor_from_json(const json& j);

// Rationals are written as strings ("3", "-1/2"); integers are also accepted.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);
json to_json(const ExtendedRational& x);
ExtendedRational extended_from_json(const json& j);

json to_json(const CoverCertificate& c);
json to_json(const SparsityWitness& w);

// "WR", "ED", "EDup", "Fin", "FinxFin", "EmptyxFin", or an object
// {"family":"WRpi","pi":<map>}, {"family":"DirectSum","left":..,"right":..},
// {"family":"Restrict","base":..,"carrier":<descriptor>}.
IdealPresentation presentation_from_json(const json& j);
json to_json(const IdealPresentation& p);

// A map reference is a catalog name or {"name":..,"params":{..}}. The window
// applies to maps that are only built on a finite window.
MapSpec catalog_map(const json& ref, Nat window = MapSpec::kDefaultWindow);
std::vector<std::string> catalog_names();
json map_ref(const MapSpec& m);

// "dyadic", {"random":seed,"size":n} or {"classes":[[..],..]}.
PartitionWitness partition_from_json(const json& j);

json to_json(const ColumnFamilyDescriptor& d);
ColumnFamilyDescriptor column_family_from_json(const json& j);
json to_json(const MonCertificate& c);
MonCertificate mon_certificate_from_json(const json& j);

json to_json(const GameState& g);

}  // namespace wrideal
