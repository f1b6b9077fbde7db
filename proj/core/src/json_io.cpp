#include "wrideal/json_io.hpp"

#include "wrideal/staged_sigma.hpp"
#include "wrideal/reductions.hpp"

namespace wrideal {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw Error(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
  return *it;
}

Nat nat_from_json(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return j.get<Nat>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<Nat>(j.get<std::int64_t>());
  throw Error(what + ": expected a natural number, got " + j.dump());
}

Nat nat_field(const json& j, const char* key, Nat fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return nat_from_json(j.at(key), key);
}

std::vector<Nat> nats_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + ": expected an array");
  std::vector<Nat> out;
  for (const auto& x : j) out.push_back(nat_from_json(x, what));
  return out;
}

}  // namespace

json to_json(Point p) { return json::array({p.col, p.row}); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("point must be [col,row], got " + j.dump());
  return {nat_from_json(j[0], "point column"), nat_from_json(j[1], "point row")};
}

json to_json(std::span<const Point> pts) {
  json out = json::array();
  for (Point p : pts) out.push_back(to_json(p));
  return out;
}

json to_json(const PointSet& s) { return to_json(s.points()); }

std::vector<Point> points_from_json(const json& j) {
  if (!j.is_array()) throw Error("points must be an array of [col,row]");
  std::vector<Point> out;
  for (const auto& x : j) out.push_back(point_from_json(x));
  return out;
}

json to_json(const SetDescriptor& d) {
  json tails = json::array();
  for (const auto& [c, from] : d.tail_atoms()) tails.push_back(json::array({c, from}));
  return {{"columns", d.column_atoms()}, {"tails", tails}, {"points", to_json(d.point_atoms())}};
}

SetDescriptor descriptor_from_json(const json& j) {
  if (!j.is_object()) throw Error("descriptor must be an object");
  SetDescriptor d;
  if (j.contains("columns")) {
    for (Nat c : nats_from_json(j.at("columns"), "columns")) d.add_column(c);
  }
  if (j.contains("tails")) {
    for (const auto& t : j.at("tails")) {
      if (!t.is_array() || t.size() != 2) throw Error("tail must be [col,from], got " + t.dump());
      d.add_tail(nat_from_json(t[0], "tail column"), nat_from_json(t[1], "tail start"));
    }
  }
  if (j.contains("points")) d.add_points(PointSet(points_from_json(j.at("points"))));
  return d;
}

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected a rational, got " + j.dump());
}

json to_json(const ExtendedRational& x) { return to_string(x); }

ExtendedRational extended_from_json(const json& j) {
  if (j.is_number_integer()) return ExtendedRational::finite(Rational(j.get<std::int64_t>()));
  if (j.is_string()) return parse_extended(j.get<std::string>());
  throw Error("expected a rational or \"inf\", got " + j.dump());
}

json to_json(const CoverCertificate& c) {
  json parts = json::array();
  for (const auto& p : c.parts) parts.push_back({{"kind", to_string(p.kind)}, {"points", to_json(p.members)}});
  return {{"cost", c.cost()}, {"parts", parts}};
}

json to_json(const SparsityWitness& w) { return {{"level", w.level}, {"points", to_json(w.points)}}; }

IdealPresentation presentation_from_json(const json& j) {
  std::string family;
  if (j.is_string()) {
    family = j.get<std::string>();
  } else if (j.is_object()) {
    const json& f = field(j, "family");
    if (!f.is_string()) throw Error("field 'family' must be a string");
    family = f.get<std::string>();
  } else {
    throw Error("ideal must be a family name or an object");
  }
  if (family == "WR") return IdealPresentation::wr();
  if (family == "ED") return IdealPresentation::ed();
  if (family == "EDup") return IdealPresentation::ed_up();
  if (family == "Fin") return IdealPresentation::fin();
  if (family == "FinxFin") return IdealPresentation::fin_otimes_fin();
  if (family == "EmptyxFin") return IdealPresentation::empty_otimes_fin();
  if (family == "WRpi") {
    if (!j.is_object()) throw Error("WRpi needs {\"family\":\"WRpi\",\"pi\":...}");
    return IdealPresentation::wr_pi(catalog_map(field(j, "pi"), nat_field(j, "window", MapSpec::kDefaultWindow)));
  }
  if (family == "DirectSum") {
    return direct_sum(presentation_from_json(field(j, "left")), presentation_from_json(field(j, "right")));
  }
  if (family == "Restrict") {
    return restrict(presentation_from_json(field(j, "base")), descriptor_from_json(field(j, "carrier")));
  }
  throw Error("unknown ideal family '" + family + "'");
}

json to_json(const IdealPresentation& p) {
  switch (p.family()) {
    case Family::WRpi: return {{"family", "WRpi"}, {"pi", map_ref(p.pi())}};
    case Family::DirectSum: return {{"family", "DirectSum"}, {"left", to_json(p.left())}, {"right", to_json(p.right())}};
    case Family::Restrict:
      return {{"family", "Restrict"}, {"base", to_json(p.base())}, {"carrier", to_json(p.carrier())}};
    default: return to_string(p.family());
  }
}

std::vector<std::string> catalog_names() {
  return {"prop45",   "prop45-inverse", "pihat",        "pihat-raw",     "remark44",
          "cantor",   "pi-max",         "pi-colhalf",   "pi-shifted",    "custom-table",
          "lemma54-sigma", "thm12-sigma", "thm12-pi"};
}

MapSpec catalog_map(const json& ref, Nat window) {
  std::string name;
  json params = json::object();
  if (ref.is_string()) {
    name = ref.get<std::string>();
  } else if (ref.is_object()) {
    const json& n = field(ref, "name");
    if (!n.is_string()) throw Error("map name must be a string");
    name = n.get<std::string>();
    if (ref.contains("params")) params = ref.at("params");
    if (!params.is_object()) throw Error("map params must be an object");
  } else {
    throw Error("map reference must be a name or {\"name\",\"params\"}");
  }
  window = nat_field(params, "window", window);

  MapSpec m = [&]() -> MapSpec {
    if (name == "prop45") return prop45_map();
    if (name == "prop45-inverse") return prop45_inverse_map();
    if (name == "pihat") return pihat_map();
    if (name == "pihat-raw") return pihat_raw_map();
    if (name == "remark44") return remark44_map();
    if (name == "cantor") return cantor_map();
    if (name == "pi-max") return pi_max_map();
    if (name == "pi-colhalf") return pi_colhalf_map();
    if (name == "pi-shifted") return pi_shifted_map();
    if (name == "custom-table") return custom_table_map(points_from_json(field(params, "table")));
    if (name == "lemma54-sigma") {
      return build_sigma_lemma54(catalog_map(field(params, "pi"), window), catalog_map(field(params, "pi0"), window),
                                 window)
          .map;
    }
    if (name == "thm12-sigma" || name == "thm12-pi") {
      const bool all_inf = params.contains("all_infinite") && params.at("all_infinite").is_boolean() &&
                           params.at("all_infinite").get<bool>();
      const Embedding e = partition_to_embedding(partition_from_json(field(params, "partition")), window, all_inf);
      return name == "thm12-sigma" ? e.sigma : e.pi;
    }
    throw Error("unknown map '" + name + "'");
  }();
  if (!params.empty()) m.with_params(params);
  m.with_window(window);
  return m;
}

json map_ref(const MapSpec& m) {
  if (m.params().empty()) return m.name();
  return {{"name", m.name()}, {"params", m.params()}};
}

PartitionWitness partition_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "dyadic") return PartitionWitness::dyadic();
  if (j.is_object() && j.contains("random")) {
    return PartitionWitness::random(nat_from_json(j.at("random"), "random"), nat_field(j, "size", 256));
  }
  if (j.is_object() && j.contains("classes")) {
    std::vector<std::vector<Nat>> classes;
    for (const auto& c : j.at("classes")) classes.push_back(nats_from_json(c, "classes"));
    return PartitionWitness::from_classes(classes);
  }
  throw Error("partition must be \"dyadic\", {\"random\":seed,\"size\":n} or {\"classes\":[...]}");
}

json to_json(const ColumnFamilyDescriptor& d) {
  json cols = json::array();
  for (const auto& s : d.columns()) {
    json values = json::array();
    for (const auto& v : s.values) values.push_back(to_json(v));
    json c = {{"column", s.column}, {"mode", to_string(s.mode)}, {"rows", s.rows}, {"values", values},
              {"limit", to_json(s.limit)}};
    if (s.mode == ColumnMode::EventuallyConstant) c["constant_from"] = s.constant_from;
    cols.push_back(std::move(c));
  }
  return {{"columns", cols}};
}

ColumnFamilyDescriptor column_family_from_json(const json& j) {
  const json& cols = field(j, "columns");
  if (!cols.is_array()) throw Error("field 'columns' must be an array");
  std::vector<ColumnSpec> specs;
  for (const auto& c : cols) {
    ColumnSpec s;
    s.column = nat_from_json(field(c, "column"), "column");
    const json& mode = field(c, "mode");
    const auto m = mode.is_string() ? column_mode_from_string(mode.get<std::string>()) : std::nullopt;
    if (!m) throw Error("unknown column mode " + mode.dump());
    s.mode = *m;
    s.rows = nats_from_json(field(c, "rows"), "rows");
    const json& values = field(c, "values");
    if (!values.is_array()) throw Error("field 'values' must be an array");
    for (const auto& v : values) s.values.push_back(rational_from_json(v));
    s.limit = extended_from_json(field(c, "limit"));
    s.constant_from = nat_field(c, "constant_from", 0);
    specs.push_back(std::move(s));
  }
  return ColumnFamilyDescriptor(std::move(specs));
}

json to_json(const MonCertificate& c) {
  json values = json::array();
  for (const auto& v : c.values) values.push_back(to_json(v));
  json witnesses = json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(to_json(w));
  return {{"indices", c.indices},
          {"points", to_json(c.points)},
          {"values", values},
          {"direction", to_string(c.direction)},
          {"case", static_cast<int>(c.mon_case)},
          {"dual", c.dual},
          {"columns", c.columns},
          {"witnesses", witnesses}};
}

MonCertificate mon_certificate_from_json(const json& j) {
  MonCertificate c;
  c.indices = nats_from_json(field(j, "indices"), "indices");
  c.points = points_from_json(field(j, "points"));
  const json& values = field(j, "values");
  if (!values.is_array()) throw Error("field 'values' must be an array");
  for (const auto& v : values) c.values.push_back(rational_from_json(v));
  const json& dir = field(j, "direction");
  const auto d = dir.is_string() ? direction_from_string(dir.get<std::string>()) : std::nullopt;
  if (!d) throw Error("unknown direction " + dir.dump());
  c.direction = *d;
  if (j.contains("case")) {
    const Nat k = nat_from_json(j.at("case"), "case");
    if (k < 1 || k > 4) throw Error("case must be 1..4");
    c.mon_case = static_cast<MonCase>(k);
  }
  if (j.contains("dual") && j.at("dual").is_boolean()) c.dual = j.at("dual").get<bool>();
  if (j.contains("columns")) c.columns = nats_from_json(j.at("columns"), "columns");
  if (j.contains("witnesses")) {
    for (const auto& w : j.at("witnesses")) {
      c.witnesses.push_back({points_from_json(field(w, "points")), nat_from_json(field(w, "level"), "level")});
    }
  }
  return c;
}

json to_json(const GameState& g) {
  json moves = json::array();
  for (std::size_t r = 0; r < g.moves.size(); ++r) {
    moves.push_back({{"round", r}, {"x", to_json(g.moves[r].x)}, {"k", to_json(g.moves[r].k)}});
  }
  json out = {{"ideal", to_json(g.presentation)}, {"rounds", g.round}, {"moves", moves}};
  out["seed"] = g.seed ? json(*g.seed) : json(nullptr);
  return out;
}

}  // namespace wrideal
