#include <algorithm>
#include <map>
#include <set>

#include "wrideal/cli.hpp"
#include "wrideal/covernum.hpp"
#include "wrideal/game.hpp"
#include "wrideal/json_io.hpp"
#include "wrideal/staged_sigma.hpp"
#include "wrideal/mon.hpp"

namespace wrideal::cli {

namespace {

using Params = nlohmann::json;

const std::map<std::string, std::set<std::string>> kAllowed = {
    {"phi", {"ideal", "pi", "window", "input"}},
    {"witness", {"input"}},
    {"map", {"action", "name", "params", "window", "input"}},
    {"game", {"action", "ideal", "pi", "window", "player1", "player2", "rounds", "seed", "mode"}},
    {"mon", {"action", "pi", "window", "len", "level", "input"}},
    {"sigma", {"action", "pi", "pi0", "window"}},
    {"oracle", {"action", "ideal", "kinds", "pi", "window", "limit", "input"}},
};

const std::map<std::string, std::set<std::string>> kActions = {
    {"map", {"apply", "invert", "verify"}},
    {"game", {"play"}},
    {"mon", {"extract", "verify"}},
    {"sigma", {"build"}},
    {"oracle", {"cover"}},
};

const Params& input_of(const Params& p) {
  if (!p.contains("input")) throw Error("missing parameter 'input'");
  return p.at("input");
}

Nat nat_param(const Params& p, const char* key, Nat fallback) {
  if (!p.contains(key)) return fallback;
  const auto& v = p.at(key);
  if (v.is_number_unsigned()) return v.get<Nat>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<Nat>(v.get<std::int64_t>());
  throw Error(std::string("parameter '") + key + "' must be a natural number");
}

std::string string_param(const Params& p, const char* key, const std::string& fallback) {
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_string()) throw Error(std::string("parameter '") + key + "' must be a string");
  return p.at(key).get<std::string>();
}

// Input point sets arrive either bare or as {"points": [...]}.
PointSet input_points(const Params& p) {
  const auto& in = input_of(p);
  return PointSet(points_from_json(in.is_object() && in.contains("points") ? in.at("points") : in));
}

IdealPresentation ideal_param(const Params& p, const std::string& fallback) {
  nlohmann::json ideal = p.contains("ideal") ? p.at("ideal") : nlohmann::json(fallback);
  if (ideal.is_string() && ideal.get<std::string>() == "WRpi") {
    if (!p.contains("pi")) throw Error("WRpi needs parameter 'pi'");
    ideal = {{"family", "WRpi"}, {"pi", p.at("pi")}};
  }
  if (ideal.is_object() && !ideal.contains("window") && p.contains("window")) ideal["window"] = p.at("window");
  return presentation_from_json(ideal);
}

MapSpec map_param(const Params& p, const char* key, const std::string& fallback) {
  const nlohmann::json ref = p.contains(key) ? p.at(key) : nlohmann::json(fallback);
  return catalog_map(ref, nat_param(p, "window", MapSpec::kDefaultWindow));
}

CommandResult do_phi(const Params& p) {
  const IdealPresentation ideal = ideal_param(p, "WR");
  const PointSet a = input_points(p);
  const PhiResult r = phi(ideal, a);
  return {{{"ideal", ideal.name()}, {"phi", r.value}, {"certificate", to_json(r.certificate)}}, kExitOk};
}

CommandResult do_witness(const Params& p) {
  const auto& in = input_of(p);
  const auto pts = points_from_json(in.is_object() && in.contains("points") ? in.at("points") : in);
  const auto w = remark21_check(pts);
  if (!w) return {{{"witness", nullptr}}, kExitViolation};
  return {{{"witness", to_json(*w)}}, kExitOk};
}

CommandResult do_map(const Params& p, const std::string& action) {
  nlohmann::json ref = p.contains("name") ? p.at("name") : throw Error("missing parameter 'name'");
  if (p.contains("params")) ref = {{"name", ref}, {"params", p.at("params")}};
  const Nat window = nat_param(p, "window", MapSpec::kDefaultWindow);
  const MapSpec m = catalog_map(ref, window);

  if (action == "verify") {
    const MapValidation v =
        m.kind() == MapKind::PointToIndex ? validate_onto_finite_to_one(m, window, std::max<Nat>(1, window / 4))
                                          : validate_bijection(m, window);
    return {{{"map", m.name()}, {"kind", to_string(m.kind())}, {"window", window}, {"ok", v.ok}, {"issues", v.issues}},
            v.ok ? kExitOk : kExitViolation};
  }

  const auto& in = input_of(p);
  if (!in.is_array()) throw Error("input must be an array");
  nlohmann::json out = nlohmann::json::array();
  const bool apply = action == "apply";
  for (const auto& x : in) {
    switch (m.kind()) {
      case MapKind::PointMap:
        if (apply) {
          out.push_back(to_json(m.apply(point_from_json(x))));
        } else {
          const auto q = m.inverse(point_from_json(x));
          out.push_back(q ? to_json(*q) : nlohmann::json(nullptr));
        }
        break;
      case MapKind::IndexToPoint:
        if (apply) {
          if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw Error("index must be a natural number");
          out.push_back(to_json(m.at(x.get<Nat>())));
        } else {
          const auto n = m.index_of(point_from_json(x));
          out.push_back(n ? nlohmann::json(*n) : nlohmann::json(nullptr));
        }
        break;
      case MapKind::PointToIndex:
        if (apply) {
          out.push_back(m.value(point_from_json(x)));
        } else {
          if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw Error("value must be a natural number");
          out.push_back(to_json(m.value_preimages(x.get<Nat>())));
        }
        break;
    }
  }
  return {out, kExitOk};
}

CommandResult do_game(const Params& p) {
  const IdealPresentation ideal = ideal_param(p, "WR");
  const std::string mode = string_param(p, "mode", "columns");
  if (mode != "columns" && mode != "exact") throw Error("mode must be 'columns' or 'exact'");
  const std::string one_name = string_param(p, "player1", "wr");
  PlayerOne one;
  if (one_name == "wr") {
    one = wr_strategy(mode == "exact" ? SectionMode::Exact : SectionMode::Columns);
  } else if (one_name == "empty") {
    one = empty_strategy();
  } else {
    throw Error("unknown player1 '" + one_name + "'");
  }
  const Nat seed = nat_param(p, "seed", 0);
  const std::string two_name = string_param(p, "player2", "random");
  PlayerTwo two;
  if (two_name == "random") {
    two = random_player(seed);
  } else if (two_name == "least-lex") {
    two = least_lex_player();
  } else if (two_name == "column-zero") {
    two = column_zero_player();
  } else {
    throw Error("unknown player2 '" + two_name + "'");
  }
  const GameState g = play(ideal, one, two, nat_param(p, "rounds", 20), seed);
  const Verdict v = verdict(g);
  nlohmann::json out = to_json(g);
  out["verdict"] = {{"picks", to_json(v.picks)},
                    {"second_type", v.second_type},
                    {"phi", v.phi ? nlohmann::json(*v.phi) : nlohmann::json(nullptr)}};
  return {out, kExitOk};
}

CommandResult do_mon(const Params& p, const std::string& action) {
  const MapSpec pi = map_param(p, "pi", "cantor");
  const auto& in = input_of(p);
  if (action == "verify") {
    const auto d = column_family_from_json(in.contains("descriptor") ? in.at("descriptor")
                                                                      : throw Error("input needs 'descriptor'"));
    const auto c = mon_certificate_from_json(in.contains("certificate") ? in.at("certificate")
                                                                         : throw Error("input needs 'certificate'"));
    const CertificateCheck check = verify_certificate(c, pi, d);
    return {{{"ok", check.ok}, {"reasons", check.reasons}}, check.ok ? kExitOk : kExitViolation};
  }
  const auto d = column_family_from_json(in);
  try {
    return {to_json(extract_mon(pi, d, nat_param(p, "len", 20), nat_param(p, "level", 5))), kExitOk};
  } catch (const MonPartialError& e) {
    return {{{"error", e.what()}, {"prefix", to_json(e.prefix())}}, kExitDomain};
  }
}

CommandResult do_sigma(const Params& p) {
  const Nat window = nat_param(p, "window", 16);
  nlohmann::json q = p;
  q["window"] = window;
  const MapSpec pi = map_param(q, "pi", "pihat");
  const MapSpec pi0 = map_param(q, "pi0", "pihat");
  const SigmaBuild b = build_sigma_lemma54(pi, pi0, window);
  const StagedSigma& s = *b.sigma;
  nlohmann::json stages = nlohmann::json::array();
  for (Nat n = 0; n < s.stage_count(); ++n) {
    stages.push_back({{"n", n}, {"m", s.m(n)}, {"a_size", s.a_set(n).size()}});
  }
  nlohmann::json table = nlohmann::json::array();
  for (Nat c = 0; c < window; ++c) {
    for (Nat r = 0; r < window; ++r) table.push_back({to_json(Point{c, r}), to_json(s.apply({c, r}))});
  }
  return {{{"pi", map_ref(pi)},
           {"pi0", map_ref(pi0)},
           {"adjusted", s.adjusted()},
           {"window", window},
           {"stages", stages},
           {"flagged", s.flagged_stages()},
           {"table", table}},
          kExitOk};
}

CommandResult do_oracle(const Params& p) {
  CoverUniverse u;
  if (p.contains("kinds")) {
    const auto& kinds = p.at("kinds");
    if (!kinds.is_array()) throw Error("parameter 'kinds' must be an array");
    for (const auto& k : kinds) {
      const auto kind = k.is_string() ? cover_kind_from_string(k.get<std::string>()) : std::nullopt;
      if (!kind) throw Error("unknown generator kind " + k.dump());
      u.kinds.push_back(*kind);
    }
    if (p.contains("pi")) {
      const MapSpec pi = map_param(p, "pi", "pihat");
      u.pi = [pi](Point a) { return pi.value(a); };
    }
  } else {
    const IdealPresentation ideal = ideal_param(p, "WR");
    switch (ideal.family()) {
      case Family::WR: u = CoverUniverse::wr(); break;
      case Family::ED: u = CoverUniverse::ed(); break;
      case Family::EDup: u = CoverUniverse::ed_up(); break;
      case Family::WRpi: {
        const MapSpec pi = ideal.pi();
        u = CoverUniverse::wr_pi([pi](Point a) { return pi.value(a); });
        break;
      }
      default: throw Error("no generator system");
    }
  }
  const CoverCertificate c = brute_force_cover(input_points(p), u, nat_param(p, "limit", kOracleLimit));
  return {{{"cost", c.cost()}, {"certificate", to_json(c)}}, kExitOk};
}

}  // namespace

nlohmann::json parse_json(const std::string& text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error("malformed JSON in " + source + " at line " + std::to_string(line) + ", column " +
                std::to_string(col) + " (byte " + std::to_string(e.byte) + ")");
  }
}

CommandResult run_job(const nlohmann::json& job) {
  if (!job.is_object()) throw Error("job must be an object");
  for (const auto& [key, value] : job.items()) {
    if (key != "command" && key != "parameters") throw Error("unknown job field '" + key + "'");
  }
  if (!job.contains("command") || !job.at("command").is_string()) throw Error("job needs a string 'command'");
  const std::string command = job.at("command").get<std::string>();
  const auto allowed = kAllowed.find(command);
  if (allowed == kAllowed.end()) throw Error("unknown command '" + command + "'");
  const Params p = job.contains("parameters") ? job.at("parameters") : Params::object();
  if (!p.is_object()) throw Error("'parameters' must be an object");
  for (const auto& [key, value] : p.items()) {
    if (!allowed->second.count(key)) throw Error("unknown parameter '" + key + "' for " + command);
  }
  std::string action;
  if (auto acts = kActions.find(command); acts != kActions.end()) {
    action = string_param(p, "action", acts->second.size() == 1 ? *acts->second.begin() : "");
    if (!acts->second.count(action)) throw Error("unknown action '" + action + "' for " + command);
  }
  try {
    if (command == "phi") return do_phi(p);
    if (command == "witness") return do_witness(p);
    if (command == "map") return do_map(p, action);
    if (command == "game") return do_game(p);
    if (command == "mon") return do_mon(p, action);
    if (command == "sigma") return do_sigma(p);
    return do_oracle(p);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid parameters: ") + e.what());
  }
}

}  // namespace wrideal::cli
