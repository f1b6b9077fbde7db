#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wrideal/cli.hpp"
#include "wrideal/grid.hpp"

namespace wrideal::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// A map reference on the command line: a catalog name, or inline JSON.
nlohmann::json ref_arg(const std::string& s) {
  if (!s.empty() && (s.front() == '{' || s.front() == '"')) return parse_json(s, "argument");
  return s;
}

struct Options {
  std::string input = "-";
  std::string phi_ideal;
  std::string game_ideal;
  std::string cover_ideal;
  std::string phi_pi;
  std::string game_pi;
  std::string mon_pi;
  std::string sigma_pi;
  std::string sigma_pi0;
  std::string cover_pi;
  std::string name;
  std::string params;
  std::string player1;
  std::string player2;
  std::string mode;
  std::string kinds;
  std::string job;
  Nat window = 0;
  Nat rounds = 0;
  Nat seed = 0;
  Nat len = 0;
  Nat level = 0;
  Nat limit = 0;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering numbers, reductions, games and monotone extraction on omega x omega", "wrideal"};
  app.require_subcommand(1);
  Options o;
  nlohmann::json params = nlohmann::json::object();
  std::string command;
  bool needs_input = false;

  auto add_input = [&](CLI::App* c) { c->add_option("--input,-i", o.input, "Input JSON file ('-' for stdin)"); };
  auto add_window = [&](CLI::App* c) { c->add_option("--window", o.window, "Window bound for map constructions"); };

  auto* phi = app.add_subcommand("phi", "Covering number with a certificate");
  phi->add_option("--ideal", o.phi_ideal, "WR, ED, EDup or WRpi")->default_val("WR");
  phi->add_option("--pi", o.phi_pi, "Map for WRpi");
  add_window(phi);
  add_input(phi);

  auto* witness = app.add_subcommand("witness", "Sparsity witness check");
  add_input(witness);

  auto* map = app.add_subcommand("map", "Cataloged maps");
  map->require_subcommand(1);
  std::vector<CLI::App*> map_actions;
  for (const char* a : {"apply", "invert", "verify"}) {
    auto* s = map->add_subcommand(a);
    s->add_option("--name", o.name, "Catalog name")->required();
    s->add_option("--params", o.params, "Map parameters as JSON");
    add_window(s);
    if (std::string(a) != "verify") add_input(s);
    map_actions.push_back(s);
  }

  auto* game = app.add_subcommand("game", "Ideal game");
  game->require_subcommand(1);
  auto* play = game->add_subcommand("play", "Play and print the transcript");
  play->add_option("--ideal", o.game_ideal)->default_val("WR");
  play->add_option("--pi", o.game_pi);
  play->add_option("--player1", o.player1, "wr or empty")->default_val("wr");
  play->add_option("--player2", o.player2, "random, least-lex or column-zero")->default_val("random");
  play->add_option("--rounds", o.rounds)->default_val(20);
  play->add_option("--seed", o.seed)->default_val(0);
  play->add_option("--mode", o.mode, "columns or exact")->default_val("columns");
  add_window(play);

  auto* mon = app.add_subcommand("mon", "Monotone subsequence certificates");
  mon->require_subcommand(1);
  auto* extract = mon->add_subcommand("extract");
  auto* mverify = mon->add_subcommand("verify");
  for (auto* s : {extract, mverify}) {
    s->add_option("--pi", o.mon_pi, "Index-to-point enumeration")->default_val("cantor");
    add_window(s);
    add_input(s);
  }
  extract->add_option("--len", o.len)->default_val(20);
  extract->add_option("--level", o.level)->default_val(5);

  auto* sigma = app.add_subcommand("sigma", "Injection between WR^pi ideals");
  sigma->require_subcommand(1);
  auto* build = sigma->add_subcommand("build");
  build->add_option("--pi", o.sigma_pi)->default_val("pihat");
  build->add_option("--pi0", o.sigma_pi0)->default_val("pihat");
  build->add_option("--window", o.window)->default_val(16);

  auto* oracle = app.add_subcommand("oracle", "Brute-force covers");
  oracle->require_subcommand(1);
  auto* cover = oracle->add_subcommand("cover");
  cover->add_option("--ideal", o.cover_ideal);
  cover->add_option("--kinds", o.kinds, "Comma-separated generator kinds");
  cover->add_option("--pi", o.cover_pi);
  cover->add_option("--limit", o.limit);
  add_window(cover);
  add_input(cover);

  auto* run = app.add_subcommand("run", "Run a job file");
  run->add_option("job", o.job, "Job JSON file ('-' for stdin)")->required();
  add_input(run);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  try {
    auto set_str = [&](const char* key, const std::string& v, CLI::App* c, const char* flag) {
      if (c->count(flag) || !v.empty()) params[key] = v;
    };
    auto set_nat = [&](const char* key, Nat v, CLI::App* c, const char* flag, bool always) {
      if (always || c->count(flag)) params[key] = v;
    };

    nlohmann::json job;
    if (*phi) {
      command = "phi";
      needs_input = true;
      set_str("ideal", o.phi_ideal, phi, "--ideal");
      if (!o.phi_pi.empty()) params["pi"] = ref_arg(o.phi_pi);
      set_nat("window", o.window, phi, "--window", false);
    } else if (*witness) {
      command = "witness";
      needs_input = true;
    } else if (*map) {
      command = "map";
      for (auto* s : map_actions) {
        if (!*s) continue;
        params["action"] = s->get_name();
        params["name"] = o.name;
        if (!o.params.empty()) params["params"] = parse_json(o.params, "--params");
        set_nat("window", o.window, s, "--window", false);
        needs_input = s->get_name() != "verify";
      }
    } else if (*game) {
      command = "game";
      params["action"] = "play";
      params["ideal"] = o.game_ideal;
      if (!o.game_pi.empty()) params["pi"] = ref_arg(o.game_pi);
      params["player1"] = o.player1;
      params["player2"] = o.player2;
      params["rounds"] = o.rounds;
      params["seed"] = o.seed;
      params["mode"] = o.mode;
      set_nat("window", o.window, play, "--window", false);
    } else if (*mon) {
      command = "mon";
      needs_input = true;
      CLI::App* s = *extract ? extract : mverify;
      params["action"] = s->get_name();
      params["pi"] = ref_arg(o.mon_pi);
      set_nat("window", o.window, s, "--window", false);
      if (*extract) {
        params["len"] = o.len;
        params["level"] = o.level;
      }
    } else if (*sigma) {
      command = "sigma";
      params["action"] = "build";
      params["pi"] = ref_arg(o.sigma_pi);
      params["pi0"] = ref_arg(o.sigma_pi0);
      params["window"] = o.window;
    } else if (*oracle) {
      command = "oracle";
      needs_input = true;
      params["action"] = "cover";
      if (!o.cover_ideal.empty()) params["ideal"] = o.cover_ideal;
      if (!o.kinds.empty()) {
        nlohmann::json kinds = nlohmann::json::array();
        std::stringstream ss(o.kinds);
        for (std::string k; std::getline(ss, k, ',');) kinds.push_back(k);
        params["kinds"] = kinds;
      }
      if (!o.cover_pi.empty()) params["pi"] = ref_arg(o.cover_pi);
      set_nat("limit", o.limit, cover, "--limit", false);
      set_nat("window", o.window, cover, "--window", false);
    }

    if (*run) {
      job = parse_json(slurp(o.job, in), o.job == "-" ? "standard input" : o.job);
      if (job.is_object() && job.contains("parameters") && job.at("parameters").is_object() &&
          !job.at("parameters").contains("input") && run->count("--input")) {
        job["parameters"]["input"] = parse_json(slurp(o.input, in), o.input == "-" ? "standard input" : o.input);
      }
    } else {
      if (needs_input) params["input"] = parse_json(slurp(o.input, in), o.input == "-" ? "standard input" : o.input);
      job = {{"command", command}, {"parameters", params}};
    }

    const CommandResult r = run_job(job);
    out << r.output.dump(2) << "\n";
    return r.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace wrideal::cli
