#include "vecgames/io/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vecgames/envs/beach.hpp"
#include "vecgames/envs/breakthrough.hpp"
#include "vecgames/envs/connect4.hpp"
#include "vecgames/envs/gem_mining.hpp"
#include "vecgames/envs/item_gathering.hpp"
#include "vecgames/envs/route_choice.hpp"
#include "vecgames/envs/samegame.hpp"
#include "vecgames/envs/swarm.hpp"

namespace vecgames {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

IniFile IniFile::parse(const std::string& text) {
  IniFile file;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        raise(Errc::ConfigInvalid, "line " + std::to_string(line_no) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      file.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      raise(Errc::ConfigInvalid, "line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      raise(Errc::ConfigInvalid, "line " + std::to_string(line_no) + ": empty key");
    file.sections_[section][key] = value;
  }
  return file;
}

IniFile IniFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::ConfigInvalid, "cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

bool IniFile::has(const std::string& section, const std::string& key) const {
  auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

std::string IniFile::get(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
  auto s = sections_.find(section);
  if (s == sections_.end()) return fallback;
  auto k = s->second.find(key);
  return k == s->second.end() ? fallback : k->second;
}

double IniFile::get_double(const std::string& section, const std::string& key,
                           double fallback) const {
  if (!has(section, key)) return fallback;
  try {
    return std::stod(get(section, key));
  } catch (const std::exception&) {
    raise(Errc::ConfigInvalid, section + "." + key + " is not a number");
  }
}

std::int64_t IniFile::get_int(const std::string& section, const std::string& key,
                              std::int64_t fallback) const {
  if (!has(section, key)) return fallback;
  try {
    return std::stoll(get(section, key));
  } catch (const std::exception&) {
    raise(Errc::ConfigInvalid, section + "." + key + " is not an integer");
  }
}

bool IniFile::get_bool(const std::string& section, const std::string& key, bool fallback) const {
  if (!has(section, key)) return fallback;
  const std::string value = get(section, key);
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  raise(Errc::ConfigInvalid, section + "." + key + " is not a boolean");
}

std::vector<double> IniFile::get_doubles(const std::string& section,
                                         const std::string& key) const {
  return parse_double_list(get(section, key));
}

void IniFile::set(const std::string& section, const std::string& key, const std::string& value) {
  sections_[section][key] = value;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    try {
      values.push_back(std::stod(token));
    } catch (const std::exception&) {
      raise(Errc::ConfigInvalid, "'" + token + "' is not a number");
    }
  }
  return values;
}

std::vector<Seed> parse_seeds(const std::string& text) {
  std::vector<Seed> seeds;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const auto first = static_cast<Seed>(std::stoull(trim(text.substr(0, colon))));
    const auto last = static_cast<Seed>(std::stoull(trim(text.substr(colon + 1))));
    if (last < first) raise(Errc::ConfigInvalid, "seed range end before start");
    for (Seed s = first; s <= last; ++s) seeds.push_back(s);
    return seeds;
  }
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (!token.empty()) seeds.push_back(static_cast<Seed>(std::stoull(token)));
  }
  if (seeds.empty()) raise(Errc::ConfigInvalid, "no seeds given");
  return seeds;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  ExperimentConfig config;
  config.raw = IniFile::load(path);
  config.env_id = config.raw.get("experiment", "env");
  if (config.env_id.empty()) raise(Errc::ConfigInvalid, "experiment.env is required");
  config.algorithm = config.raw.get("experiment", "algorithm", "iql");
  config.seeds = parse_seeds(config.raw.get("experiment", "seeds", "0"));
  config.out_dir = config.raw.get("experiment", "out", "out");
  return config;
}

const std::vector<std::string>& known_env_ids() {
  static const std::vector<std::string> ids = {
      "beach",    "item_gathering", "gem_mining",   "route_choice",
      "swarm",    "connect4",       "breakthrough", "samegame",
  };
  return ids;
}

bool is_board_env(const std::string& env_id) {
  return env_id == "connect4" || env_id == "breakthrough" || env_id == "samegame";
}

std::unique_ptr<Env> make_env(const std::string& env_id, const IniFile& config) {
  if (env_id == "gem_mining") {
    GemLimits limits;
    limits.min_workers = static_cast<int>(config.get_int("env", "min_workers", 1));
    limits.max_workers = static_cast<int>(config.get_int("env", "max_workers", 5));
    limits.min_connections = static_cast<int>(config.get_int("env", "min_connections", 2));
    limits.max_connections = static_cast<int>(config.get_int("env", "max_connections", 4));
    MiningInstance instance = gem_generate(
        static_cast<Seed>(config.get_int("env", "instance_seed", 42)),
        static_cast<int>(config.get_int("env", "villages", 2)),
        static_cast<int>(config.get_int("env", "gem_types", 2)), limits);
    instance.bonus = config.get_double("env", "bonus", instance.bonus);
    instance.cap = config.get_double("env", "cap", instance.cap);
    return std::make_unique<GemMiningEnv>(std::move(instance));
  }
  if (env_id == "route_choice") {
    const int agents = static_cast<int>(config.get_int("env", "agents", 4200));
    RoadNetwork network;
    const std::string source = config.get("env", "network", "braess");
    if (source == "braess") {
      network = braess_network(agents);
    } else {
      std::ifstream in(source);
      if (!in) raise(Errc::ConfigInvalid, "cannot open network file " + source);
      std::ostringstream text;
      text << in.rdbuf();
      network = parse_network(text.str());
    }
    const std::string tolls = config.get("env", "tolls", "marginal");
    TollMode mode = TollMode::Marginal;
    if (tolls == "none") mode = TollMode::None;
    else if (tolls == "selected") mode = TollMode::Selected;
    else if (tolls != "marginal") raise(Errc::ConfigInvalid, "unknown toll mode " + tolls);
    return std::make_unique<RouteChoiceEnv>(
        std::move(network), agents, mode, config.get_double("env", "toll_fraction", 0.5),
        static_cast<Seed>(config.get_int("env", "toll_seed", 0)));
  }
  if (env_id == "beach") {
    BeachConfig beach;
    beach.sections = static_cast<int>(config.get_int("env", "sections", 5));
    beach.capacity = config.get_double("env", "capacity", 3.0);
    if (config.has("env", "capacities")) beach.capacities = config.get_doubles("env", "capacities");
    beach.n_agents = static_cast<int>(config.get_int("env", "agents", 50));
    beach.type_a_count = static_cast<int>(config.get_int("env", "type_a", 35));
    beach.horizon = static_cast<int>(config.get_int("env", "horizon", 5));
    beach.team_reward = config.get("env", "reward_mode", "team") == "team";
    beach.start_section_even = static_cast<int>(config.get_int("env", "start_even", 1));
    beach.start_section_odd = static_cast<int>(config.get_int("env", "start_odd", 3));
    std::unique_ptr<Env> env = std::make_unique<BeachEnv>(beach);
    if (config.get_bool("env", "compat_observation", true))
      env = std::make_unique<BeachCompatObservation>(std::move(env));
    return env;
  }
  if (env_id == "item_gathering") {
    GatherConfig gather;
    gather.width = static_cast<int>(config.get_int("env", "width", 8));
    gather.height = static_cast<int>(config.get_int("env", "height", 8));
    gather.n_agents = static_cast<int>(config.get_int("env", "agents", 2));
    gather.colours = static_cast<int>(config.get_int("env", "colours", 3));
    gather.items_per_colour = static_cast<int>(config.get_int("env", "items_per_colour", 2));
    gather.horizon = static_cast<int>(config.get_int("env", "horizon", 50));
    gather.team_reward = config.get("env", "reward_mode", "individual") == "team";
    if (config.has("env", "layout_seed")) {
      gather.layout_seed = static_cast<Seed>(config.get_int("env", "layout_seed", 0));
    } else {
      gather.layout_seed.reset();
    }
    std::string layout = config.get("env", "layout", "");
    std::replace(layout.begin(), layout.end(), '|', '\n');
    gather.layout_text = layout;
    return std::make_unique<ItemGatheringEnv>(gather);
  }
  if (env_id == "swarm") {
    SwarmConfig swarm;
    const std::string mode = config.get("env", "mode", "surround");
    if (mode == "surround") swarm.mode = SwarmMode::Surround;
    else if (mode == "escort") swarm.mode = SwarmMode::Escort;
    else if (mode == "catch") swarm.mode = SwarmMode::Catch;
    else raise(Errc::ConfigInvalid, "unknown swarm mode " + mode);
    swarm.drones = static_cast<int>(config.get_int("env", "drones", 3));
    swarm.horizon = static_cast<int>(config.get_int("env", "horizon", 200));
    swarm.escort_steps = static_cast<int>(config.get_int("env", "escort_steps", 150));
    swarm.escape_speed = config.get_double("env", "escape_speed", 0.1);
    swarm.catch_threshold = config.get_double("env", "catch_threshold", 0.2);
    swarm.spawn_radius = config.get_double("env", "spawn_radius", 1.5);
    swarm.speed_multiplier = config.get_double("env", "speed_multiplier", 1.0);
    if (config.has("env", "target")) {
      const auto t = config.get_doubles("env", "target");
      if (t.size() != 3) raise(Errc::ConfigInvalid, "env.target needs three coordinates");
      swarm.target = Vec3{t[0], t[1], t[2]};
    }
    if (config.has("env", "escort_final")) {
      const auto t = config.get_doubles("env", "escort_final");
      if (t.size() != 3) raise(Errc::ConfigInvalid, "env.escort_final needs three coordinates");
      swarm.escort_final = Vec3{t[0], t[1], t[2]};
    }
    return std::make_unique<SwarmEnv>(swarm);
  }
  if (is_board_env(env_id))
    raise(Errc::ConfigInvalid,
          env_id + " is turn-based; it has no simultaneous-move interface");
  raise(Errc::ConfigInvalid, "unknown environment id " + env_id);
}

std::unique_ptr<AecEnv> make_board_env(const std::string& env_id, const IniFile& config) {
  if (env_id == "connect4") {
    C4Config c4;
    c4.width = static_cast<int>(config.get_int("env", "width", 7));
    c4.height = static_cast<int>(config.get_int("env", "height", 6));
    c4.column_objectives = config.get_bool("env", "column_objectives", false);
    return std::make_unique<Connect4Env>(c4);
  }
  if (env_id == "breakthrough") {
    BtConfig bt;
    bt.width = static_cast<int>(config.get_int("env", "width", 8));
    bt.height = static_cast<int>(config.get_int("env", "height", 8));
    bt.objectives = static_cast<int>(config.get_int("env", "objectives", 4));
    bt.move_cap = static_cast<int>(config.get_int("env", "move_cap", 0));
    return std::make_unique<BreakthroughEnv>(bt);
  }
  if (env_id == "samegame") {
    SgConfig sg;
    sg.width = static_cast<int>(config.get_int("env", "width", 15));
    sg.height = static_cast<int>(config.get_int("env", "height", 15));
    sg.colours = static_cast<int>(config.get_int("env", "colours", 5));
    sg.agents = static_cast<int>(config.get_int("env", "agents", 1));
    sg.team_reward = config.get("env", "reward_mode", "individual") == "team";
    sg.colour_objectives = config.get_bool("env", "colour_objectives", true);
    return std::make_unique<SameGameEnv>(sg);
  }
  raise(Errc::ConfigInvalid, "unknown turn-based environment id " + env_id);
}

}  // namespace vecgames
