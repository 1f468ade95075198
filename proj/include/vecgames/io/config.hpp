#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vecgames/core/aec.hpp"
#include "vecgames/core/env.hpp"

namespace vecgames {

// Minimal INI reader: [section] headers, key = value lines, '#' comments.
class IniFile {
 public:
  static IniFile parse(const std::string& text);
  static IniFile load(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback = "") const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& section, const std::string& key,
                       std::int64_t fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& section, const std::string& key) const;

  void set(const std::string& section, const std::string& key, const std::string& value);

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

// Comma list ("0,1,2") or inclusive range ("0:9").
std::vector<Seed> parse_seeds(const std::string& text);

std::vector<double> parse_double_list(const std::string& text);

struct ExperimentConfig {
  std::string env_id;
  std::string algorithm;  // "iql" or "decomposition"
  std::vector<Seed> seeds;
  std::string out_dir;
  IniFile raw;

  static ExperimentConfig load(const std::string& path);
};

bool is_board_env(const std::string& env_id);

// Builds a simultaneous-move environment from [env]; board ids are rejected.
std::unique_ptr<Env> make_env(const std::string& env_id, const IniFile& config);

// Builds a turn-based environment (connect4, breakthrough, samegame).
std::unique_ptr<AecEnv> make_board_env(const std::string& env_id, const IniFile& config);

const std::vector<std::string>& known_env_ids();

}  // namespace vecgames
