#include "vecgames/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <cstdlib>
#include <unistd.h>

#include "json.hpp"
#include "vecgames/indicators/indicators.hpp"
#include "vecgames/io/config.hpp"
#include "vecgames/io/pf_file.hpp"
#include "vecgames/learn/decomposition.hpp"
#include "vecgames/learn/enumerate.hpp"
#include "vecgames/learn/weights.hpp"

namespace vecgames::cli {

namespace fs = std::filesystem;

namespace {

// Plain output everywhere; the one decorative touch honours NO_COLOR.
bool colour_allowed() {
  return std::getenv("NO_COLOR") == nullptr && ::isatty(::fileno(stdout));
}

std::string emphasise(const std::string& text) {
  return colour_allowed() ? "\033[32m" + text + "\033[0m" : text;
}

struct SummaryStat {
  std::string name;
  double mean = 0.0;
  double ci95 = 0.0;
};

SummaryStat summarise(const std::string& name, const std::vector<double>& samples) {
  SummaryStat stat;
  stat.name = name;
  for (double x : samples) stat.mean += x;
  stat.mean /= static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - stat.mean) * (x - stat.mean);
    const double sd = std::sqrt(ss / static_cast<double>(samples.size() - 1));
    stat.ci95 = 1.96 * sd / std::sqrt(static_cast<double>(samples.size()));
  }
  return stat;
}

void write_summary(const std::string& path, const std::vector<SummaryStat>& stats) {
  std::string text = "metric,mean,ci95\n";
  for (const auto& stat : stats) {
    text += stat.name;
    text += ',';
    text += format_double(stat.mean);
    text += ',';
    text += format_double(stat.ci95);
    text += '\n';
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::RuntimeFailure, "cannot write " + path);
  out << text;
}

void write_meta(const std::string& path, const ExperimentConfig& config, int window) {
  nlohmann::json doc;
  doc["format_version"] = 1;
  doc["env"] = config.env_id;
  doc["algorithm"] = config.algorithm;
  doc["seeds"] = config.seeds;
  doc["final_window_episodes"] = window;
  doc["confidence_interval"] = "normal approximation, mean +/- 1.96 * standard error";
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::RuntimeFailure, "cannot write " + path);
  out << doc.dump(2) << "\n";
}

IqlConfig iql_from(const IniFile& raw, Seed seed) {
  IqlConfig config;
  config.alpha = raw.get_double("iql", "alpha", config.alpha);
  config.alpha_decay = raw.get_double("iql", "alpha_decay", config.alpha_decay);
  config.alpha_min = raw.get_double("iql", "alpha_min", config.alpha_min);
  config.epsilon = raw.get_double("iql", "epsilon", config.epsilon);
  config.epsilon_decay = raw.get_double("iql", "epsilon_decay", config.epsilon_decay);
  config.epsilon_min = raw.get_double("iql", "epsilon_min", config.epsilon_min);
  config.gamma = raw.get_double("iql", "gamma", config.gamma);
  config.episodes = raw.get_int("iql", "episodes", config.episodes);
  config.seed = seed;
  return config;
}

double final_window_mean(const std::vector<double>& values, int window) {
  const auto n = static_cast<int>(values.size());
  const int w = std::min(window, n);
  double total = 0.0;
  for (int i = n - w; i < n; ++i) total += values[static_cast<std::size_t>(i)];
  return total / static_cast<double>(w);
}

void run_iql_experiment(const ExperimentConfig& config, const fs::path& out_dir,
                        std::ostream& log) {
  std::vector<double> weight_values = config.raw.get_doubles("iql", "weights");
  const int window = static_cast<int>(config.raw.get_int("experiment", "final_window", 100));

  std::map<std::string, std::vector<double>> final_stats;
  for (Seed seed : config.seeds) {
    std::unique_ptr<Env> env = make_env(config.env_id, config.raw);
    if (weight_values.empty())
      weight_values.assign(static_cast<std::size_t>(env->num_objectives()),
                           1.0 / env->num_objectives());
    AgentMap<WeightVector> weights;
    for (const auto& agent : env->possible_agents())
      weights.emplace(agent, WeightVector(weight_values));

    const IqlResult result = iql_train(*env, weights, iql_from(config.raw, seed));

    std::set<std::string> metric_keys;
    for (const auto& m : result.metrics)
      for (const auto& [key, value] : m) metric_keys.insert(key);

    std::vector<std::string> header = {"episode", "seed"};
    const int d = env->num_objectives();
    for (int j = 0; j < d; ++j) header.push_back("mean_return_" + std::to_string(j));
    header.push_back("scalarised");
    for (const auto& key : metric_keys) header.push_back(key);

    CsvWriter csv(header);
    for (std::size_t e = 0; e < result.curve.size(); ++e) {
      std::vector<double> row = {static_cast<double>(e), static_cast<double>(seed)};
      for (int j = 0; j < d; ++j)
        row.push_back(result.mean_returns[e][static_cast<std::size_t>(j)]);
      row.push_back(result.curve[e]);
      for (const auto& key : metric_keys) {
        auto it = result.metrics[e].find(key);
        row.push_back(it == result.metrics[e].end() ? 0.0 : it->second);
      }
      csv.add_row(row);
    }
    csv.save((out_dir / ("curve_seed" + std::to_string(seed) + ".csv")).string());

    final_stats["final_scalarised"].push_back(final_window_mean(result.curve, window));
    for (int j = 0; j < d; ++j) {
      std::vector<double> component;
      component.reserve(result.mean_returns.size());
      for (const auto& v : result.mean_returns) component.push_back(v[static_cast<std::size_t>(j)]);
      final_stats["final_mean_return_" + std::to_string(j)].push_back(
          final_window_mean(component, window));
    }
    for (const auto& key : metric_keys) {
      std::vector<double> series;
      series.reserve(result.metrics.size());
      for (const auto& m : result.metrics) {
        auto it = m.find(key);
        series.push_back(it == m.end() ? 0.0 : it->second);
      }
      final_stats["final_" + key].push_back(final_window_mean(series, window));
    }
    log << "seed " << seed << ": final scalarised return "
        << format_double(final_stats["final_scalarised"].back()) << "\n";
  }

  std::vector<SummaryStat> stats;
  for (const auto& [name, samples] : final_stats) stats.push_back(summarise(name, samples));
  write_summary((out_dir / "summary.csv").string(), stats);
  write_meta((out_dir / "meta.json").string(), config, window);
}

void run_decomposition_experiment(const ExperimentConfig& config, const fs::path& out_dir,
                                  std::ostream& log) {
  DecompositionConfig dec;
  dec.num_weights = static_cast<int>(config.raw.get_int("decomposition", "num_weights", 10));
  dec.stop.episodes = config.raw.get_int("decomposition", "episodes_per_weight", 10000);
  dec.eval_episodes = static_cast<int>(config.raw.get_int("decomposition", "eval_episodes", 1));
  dec.exact_eval = config.raw.get("decomposition", "eval", "rollout") == "exact";
  dec.threads = static_cast<int>(config.raw.get_int("decomposition", "threads", 1));

  const std::string normalise = config.raw.get("decomposition", "normalise", "auto");
  const int eu_count = static_cast<int>(config.raw.get_int("decomposition", "eu_weights", 101));

  std::map<std::string, std::vector<double>> final_stats;
  for (Seed seed : config.seeds) {
    std::unique_ptr<Env> env = make_env(config.env_id, config.raw);
    if (!env->team_reward())
      raise(Errc::ConfigInvalid, "decomposition needs a team-reward environment");

    dec.seed = seed;
    dec.normalisation.clear();
    if (normalise == "auto") {
      if (auto bounds = env->reward_bounds()) {
        for (int j = 0; j < env->num_objectives(); ++j) {
          if (bounds->low[static_cast<std::size_t>(j)] <
              bounds->high[static_cast<std::size_t>(j)])
            dec.normalisation.push_back(NormalisationSpec{
                "", j, bounds->low[static_cast<std::size_t>(j)],
                bounds->high[static_cast<std::size_t>(j)]});
        }
      }
    } else if (normalise != "none") {
      raise(Errc::ConfigInvalid, "decomposition.normalise must be auto or none");
    }

    const Learner learner = make_iql_learner(iql_from(config.raw, seed));
    const ParetoArchive archive = decomposition_train(*env, learner, dec);

    PfFile pf;
    pf.env = config.env_id;
    pf.algorithm = "decomposition";
    pf.seed = seed;
    if (config.raw.has("decomposition", "ref_point"))
      pf.reference_point = config.raw.get_doubles("decomposition", "ref_point");
    else
      pf.reference_point.assign(static_cast<std::size_t>(env->num_objectives()), 0.0);
    pf.points = archive.front();
    pf.save((out_dir / ("pf_seed" + std::to_string(seed) + ".json")).string());

    final_stats["cardinality"].push_back(static_cast<double>(cardinality(pf.points)));
    final_stats["hypervolume"].push_back(hypervolume(pf.points, pf.reference_point));
    final_stats["expected_utility"].push_back(
        expected_utility(pf.points, generate_weights(eu_count, env->num_objectives())));
    log << "seed " << seed << ": archive size " << archive.size() << "\n";
  }

  std::vector<SummaryStat> stats;
  for (const auto& [name, samples] : final_stats) stats.push_back(summarise(name, samples));
  write_summary((out_dir / "summary.csv").string(), stats);
  write_meta((out_dir / "meta.json").string(), config,
             static_cast<int>(config.raw.get_int("experiment", "final_window", 100)));
}

}  // namespace

int run_list(std::ostream& out) {
  struct Row {
    const char* id;
    const char* agents;
    const char* objectives;
    const char* observability;
    const char* rewards;
    const char* spaces;  // obs/action
  };
  const Row rows[] = {
      {"beach", "2-n", "2", "partial (own section) or full", "team or individual", "d/d"},
      {"item_gathering", "1-n", "2-9", "full", "team or individual", "d/d"},
      {"gem_mining", "2-n", "2-d", "stateless", "team", "-/d"},
      {"route_choice", "2-n", "2", "stateless", "individual", "-/d"},
      {"swarm", "2-n", "2", "full", "team", "c/c"},
      {"connect4", "2", "2 or 2+width", "full", "individual (zero-sum)", "d/d"},
      {"breakthrough", "2", "1-4", "full", "individual (zero-sum)", "d/d"},
      {"samegame", "1-5", "1-10", "full", "team or individual", "d/d"},
  };
  out << std::left << std::setw(16) << "environment" << std::setw(8) << "agents" << std::setw(14)
      << "objectives" << std::setw(32) << "observability" << std::setw(24) << "reward modes"
      << "state/action\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(16) << row.id << std::setw(8) << row.agents << std::setw(14)
        << row.objectives << std::setw(32) << row.observability << std::setw(24) << row.rewards
        << row.spaces << "\n";
  }
  return 0;
}

int run_experiment(const RunOptions& options, std::ostream& log) {
  ExperimentConfig config = ExperimentConfig::load(options.config_path);
  if (options.seed_override) config.seeds = {*options.seed_override};
  if (options.out_override) config.out_dir = *options.out_override;
  if (is_board_env(config.env_id))
    raise(Errc::ConfigInvalid, "the run command drives simultaneous-move environments only");

  const fs::path out_dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) raise(Errc::RuntimeFailure, "cannot create output directory " + config.out_dir);

  if (config.algorithm == "iql") {
    run_iql_experiment(config, out_dir, log);
  } else if (config.algorithm == "decomposition") {
    run_decomposition_experiment(config, out_dir, log);
  } else {
    raise(Errc::ConfigInvalid, "unknown algorithm " + config.algorithm);
  }
  log << emphasise("wrote results to " + out_dir.string()) << "\n";
  return 0;
}

int run_eval(const EvalOptions& options, std::ostream& out) {
  const PfFile pf = PfFile::load(options.pf_path);
  if (pf.points.empty()) raise(Errc::FileInvalid, "the front is empty");
  ObjectiveVector ref = pf.reference_point;
  if (options.reference_point) ref = *options.reference_point;
  if (ref.empty())
    raise(Errc::ConfigInvalid, "no reference point in the file; pass --ref");

  out << "cardinality: " << cardinality(pf.points) << "\n";
  out << "hypervolume: " << format_double(hypervolume(pf.points, ref)) << "\n";
  out << "expected_utility: "
      << format_double(expected_utility(
             pf.points,
             generate_weights(options.weight_count,
                              static_cast<int>(pf.points.front().size()))))
      << "\n";
  return 0;
}

int run_oracle(const OracleOptions& options, std::ostream& log) {
  ExperimentConfig config = ExperimentConfig::load(options.config_path);
  std::unique_ptr<Env> env = make_env(config.env_id, config.raw);
  const int horizon = options.horizon.value_or(
      static_cast<int>(config.raw.get_int("oracle", "horizon", 1)));

  const std::vector<ObjectiveVector> front = brute_force_pf(*env, horizon);

  PfFile pf;
  pf.env = config.env_id;
  pf.algorithm = "brute_force";
  if (config.raw.has("decomposition", "ref_point"))
    pf.reference_point = config.raw.get_doubles("decomposition", "ref_point");
  pf.points = front;

  fs::path out_path;
  if (options.out_path) {
    out_path = *options.out_path;
  } else {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    out_path = fs::path(config.out_dir) / "oracle_pf.json";
  }
  if (out_path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(out_path.parent_path(), ec);
  }
  pf.save(out_path.string());
  log << "wrote " << front.size() << " non-dominated points to " << out_path.string() << "\n";
  return 0;
}

}  // namespace vecgames::cli
