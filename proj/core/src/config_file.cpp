#include "cmabrl/config_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cmabrl/choo.hpp"
#include "cmabrl/cmab_rl.hpp"
#include "cmabrl/iup.hpp"
#include "cmabrl/uniform_random.hpp"

namespace cmabrl {

namespace {

const std::set<std::string> kKnownAlgorithms = {"cmab-rl", "c-hoo", "iup",
                                                "uniform"};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw std::invalid_argument("config: key '" + key + "': " + why);
}

long to_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    bad_key(key, "expected integer, got '" + value + "'");
  }
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    bad_key(key, "expected number, got '" + value + "'");
  }
}

std::vector<double> to_doubles(const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  for (const std::string& tok : split_ws(value))
    out.push_back(to_double(key, tok));
  return out;
}

std::vector<int> to_ints(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const std::string& tok : split_ws(value))
    out.push_back(static_cast<int>(to_long(key, tok)));
  return out;
}

}  // namespace

double ExperimentSpec::multiplier_for(const std::string& algorithm) const {
  const auto it = multipliers.find(algorithm);
  return it == multipliers.end() ? 1.0 : it->second;
}

void ExperimentSpec::validate() const {
  if (schema_version != 1)
    throw std::invalid_argument("config: unsupported schema_version");
  if (horizon < 1) throw std::invalid_argument("config: horizon >= 1");
  if (repetitions < 1)
    throw std::invalid_argument("config: repetitions >= 1");
  if (stride < 0) throw std::invalid_argument("config: stride >= 0");
  if (context_dim < 1 || arm_dim < 1)
    throw std::invalid_argument("config: dimensions must be positive");
  if (algorithms.empty())
    throw std::invalid_argument("config: at least one algorithm");
  for (const std::string& a : algorithms)
    if (!kKnownAlgorithms.count(a))
      throw std::invalid_argument("config: unknown algorithm '" + a + "'");
  if (env_type != "gmm" && env_type != "sparse")
    throw std::invalid_argument("config: env.type must be gmm or sparse");
}

ExperimentSpec parse_experiment_spec(std::istream& in) {
  ExperimentSpec spec;
  // Sparse-env staging; assembled after all keys are read.
  std::vector<int> sparse_context_tuple, sparse_arm_tuple;
  std::vector<double> sparse_context_weights;
  bool saw_schema = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  ": empty key or value");
    spec.raw.emplace_back(key, value);

    if (key == "schema_version") {
      spec.schema_version = static_cast<int>(to_long(key, value));
      saw_schema = true;
    } else if (key == "horizon") {
      spec.horizon = to_long(key, value);
    } else if (key == "repetitions") {
      spec.repetitions = static_cast<int>(to_long(key, value));
    } else if (key == "seed") {
      spec.base_seed = static_cast<std::uint64_t>(to_long(key, value));
    } else if (key == "stride") {
      spec.stride = to_long(key, value);
    } else if (key == "lipschitz") {
      spec.lipschitz = to_double(key, value);
    } else if (key == "context_dim") {
      spec.context_dim = static_cast<int>(to_long(key, value));
    } else if (key == "arm_dim") {
      spec.arm_dim = static_cast<int>(to_long(key, value));
    } else if (key == "relevant_context_dims") {
      spec.relevant_context_dims = static_cast<int>(to_long(key, value));
    } else if (key == "relevant_arm_dims") {
      spec.relevant_arm_dims = static_cast<int>(to_long(key, value));
    } else if (key == "partition_number") {
      spec.partition_number = static_cast<int>(to_long(key, value));
    } else if (key == "algorithms") {
      spec.algorithms = split_ws(value);
    } else if (key.rfind("multiplier.", 0) == 0) {
      spec.multipliers[key.substr(11)] = to_double(key, value);
    } else if (key == "env.type") {
      spec.env_type = value;
    } else if (key == "env.scale") {
      spec.gmm.scale = to_double(key, value);
    } else if (key == "env.weights") {
      spec.gmm.weights = to_doubles(key, value);
    } else if (key.rfind("env.mean.", 0) == 0) {
      const auto k = static_cast<std::size_t>(to_long(key, key.substr(9)));
      const auto vals = to_doubles(key, value);
      if (vals.size() != 2) bad_key(key, "expected two numbers");
      if (spec.gmm.components.size() <= k) spec.gmm.components.resize(k + 1);
      spec.gmm.components[k].mean_context = vals[0];
      spec.gmm.components[k].mean_arm = vals[1];
    } else if (key.rfind("env.cov.", 0) == 0) {
      const auto k = static_cast<std::size_t>(to_long(key, key.substr(8)));
      const auto vals = to_doubles(key, value);
      if (vals.size() != 3)
        bad_key(key, "expected var_context cov var_arm");
      if (spec.gmm.components.size() <= k) spec.gmm.components.resize(k + 1);
      spec.gmm.components[k].var_context = vals[0];
      spec.gmm.components[k].cov = vals[1];
      spec.gmm.components[k].var_arm = vals[2];
    } else if (key == "env.relevant_context_dim") {
      spec.gmm.relevant_context_dim = static_cast<int>(to_long(key, value));
    } else if (key == "env.relevant_arm_dim") {
      spec.gmm.relevant_arm_dim = static_cast<int>(to_long(key, value));
    } else if (key == "env.bias") {
      spec.sparse.bias = to_double(key, value);
    } else if (key == "env.arm_tuple") {
      sparse_arm_tuple = to_ints(key, value);
    } else if (key == "env.arm_weights") {
      spec.sparse.arm_weights = to_doubles(key, value);
    } else if (key == "env.context_tuple") {
      sparse_context_tuple = to_ints(key, value);
    } else if (key == "env.context_weights") {
      sparse_context_weights = to_doubles(key, value);
    } else if (key == "oracle.resolution") {
      spec.gmm.oracle.resolution = static_cast<int>(to_long(key, value));
      spec.sparse.oracle.resolution = spec.gmm.oracle.resolution;
    } else if (key == "oracle.tolerance") {
      spec.gmm.oracle.tolerance = to_double(key, value);
      spec.sparse.oracle.tolerance = spec.gmm.oracle.tolerance;
    } else {
      bad_key(key, "unknown key");
    }
  }
  if (!saw_schema)
    throw std::invalid_argument("config: missing schema_version");

  spec.gmm.context_dim = spec.context_dim;
  spec.gmm.arm_dim = spec.arm_dim;
  spec.sparse.context_dim = spec.context_dim;
  spec.sparse.arm_dim = spec.arm_dim;
  if (spec.env_type == "sparse") {
    spec.sparse.arm_tuple = DimensionTuple(sparse_arm_tuple);
    SparseRegion region;
    region.context_tuple = DimensionTuple(sparse_context_tuple);
    region.context_weights = sparse_context_weights;
    spec.sparse.regions = {region};
  }
  spec.validate();
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open config file: " + path.string());
  return parse_experiment_spec(in);
}

std::unique_ptr<Environment> make_environment(const ExperimentSpec& spec) {
  if (spec.env_type == "gmm") {
    GmmEnvConfig cfg = spec.gmm;
    if (cfg.weights.empty()) {
      // Unparameterized gmm block falls back to the synthetic defaults.
      const GmmEnvConfig defaults = GmmEnvConfig::synthetic_defaults();
      cfg.scale = defaults.scale;
      cfg.weights = defaults.weights;
      cfg.components = defaults.components;
    }
    return std::make_unique<GmmEnvironment>(cfg);
  }
  return std::make_unique<SparseRelevanceEnvironment>(spec.sparse);
}

bool is_learning_algorithm(const std::string& algorithm) {
  return algorithm == "cmab-rl" || algorithm == "c-hoo" || algorithm == "iup";
}

std::unique_ptr<Policy> make_policy(const ExperimentSpec& spec,
                                    const std::string& algorithm,
                                    long horizon, double multiplier) {
  if (algorithm == "cmab-rl") {
    CmabRlConfig cfg;
    cfg.context_dim = spec.context_dim;
    cfg.arm_dim = spec.arm_dim;
    cfg.relevant_context_dims = spec.relevant_context_dims;
    cfg.relevant_arm_dims = spec.relevant_arm_dims;
    cfg.horizon = horizon;
    cfg.lipschitz = spec.lipschitz;
    cfg.confidence_multiplier = multiplier;
    cfg.partition_number = spec.partition_number;
    return std::make_unique<CmabRlPolicy>(cfg);
  }
  if (algorithm == "iup") {
    IupConfig cfg;
    cfg.context_dim = spec.context_dim;
    cfg.arm_dim = spec.arm_dim;
    cfg.horizon = horizon;
    cfg.confidence_multiplier = multiplier;
    return std::make_unique<IupPolicy>(cfg);
  }
  if (algorithm == "c-hoo") {
    ChooConfig cfg;
    cfg.context_dim = spec.context_dim;
    cfg.arm_dim = spec.arm_dim;
    cfg.horizon = horizon;
    cfg.confidence_multiplier = multiplier;
    return std::make_unique<ChooPolicy>(cfg);
  }
  if (algorithm == "uniform") {
    return std::make_unique<UniformRandomPolicy>(spec.context_dim,
                                                 spec.arm_dim);
  }
  throw std::invalid_argument("make_policy: unknown algorithm '" + algorithm +
                              "'");
}

}  // namespace cmabrl
