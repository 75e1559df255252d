#include "lrdipole/cli/config.hpp"

#include "lrdipole/errors.hpp"

#include <cmath>
#include <fstream>

namespace lrdipole::cli {

namespace {

double number(const nlohmann::json& value, const std::string& key)
{
  if (!value.is_number())
    throw ConfigError("config key '" + key + "' must be a number");
  return value.get<double>();
}

int integer(const nlohmann::json& value, const std::string& key)
{
  if (!value.is_number_integer())
    throw ConfigError("config key '" + key + "' must be an integer");
  return value.get<int>();
}

} // namespace

void RunConfig::validate() const
{
  try {
    params.validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw ConfigError("t_max must be positive");
  if (!(dt_out > 0.0) || dt_out > t_max)
    throw ConfigError("dt_out must lie in (0, t_max]");
  if (!(oracle_dt > 0.0))
    throw ConfigError("oracle_dt must be positive");
  if (fock_dim < 4)
    throw ConfigError("fock_dim must be at least 4");
  if (n1 < 0 || n2 < 0)
    throw ConfigError("n1 and n2 must be non-negative");
}

SolverOptions RunConfig::solver_options() const
{
  SolverOptions options;
  options.initial_condition = ic_convention;
  options.path = force_numeric ? EtaPath::Numeric : EtaPath::ClosedForm;
  return options;
}

RunConfig parse_config(const nlohmann::json& document)
{
  if (!document.is_object())
    throw ConfigError("config must be a JSON object");

  RunConfig config;
  for (const auto& [key, value] : document.items()) {
    if (key == "mu")
      config.params.mu = number(value, key);
    else if (key == "omega1")
      config.params.omega1 = number(value, key);
    else if (key == "omega2")
      config.params.omega2 = number(value, key);
    else if (key == "Omega")
      config.params.Omega = number(value, key);
    else if (key == "Q")
      config.params.Q = number(value, key);
    else if (key == "E")
      config.params.E = number(value, key);
    else if (key == "alpha")
      config.params.alpha = number(value, key);
    else if (key == "n1")
      config.n1 = integer(value, key);
    else if (key == "n2")
      config.n2 = integer(value, key);
    else if (key == "t_max")
      config.t_max = number(value, key);
    else if (key == "dt_out")
      config.dt_out = number(value, key);
    else if (key == "fock_dim")
      config.fock_dim = integer(value, key);
    else if (key == "oracle_dt")
      config.oracle_dt = number(value, key);
    else if (key == "ic_convention") {
      if (!value.is_string())
        throw ConfigError("config key 'ic_convention' must be a string");
      const auto name = value.get<std::string>();
      if (name == "default-B")
        config.ic_convention = InitialCondition::DefaultB;
      else if (name == "homogeneous-free")
        config.ic_convention = InitialCondition::HomogeneousFree;
      else
        throw ConfigError("unknown ic_convention '" + name + "'");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file " + path.string());
  nlohmann::json document;
  try {
    in >> document;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  return parse_config(document);
}

} // namespace lrdipole::cli
