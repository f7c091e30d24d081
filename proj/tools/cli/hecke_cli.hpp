#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/decomp/decomp.hpp"
#include "json.hpp"

namespace hecke::cli {

/// Flat `key = value` session file. q is `x` (generic) or a power of z = zeta_M; Q lists powers of z.
struct SessionConfig {
  int r = 0, p = 1, n = 0, M = 0;
  std::optional<long> q_power;  // nullopt: generic q = x
  std::vector<long> Q_powers;
  std::vector<std::string> suites;  // empty: the default verify suites
  std::string out;

  bool generic() const { return !q_power; }
  ModularSystem system() const { return make_system(M, r, p, n, q_power, Q_powers); }
  /// The parameters the config names: over Q(zeta_M)(x) when generic, else over Q(zeta_M).
  Params params() const;
};

/// Throws Error(ConfigError) on unknown keys, malformed values or inconsistent parameters.
SessionConfig parse_config(const std::string& text);
SessionConfig load_config(const std::string& path);

struct CommandResult {
  int exit_code = 0;  // 0 pass, 1 verification failure, 2 usage or config error
  nlohmann::ordered_json report;
};

/// One named check of a verify suite, tagged with the label of the result it exercises.
struct SuiteCheck {
  std::string suite, name, ref;
  bool ok = true;
  std::string detail;
};

const std::vector<std::string>& verify_suites();
/// relations, cellular, morita, clifford or decomp; a library error becomes one failed check.
std::vector<SuiteCheck> run_suite(const std::string& name, const SessionConfig& cfg);
/// Runs the selected suites (relations, cellular, morita, clifford, decomp); up to `jobs` at once.
CommandResult cmd_verify(const SessionConfig& cfg, int jobs = 1);
/// mode is direct, reduced or both; both also compares the two matrices.
CommandResult cmd_decomp(const SessionConfig& cfg, const std::string& mode);
/// object is basis, blocks, specht (arg a multipartition) or vb (arg a composition).
CommandResult cmd_inspect(const SessionConfig& cfg, const std::string& object, const std::string& arg);

nlohmann::ordered_json matrix_json(const DecompositionMatrix& m);

}  // namespace hecke::cli
