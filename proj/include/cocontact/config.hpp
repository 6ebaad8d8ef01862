#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cocontact/hamiltonian.hpp"
#include "cocontact/integrators.hpp"
#include "cocontact/lagrangian.hpp"
#include "cocontact/phase.hpp"

namespace cocontact {

/// Parsed node of the config tree: either a leaf (key plus value tokens on
/// one line) or a block (key plus braced children).
struct ConfigNode {
  std::string key;
  int line = 0;
  int col = 0;
  bool is_block = false;
  std::vector<std::string> values;
  std::vector<ConfigNode> children;
};

std::vector<ConfigNode> parse_config_tree(const std::string& text);

enum class ModelKind { Wave, Oscillator, Field };

struct SystemConfig {
  ModelKind kind = ModelKind::Wave;
  Side side = Side::Lagrangian;
  int k = 1;
  int n = 1;
  // wave family
  std::string f_text = "ux^2/2";
  std::string g_text = "0";
  std::string gamma_text = "0";
  // oscillator family
  double omega = 1.0;
  double gamma0 = 0.0;
  std::string forcing_text = "0";
  // free-form fields
  std::string h_text;
  std::string L_text;
  std::string base_text;
  std::string damping_text;
};

struct SampleConfig {
  int count = 20;
  std::uint64_t seed = 0;
  SampleRanges ranges;
};

struct SolverConfig {
  // wave settings
  int nx = 128;
  double x0 = 0.0;
  double x1 = 2.0 * 3.14159265358979323846;
  Boundary boundary = Boundary::Periodic;
  double cfl = 0.5;
  std::string u0_text = "sin(x)";
  std::string v0_text = "0";
  // shared settings
  double t0 = 0.0;
  double duration = 1.0;
  double dt = 0.0;
  int save_every = 1;
  // single-parameter settings
  std::vector<double> q0;
  std::vector<double> p0;
  double z0 = 0.0;
};

struct OutputConfig {
  std::string dir = "out";
};

struct ToleranceConfig {
  double rank = 1e-10;
  double reeb = 1e-9;
  double fd_step = 1e-5;
  double fd_rel = 1e-6;
  double kvector = 1e-10;
  double newton = 1e-10;
  double cond_limit = 1e12;
};

/// Checks to run after a simulation; a key present in the block enables the
/// check at the given bound.
struct VerifyConfig {
  std::optional<double> z_residual;
  std::optional<double> energy_balance;
  bool energy_nonincreasing = false;
  std::optional<double> section_el;
  std::optional<double> section_hdw;
};

struct ConvergeConfig {
  int levels = 3;
  std::string reference_text;
};

struct RunConfig {
  SystemConfig system;
  SampleConfig sample;
  SolverConfig solver;
  OutputConfig output;
  ToleranceConfig tolerances;
  VerifyConfig verify;
  ConvergeConfig converge;
  std::string raw;
};

/// Parses and validates; unknown keys, duplicate blocks, a missing seed and
/// non-positive tolerances are ConfigErrors carrying line/column.
RunConfig parse_config(const std::string& text);

/// The systems a config describes; wave configs carry both sides (the
/// momentum twin exists for the quadratic stretch).
struct BuiltSystem {
  Side side = Side::Lagrangian;
  std::optional<LagrangianSystem> lag;
  std::optional<HamiltonianSystem> ham;
};

BuiltSystem build_system(const SystemConfig& sc);

WaveConfig wave_config_of(const RunConfig& rc);

}  // namespace cocontact
