#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cavwig/negativity.hpp"
#include "cavwig/phase_space.hpp"
#include "cavwig/steady_state.hpp"
#include "cavwig/wigner_engine.hpp"

namespace cavwig {

enum class Command { Pulsed, PhotonCount, Baseline, Depth, Steady, ValidateRwa, Sweep };

const char* command_name(Command c);

/// Invalid run configuration (maps to exit code 2 in the CLI, as opposed to
/// numerical failures which map to 3).
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

struct AxisSpec {
  std::string name;
  double min = 0.0, max = 0.0;
  int count = 0;
};

/// One fully-specified computation. Rates are entered in the paper's units
/// (gamma and omega_m as frequency/2pi in Hz, k in 1/s) and converted once.
struct RunConfig {
  Command command = Command::Pulsed;

  double g0_over_kappa = 1.0;
  double delta_bar = 0.0;
  double omega_m_hz = 1e5;  // omega_m / 2pi
  double gamma_hz = 1e-3;   // gamma / 2pi
  double n_bath = 0.0;
  double flux_k = 0.0;   // 1/s
  double flux_k2 = 0.0;  // 1/s

  std::optional<double> alpha;  // coherent amplitude
  std::optional<double> r_l;    // optical squeezing
  double theta = 0.0;           // squeezing angle (accepted, ignored)
  int photon_n = 1;
  double eta = 1.0;
  bool condition_on_photon = false;  // depth command: use the photon-count kernel

  double n_bar_init = 0.0;  // initial mechanical occupation
  double r_m = 0.0;         // mechanical momentum squeezing

  std::optional<PhaseSpaceGrid> grid;  // explicit bounds win over defaults
  int grid_nx = 241, grid_np = 241;
  std::string grid_preset = "default";
  QuadratureSpec quad;
  DepthOptions depth;

  SteadyOptions steady;
  int witness_levels = 0;  // 0: largest allowed by the truncation
  int periods = 100;

  Command sweep_command = Command::Pulsed;
  std::vector<AxisSpec> axes;  // up to 2

  std::filesystem::path output_dir = ".";
  std::string preset_name;
};

/// Named parameter sets reproducing the figure configurations.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

struct Metrics {
  std::optional<double> delta, min_w, min_x, min_p;
  std::optional<double> witness_value, tau_inf, fidelity_min;
};

struct RunOutcome {
  Metrics metrics;
  nlohmann::json report;
  bool partial = false;  // sweep finished with failed points
};

SystemParams to_system_params(const RunConfig& cfg);

/// Executes the configured pipeline and writes its artifact files
/// (wigner.csv / populations.csv / sweep.csv / report.json plus JSON
/// sidecars) into cfg.output_dir.
RunOutcome run_config(const RunConfig& cfg);

}  // namespace cavwig
