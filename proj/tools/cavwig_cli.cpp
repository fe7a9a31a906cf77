// Command-line front end: single computations, figure presets, and sweeps.
// Exit codes: 0 success, 2 configuration error, 3 numerical error.

#include <CLI11.hpp>
#include <iostream>

#include "cavwig/errors.hpp"
#include "cavwig/io.hpp"
#include "cavwig/run.hpp"

namespace {

using cavwig::Command;
using cavwig::RunConfig;

struct CliOptions {
  RunConfig cfg;
  std::string preset_name;
  double alpha = 0.0;
  bool alpha_set = false;
  double r_l = 0.0;
  bool r_l_set = false;
  std::vector<std::vector<std::string>> axes;
  std::vector<double> grid_bounds;  // x_min x_max p_min p_max
  std::string sweep_command;
};

void add_common_flags(CLI::App* sub, CliOptions& o) {
  sub->add_option("--preset", o.preset_name, "figure preset name");
  sub->add_option("-g,--g0-over-kappa", o.cfg.g0_over_kappa, "coupling g0/kappa");
  sub->add_option("-d,--detuning", o.cfg.delta_bar, "normalized detuning");
  sub->add_option("--omega-m", o.cfg.omega_m_hz, "mechanical frequency /2pi (Hz)");
  sub->add_option("--gamma", o.cfg.gamma_hz, "mechanical decay /2pi (Hz)");
  sub->add_option("--n-bath", o.cfg.n_bath, "bath thermal occupation");
  sub->add_option("--k", o.cfg.flux_k, "photon flux parameter k (1/s)");
  sub->add_option("--k2", o.cfg.flux_k2, "squeezing flux parameter k2 (1/s)");
  sub->add_option("--alpha", o.alpha, "coherent input amplitude")
      ->each([&o](const std::string&) { o.alpha_set = true; });
  sub->add_option("--r-l", o.r_l, "optical squeezing parameter")
      ->each([&o](const std::string&) { o.r_l_set = true; });
  sub->add_option("--theta", o.cfg.theta, "optical squeezing angle (ignored by design)");
  sub->add_option("--n-bar", o.cfg.n_bar_init, "initial mechanical occupation");
  sub->add_option("--r-m", o.cfg.r_m, "mechanical momentum squeezing");
  sub->add_option("--count", o.cfg.photon_n, "detected photon number");
  sub->add_option("--eta", o.cfg.eta, "detection-path transmission");
  sub->add_option("--grid", o.grid_bounds, "explicit bounds: x_min x_max p_min p_max")
      ->expected(4);
  sub->add_option("--nx", o.cfg.grid_nx, "grid points along X");
  sub->add_option("--np", o.cfg.grid_np, "grid points along P");
  sub->add_option("--quad-nodes", o.cfg.quad.n_nodes, "u-quadrature node count");
  sub->add_option("--quad-range", o.cfg.quad.range_factor, "u window factor");
  sub->add_option("--truncation", o.cfg.steady.truncation, "Fock truncation N");
  sub->add_option("--eps-tail", o.cfg.steady.eps_tail, "required tail mass");
  sub->add_option("--witness-levels", o.cfg.witness_levels,
                  "odd-projector count (0 = max allowed)");
  sub->add_option("--periods", o.cfg.periods, "mechanical periods to propagate");
  sub->add_option("-o,--output", o.cfg.output_dir, "output directory");
  sub->set_config("--config", "", "key=value config file (flags override)");
}

RunConfig finalize(CliOptions& o, Command cmd) {
  RunConfig cfg;
  if (!o.preset_name.empty()) {
    cfg = cavwig::preset(o.preset_name);
    // Flags override the preset: re-apply everything the user touched by
    // starting from the preset and copying explicit values over it.
    RunConfig& base = cfg;
    const RunConfig& f = o.cfg;
    const RunConfig defaults;
    auto overridden = [&](auto member) {
      return f.*member != defaults.*member;
    };
    if (overridden(&RunConfig::g0_over_kappa)) base.g0_over_kappa = f.g0_over_kappa;
    if (overridden(&RunConfig::delta_bar)) base.delta_bar = f.delta_bar;
    if (overridden(&RunConfig::omega_m_hz)) base.omega_m_hz = f.omega_m_hz;
    if (overridden(&RunConfig::gamma_hz)) base.gamma_hz = f.gamma_hz;
    if (overridden(&RunConfig::n_bath)) base.n_bath = f.n_bath;
    if (overridden(&RunConfig::flux_k)) base.flux_k = f.flux_k;
    if (overridden(&RunConfig::flux_k2)) base.flux_k2 = f.flux_k2;
    if (overridden(&RunConfig::theta)) base.theta = f.theta;
    if (overridden(&RunConfig::n_bar_init)) base.n_bar_init = f.n_bar_init;
    if (overridden(&RunConfig::r_m)) base.r_m = f.r_m;
    if (overridden(&RunConfig::photon_n)) base.photon_n = f.photon_n;
    if (overridden(&RunConfig::eta)) base.eta = f.eta;
    if (overridden(&RunConfig::grid_nx)) base.grid_nx = f.grid_nx;
    if (overridden(&RunConfig::grid_np)) base.grid_np = f.grid_np;
    if (f.quad.n_nodes != defaults.quad.n_nodes) base.quad.n_nodes = f.quad.n_nodes;
    if (f.quad.range_factor != defaults.quad.range_factor)
      base.quad.range_factor = f.quad.range_factor;
    if (f.steady.truncation != defaults.steady.truncation)
      base.steady.truncation = f.steady.truncation;
    if (f.steady.eps_tail != defaults.steady.eps_tail)
      base.steady.eps_tail = f.steady.eps_tail;
    if (overridden(&RunConfig::witness_levels)) base.witness_levels = f.witness_levels;
    if (overridden(&RunConfig::periods)) base.periods = f.periods;
    base.output_dir = f.output_dir;
    if (o.alpha_set) { base.alpha = o.alpha; base.r_l.reset(); }
    if (o.r_l_set) { base.r_l = o.r_l; base.alpha.reset(); }
  } else {
    cfg = o.cfg;
    cfg.command = cmd;
    if (o.alpha_set) cfg.alpha = o.alpha;
    if (o.r_l_set) cfg.r_l = o.r_l;
  }
  if (!o.grid_bounds.empty())
    cfg.grid = cavwig::PhaseSpaceGrid::make(o.grid_bounds[0], o.grid_bounds[1],
                                            o.grid_bounds[2], o.grid_bounds[3],
                                            cfg.grid_nx, cfg.grid_np);
  if (!o.sweep_command.empty()) {
    cfg.command = Command::Sweep;
    if (o.sweep_command == "pulsed") cfg.sweep_command = Command::Pulsed;
    else if (o.sweep_command == "photon-count") cfg.sweep_command = Command::PhotonCount;
    else if (o.sweep_command == "baseline") cfg.sweep_command = Command::Baseline;
    else if (o.sweep_command == "depth") cfg.sweep_command = Command::Depth;
    else if (o.sweep_command == "steady") cfg.sweep_command = Command::Steady;
    else throw cavwig::config_error("unknown sweep command '" + o.sweep_command + "'");
  }
  for (const auto& ax : o.axes) {
    if (ax.size() != 4) throw cavwig::config_error("--axis needs: name min max count");
    cfg.axes.push_back(cavwig::AxisSpec{ax[0], std::stod(ax[1]), std::stod(ax[2]),
                                        std::stoi(ax[3])});
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mechanical Wigner negativity in nonlinear cavity optomechanics"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", cavwig::kVersion);

  CliOptions o;
  app.add_option("--preset", o.preset_name, "figure preset name");
  app.add_option("-o,--output", o.cfg.output_dir, "output directory");

  std::map<std::string, std::pair<CLI::App*, Command>> subs;
  subs["pulsed"] = {app.add_subcommand("pulsed", "deterministic pulsed interaction"),
                    Command::Pulsed};
  subs["photon-count"] = {app.add_subcommand("photon-count",
                                             "n-photon conditioned interaction"),
                          Command::PhotonCount};
  subs["baseline"] = {app.add_subcommand("baseline", "no-cavity-response baseline"),
                      Command::Baseline};
  subs["depth"] = {app.add_subcommand("depth", "nonclassical depth tau_inf"),
                   Command::Depth};
  subs["steady"] = {app.add_subcommand("steady", "continuous-drive steady state"),
                    Command::Steady};
  subs["validate-rwa"] = {app.add_subcommand("validate-rwa",
                                             "propagate the full master equation"),
                          Command::ValidateRwa};
  subs["sweep"] = {app.add_subcommand("sweep", "parameter sweep"), Command::Sweep};

  for (auto& [name, sc] : subs) add_common_flags(sc.first, o);
  subs["depth"].first
      ->add_flag("--photon", o.cfg.condition_on_photon,
                 "condition on a photon-count event instead of the deterministic map");
  subs["sweep"].first->add_option("--command", o.sweep_command,
                                  "point command: pulsed|photon-count|baseline|depth|steady");
  subs["sweep"].first
      ->add_option("--axis", o.axes, "axis: name min max count (repeat for 2 axes)")
      ->expected(4)
      ->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Command cmd = Command::Pulsed;
    bool have_sub = false;
    for (auto& [name, sc] : subs)
      if (sc.first->parsed()) {
        cmd = sc.second;
        have_sub = true;
      }
    if (!have_sub && o.preset_name.empty()) {
      std::cerr << "error: need a subcommand or --preset (see --help)\n";
      return 2;
    }
    const RunConfig cfg = finalize(o, cmd);
    const cavwig::RunOutcome out = cavwig::run_config(cfg);
    std::cout << out.report.dump(2) << std::endl;
    return out.partial ? 3 : 0;
  } catch (const cavwig::config_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  }
}
