#include "cavwig/run.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>

#include "cavwig/io.hpp"
#include "cavwig/lindblad.hpp"
#include "cavwig/pulsed_ops.hpp"

namespace cavwig {
namespace {

using nlohmann::json;

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

GaussianState initial_state(const RunConfig& cfg) {
  return squeezed_thermal(cfg.n_bar_init, cfg.r_m);
}

KernelSpec pulsed_kernel(const RunConfig& cfg, const SystemParams& p) {
  if (cfg.alpha && cfg.r_l)
    throw config_error("choose one optical input: --alpha or --r-l");
  if (cfg.r_l) {
    if (*cfg.r_l < 0.0) throw config_error("r_l must be >= 0");
    return KernelSpec::make(DeterministicSqueezedVac{*cfg.r_l, cfg.theta}, p);
  }
  const double a = cfg.alpha.value_or(0.0);
  return KernelSpec::make(DeterministicCoherent{{a, 0.0}}, p);
}

KernelSpec photon_kernel(const RunConfig& cfg, const SystemParams& p) {
  if (cfg.photon_n < 0) throw config_error("photon count must be >= 0");
  if (cfg.eta < 1.0) {
    if (!cfg.alpha)
      throw config_error("lossy photon counting needs a coherent input (--alpha)");
    if (cfg.r_l)
      throw config_error("lossy photon counting is unsupported for squeezed input");
    return KernelSpec::make(
        LossyPhotonCount{cfg.photon_n, cfg.eta, {*cfg.alpha, 0.0}}, p);
  }
  return KernelSpec::make(PhotonCount{cfg.photon_n}, p);
}

BaselineInput baseline_input(const RunConfig& cfg) {
  if (cfg.alpha && cfg.r_l)
    throw config_error("choose one optical input: --alpha or --r-l");
  if (cfg.r_l) return SqueezedVacInput{*cfg.r_l, cfg.theta};
  return CoherentInput{{cfg.alpha.value_or(0.0), 0.0}};
}

PhaseSpaceGrid steady_default_grid(const FockPopulations& pop, int nx, int np) {
  double cum = 0.0;
  int n_eff = 0;
  for (int n = 0; n < pop.probs.size(); ++n) {
    cum += pop.probs[n];
    if (cum >= 1.0 - 1e-6) {
      n_eff = n;
      break;
    }
  }
  const double L = std::max(6.0, std::sqrt(2.0 * n_eff) + 3.0);
  return PhaseSpaceGrid::make(-L, L, -L, L, nx, np);
}

json metrics_json(const Metrics& m) {
  json j;
  auto put = [&](const char* key, const std::optional<double>& v) {
    j[key] = v ? json(*v) : json(nullptr);
  };
  put("delta", m.delta);
  put("min_w", m.min_w);
  put("min_x", m.min_x);
  put("min_p", m.min_p);
  put("witness", m.witness_value);
  put("tau_inf", m.tau_inf);
  put("fidelity_min", m.fidelity_min);
  return j;
}

json provenance(const RunConfig& cfg, const SystemParams& p) {
  json j;
  j["version"] = kVersion;
  j["command"] = command_name(cfg.command);
  j["params"] = to_json(p);
  j["input"] = json::object();
  if (cfg.alpha) j["input"]["alpha"] = *cfg.alpha;
  if (cfg.r_l) {
    j["input"]["r_l"] = *cfg.r_l;
    j["input"]["theta"] = cfg.theta;
  }
  if (cfg.command == Command::PhotonCount ||
      (cfg.command == Command::Depth && cfg.condition_on_photon)) {
    j["input"]["photon_n"] = cfg.photon_n;
    j["input"]["eta"] = cfg.eta;
  }
  j["initial_state"] = {{"n_bar", cfg.n_bar_init}, {"r_m", cfg.r_m}};
  j["grid_preset"] = cfg.grid_preset;
  j["quadrature"] = to_json(cfg.quad);
  if (!cfg.preset_name.empty()) j["preset"] = cfg.preset_name;
  return j;
}

struct PointResult {
  Metrics metrics;
  bool failed = false;
  std::string error;
};

// Metrics of one computation, no files written. Used by sweeps and reused by
// the single-run commands.
Metrics compute_metrics(const RunConfig& cfg, WignerGrid* keep_grid,
                        FockPopulations* keep_pops,
                        std::vector<double>* keep_fidelity = nullptr) {
  const SystemParams p = to_system_params(cfg);
  Metrics m;
  auto fill_negativity = [&](const WignerGrid& w) {
    const NegativityReport r = negative_volume(w);
    m.delta = r.delta;
    m.min_w = r.min_value;
    m.min_x = r.min_x;
    m.min_p = r.min_p;
  };

  switch (cfg.command) {
    case Command::Pulsed:
    case Command::PhotonCount:
    case Command::Depth: {
      const GaussianState s = initial_state(cfg);
      const bool photon = cfg.command == Command::PhotonCount ||
                          (cfg.command == Command::Depth && cfg.condition_on_photon);
      const KernelSpec k = photon ? photon_kernel(cfg, p) : pulsed_kernel(cfg, p);
      const PhaseSpaceGrid g =
          cfg.grid ? *cfg.grid : default_grid(k, s, cfg.grid_nx, cfg.grid_np);
      WignerOptions wopt;
      wopt.quad = cfg.quad;
      WignerGrid w = compute_wigner(g, k, s, wopt);
      fill_negativity(w);
      if (cfg.command == Command::Depth) m.tau_inf = nonclassical_depth(w, cfg.depth);
      if (keep_grid) *keep_grid = std::move(w);
      break;
    }
    case Command::Baseline: {
      const GaussianState s = initial_state(cfg);
      const BaselineInput in = baseline_input(cfg);
      const KernelSpec k = KernelSpec::make(BaselineNoCavity{in}, p);
      const PhaseSpaceGrid g =
          cfg.grid ? *cfg.grid : default_grid(k, s, cfg.grid_nx, cfg.grid_np);
      WignerGrid w = baseline_no_cavity(g, in, s, p);
      fill_negativity(w);
      if (keep_grid) *keep_grid = std::move(w);
      break;
    }
    case Command::Steady: {
      FockPopulations pop = solve_steady_state(p, cfg.steady);
      const int max_levels = (pop.truncation_n + 1) / 2;
      const int n_levels =
          cfg.witness_levels > 0 ? cfg.witness_levels : max_levels;
      m.witness_value = witness(pop, n_levels);
      const PhaseSpaceGrid g = cfg.grid ? *cfg.grid
                                        : steady_default_grid(pop, cfg.grid_nx,
                                                              cfg.grid_np);
      WignerGrid w = fock_diagonal_wigner(pop, g);
      fill_negativity(w);
      if (keep_grid) *keep_grid = std::move(w);
      if (keep_pops) *keep_pops = std::move(pop);
      break;
    }
    case Command::ValidateRwa: {
      FockPopulations pop = solve_steady_state(p, cfg.steady);
      RwaValidation v = validate_rwa(pop, p, cfg.periods, cfg.steady.truncation);
      m.fidelity_min = *std::min_element(v.fidelity.begin(), v.fidelity.end());
      if (keep_fidelity) *keep_fidelity = std::move(v.fidelity);
      if (keep_pops) *keep_pops = std::move(pop);
      break;
    }
    case Command::Sweep:
      throw config_error("nested sweep is not a point command");
  }
  return m;
}

void apply_axis(RunConfig& cfg, const std::string& name, double value) {
  if (name == "g0_over_kappa") cfg.g0_over_kappa = value;
  else if (name == "delta_bar") cfg.delta_bar = value;
  else if (name == "alpha") cfg.alpha = value;
  else if (name == "r_l") cfg.r_l = value;
  else if (name == "r_m") cfg.r_m = value;
  else if (name == "n_bar") { cfg.n_bar_init = value; cfg.n_bath = value; }
  else if (name == "n_bar_init") cfg.n_bar_init = value;
  else if (name == "n_bath") cfg.n_bath = value;
  else if (name == "k") cfg.flux_k = value;
  else if (name == "k2") cfg.flux_k2 = value;
  else if (name == "eta") cfg.eta = value;
  else throw config_error("unknown sweep axis '" + name + "'");
}

RunOutcome run_sweep(const RunConfig& cfg) {
  if (cfg.axes.empty() || cfg.axes.size() > 2)
    throw config_error("sweep needs 1 or 2 axes");
  for (const auto& ax : cfg.axes) {
    if (ax.count < 1) throw config_error("axis count must be >= 1");
    RunConfig probe = cfg;  // validates the axis name up front
    apply_axis(probe, ax.name, ax.min);
  }
  if (cfg.sweep_command == Command::Sweep || cfg.sweep_command == Command::ValidateRwa)
    throw config_error("sweep supports pulsed, photon-count, baseline, depth, steady");

  auto axis_values = [](const AxisSpec& ax) {
    std::vector<double> v(ax.count);
    for (int i = 0; i < ax.count; ++i)
      v[i] = ax.count == 1 ? ax.min
                           : ax.min + (ax.max - ax.min) * i / double(ax.count - 1);
    return v;
  };
  const std::vector<double> a1 = axis_values(cfg.axes[0]);
  const std::vector<double> a2 =
      cfg.axes.size() == 2 ? axis_values(cfg.axes[1]) : std::vector<double>{0.0};
  const bool two_axes = cfg.axes.size() == 2;
  const int total = int(a1.size() * a2.size());

  std::vector<PointResult> results(total);
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < total; ++idx) {
    const int i = idx / int(a2.size());
    const int j = idx % int(a2.size());
    RunConfig point = cfg;
    point.command = cfg.sweep_command;
    point.axes.clear();
    apply_axis(point, cfg.axes[0].name, a1[i]);
    if (two_axes) apply_axis(point, cfg.axes[1].name, a2[j]);
    try {
      results[idx].metrics = compute_metrics(point, nullptr, nullptr);
    } catch (const std::exception& e) {
      results[idx].failed = true;
      results[idx].error = e.what();
    }
  }

  std::filesystem::create_directories(cfg.output_dir);
  const auto csv_path = cfg.output_dir / "sweep.csv";
  std::ofstream f(csv_path);
  if (!f) throw std::runtime_error("cannot open " + csv_path.string());
  f << "axis1,axis2,delta,min_w,min_x,min_p,witness,tau_inf\n";
  auto cell = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  bool any_failed = false;
  std::vector<std::string> errors;
  for (int idx = 0; idx < total; ++idx) {
    const int i = idx / int(a2.size());
    const int j = idx % int(a2.size());
    const auto& r = results[idx];
    if (r.failed) {
      any_failed = true;
      errors.push_back(r.error);
      continue;
    }
    f << format_double(a1[i]) << ',' << (two_axes ? format_double(a2[j]) : std::string())
      << ',' << cell(r.metrics.delta) << ',' << cell(r.metrics.min_w) << ','
      << cell(r.metrics.min_x) << ',' << cell(r.metrics.min_p) << ','
      << cell(r.metrics.witness_value) << ',' << cell(r.metrics.tau_inf) << '\n';
  }
  f.close();

  RunOutcome out;
  out.partial = any_failed;
  json j = provenance(cfg, to_system_params(cfg));
  j["sweep"] = {{"command", command_name(cfg.sweep_command)},
                {"axes", json::array()},
                {"points", total},
                {"partial", any_failed}};
  for (const auto& ax : cfg.axes)
    j["sweep"]["axes"].push_back(
        {{"name", ax.name}, {"min", ax.min}, {"max", ax.max}, {"count", ax.count}});
  if (any_failed) j["sweep"]["errors"] = errors;
  out.report = j;
  write_json(cfg.output_dir / "sweep.json", j);
  write_json(cfg.output_dir / "report.json", j);
  return out;
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::Pulsed: return "pulsed";
    case Command::PhotonCount: return "photon-count";
    case Command::Baseline: return "baseline";
    case Command::Depth: return "depth";
    case Command::Steady: return "steady";
    case Command::ValidateRwa: return "validate-rwa";
    case Command::Sweep: return "sweep";
  }
  return "?";
}

SystemParams to_system_params(const RunConfig& cfg) {
  const double two_pi = 2.0 * std::numbers::pi;
  return SystemParams::make(cfg.g0_over_kappa, cfg.delta_bar,
                            two_pi * cfg.omega_m_hz, two_pi * cfg.gamma_hz,
                            cfg.n_bath, cfg.flux_k, cfg.flux_k2);
}

RunOutcome run_config(const RunConfig& cfg) {
  const double t0 = now_ms();
  if (cfg.command == Command::Sweep) {
    RunOutcome out = run_sweep(cfg);
    out.report["diagnostics"]["runtime_ms"] = now_ms() - t0;
    return out;
  }

  const SystemParams p = to_system_params(cfg);
  WignerGrid w;
  FockPopulations pops;
  std::vector<double> fidelity;
  RunOutcome out;
  out.metrics = compute_metrics(cfg, &w, &pops, &fidelity);

  std::filesystem::create_directories(cfg.output_dir);
  json side = provenance(cfg, p);

  json diag;
  diag["runtime_ms"] = now_ms() - t0;
  if (w.values.size() > 0) {
    diag["grid"] = to_json(w.grid);
    diag["quadrature"] = to_json(cfg.quad);
    diag["max_imag_residual"] = w.max_imag_residual;
    diag["norm_warning"] = w.norm_warning;
    diag["wigner_total"] = w.total();
  }
  if (pops.probs.size() > 0) {
    diag["truncation"] = pops.truncation_n;
    diag["tail_mass"] = pops.tail_mass;
  }

  if (w.values.size() > 0) {
    write_wigner_csv(cfg.output_dir / "wigner.csv", w);
    json ws = side;
    ws["negativity"] = {{"delta", out.metrics.delta.value_or(0.0)},
                        {"min_w", out.metrics.min_w.value_or(0.0)},
                        {"min_x", out.metrics.min_x.value_or(0.0)},
                        {"min_p", out.metrics.min_p.value_or(0.0)}};
    ws["diagnostics"] = diag;
    write_json(cfg.output_dir / "wigner.json", ws);
  }
  if (pops.probs.size() > 0) {
    write_populations_csv(cfg.output_dir / "populations.csv", pops);
    json ps = side;
    ps["diagnostics"] = diag;
    if (out.metrics.witness_value) ps["witness"] = *out.metrics.witness_value;
    write_json(cfg.output_dir / "populations.json", ps);
  }
  if (!fidelity.empty()) {
    std::ofstream f(cfg.output_dir / "fidelity.csv");
    f << "period,fidelity\n";
    for (std::size_t i = 0; i < fidelity.size(); ++i)
      f << (i + 1) << ',' << format_double(fidelity[i]) << '\n';
  }

  json report = side;
  report["metrics"] = metrics_json(out.metrics);
  report["diagnostics"] = diag;
  write_json(cfg.output_dir / "report.json", report);
  out.report = report;
  return out;
}

}  // namespace cavwig
