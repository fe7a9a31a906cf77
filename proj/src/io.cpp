#include "cavwig/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cavwig {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  return f;
}

}  // namespace

void write_wigner_csv(const std::filesystem::path& path, const WignerGrid& w) {
  auto f = open_out(path);
  f << "X,P,W\n";
  for (int i = 0; i < w.grid.nx; ++i)
    for (int j = 0; j < w.grid.np; ++j)
      f << format_double(w.grid.x(i)) << ',' << format_double(w.grid.p(j)) << ','
        << format_double(w.values(i, j)) << '\n';
}

void write_populations_csv(const std::filesystem::path& path,
                           const FockPopulations& pop) {
  auto f = open_out(path);
  f << "n,P_n\n";
  for (int n = 0; n < pop.probs.size(); ++n)
    f << n << ',' << format_double(pop.probs[n]) << '\n';
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  auto f = open_out(path);
  f << j.dump(2) << '\n';
}

nlohmann::json to_json(const SystemParams& p) {
  return {{"g0_over_kappa", p.g0_over_kappa}, {"mu", p.mu},
          {"delta_bar", p.delta_bar},         {"omega_m", p.omega_m},
          {"gamma", p.gamma},                 {"n_bath", p.n_bath},
          {"flux_k", p.flux_k},               {"flux_k2", p.flux_k2}};
}

nlohmann::json to_json(const PhaseSpaceGrid& g) {
  return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"p_min", g.p_min},
          {"p_max", g.p_max}, {"nx", g.nx},       {"np", g.np}};
}

nlohmann::json to_json(const QuadratureSpec& q) {
  return {{"n_nodes", q.n_nodes}, {"range_factor", q.range_factor}};
}

nlohmann::json to_json(const NegativityReport& r) {
  return {{"delta", r.delta},
          {"min_w", r.min_value},
          {"min_x", r.min_x},
          {"min_p", r.min_p},
          {"neg_to_pos_ratio", r.neg_to_pos_ratio}};
}

}  // namespace cavwig
