#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cavwig/negativity.hpp"
#include "cavwig/phase_space.hpp"
#include "cavwig/steady_state.hpp"
#include "cavwig/system_params.hpp"
#include "cavwig/wigner_engine.hpp"

namespace cavwig {

inline constexpr const char* kVersion = "cavwig 0.1.0";

/// Doubles are serialized with 17 significant digits so round-trips are
/// bit-exact.
std::string format_double(double v);

/// Header `X,P,W`, row-major over X then P.
void write_wigner_csv(const std::filesystem::path& path, const WignerGrid& w);

/// Header `n,P_n`.
void write_populations_csv(const std::filesystem::path& path,
                           const FockPopulations& pop);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

nlohmann::json to_json(const SystemParams& p);
nlohmann::json to_json(const PhaseSpaceGrid& g);
nlohmann::json to_json(const QuadratureSpec& q);
nlohmann::json to_json(const NegativityReport& r);

}  // namespace cavwig
