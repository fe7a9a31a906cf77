#include "cavwig/phase_space.hpp"

#include <stdexcept>

namespace cavwig {

PhaseSpaceGrid PhaseSpaceGrid::make(double x_min, double x_max, double p_min,
                                    double p_max, int nx, int np) {
  if (!(x_max > x_min) || !(p_max > p_min))
    throw std::invalid_argument("PhaseSpaceGrid: bounds must be increasing");
  if (nx < 2 || np < 2)
    throw std::invalid_argument("PhaseSpaceGrid: point counts must be >= 2");
  return PhaseSpaceGrid{x_min, x_max, p_min, p_max, nx, np};
}

}  // namespace cavwig
