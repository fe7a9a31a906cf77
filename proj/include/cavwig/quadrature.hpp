#pragma once

#include <vector>

namespace cavwig {

/// Gauss-Legendre rule on [-1, 1]. Nodes ascend and are symmetric about 0.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int n);
};

}  // namespace cavwig
