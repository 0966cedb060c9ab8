#pragma once

#include <cmath>

#include "hypvol/isometry.hpp"
#include "hypvol/rng.hpp"

namespace testutil {

using namespace hypvol;

inline ProjectiveIsometry random_isometry(Rng &rng, double box = 2.0) {
  for (;;) {
    cplx a = rng.box(box), b = rng.box(box), c = rng.box(box), d = rng.box(box);
    if (std::abs(a * d - b * c) > 0.3)
      return ProjectiveIsometry::from_entries(a, b, c, d);
  }
}

inline BoundaryPoint random_boundary(Rng &rng, double box = 2.0) {
  return BoundaryPoint::from_value(rng.box(box));
}

inline H3Point random_h3(Rng &rng) {
  return {rng.box(2.0), std::exp(rng.uniform(-1.5, 1.5))};
}

} // namespace testutil
