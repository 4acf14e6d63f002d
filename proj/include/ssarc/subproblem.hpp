#pragma once

#include <utility>
#include <vector>

#include "ssarc/shifted_cg.hpp"

namespace ssarc {

// Rung choice over one multi-shift solve.  A shift is usable when its CG run
// kept positive curvature AND reached its stopping test; partial iterates
// from capped runs are never selected.
struct ShiftSelection {
  int i_plus = 0;             // smallest index with acceptable curvature
  int j = 0;                  // selected rung
  std::vector<double> beta_of;  // ||u_i|| / lambda_i, +inf where unusable
  std::vector<char> usable;
};

// Picks the rung whose step length best matches the current radius:
// argmin_i | beta * lambda_i - ||u_i|| | over usable shifts, ties to the
// smaller index.  Throws LadderExhaustedError when no shift has acceptable
// curvature.
ShiftSelection select_initial(const ShiftSolveSet& set, double beta);

// After a rejected trial at rung j: move up to the first usable rung j' > j
// whose implied radius ||u_{j'}|| / lambda_{j'} is at most gamma1 * beta_k.
// Returns (j', that radius); the radius is the certificate that the next
// trial is at least a gamma1 contraction.  Throws LadderExhaustedError when
// no such rung exists.
std::pair<int, double> advance_on_failure(const ShiftSolveSet& set, int j,
                                          double beta_k, double gamma1);

}  // namespace ssarc
