#include "ssarc/subproblem.hpp"

#include <cmath>
#include <limits>

namespace ssarc {

ShiftSelection select_initial(const ShiftSolveSet& set, double beta) {
  const int ns = static_cast<int>(set.results.size());
  ShiftSelection sel;
  sel.beta_of.assign(ns, std::numeric_limits<double>::infinity());
  sel.usable.assign(ns, 0);

  sel.i_plus = -1;
  for (int i = 0; i < ns; ++i) {
    const ShiftSolveResult& r = set.results[i];
    if (r.curvature_ok && sel.i_plus < 0) sel.i_plus = i;
    if (r.curvature_ok && r.converged) {
      sel.usable[i] = 1;
      sel.beta_of[i] = r.u.norm() / r.lambda;
    }
  }
  if (sel.i_plus < 0)
    throw LadderExhaustedError("no shift with acceptable curvature");

  int best = -1;
  double best_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < ns; ++i) {
    if (!sel.usable[i]) continue;
    const double gap = std::abs(beta * set.results[i].lambda -
                                set.results[i].u.norm());
    if (gap < best_gap) {  // strict: ties keep the smaller index
      best_gap = gap;
      best = i;
    }
  }
  if (best < 0) throw LadderExhaustedError("no usable shift solution");
  sel.j = best;
  return sel;
}

std::pair<int, double> advance_on_failure(const ShiftSolveSet& set, int j,
                                          double beta_k, double gamma1) {
  const int ns = static_cast<int>(set.results.size());
  for (int i = j + 1; i < ns; ++i) {
    const ShiftSolveResult& r = set.results[i];
    if (!(r.curvature_ok && r.converged)) continue;
    const double implied = r.u.norm() / r.lambda;
    if (implied <= gamma1 * beta_k) return {i, implied};
  }
  throw LadderExhaustedError("no rung contracts the radius enough");
}

}  // namespace ssarc
