#pragma once

#include <vector>

#include "ssarc/linalg.hpp"
#include "ssarc/problem.hpp"
#include "ssarc/types.hpp"

namespace ssarc {

// Everything the iteration body needs at the current point.  The reduced
// gradient g_z = Z'(g + Bv) is not here because it depends on the vertical
// step, which changes when the radius restarts within an iteration.
struct IterateState {
  Vector x;
  double f = 0.0;
  Vector g;
  Vector c;
  Matrix J;
  NullspaceBasis basis;
  Vector s;        // least-squares multipliers at x
  Matrix B;        // Lagrangian Hessian with those multipliers
  Vector zg;       // Z'g, the stationarity part of the residual
  double beta = 0.0;
  double mu = 0.0;

  double residual() const {
    const double zn = zg.size() ? zg.norm() : 0.0;
    return std::max(zn, c.size() ? c.norm() : 0.0);
  }
};

// Evaluates the problem at x and factors the constraint geometry.  beta/mu
// are left for the caller.  Throws EvaluationError on non-finite values and
// RankDeficientError through the basis computation.
IterateState prepare_iterate(const Problem& p, const Vector& x,
                             double rank_tolerance = 1e-10);

// One trial step, as written to the trace.  Every objective/constraint
// evaluation of the run appears as exactly one record.
struct TrialRecord {
  int k = 0;        // outer iteration
  int restart = 0;  // radius restarts within this iteration before the trial
  int j = 0;        // ladder rung used
  double lambda = 0.0;
  double beta = 0.0;  // radius in effect when the trial was generated
  double mu = 0.0;    // penalty weight used in the ratio
  double alpha = 0.0;
  double u_norm = 0.0;
  double c_norm = 0.0;
  double zg_norm = 0.0;
  double dq_N = 0.0;
  double dq_F = 0.0;
  double dq_H = 0.0;
  double dq = 0.0;
  double phi_x = 0.0;
  double phi_trial = 0.0;
  // NaN when the predicted decrease sat below the ratio's noise floor; the
  // trial was then judged by plain merit non-increase instead.
  double rho = 0.0;
  bool degenerate = false;
  bool accepted = false;
  // Rejected trials: the certified radius the continuation runs under —
  // either the implied radius of the advanced rung or the shrunk restart
  // radius; always <= gamma1 * beta.  NaN on accepted trials.
  double advance_beta = 0.0;
  // Accepted trials: the radius carried into the next iteration (gamma2 *
  // beta after a very successful step, beta unchanged otherwise).  NaN on
  // rejected trials.
  double beta_next = 0.0;
};

struct SolverReport {
  SolveStatus status = SolveStatus::IterationCap;
  int nit = 0;  // accepted steps
  int nif = 0;  // objective/constraint evaluations (start point included)
  int nig = 0;  // derivative evaluations (one per visited iterate)
  double res = 0.0;
  Vector x;
  double f = 0.0;
  Vector s;
  double mu = 0.0;
  double beta = 0.0;
  std::vector<TrialRecord> trace;
};

// Composite-step solve of min f s.t. c = 0 from p.x0 (or x_start).
// DegenerateModel, ContractViolation and NumericalBreakdown propagate as
// exceptions — they mean an internal invariant broke, not a model failure.
SolverReport solve(const Problem& p, const SolverConfig& cfg = {});
SolverReport solve(const Problem& p, const Vector& x_start,
                   const SolverConfig& cfg = {});

struct KktResidual {
  double stationarity = 0.0;  // ||g - J's|| with least-squares s
  double feasibility = 0.0;   // ||c||
};
KktResidual kkt_residual(const Problem& p, const Vector& x);

}  // namespace ssarc
