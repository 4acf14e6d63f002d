#pragma once

#include "ssarc/linalg.hpp"
#include "ssarc/types.hpp"

namespace ssarc {

// phi(x; mu) = f(x) + mu ||c(x)||_2  (exact l2 penalty, not squared).
double penalty_value(double f, const Vector& c, double mu);

// q_mu(d) = f + g'd + d'Bd/2 + mu ||c + Jd||_2, the model phi is compared
// against.  Only used for cross-checks; the solver works with the exact
// decrease identity dq = dq_F + dq_H + mu dq_N.
double model_value(double f, const Vector& g, const SymmetricOperator& B,
                   const Vector& c, const Matrix& J, const Vector& d,
                   double mu);

struct PenaltyUpdate {
  double mu = 0.0;          // penalty weight to use for this trial
  double mu_critical = 0.0; // smallest weight making the model decrease enough
  bool raised = false;
};

// Keeps mu unless the combined objective decreases dq_F + dq_H would swamp
// the feasibility decrease; then jumps to
//   max(mu_critical, tau1 * mu, mu + tau2),
// where mu_critical = -(dq_F + dq_H) / ((1 - nu) dq_N).  dq_N = 0 leaves mu
// alone (mu_critical reported as mu).  dq_N < 0 violates the vertical-step
// contract and throws.
PenaltyUpdate update_penalty(double mu, double dq_F, double dq_H, double dq_N,
                             double nu, double tau1, double tau2);

// rho = (phi(x) - phi(x+d)) / dq.  Throws DegenerateModel when the predicted
// decrease is below 1e-16 * max(1, |phi(x)|) — at that scale the ratio is
// noise and the caller must not branch on it.
double acceptance_ratio(double phi_x, double phi_trial, double dq);

}  // namespace ssarc
