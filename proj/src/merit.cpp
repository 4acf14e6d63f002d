#include "ssarc/merit.hpp"

#include <cmath>

namespace ssarc {

double penalty_value(double f, const Vector& c, double mu) {
  return f + mu * c.norm();
}

double model_value(double f, const Vector& g, const SymmetricOperator& B,
                   const Vector& c, const Matrix& J, const Vector& d,
                   double mu) {
  Vector Bd(d.size());
  B.apply_to(d, Bd);
  return f + g.dot(d) + 0.5 * d.dot(Bd) + mu * (c + J * d).norm();
}

PenaltyUpdate update_penalty(double mu, double dq_F, double dq_H, double dq_N,
                             double nu, double tau1, double tau2) {
  PenaltyUpdate out;
  out.mu = mu;
  out.mu_critical = mu;
  if (dq_N < 0.0)
    throw ContractViolation("normal model decrease is negative");
  if (dq_N == 0.0) return out;

  out.mu_critical = -(dq_F + dq_H) / ((1.0 - nu) * dq_N);
  if (mu < out.mu_critical) {
    out.mu = std::max({out.mu_critical, tau1 * mu, mu + tau2});
    out.raised = true;
  }
  return out;
}

double acceptance_ratio(double phi_x, double phi_trial, double dq) {
  if (!(dq > 1e-16 * std::max(1.0, std::abs(phi_x))))
    throw DegenerateModel("predicted decrease is at noise level");
  return (phi_x - phi_trial) / dq;
}

}  // namespace ssarc
