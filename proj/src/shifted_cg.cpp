#include "ssarc/shifted_cg.hpp"

#include <cmath>

#ifdef SSARC_HAVE_OPENMP
#include <omp.h>
#endif

namespace ssarc {

namespace {

// Krylov exhaustion threshold: below this the next basis vector is noise and
// every still-active shift has already reached an exact solution.
double breakdown_tol(double g_norm) { return 1e-14 * std::max(1.0, g_norm); }

}  // namespace

ShiftSolveSet solve_all_shifts(const SymmetricOperator& B_z, const Vector& g_z,
                               const ShiftLadder& ladder, double xi,
                               double zeta, int max_inner, bool parallel) {
  const Index n = g_z.size();
  const int ns = static_cast<int>(ladder.size());
  const double g_norm = g_z.norm();

  ShiftSolveSet set;
  set.g_z_norm = g_norm;
  set.results.resize(ns);
  for (int i = 0; i < ns; ++i) {
    ShiftSolveResult& r = set.results[i];
    r.shift_index = i;
    r.lambda = ladder[i];
    r.u = Vector::Zero(n);
    r.residual_norm = g_norm;
  }
  if (g_norm == 0.0 || n == 0) {
    for (ShiftSolveResult& r : set.results) {
      r.converged = true;
      r.residual_norm = 0.0;
    }
    return set;
  }

  // Shared Lanczos basis state.
  Vector v_prev = Vector::Zero(n);
  Vector v = -g_z / g_norm;
  Vector w(n);
  double mu_prev = 0.0;

  // Per-shift recurrence state.  r = sigma * v_next holds throughout, so a
  // shift only needs scalars besides its iterate and direction.
  std::vector<Vector> p(ns, -g_z);
  Vector gam_prev = Vector::Ones(ns);
  Vector om_prev = Vector::Zero(ns);
  Vector sig = Vector::Constant(ns, g_norm);
  std::vector<char> active(ns, 1);
  int n_active = ns;

  for (int j = 0; j < max_inner && n_active > 0; ++j) {
    B_z.apply_to(v, w);
    ++set.matvec_count;
    const double delta = v.dot(w);
    w -= delta * v;
    w -= mu_prev * v_prev;
    const double mu_next = w.norm();

    int deactivated = 0;
#ifdef SSARC_HAVE_OPENMP
#pragma omp parallel for schedule(static) reduction(+ : deactivated) \
    if (parallel && ns > 1)
#endif
    for (int i = 0; i < ns; ++i) {
      if (!active[i]) continue;
      ShiftSolveResult& r = set.results[i];
      const double piv = delta + ladder[i] - om_prev[i] / gam_prev[i];
      const double gam = 1.0 / piv;
      if (!(std::isfinite(gam) && gam > 0)) {
        r.curvature_ok = false;
        r.residual_norm = std::abs(sig[i]);
        r.inner_iterations = j;
        active[i] = 0;
        ++deactivated;
        continue;
      }
      const double om = (mu_next * gam) * (mu_next * gam);
      r.u += gam * p[i];
      const double sig_new = -mu_next * gam * sig[i];
      r.inner_iterations = j + 1;
      const double bound =
          xi * std::pow(std::min(g_norm, r.u.norm()), 1.0 + zeta);
      if (std::abs(sig_new) <= bound) {
        r.residual_norm = std::abs(sig_new);
        r.converged = true;
        active[i] = 0;
        ++deactivated;
      } else {
        sig[i] = sig_new;
        gam_prev[i] = gam;
        om_prev[i] = om;
      }
    }
    n_active -= deactivated;
    if (n_active == 0) break;

    if (mu_next <= breakdown_tol(g_norm)) {
      // Basis exhausted: active iterates already solve their systems.
      for (int i = 0; i < ns; ++i) {
        if (!active[i]) continue;
        set.results[i].residual_norm = 0.0;
        set.results[i].converged = true;
        active[i] = 0;
      }
      n_active = 0;
      break;
    }

    const Vector v_next = w / mu_next;
#ifdef SSARC_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel && ns > 1)
#endif
    for (int i = 0; i < ns; ++i) {
      if (!active[i]) continue;
      p[i] = sig[i] * v_next + om_prev[i] * p[i];
    }
    v_prev.swap(v);
    v = v_next;
    mu_prev = mu_next;
  }

  // Iteration cap: whatever is still active keeps its partial iterate and
  // stays unconverged.
  for (int i = 0; i < ns; ++i) {
    if (active[i]) set.results[i].residual_norm = std::abs(sig[i]);
  }
  return set;
}

double explicit_residual(const SymmetricOperator& B_z, const Vector& g_z,
                         const ShiftSolveResult& r) {
  Vector Bu(g_z.size());
  B_z.apply_to(r.u, Bu);
  return (g_z + Bu + r.lambda * r.u).norm();
}

bool verify_residual(const SymmetricOperator& B_z, const Vector& g_z,
                     const ShiftSolveResult& r, double rtol, double atol) {
  const double expl = explicit_residual(B_z, g_z, r);
  const double scale = std::max(expl, r.residual_norm);
  return std::abs(expl - r.residual_norm) <= rtol * scale + atol;
}

}  // namespace ssarc
