#include "ssarc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssarc/merit.hpp"
#include "ssarc/shifted_cg.hpp"
#include "ssarc/step.hpp"
#include "ssarc/subproblem.hpp"

namespace ssarc {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_finite(bool ok, const char* what) {
  if (!ok) throw EvaluationError(std::string("non-finite ") + what);
}

double evaluate_f(const Problem& p, const Vector& x) {
  const double f = p.eval_f(x);
  require_finite(std::isfinite(f), "objective");
  return f;
}

Vector evaluate_c(const Problem& p, const Vector& x) {
  Vector c = p.eval_c(x);
  require_finite(c.allFinite(), "constraints");
  return c;
}

bool any_curvature_ok(const ShiftSolveSet& set) {
  return std::any_of(
      set.results.begin(), set.results.end(),
      [](const ShiftSolveResult& r) { return r.curvature_ok; });
}

}  // namespace

IterateState prepare_iterate(const Problem& p, const Vector& x,
                             double rank_tolerance) {
  IterateState it;
  it.x = x;
  it.f = evaluate_f(p, x);
  it.g = p.eval_g(x);
  require_finite(it.g.allFinite(), "gradient");
  it.c = evaluate_c(p, x);
  it.J = p.eval_J(x);
  require_finite(it.J.allFinite(), "Jacobian");
  it.basis = nullspace_basis(it.J, rank_tolerance);
  it.s = least_squares_multipliers(it.J, it.g);
  it.B = p.eval_lagrangian_hessian(x, it.s);
  require_finite(it.B.allFinite(), "Hessian");
  it.zg = it.basis.Z.transpose() * it.g;
  return it;
}

SolverReport solve(const Problem& p, const SolverConfig& cfg) {
  return solve(p, p.x0, cfg);
}

SolverReport solve(const Problem& p, const Vector& x_start,
                   const SolverConfig& cfg) {
  cfg.validate();
  SolverReport rep;
  rep.nif = 1;  // the start point's objective/constraint evaluation
  rep.nig = 0;

  ShiftLadder ladder = cfg.ladder();
  int extensions_left = cfg.extend_ladder ? cfg.max_ladder_extensions : 0;

  Vector x = x_start;
  double beta = cfg.beta0;
  double mu = cfg.mu_init;

  try {
    // <= so the point reached by the last admissible step is still evaluated
    // and reported (with its true residual) when the cap strikes.
    for (int k = 0; k <= cfg.max_outer; ++k) {
      rep.nit = k;  // accepted steps so far
      IterateState it = prepare_iterate(p, x);
      it.beta = beta;
      it.mu = mu;

      rep.x = it.x;
      rep.f = it.f;
      rep.s = it.s;
      rep.res = it.residual();
      rep.mu = mu;
      rep.beta = beta;
      if (rep.res <= cfg.epsilon) {
        rep.status = SolveStatus::Converged;
        return rep;
      }
      if (k == cfg.max_outer) break;
      // Derivative work is charged to iterations that compute a step; the
      // terminal residual check rides along for free, giving the classical
      // NIF = NIT+1, NIG = NIT pattern on clean runs.
      ++rep.nig;

      const SymmetricOperator B_op = dense_operator(it.B, cfg.use_openmp);
      const SymmetricOperator B_z = reduced_operator(B_op, it.basis);
      const int inner_cap = cfg.inner_cap(it.basis.reduced_dim());
      const double c_norm = it.c.norm();
      const double zg_norm = it.zg.size() ? it.zg.norm() : 0.0;
      const Vector v_c = min_norm_constraint_step(it.J, it.c);

      bool accepted = false;
      int restarts = 0;
      // Iteration body; re-entered with a smaller radius when the current
      // one cannot produce an acceptable trial from any rung.
      while (!accepted) {
        const VerticalStep vs = vertical_step(v_c, beta);
        const Vector g_z =
            it.basis.Z.transpose() * (it.g + B_op.apply(vs.v));

        const ShiftSolveSet set = solve_all_shifts(
            B_z, g_z, ladder, cfg.xi, cfg.zeta, inner_cap, cfg.use_openmp);

        int j = -1;
        bool exhausted = false;
        try {
          j = select_initial(set, beta).j;
        } catch (const LadderExhaustedError&) {
          // A missing curvature-acceptable rung cannot be fixed by a radius
          // change — only a larger shift can cure it, so without extensions
          // left this fails loudly.  Anything else (capped runs) gets the
          // shrink-and-retry.
          if (!any_curvature_ok(set) && extensions_left == 0) throw;
          exhausted = true;
        }

        while (!exhausted) {
          const ShiftSolveResult& rung = set.results[static_cast<size_t>(j)];
          const StepDecomposition sd =
              compose_step(vs, it.c, it.g, B_op, it.basis, rung.u, g_z);

          const PenaltyUpdate pu = update_penalty(
              mu, sd.dq_F, sd.dq_H, sd.dq_N, cfg.nu, cfg.tau1, cfg.tau2);
          mu = pu.mu;

          const double phi_x = penalty_value(it.f, it.c, mu);
          const double dq = sd.dq_F + sd.dq_H + mu * sd.dq_N;

          const Vector x_trial = x + sd.d;
          const double f_trial = evaluate_f(p, x_trial);
          const Vector c_trial = evaluate_c(p, x_trial);
          ++rep.nif;
          const double phi_trial = penalty_value(f_trial, c_trial, mu);

          // Below the ratio's noise floor (microscopic steps right at the
          // stopping tolerance) the quotient carries no information, so fall
          // back to plain merit non-increase.  Growth of beta is reserved for
          // trials with a trustworthy ratio.
          double rho = kNaN;
          bool degenerate = false;
          try {
            rho = acceptance_ratio(phi_x, phi_trial, dq);
          } catch (const DegenerateModel&) {
            degenerate = true;
          }
          const bool accept_trial =
              degenerate ? (phi_trial <= phi_x) : (rho >= cfg.eta1);
          const bool very_successful = !degenerate && rho >= cfg.eta2;

          TrialRecord rec;
          rec.k = k;
          rec.restart = restarts;
          rec.j = j;
          rec.lambda = rung.lambda;
          rec.beta = beta;
          rec.mu = mu;
          rec.alpha = sd.alpha;
          rec.u_norm = sd.u_norm;
          rec.c_norm = c_norm;
          rec.zg_norm = zg_norm;
          rec.dq_N = sd.dq_N;
          rec.dq_F = sd.dq_F;
          rec.dq_H = sd.dq_H;
          rec.dq = dq;
          rec.phi_x = phi_x;
          rec.phi_trial = phi_trial;
          rec.rho = rho;
          rec.degenerate = degenerate;
          rec.advance_beta = kNaN;
          rec.beta_next = kNaN;

          if (accept_trial) {
            x = x_trial;
            if (very_successful) beta *= cfg.gamma2;
            rec.accepted = true;
            rec.beta_next = beta;
            rep.trace.push_back(rec);
            accepted = true;
            break;
          }

          // Rejected: move up the ladder without touching the radius; the
          // advanced rung's implied radius certifies the contraction.  An
          // empty horizontal step would reproduce the same trial at every
          // rung, so it goes straight to the radius restart.
          if (sd.u_norm == 0.0) {
            rec.advance_beta = cfg.gamma1 * beta;
            rep.trace.push_back(rec);
            exhausted = true;
          } else {
            try {
              const auto [j_next, implied] =
                  advance_on_failure(set, j, beta, cfg.gamma1);
              rec.advance_beta = implied;
              rep.trace.push_back(rec);
              j = j_next;
            } catch (const LadderExhaustedError&) {
              rec.advance_beta = cfg.gamma1 * beta;
              rep.trace.push_back(rec);
              exhausted = true;
            }
          }
        }

        if (accepted) break;

        if (extensions_left > 0) {
          // Optional escape hatch: one more rung may restore a usable
          // contraction at the current radius before it shrinks.
          ladder.extend();
          --extensions_left;
          continue;
        }

        beta *= cfg.gamma1;
        ++restarts;
        if (!(beta > cfg.beta_floor))
          throw LadderExhaustedError("radius shrank to nothing");
      }
    }
    rep.status = SolveStatus::IterationCap;
  } catch (const LadderExhaustedError&) {
    rep.status = SolveStatus::LadderExhausted;
  } catch (const RankDeficientError&) {
    rep.status = SolveStatus::RankDeficient;
  } catch (const EvaluationError&) {
    rep.status = SolveStatus::EvaluationError;
  }
  return rep;
}

KktResidual kkt_residual(const Problem& p, const Vector& x) {
  KktResidual r;
  const Vector g = p.eval_g(x);
  const Vector c = p.eval_c(x);
  const Matrix J = p.eval_J(x);
  const Vector s = least_squares_multipliers(J, g);
  r.stationarity = (g - J.transpose() * s).norm();
  r.feasibility = c.size() ? c.norm() : 0.0;
  return r;
}

}  // namespace ssarc
