#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ssarc/problem.hpp"
#include "ssarc/solver.hpp"

using namespace ssarc;

namespace {

bool same_double(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

// Unconstrained strictly convex quadratic; exact B makes the model perfect.
Problem convex_quadratic() {
  Matrix A(4, 4);
  A << 4, 1, 0, 0,
       1, 5, 1, 0,
       0, 1, 6, 1,
       0, 0, 1, 7;
  Vector b(4);
  b << 1, -2, 3, -4;
  Problem p;
  p.name = "QUAD4";
  p.n = 4;
  p.m = 0;
  p.x0 = Vector::Ones(4);
  p.eval_f = [A, b](const Vector& x) { return 0.5 * x.dot(A * x) - b.dot(x); };
  p.eval_g = [A, b](const Vector& x) { return (A * x - b).eval(); };
  p.eval_c = [](const Vector&) { return Vector(0); };
  p.eval_J = [](const Vector&) { return Matrix(0, 4); };
  p.eval_lagrangian_hessian = [A](const Vector&, const Vector&) { return A; };
  return p;
}

// One strongly negative curvature direction (curable only by a large shift)
// next to a single linear constraint.
Problem deep_valley() {
  Problem p;
  p.name = "VALLEY";
  p.n = 2;
  p.m = 1;
  p.x0 = Vector::Zero(2);
  p.x0 << 0.5, 0.1;
  p.eval_f = [](const Vector& x) {
    return -100.0 * x[1] * x[1] + std::pow(x[1], 4);
  };
  p.eval_g = [](const Vector& x) {
    return Vector{{0.0, -200.0 * x[1] + 4.0 * std::pow(x[1], 3)}};
  };
  p.eval_c = [](const Vector& x) { return Vector{{x[0]}}; };
  p.eval_J = [](const Vector&) {
    Matrix J(1, 2);
    J << 1, 0;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector&) {
    Matrix H = Matrix::Zero(2, 2);
    H(1, 1) = -200.0 + 12.0 * x[1] * x[1];
    return H;
  };
  return p;
}

void check_trace_invariants(const SolverReport& rep, const SolverConfig& cfg) {
  double mu_prev = 0.0;
  for (const TrialRecord& rec : rep.trace) {
    CAPTURE(rec.k);
    CAPTURE(rec.j);

    // Exact normal-decrease identity and the post-update domination.
    CHECK(std::abs(rec.dq_N - rec.alpha * rec.c_norm) <=
          1e-12 * std::max(1.0, rec.dq_N));
    CHECK(rec.dq >= cfg.nu * rec.mu * rec.dq_N - 1e-10);

    // Cubic lower bound on the reduced decrease.
    CHECK(rec.dq_H >=
          std::pow(rec.u_norm, 3) / (2.0 * cfg.t * rec.beta) - 1e-10);

    // Penalty weight never moves down, not even across rejected trials.
    CHECK(rec.mu >= mu_prev);
    mu_prev = rec.mu;

    CHECK(std::isnan(rec.rho) == rec.degenerate);

    if (rec.accepted) {
      CHECK(std::isnan(rec.advance_beta));
      if (rec.degenerate) {
        CHECK(rec.phi_trial <= rec.phi_x);
        CHECK(rec.beta_next == rec.beta);
      } else {
        CHECK(rec.phi_trial <= rec.phi_x - cfg.eta1 * rec.dq +
                                   1e-12 * std::max(1.0, std::abs(rec.phi_x)));
        CHECK(rec.phi_trial < rec.phi_x);
        if (rec.rho >= cfg.eta2) {
          CHECK(rec.beta_next == cfg.gamma2 * rec.beta);
        } else {
          CHECK(rec.beta_next == rec.beta);
        }
      }
    } else {
      CHECK(std::isnan(rec.beta_next));
      CHECK(rec.advance_beta <= cfg.gamma1 * rec.beta * (1 + 1e-12));
    }
  }

  // One trace record per trial evaluation; the start point is the +1.
  CHECK(rep.nif == static_cast<int>(rep.trace.size()) + 1);
  CHECK(static_cast<int>(rep.trace.size()) >= rep.nit);
}

}  // namespace

TEST_CASE("linear-equation systems converge in a handful of steps") {
  const SolverConfig cfg;
  const SolverReport booth = solve(*find_problem("BOOTH"), cfg);
  CHECK(booth.status == SolveStatus::Converged);
  CHECK(booth.res <= 1e-8);
  CHECK(booth.nit >= 1);
  CHECK(booth.nit <= 6);
  check_trace_invariants(booth, cfg);

  const SolverReport himmelba = solve(*find_problem("HIMMELBA"), cfg);
  CHECK(himmelba.status == SolveStatus::Converged);
  CHECK(himmelba.nit >= 1);
  CHECK(himmelba.nit <= 3);
}

TEST_CASE("an already-optimal start terminates before any step") {
  const Problem& p = *find_problem("BT3");
  const SolverReport rep = solve(p, *p.known_solution, SolverConfig{});
  CHECK(rep.status == SolveStatus::Converged);
  CHECK(rep.nit == 0);
  CHECK(rep.nif == 1);
  CHECK(rep.nig == 0);
  CHECK(rep.trace.empty());
}

TEST_CASE("curved constraint does not trap the step acceptance") {
  const SolverConfig cfg;
  const SolverReport rep = solve(*find_problem("MARATOS"), cfg);
  REQUIRE(rep.status == SolveStatus::Converged);
  Vector xs(2);
  xs << 1, 0;
  CHECK((rep.x - xs).norm() <= 1e-6);

  const KktResidual kkt = kkt_residual(*find_problem("MARATOS"), rep.x);
  CHECK(kkt.stationarity <= 1e-6);
  CHECK(kkt.feasibility <= 1e-8);
  check_trace_invariants(rep, cfg);
}

TEST_CASE("unconstrained convex quadratic with exact Hessian is quick") {
  const Problem p = convex_quadratic();
  const SolverReport rep = solve(p);
  CHECK(rep.status == SolveStatus::Converged);
  // A few iterations go to growing beta from its conservative start; after
  // that the selected shift bottoms out and the step is the Newton step.
  CHECK(rep.nit <= 6);
  // Against the closed-form minimizer A x = b.
  const Vector xs = Matrix(p.eval_lagrangian_hessian(p.x0, Vector(0)))
                        .ldlt()
                        .solve(Vector{{1, -2, 3, -4}});
  CHECK((rep.x - xs).norm() <= 1e-6);
}

TEST_CASE("trace bookkeeping holds on runs with many rejections") {
  const SolverConfig cfg;
  for (const char* name : {"BT3", "BT6", "BYRDSPHR", "HS6", "HS27", "RSNBRNE"}) {
    CAPTURE(name);
    const SolverReport rep = solve(*find_problem(name), cfg);
    REQUIRE(rep.status == SolveStatus::Converged);
    CHECK(rep.nig == rep.nit);
    check_trace_invariants(rep, cfg);
  }
}

TEST_CASE("identical inputs give identical runs") {
  SolverConfig cfg;
  const SolverReport a = solve(*find_problem("BT6"), cfg);
  const SolverReport b = solve(*find_problem("BT6"), cfg);

  REQUIRE(a.status == b.status);
  CHECK(a.nit == b.nit);
  CHECK(a.nif == b.nif);
  for (Index i = 0; i < a.x.size(); ++i) CHECK(a.x[i] == b.x[i]);
  REQUIRE(a.trace.size() == b.trace.size());
  for (size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(same_double(a.trace[i].rho, b.trace[i].rho));
    CHECK(a.trace[i].beta == b.trace[i].beta);
    CHECK(a.trace[i].mu == b.trace[i].mu);
    CHECK(a.trace[i].dq == b.trace[i].dq);
  }
}

TEST_CASE("parallel per-shift updates do not change the run") {
  SolverConfig serial_cfg;
  SolverConfig omp_cfg;
  omp_cfg.use_openmp = true;
  for (const char* name : {"GENHS28", "BT6", "HS78"}) {
    CAPTURE(name);
    const SolverReport a = solve(*find_problem(name), serial_cfg);
    const SolverReport b = solve(*find_problem(name), omp_cfg);
    CHECK(a.nit == b.nit);
    CHECK(a.nif == b.nif);
    REQUIRE(a.x.size() == b.x.size());
    for (Index i = 0; i < a.x.size(); ++i) CHECK(a.x[i] == b.x[i]);
  }
}

TEST_CASE("looser tolerance never needs more accepted steps") {
  SolverConfig tight;
  SolverConfig loose;
  loose.epsilon = 1e-4;
  const SolverReport a = solve(*find_problem("HS6"), tight);
  const SolverReport b = solve(*find_problem("HS6"), loose);
  REQUIRE(a.status == SolveStatus::Converged);
  REQUIRE(b.status == SolveStatus::Converged);
  CHECK(b.nit <= a.nit);
  CHECK(b.res <= 1e-4);
}

TEST_CASE("negative curvature beyond the ladder top fails loudly") {
  const Problem p = deep_valley();
  SolverConfig cfg;
  cfg.ladder_m = 2;  // top shift 1e-4, curvature is -200
  const SolverReport rep = solve(p, cfg);
  CHECK(rep.status == SolveStatus::LadderExhausted);
}

TEST_CASE("opt-in ladder extension cures an undersized ladder") {
  const Problem p = deep_valley();
  SolverConfig cfg;
  cfg.ladder_m = 2;
  cfg.extend_ladder = true;
  cfg.max_ladder_extensions = 20;  // reaches past the -200 curvature
  const SolverReport rep = solve(p, cfg);
  CHECK(rep.status == SolveStatus::Converged);
  // The valley bottoms where the quartic balances the concave term:
  // -200 x + 4 x^3 = 0 at x = sqrt(50).
  CHECK(std::abs(rep.x[1]) ==
        doctest::Approx(std::sqrt(50.0)).epsilon(1e-6));
  CHECK(std::abs(rep.x[0]) <= 1e-8);
}

TEST_CASE("non-finite evaluations are reported, not propagated") {
  Problem p = convex_quadratic();
  p.eval_f = [](const Vector&) { return std::nan(""); };
  const SolverReport rep = solve(p);
  CHECK(rep.status == SolveStatus::EvaluationError);
  CHECK(rep.nit == 0);
}

TEST_CASE("dependent constraint gradients are reported") {
  Problem p = deep_valley();
  p.m = 2;
  p.eval_c = [](const Vector& x) { return Vector{{x[0], 2 * x[0]}}; };
  p.eval_J = [](const Vector&) {
    Matrix J(2, 2);
    J << 1, 0, 2, 0;
    return J;
  };
  const SolverReport rep = solve(p);
  CHECK(rep.status == SolveStatus::RankDeficient);
}

TEST_CASE("iteration cap reports the point actually reached") {
  SolverConfig cfg;
  cfg.max_outer = 1;
  const SolverReport rep = solve(*find_problem("RSNBRNE"), cfg);
  CHECK(rep.status == SolveStatus::IterationCap);
  CHECK(rep.nit == 1);
  // The report's point is the post-step iterate, not the start.
  CHECK((rep.x - find_problem("RSNBRNE")->x0).norm() > 0.0);
}

TEST_CASE("independent optimality residuals") {
  SUBCASE("a known optimum scores clean") {
    const Problem& p = *find_problem("HS6");
    const KktResidual kkt = kkt_residual(p, *p.known_solution);
    CHECK(kkt.stationarity <= 1e-6);
    CHECK(kkt.feasibility <= 1e-6);
  }
  SUBCASE("an infeasible point shows its violation") {
    const Problem& p = *find_problem("BOOTH");
    CHECK(kkt_residual(p, p.x0).feasibility > 0.1);
  }
  SUBCASE("without constraints, stationarity is the gradient norm") {
    const Problem p = convex_quadratic();
    const KktResidual kkt = kkt_residual(p, p.x0);
    CHECK(kkt.stationarity == p.eval_g(p.x0).norm());
    CHECK(kkt.feasibility == 0.0);
  }
}

TEST_CASE("termination measures are honest at the returned point") {
  for (const char* name : {"BT11", "HS40", "HS52"}) {
    CAPTURE(name);
    const Problem& p = *find_problem(name);
    const SolverReport rep = solve(p);
    REQUIRE(rep.status == SolveStatus::Converged);
    // Recompute both parts of Res from scratch.
    CHECK(p.eval_c(rep.x).norm() <= 1e-8);
    const Matrix J = p.eval_J(rep.x);
    const NullspaceBasis b = nullspace_basis(J);
    CHECK((b.Z.transpose() * p.eval_g(rep.x)).norm() <= 1e-8);
  }
}
