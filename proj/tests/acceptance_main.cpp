// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Run through ctest or directly; no arguments.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ssarc/bench.hpp"
#include "ssarc/problem.hpp"
#include "ssarc/shifted_cg.hpp"
#include "ssarc/solver.hpp"

using namespace ssarc;

namespace {

int failures = 0;
std::vector<std::string> notes;

void verdict(int number, const char* what, bool ok) {
  std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", number, what);
  if (!ok) ++failures;
  for (const std::string& n : notes) std::printf("         %s\n", n.c_str());
  notes.clear();
}

void note(const std::string& s) {
  if (notes.size() < 12) notes.push_back(s);
}

Vector perturbation(int which, Index n) {
  Vector d(n);
  for (Index i = 0; i < n; ++i)
    d[i] = std::sin(0.7 * static_cast<double>(which + 1) * (double(i) + 1.3));
  return d;
}

Matrix random_symmetric(std::mt19937& rng, Index n, double diag_shift) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix A(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = nd(rng);
  Matrix B = 0.5 * (A + A.transpose());
  B.diagonal().array() += diag_shift;
  return B;
}

// Plain single-shift CG with explicit residual vectors and the same
// stopping rule; shares no code with the multi-shift path.
bool reference_single_cg(const Matrix& B, const Vector& g, double lambda,
                         double xi, double zeta, int max_inner, Vector& u) {
  const Index n = g.size();
  u = Vector::Zero(n);
  Vector r = -g;
  Vector p = r;
  const double g_norm = g.norm();
  double rr = r.squaredNorm();
  for (int it = 0; it < max_inner; ++it) {
    const Vector q = B * p + lambda * p;
    const double pq = p.dot(q);
    if (!(pq > 0.0)) return false;
    const double a = rr / pq;
    u += a * p;
    r -= a * q;
    const double rr_new = r.squaredNorm();
    const double bound = xi * std::pow(std::min(g_norm, u.norm()), 1.0 + zeta);
    if (std::sqrt(rr_new) <= bound) return true;
    p = r + (rr_new / rr) * p;
    rr = rr_new;
  }
  return true;
}

}  // namespace

int main() {
  const SolverConfig cfg;  // defaults throughout; criteria pin them
  const std::vector<Problem>& collection = builtin_collection();

  // One full sweep feeds criteria 1, 2, 5, 6, 7 and 9.
  std::vector<const Problem*> all;
  for (const Problem& p : collection) all.push_back(&p);
  const auto sweep_t0 = std::chrono::steady_clock::now();
  std::vector<SolverReport> reports;
  for (const Problem* p : all) reports.push_back(solve(*p, cfg));
  const double sweep_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_t0)
          .count();

  // 1: every built-in converges to Res <= 1e-8 inside the iteration cap.
  {
    bool ok = true;
    for (size_t i = 0; i < all.size(); ++i) {
      const SolverReport& r = reports[i];
      if (r.status != SolveStatus::Converged || r.res > 1e-8 ||
          r.nit > cfg.max_outer) {
        ok = false;
        note(all[i]->name + ": " + to_string(r.status) +
             ", res=" + std::to_string(r.res));
      }
    }
    if (sweep_s >= 60.0) {
      ok = false;
      note("sweep took " + std::to_string(sweep_s) + " s");
    }
    std::string what = "all " + std::to_string(all.size()) +
                       " built-ins converge to 1e-8 (sweep " +
                       std::to_string(sweep_s).substr(0, 5) + " s < 60 s)";
    verdict(1, what.c_str(), ok);
  }

  // 2: iteration counts within 3x of the bundled reference table.
  {
    bool ok = true;
    std::ifstream in(std::string(SSARC_DATA_DIR) + "/reference_runs.csv");
    std::stringstream ss;
    ss << in.rdbuf();
    std::vector<RunRecord> reference;
    try {
      reference = parse_csv(ss.str());
    } catch (const Error& e) {
      ok = false;
      note(std::string("reference table unreadable: ") + e.what());
    }
    if (reference.size() < 25) {
      ok = false;
      note("only " + std::to_string(reference.size()) + " reference rows");
    }
    auto nit_of = [&](const std::string& name) -> int {
      for (size_t i = 0; i < all.size(); ++i)
        if (all[i]->name == name) return reports[i].nit;
      return -1;
    };
    for (const RunRecord& ref : reference) {
      const int nit = nit_of(ref.problem);
      if (nit < 0) {
        ok = false;
        note(ref.problem + ": reference row without a built-in");
        continue;
      }
      if (nit > 3 * ref.nit || (ref.nit >= 1 && nit < 1)) {
        ok = false;
        note(ref.problem + ": nit " + std::to_string(nit) + " vs reference " +
             std::to_string(ref.nit));
      }
    }
    const struct {
      const char* name;
      int cap;
    } spots[] = {{"BOOTH", 6}, {"HIMMELBA", 3}, {"MARATOS", 9}, {"BT3", 12}};
    for (const auto& s : spots) {
      if (nit_of(s.name) > s.cap) {
        ok = false;
        note(std::string(s.name) + ": nit " + std::to_string(nit_of(s.name)) +
             " > " + std::to_string(s.cap));
      }
    }
    verdict(2, "iteration counts within 3x of the reference table", ok);
  }

  // 3: multi-shift solutions match a dense solve and an independent CG.
  {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> dim_d(2, 30);
    std::uniform_real_distribution<double> shift_d(-4.0, 4.0);
    std::normal_distribution<double> nd(0.0, 1.0);
    const ShiftLadder ladder = make_ladder(cfg.lambda0, cfg.psi, cfg.ladder_m);
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const Index n = dim_d(rng);
      const Matrix B = random_symmetric(rng, n, shift_d(rng));
      Vector g(n);
      for (Index i = 0; i < n; ++i) g[i] = nd(rng);
      const int cap = static_cast<int>(2 * n + 10);
      const ShiftSolveSet set =
          solve_all_shifts(dense_operator(B), g, ladder, cfg.xi, cfg.zeta, cap);
      for (const ShiftSolveResult& r : set.results) {
        if (!r.curvature_ok) continue;
        ++checked;
        if (!r.converged) {
          ok = false;
          note("trial " + std::to_string(trial) + " shift " +
               std::to_string(r.shift_index) + ": not converged at cap");
          continue;
        }
        const Matrix S = B + r.lambda * Matrix::Identity(n, n);
        const Vector u_dense = S.fullPivLu().solve(-g);
        const double bound =
            cfg.xi * std::pow(std::min(g.norm(), r.u.norm()), 1.0 + cfg.zeta);
        // The bound is checked up to the evaluation floor of the explicit
        // residual; top-of-ladder solutions sit below what doubles can show.
        const double tol = bound * (1 + 1e-8) + 1e-10 * std::max(1.0, g.norm());
        if ((S * (r.u - u_dense)).norm() > tol) {
          ok = false;
          note("trial " + std::to_string(trial) + " shift " +
               std::to_string(r.shift_index) + ": dense mismatch");
        }
        Vector u_ref;
        if (!reference_single_cg(B, g, r.lambda, cfg.xi, cfg.zeta, cap, u_ref) ||
            (r.u - u_ref).norm() > 1e-8 * std::max(1.0, u_ref.norm())) {
          ok = false;
          note("trial " + std::to_string(trial) + " shift " +
               std::to_string(r.shift_index) + ": single-shift CG mismatch");
        }
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs >= 5.0) {
      ok = false;
      note("took " + std::to_string(secs) + " s");
    }
    if (checked == 0) ok = false;
    std::string what = "50-matrix shifted-solver sweep (" +
                       std::to_string(checked) +
                       " solutions vs dense + independent CG)";
    verdict(3, what.c_str(), ok);
  }

  // 4: curvature flags only fire when an eigenvalue says so.
  {
    bool ok = true;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim_d(2, 30);
    std::uniform_real_distribution<double> eig_d(-5.0, 5.0);
    std::normal_distribution<double> nd(0.0, 1.0);
    const ShiftLadder ladder = make_ladder(cfg.lambda0, cfg.psi, cfg.ladder_m);
    int flagged = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const Index n = dim_d(rng);
      Vector eigs(n);
      for (Index i = 0; i < n; ++i) eigs[i] = eig_d(rng);
      if (trial % 2 == 0) eigs[0] = -std::abs(eigs[0]) - 0.5;  // force indefinite
      Matrix G(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) G(i, j) = nd(rng);
      const Matrix Q = Eigen::HouseholderQR<Matrix>(G).householderQ();
      const Matrix B = Q * eigs.asDiagonal() * Q.transpose();
      Vector g(n);
      for (Index i = 0; i < n; ++i) g[i] = nd(rng);
      const ShiftSolveSet set = solve_all_shifts(
          dense_operator(B), g, ladder, cfg.xi, cfg.zeta, int(2 * n + 10));
      const double lam_min = eigs.minCoeff();
      for (const ShiftSolveResult& r : set.results) {
        if (r.curvature_ok) continue;
        ++flagged;
        if (!(lam_min + r.lambda < 1e-10)) {
          ok = false;
          note("trial " + std::to_string(trial) + ": false alarm at shift " +
               std::to_string(r.lambda) + ", lambda_min " +
               std::to_string(lam_min));
        }
      }
    }
    if (flagged == 0) {
      ok = false;
      note("no flags raised; the check never engaged");
    }
    std::string what = "curvature flags sound against known eigenvalues (" +
                       std::to_string(flagged) + " flags, 0 false alarms)";
    verdict(4, what.c_str(), ok);
  }

  // 5: model-decrease identities on every benchmark trial.
  {
    bool ok = true;
    long trials = 0;
    for (size_t i = 0; i < all.size(); ++i) {
      for (const TrialRecord& rec : reports[i].trace) {
        ++trials;
        if (std::abs(rec.dq_N - rec.alpha * rec.c_norm) >
            1e-12 * std::max(1.0, rec.dq_N)) {
          ok = false;
          note(all[i]->name + " k=" + std::to_string(rec.k) +
               ": dq_N != alpha*||c||");
        }
        const double cubic =
            std::pow(rec.u_norm, 3) / (2.0 * cfg.t * rec.beta);
        if (rec.dq_H < cubic - 1e-10) {
          ok = false;
          note(all[i]->name + " k=" + std::to_string(rec.k) +
               ": dq_H below the cubic bound");
        }
        if (rec.dq < cfg.nu * rec.mu * rec.dq_N - 1e-10) {
          ok = false;
          note(all[i]->name + " k=" + std::to_string(rec.k) +
               ": dq below nu*mu*dq_N");
        }
      }
    }
    std::string what = "model-decrease invariants on all " +
                       std::to_string(trials) + " benchmark trials";
    verdict(5, what.c_str(), ok);
  }

  // 6: accepted steps actually lower the merit by the promised amount.
  {
    bool ok = true;
    long accepted = 0;
    for (size_t i = 0; i < all.size(); ++i) {
      for (const TrialRecord& rec : reports[i].trace) {
        if (!rec.accepted) continue;
        ++accepted;
        const double slack = 1e-12 * std::max(1.0, std::abs(rec.phi_x));
        if (rec.phi_trial > rec.phi_x - cfg.eta1 * rec.dq + slack) {
          ok = false;
          note(all[i]->name + " k=" + std::to_string(rec.k) +
               ": merit decrease short of eta1*dq");
        }
      }
    }
    std::string what = "merit monotonicity on all " +
                       std::to_string(accepted) + " accepted steps";
    verdict(6, what.c_str(), ok);
  }

  // 7: regularization bookkeeping.
  {
    bool ok = true;
    long rejections = 0, expansions = 0;
    for (size_t i = 0; i < all.size(); ++i) {
      for (const TrialRecord& rec : reports[i].trace) {
        if (!rec.accepted) {
          ++rejections;
          if (rec.advance_beta > cfg.gamma1 * rec.beta * (1 + 1e-12)) {
            ok = false;
            note(all[i]->name + " k=" + std::to_string(rec.k) +
                 ": rejection kept beta too large");
          }
        } else if (rec.rho >= cfg.eta2) {  // NaN rho never compares true
          ++expansions;
          if (rec.beta_next != cfg.gamma2 * rec.beta) {
            ok = false;
            note(all[i]->name + " k=" + std::to_string(rec.k) +
                 ": beta_next != gamma2*beta");
          }
        }
      }
    }
    std::string what =
        "beta bookkeeping (" + std::to_string(rejections) + " rejections, " +
        std::to_string(expansions) + " expansions)";
    verdict(7, what.c_str(), ok);
  }

  // 8: analytic derivatives vs central differences, x0 plus 3 perturbations.
  {
    bool ok = true;
    for (const Problem& p : collection) {
      const double scale = std::max(1.0, p.x0.norm());
      for (int which = 0; which < 4; ++which) {
        Vector x = p.x0;
        if (which > 0) x += 0.05 * scale * perturbation(which, p.n);
        const DerivativeReport rep = check_derivatives(p, x, 1e-6);
        if (!(rep.max_error() < 1e-5)) {
          ok = false;
          note(p.name + " point " + std::to_string(which) + ": error " +
               std::to_string(rep.max_error()));
        }
      }
    }
    verdict(8, "derivatives within 1e-5 of central differences", ok);
  }

  // 9: independent optimality measures at every final point.
  {
    bool ok = true;
    int located = 0;
    for (size_t i = 0; i < all.size(); ++i) {
      const Problem& p = *all[i];
      const SolverReport& r = reports[i];
      if (r.status != SolveStatus::Converged) continue;
      const KktResidual kkt = kkt_residual(p, r.x);
      if (kkt.stationarity > 1e-6 || kkt.feasibility > 1e-8) {
        ok = false;
        note(p.name + ": kkt " + std::to_string(kkt.stationarity) + " / " +
             std::to_string(kkt.feasibility));
      }
      if (p.known_solution && !p.multiple_minimizers) {
        ++located;
        if ((r.x - *p.known_solution).norm() > 1e-5) {
          ok = false;
          note(p.name + ": final point " +
               std::to_string((r.x - *p.known_solution).norm()) +
               " from the known solution");
        }
      }
    }
    std::string what = "final points optimal (kkt on all, location on " +
                       std::to_string(located) + " unique optima)";
    verdict(9, what.c_str(), ok);
  }

  // 10: scale boundary of the reproduction.
  verdict(10,
          "CPU-time columns and n > 50 instances are out of scope by design "
          "(not reproduced)",
          true);

  if (failures == 0) {
    std::printf("acceptance: all criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
