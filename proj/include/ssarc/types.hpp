#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssarc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Geometric grid of regularization shifts, lambda[i+1] = psi * lambda[i].
struct ShiftLadder {
  std::vector<double> lambdas;
  double psi = 0.0;

  int top() const { return static_cast<int>(lambdas.size()) - 1; }
  double operator[](int i) const { return lambdas[static_cast<size_t>(i)]; }
  int size() const { return static_cast<int>(lambdas.size()); }

  // Appends one more rung (used by the opt-in extension path).
  void extend() { lambdas.push_back(lambdas.back() * psi); }
};

inline ShiftLadder make_ladder(double lambda0, double psi, int m) {
  if (!(lambda0 > 0.0) || !(psi > 1.0) || m < 0)
    throw std::invalid_argument("make_ladder: need lambda0 > 0, psi > 1, m >= 0");
  ShiftLadder l;
  l.psi = psi;
  l.lambdas.resize(static_cast<size_t>(m) + 1);
  l.lambdas[0] = lambda0;
  for (int i = 1; i <= m; ++i) l.lambdas[size_t(i)] = l.lambdas[size_t(i - 1)] * psi;
  return l;
}

struct SolverConfig {
  double beta0 = 1.0;
  double eta1 = 0.01;
  double eta2 = 0.75;
  double gamma1 = 0.1;
  double gamma2 = 5.0;
  double mu_init = 1.0;   // mu_{-1}
  double nu = 1e-4;
  double tau1 = 2.0;
  double tau2 = 1.0;
  double theta = 0.5;     // lower endpoint factor of the alpha interval (upper endpoint is used)
  double xi = 0.1;        // inexactness factor in the residual criterion
  double zeta = 1.0;      // inexactness exponent
  double t = std::sqrt(10.0);  // sampling parameter of the model-decrease bound
  double lambda0 = 1e-5;
  double psi = std::sqrt(10.0);
  int ladder_m = 30;
  double epsilon = 1e-8;
  int max_outer = 500;
  int max_inner = 0;      // 0: auto, 2*(n-m)+10
  bool extend_ladder = false;  // append rungs on exhaustion instead of going straight to the beta shrink
  int max_ladder_extensions = 8;
  double beta_floor = 1e-200;  // below this the beta-shrink restart gives up
  bool use_openmp = false;     // parallel per-shift updates + row-parallel matvec

  void validate() const {
    auto bad = [](bool c) { return !c; };
    if (bad(beta0 > 0) || bad(0 < eta1 && eta1 < eta2 && eta2 < 1) ||
        bad(0 < gamma1 && gamma1 < 1 && 1 < gamma2) || bad(mu_init > 0) ||
        bad(0 < nu && nu < 1) || bad(tau1 > 1) || bad(tau2 > 0) ||
        bad(0 < theta && theta <= 1) || bad(xi > 0) || bad(0 < zeta && zeta <= 1) ||
        bad(t >= 1) || bad(epsilon > 0) || bad(max_outer > 0))
      throw std::invalid_argument("SolverConfig: parameter out of range");
  }

  ShiftLadder ladder() const { return make_ladder(lambda0, psi, ladder_m); }
  int inner_cap(Index reduced_dim) const {
    return max_inner > 0 ? max_inner : static_cast<int>(2 * reduced_dim + 10);
  }
};

enum class SolveStatus {
  Converged,
  LadderExhausted,
  RankDeficient,
  IterationCap,
  EvaluationError,
};

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::LadderExhausted: return "LadderExhausted";
    case SolveStatus::RankDeficient: return "RankDeficient";
    case SolveStatus::IterationCap: return "IterationCap";
    case SolveStatus::EvaluationError: return "EvaluationError";
  }
  return "?";
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EvaluationError : Error { using Error::Error; };
struct RankDeficientError : Error { using Error::Error; };
struct LadderExhaustedError : Error { using Error::Error; };
struct NumericalBreakdown : Error { using Error::Error; };
struct ContractViolation : Error { using Error::Error; };
struct DegenerateModel : Error { using Error::Error; };

}  // namespace ssarc
