#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssarc/types.hpp"

namespace ssarc {

// Equality-constrained problem: minimize f(x) s.t. c(x) = 0, c: R^n -> R^m.
// Derivatives are analytic; the Lagrangian Hessian is exposed directly as
// H(x, s) = grad^2 f - sum_i s_i grad^2 c_i to avoid storing m dense Hessians.
struct Problem {
  std::string name;
  int n = 0;
  int m = 0;
  Vector x0;
  std::function<double(const Vector&)> eval_f;
  std::function<Vector(const Vector&)> eval_g;
  std::function<Vector(const Vector&)> eval_c;
  std::function<Matrix(const Vector&)> eval_J;
  std::function<Matrix(const Vector&, const Vector&)> eval_lagrangian_hessian;
  std::optional<Vector> known_solution;
  // Problems with several global minimizers (the final-point check is skipped
  // for these; residual-based checks still apply).
  bool multiple_minimizers = false;
};

// Hand-coded analytic collection mirroring the desk-scale rows of the
// reference results table. Immutable after construction.
const std::vector<Problem>& builtin_collection();

// Case-insensitive lookup; nullptr when absent.
const Problem* find_problem(const std::string& name);

struct DerivativeReport {
  double gradient_error = 0.0;  // max relative error vs central differences
  double jacobian_error = 0.0;
  double hessian_error = 0.0;
  double max_error() const {
    return std::max({gradient_error, jacobian_error, hessian_error});
  }
};

// Central-difference check of g against f, J against c, and H(x,s) against
// the gradient of the Lagrangian at fixed random multipliers.
DerivativeReport check_derivatives(const Problem& p, const Vector& x, double h);

}  // namespace ssarc
