#include "ssarc/problem.hpp"

#include <cctype>
#include <cmath>

namespace ssarc {
namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

const double kSqrt2 = std::sqrt(2.0);

// BOOTH: linear feasibility posed as equations, f == 0.  Solution (1, 3).
Problem booth() {
  Problem p;
  p.name = "BOOTH";
  p.n = 2;
  p.m = 2;
  p.x0 = vec({0, 0});
  p.eval_f = [](const Vector&) { return 0.0; };
  p.eval_g = [](const Vector&) { return Vector::Zero(2).eval(); };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] + 2 * x[1] - 7, 2 * x[0] + x[1] - 5});
  };
  p.eval_J = [](const Vector&) {
    Matrix J(2, 2);
    J << 1, 2, 2, 1;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector&) {
    return Matrix::Zero(2, 2).eval();
  };
  p.known_solution = vec({1, 3});
  return p;
}

// Boggs-Tolle 1: f = 100||x||^2 - x1 - 100 on the unit circle, which is
// f = -x1 up to a constant, so the optimum is (1, 0).  The near-origin start
// makes the first vertical step much longer than the trust region.
Problem bt1() {
  Problem p;
  p.name = "BT1";
  p.n = 2;
  p.m = 1;
  p.x0 = vec({0.08, 0.06});
  p.eval_f = [](const Vector& x) {
    return 100 * (x[0] * x[0] + x[1] * x[1]) - x[0] - 100;
  };
  p.eval_g = [](const Vector& x) { return vec({200 * x[0] - 1, 200 * x[1]}); };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] * x[0] + x[1] * x[1] - 1});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(1, 2);
    J << 2 * x[0], 2 * x[1];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    return ((200 - 2 * s[0]) * Matrix::Identity(2, 2)).eval();
  };
  p.known_solution = vec({1, 0});
  return p;
}

// Boggs-Tolle 2: cubic-quartic objective, one quartic constraint.
Problem bt2() {
  Problem p;
  p.name = "BT2";
  p.n = 3;
  p.m = 1;
  p.x0 = vec({1, 1, 1});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] - 1, b = x[0] - x[1], d = x[1] - x[2];
    return a * a + b * b + d * d * d * d;
  };
  p.eval_g = [](const Vector& x) {
    const double t = std::pow(x[1] - x[2], 3);
    return vec({2 * (x[0] - 1) + 2 * (x[0] - x[1]), -2 * (x[0] - x[1]) + 4 * t,
                -4 * t});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] * (1 + x[1] * x[1]) + std::pow(x[2], 4) - 4 - 3 * kSqrt2});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(1, 3);
    J << 1 + x[1] * x[1], 2 * x[0] * x[1], 4 * std::pow(x[2], 3);
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    const double q = 12 * (x[1] - x[2]) * (x[1] - x[2]);
    Matrix Hf(3, 3), Hc(3, 3);
    Hf << 4, -2, 0, -2, 2 + q, -q, 0, -q, q;
    Hc << 0, 2 * x[1], 0, 2 * x[1], 2 * x[0], 0, 0, 0, 12 * x[2] * x[2];
    return (Hf - s[0] * Hc).eval();
  };
  p.known_solution =
      vec({1.1048590197333166, 1.1966741822882572, 1.535262260325326});
  return p;
}

// Shared quadratic used by BT3 and HS51 (they differ in constraints/start).
Matrix quad51_hessian() {
  Matrix M = Matrix::Zero(5, 5);
  M(0, 0) = 2;
  M(0, 1) = M(1, 0) = -2;
  M(1, 1) = 4;
  M(1, 2) = M(2, 1) = 2;
  M(2, 2) = 2;
  M(3, 3) = 2;
  M(4, 4) = 2;
  return M;
}

double quad51_f(const Vector& x) {
  const double a = x[0] - x[1], b = x[1] + x[2] - 2, c = x[3] - 1,
               d = x[4] - 1;
  return a * a + b * b + c * c + d * d;
}

Vector quad51_g(const Vector& x) {
  return vec({2 * (x[0] - x[1]), -2 * (x[0] - x[1]) + 2 * (x[1] + x[2] - 2),
              2 * (x[1] + x[2] - 2), 2 * (x[3] - 1), 2 * (x[4] - 1)});
}

// Boggs-Tolle 3: the HS51 objective over the homogeneous HS52 constraints.
// Optimum is (-33, 11, 27, -5, 11)/43 with f* = 176/43, matching the value
// published for this problem.
Problem bt3() {
  Problem p;
  p.name = "BT3";
  p.n = 5;
  p.m = 3;
  p.x0 = vec({2, 2, 2, 2, 2});
  p.eval_f = quad51_f;
  p.eval_g = quad51_g;
  p.eval_c = [](const Vector& x) {
    return vec({x[0] + 3 * x[1], x[2] + x[3] - 2 * x[4], x[1] - x[4]});
  };
  p.eval_J = [](const Vector&) {
    Matrix J(3, 5);
    J << 1, 3, 0, 0, 0, 0, 0, 1, 1, -2, 0, 1, 0, 0, -1;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector&) {
    return quad51_hessian();
  };
  p.known_solution =
      vec({-33.0 / 43, 11.0 / 43, 27.0 / 43, -5.0 / 43, 11.0 / 43});
  return p;
}

// Boggs-Tolle 4: cubic objective over a sphere/plane intersection.  The
// circle carries two strict local minima; from the standard (feasible) start
// the iteration settles at the f = 3.289 one, not the global minimum near
// f = -45.5, so the stored point is that local solution.
Problem bt4() {
  Problem p;
  p.name = "BT4";
  p.n = 3;
  p.m = 2;
  p.x0 = vec({3.1494, 1.4523, -3.6017});
  p.eval_f = [](const Vector& x) { return x[0] - x[1] + std::pow(x[1], 3); };
  p.eval_g = [](const Vector& x) {
    return vec({1, -1 + 3 * x[1] * x[1], 0});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x.squaredNorm() - 25, x.sum() - 1});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(2, 3);
    J << 2 * x[0], 2 * x[1], 2 * x[2], 1, 1, 1;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    Matrix H = Matrix::Zero(3, 3);
    H(1, 1) = 6 * x[1];
    H -= s[0] * 2 * Matrix::Identity(3, 3);
    return H;
  };
  p.known_solution =
      vec({3.631954726776457, 0.7267306456950188, -3.3586853724714754});
  p.multiple_minimizers = true;
  return p;
}

// Boggs-Tolle 5 (HS63 equality part): indefinite quadratic, one linear and
// one sphere constraint.  f* = 961.71517213.
Problem bt5() {
  Problem p;
  p.name = "BT5";
  p.n = 3;
  p.m = 2;
  p.x0 = vec({2, 2, 2});
  p.eval_f = [](const Vector& x) {
    return 1000 - x[0] * x[0] - 2 * x[1] * x[1] - x[2] * x[2] -
           x[0] * x[1] - x[0] * x[2];
  };
  p.eval_g = [](const Vector& x) {
    return vec({-2 * x[0] - x[1] - x[2], -4 * x[1] - x[0], -2 * x[2] - x[0]});
  };
  p.eval_c = [](const Vector& x) {
    return vec({8 * x[0] + 14 * x[1] + 7 * x[2] - 56, x.squaredNorm() - 25});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(2, 3);
    J << 8, 14, 7, 2 * x[0], 2 * x[1], 2 * x[2];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    Matrix Hf(3, 3);
    Hf << -2, -1, -1, -1, -4, 0, -1, 0, -2;
    return (Hf - s[1] * 2 * Matrix::Identity(3, 3)).eval();
  };
  p.known_solution =
      vec({3.51212134187472, 0.216987941515223, 3.5521711548270165});
  return p;
}

// Boggs-Tolle 6 (HS77 system): sixth-degree objective, trigonometric and
// quartic constraints.  f* = 0.24150513.
Problem bt6() {
  Problem p;
  p.name = "BT6";
  p.n = 5;
  p.m = 2;
  p.x0 = vec({2, 2, 2, 2, 2});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] - 1, b = x[0] - x[1], c = x[2] - 1;
    return a * a + b * b + c * c + std::pow(x[3] - 1, 4) +
           std::pow(x[4] - 1, 6);
  };
  p.eval_g = [](const Vector& x) {
    return vec({2 * (x[0] - 1) + 2 * (x[0] - x[1]), -2 * (x[0] - x[1]),
                2 * (x[2] - 1), 4 * std::pow(x[3] - 1, 3),
                6 * std::pow(x[4] - 1, 5)});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x[3] * x[0] * x[0] + std::sin(x[3] - x[4]) - 2 * kSqrt2,
                x[1] + std::pow(x[2], 4) * x[3] * x[3] - 8 - kSqrt2});
  };
  p.eval_J = [](const Vector& x) {
    const double cs = std::cos(x[3] - x[4]);
    Matrix J = Matrix::Zero(2, 5);
    J(0, 0) = 2 * x[0] * x[3];
    J(0, 3) = x[0] * x[0] + cs;
    J(0, 4) = -cs;
    J(1, 1) = 1;
    J(1, 2) = 4 * std::pow(x[2], 3) * x[3] * x[3];
    J(1, 3) = 2 * std::pow(x[2], 4) * x[3];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    Matrix Hf = Matrix::Zero(5, 5);
    Hf(0, 0) = 4;
    Hf(0, 1) = Hf(1, 0) = -2;
    Hf(1, 1) = 2;
    Hf(2, 2) = 2;
    Hf(3, 3) = 12 * (x[3] - 1) * (x[3] - 1);
    Hf(4, 4) = 30 * std::pow(x[4] - 1, 4);
    const double sn = std::sin(x[3] - x[4]);
    Matrix H1 = Matrix::Zero(5, 5);
    H1(0, 0) = 2 * x[3];
    H1(0, 3) = H1(3, 0) = 2 * x[0];
    H1(3, 3) = -sn;
    H1(3, 4) = H1(4, 3) = sn;
    H1(4, 4) = -sn;
    Matrix H2 = Matrix::Zero(5, 5);
    H2(2, 2) = 12 * x[2] * x[2] * x[3] * x[3];
    H2(2, 3) = H2(3, 2) = 8 * std::pow(x[2], 3) * x[3];
    H2(3, 3) = 2 * std::pow(x[2], 4);
    return (Hf - s[0] * H1 - s[1] * H2).eval();
  };
  p.known_solution = vec({1.1661721897092985, 1.1821113888027042,
                          1.3802570431454597, 1.5060362736230457,
                          0.6109201960430908});
  return p;
}

// Boggs-Tolle 9 (HS39): maximize x1 along a cubic/quadratic curve; the slack
// variables x3, x4 vanish at the optimum (1, 1, 0, 0).
Problem bt9() {
  Problem p;
  p.name = "BT9";
  p.n = 4;
  p.m = 2;
  p.x0 = vec({2, 2, 2, 2});
  p.eval_f = [](const Vector& x) { return -x[0]; };
  p.eval_g = [](const Vector&) { return vec({-1, 0, 0, 0}); };
  p.eval_c = [](const Vector& x) {
    return vec({x[1] - std::pow(x[0], 3) - x[2] * x[2],
                x[0] * x[0] - x[1] - x[3] * x[3]});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J = Matrix::Zero(2, 4);
    J(0, 0) = -3 * x[0] * x[0];
    J(0, 1) = 1;
    J(0, 2) = -2 * x[2];
    J(1, 0) = 2 * x[0];
    J(1, 1) = -1;
    J(1, 3) = -2 * x[3];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    Matrix H = Matrix::Zero(4, 4);
    H(0, 0) = 6 * s[0] * x[0] - 2 * s[1];
    H(2, 2) = 2 * s[0];
    H(3, 3) = 2 * s[1];
    return H;
  };
  p.known_solution = vec({1, 1, 0, 0});
  return p;
}

// Shared system for BT11 and HS79: these two names carry the same chained
// quartic objective and mixed constraints in the source collections, so both
// entries are kept and produce identical runs.
Problem hs79_system(const char* name) {
  Problem p;
  p.name = name;
  p.n = 5;
  p.m = 3;
  p.x0 = vec({2, 2, 2, 2, 2});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] - 1, b = x[0] - x[1], c = x[1] - x[2];
    return a * a + b * b + c * c + std::pow(x[2] - x[3], 4) +
           std::pow(x[3] - x[4], 4);
  };
  p.eval_g = [](const Vector& x) {
    const double t1 = std::pow(x[2] - x[3], 3), t2 = std::pow(x[3] - x[4], 3);
    return vec({2 * (x[0] - 1) + 2 * (x[0] - x[1]),
                -2 * (x[0] - x[1]) + 2 * (x[1] - x[2]),
                -2 * (x[1] - x[2]) + 4 * t1, -4 * t1 + 4 * t2, -4 * t2});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] + x[1] * x[1] + std::pow(x[2], 3) - 2 - 3 * kSqrt2,
                x[1] - x[2] * x[2] + x[3] + 2 - 2 * kSqrt2,
                x[0] * x[4] - 2});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J = Matrix::Zero(3, 5);
    J(0, 0) = 1;
    J(0, 1) = 2 * x[1];
    J(0, 2) = 3 * x[2] * x[2];
    J(1, 1) = 1;
    J(1, 2) = -2 * x[2];
    J(1, 3) = 1;
    J(2, 0) = x[4];
    J(2, 4) = x[0];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    const double q1 = 12 * (x[2] - x[3]) * (x[2] - x[3]);
    const double q2 = 12 * (x[3] - x[4]) * (x[3] - x[4]);
    Matrix Hf(5, 5);
    Hf << 4, -2, 0, 0, 0, -2, 4, -2, 0, 0, 0, -2, 2 + q1, -q1, 0, 0, 0, -q1,
        q1 + q2, -q2, 0, 0, 0, -q2, q2;
    Matrix H1 = Matrix::Zero(5, 5);
    H1(1, 1) = 2;
    H1(2, 2) = 6 * x[2];
    Matrix H2 = Matrix::Zero(5, 5);
    H2(2, 2) = -2;
    Matrix H3 = Matrix::Zero(5, 5);
    H3(0, 4) = H3(4, 0) = 1;
    return (Hf - s[0] * H1 - s[1] * H2 - s[2] * H3).eval();
  };
  p.known_solution = vec({1.1911274563110514, 1.3626031649617423,
                          1.4728179315120877, 1.635016619167993,
                          1.6790814361664077});
  return p;
}

// Boggs-Tolle 12 (HS50 system): banded quartic chain with three overlapping
// linear constraints and a deliberately far-out start.  Optimum is all ones.
Problem bt12() {
  Problem p;
  p.name = "BT12";
  p.n = 5;
  p.m = 3;
  p.x0 = vec({35, -31, 11, 5, -5});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] - x[1], b = x[1] - x[2], d = x[3] - x[4];
    return a * a + b * b + std::pow(x[2] - x[3], 4) + d * d;
  };
  p.eval_g = [](const Vector& x) {
    const double t = std::pow(x[2] - x[3], 3);
    return vec({2 * (x[0] - x[1]), -2 * (x[0] - x[1]) + 2 * (x[1] - x[2]),
                -2 * (x[1] - x[2]) + 4 * t, -4 * t + 2 * (x[3] - x[4]),
                -2 * (x[3] - x[4])});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] + 2 * x[1] + 3 * x[2] - 6, x[1] + 2 * x[2] + 3 * x[3] - 6,
                x[2] + 2 * x[3] + 3 * x[4] - 6});
  };
  p.eval_J = [](const Vector&) {
    Matrix J = Matrix::Zero(3, 5);
    J << 1, 2, 3, 0, 0, 0, 1, 2, 3, 0, 0, 0, 1, 2, 3;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector&) {
    const double q = 12 * (x[2] - x[3]) * (x[2] - x[3]);
    Matrix H(5, 5);
    H << 2, -2, 0, 0, 0, -2, 4, -2, 0, 0, 0, -2, 2 + q, -q, 0, 0, 0, -q, q + 2,
        -2, 0, 0, 0, -2, 2;
    return H;
  };
  p.known_solution = vec({1, 1, 1, 1, 1});
  return p;
}

// Two radius-3 spheres centred at the origin and at (1, 0, 0); maximize
// x1 + x2 + x3 on their intersection circle.  The start sits far along the
// x1 axis where the two gradients are nearly parallel, which forces the
// trust region to shrink before any vertical step is acceptable.
Problem byrdsphr() {
  Problem p;
  p.name = "BYRDSPHR";
  p.n = 3;
  p.m = 2;
  p.x0 = vec({5, 1e-4, -1e-4});
  p.eval_f = [](const Vector& x) { return -x.sum(); };
  p.eval_g = [](const Vector&) { return (-Vector::Ones(3)).eval(); };
  p.eval_c = [](const Vector& x) {
    Vector sh = x;
    sh[0] -= 1;
    return vec({x.squaredNorm() - 9, sh.squaredNorm() - 9});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(2, 3);
    J.row(0) = 2 * x.transpose();
    J.row(1) = 2 * x.transpose();
    J(1, 0) -= 2;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    return (-2 * (s[0] + s[1]) * Matrix::Identity(3, 3)).eval();
  };
  p.known_solution = vec({0.5, std::sqrt(4.375), std::sqrt(4.375)});
  return p;
}

// Chained HS28: f sums squared neighbour pairs over ten variables, with
// eight overlapping linear constraints.
Problem genhs28() {
  Problem p;
  p.name = "GENHS28";
  p.n = 10;
  p.m = 8;
  Vector x0 = Vector::Ones(10);
  x0[0] = -4;
  p.x0 = x0;
  p.eval_f = [](const Vector& x) {
    double v = 0;
    for (int i = 0; i + 1 < 10; ++i) {
      const double t = x[i] + x[i + 1];
      v += t * t;
    }
    return v;
  };
  p.eval_g = [](const Vector& x) {
    Vector r = Vector::Zero(10);
    for (int i = 0; i + 1 < 10; ++i) {
      const double t = 2 * (x[i] + x[i + 1]);
      r[i] += t;
      r[i + 1] += t;
    }
    return r;
  };
  p.eval_c = [](const Vector& x) {
    Vector r(8);
    for (int i = 0; i < 8; ++i) r[i] = x[i] + 2 * x[i + 1] + 3 * x[i + 2] - 1;
    return r;
  };
  p.eval_J = [](const Vector&) {
    Matrix J = Matrix::Zero(8, 10);
    for (int i = 0; i < 8; ++i) {
      J(i, i) = 1;
      J(i, i + 1) = 2;
      J(i, i + 2) = 3;
    }
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector&) {
    Matrix H = Matrix::Zero(10, 10);
    for (int i = 0; i + 1 < 10; ++i) {
      H(i, i) += 2;
      H(i + 1, i + 1) += 2;
      H(i, i + 1) += 2;
      H(i + 1, i) += 2;
    }
    return H;
  };
  p.known_solution = vec({0.1642122251361711, -0.0520476094411943,
                          0.3132943312487392, 0.1418196489812387,
                          0.1343554569295945, 0.1964898123865241,
                          0.1575549727657858, 0.1628000806939681,
                          0.1722816219487593, 0.1642122251361711});
  return p;
}

// Himmelblau's linear system variant: two independent linear equations with
// a near-feasible start, so one full Newton-like step lands exactly on the
// unique feasible point (0, 1).
Problem himmelba() {
  Problem p;
  p.name = "HIMMELBA";
  p.n = 2;
  p.m = 2;
  p.x0 = vec({0.5, 0.5});
  p.eval_f = [](const Vector&) { return 0.0; };
  p.eval_g = [](const Vector&) { return Vector::Zero(2).eval(); };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] + 2 * x[1] - 2, 2 * x[0] + x[1] - 1});
  };
  p.eval_J = [](const Vector&) {
    Matrix J(2, 2);
    J << 1, 2, 2, 1;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector&) {
    return Matrix::Zero(2, 2).eval();
  };
  p.known_solution = vec({0, 1});
  return p;
}

// Himmelblau function roots posed as equations; four real solutions, the
// run converges to (3, 2).
Problem himmelbc() {
  Problem p;
  p.name = "HIMMELBC";
  p.n = 2;
  p.m = 2;
  p.x0 = vec({1, 1});
  p.eval_f = [](const Vector&) { return 0.0; };
  p.eval_g = [](const Vector&) { return Vector::Zero(2).eval(); };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] * x[0] + x[1] - 11, x[0] + x[1] * x[1] - 7});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(2, 2);
    J << 2 * x[0], 1, 1, 2 * x[1];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    Matrix H = Matrix::Zero(2, 2);
    H(0, 0) = -2 * s[0];
    H(1, 1) = -2 * s[1];
    return H;
  };
  p.known_solution = vec({3, 2});
  p.multiple_minimizers = true;
  return p;
}

Problem hs6() {
  Problem p;
  p.name = "HS6";
  p.n = 2;
  p.m = 1;
  p.x0 = vec({-1.2, 1});
  p.eval_f = [](const Vector& x) { return (1 - x[0]) * (1 - x[0]); };
  p.eval_g = [](const Vector& x) { return vec({-2 * (1 - x[0]), 0}); };
  p.eval_c = [](const Vector& x) { return vec({10 * (x[1] - x[0] * x[0])}); };
  p.eval_J = [](const Vector& x) {
    Matrix J(1, 2);
    J << -20 * x[0], 10;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    Matrix H = Matrix::Zero(2, 2);
    H(0, 0) = 2 + 20 * s[0];
    return H;
  };
  p.known_solution = vec({1, 1});
  return p;
}

Problem hs7() {
  Problem p;
  p.name = "HS7";
  p.n = 2;
  p.m = 1;
  p.x0 = vec({2, 2});
  p.eval_f = [](const Vector& x) {
    return std::log1p(x[0] * x[0]) - x[1];
  };
  p.eval_g = [](const Vector& x) {
    return vec({2 * x[0] / (1 + x[0] * x[0]), -1});
  };
  p.eval_c = [](const Vector& x) {
    const double t = 1 + x[0] * x[0];
    return vec({t * t + x[1] * x[1] - 4});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(1, 2);
    J << 4 * x[0] * (1 + x[0] * x[0]), 2 * x[1];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    const double t = 1 + x[0] * x[0];
    Matrix H = Matrix::Zero(2, 2);
    H(0, 0) = (2 * t - 4 * x[0] * x[0]) / (t * t) - s[0] * (4 * t + 8 * x[0] * x[0]);
    H(1, 1) = -2 * s[0];
    return H;
  };
  p.known_solution = vec({0, std::sqrt(3.0)});
  return p;
}

// Circle/hyperbola intersection; the four symmetric intersection points are
// all optimal for the constant objective.
Problem hs8() {
  Problem p;
  p.name = "HS8";
  p.n = 2;
  p.m = 2;
  p.x0 = vec({2, 1});
  p.eval_f = [](const Vector&) { return -1.0; };
  p.eval_g = [](const Vector&) { return Vector::Zero(2).eval(); };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] * x[0] + x[1] * x[1] - 25, x[0] * x[1] - 9});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(2, 2);
    J << 2 * x[0], 2 * x[1], x[1], x[0];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    Matrix H(2, 2);
    H << -2 * s[0], -s[1], -s[1], -2 * s[0];
    return H;
  };
  const double a = std::sqrt((25 + std::sqrt(301.0)) / 2);
  p.known_solution = vec({a, 9 / a});
  p.multiple_minimizers = true;
  return p;
}

// Periodic objective on a line; minimizers repeat on a lattice, the nearest
// to the origin being (-3, -4).
Problem hs9() {
  Problem p;
  p.name = "HS9";
  p.n = 2;
  p.m = 1;
  p.x0 = vec({0, 0});
  const double a = M_PI / 12, b = M_PI / 16;
  p.eval_f = [a, b](const Vector& x) {
    return std::sin(a * x[0]) * std::cos(b * x[1]);
  };
  p.eval_g = [a, b](const Vector& x) {
    return vec({a * std::cos(a * x[0]) * std::cos(b * x[1]),
                -b * std::sin(a * x[0]) * std::sin(b * x[1])});
  };
  p.eval_c = [](const Vector& x) { return vec({4 * x[0] - 3 * x[1]}); };
  p.eval_J = [](const Vector&) {
    Matrix J(1, 2);
    J << 4, -3;
    return J;
  };
  p.eval_lagrangian_hessian = [a, b](const Vector& x, const Vector&) {
    Matrix H(2, 2);
    const double sa = std::sin(a * x[0]), ca = std::cos(a * x[0]);
    const double sb = std::sin(b * x[1]), cb = std::cos(b * x[1]);
    H << -a * a * sa * cb, -a * b * ca * sb, -a * b * ca * sb, -b * b * sa * cb;
    return H;
  };
  p.known_solution = vec({-3, -4});
  p.multiple_minimizers = true;
  return p;
}

// Two global minimizers: all-ones and a second diagonal point near -1.81.
Problem hs26() {
  Problem p;
  p.name = "HS26";
  p.n = 3;
  p.m = 1;
  p.x0 = vec({-2.6, 2, 2});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] - x[1];
    return a * a + std::pow(x[1] - x[2], 4);
  };
  p.eval_g = [](const Vector& x) {
    const double t = std::pow(x[1] - x[2], 3);
    return vec({2 * (x[0] - x[1]), -2 * (x[0] - x[1]) + 4 * t, -4 * t});
  };
  p.eval_c = [](const Vector& x) {
    return vec({(1 + x[1] * x[1]) * x[0] + std::pow(x[2], 4) - 3});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(1, 3);
    J << 1 + x[1] * x[1], 2 * x[0] * x[1], 4 * std::pow(x[2], 3);
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    const double q = 12 * (x[1] - x[2]) * (x[1] - x[2]);
    Matrix Hf(3, 3), Hc(3, 3);
    Hf << 2, -2, 0, -2, 2 + q, -q, 0, -q, q;
    Hc << 0, 2 * x[1], 0, 2 * x[1], 2 * x[0], 0, 0, 0, 12 * x[2] * x[2];
    return (Hf - s[0] * Hc).eval();
  };
  p.known_solution = vec({1, 1, 1});
  p.multiple_minimizers = true;
  return p;
}

Problem hs27() {
  Problem p;
  p.name = "HS27";
  p.n = 3;
  p.m = 1;
  p.x0 = vec({2, 2, 2});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] - 1, b = x[1] - x[0] * x[0];
    return 0.01 * a * a + b * b;
  };
  p.eval_g = [](const Vector& x) {
    const double b = x[1] - x[0] * x[0];
    return vec({0.02 * (x[0] - 1) - 4 * x[0] * b, 2 * b, 0});
  };
  p.eval_c = [](const Vector& x) { return vec({x[0] + x[2] * x[2] + 1}); };
  p.eval_J = [](const Vector& x) {
    Matrix J(1, 3);
    J << 1, 0, 2 * x[2];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    Matrix H = Matrix::Zero(3, 3);
    H(0, 0) = 0.02 - 4 * x[1] + 12 * x[0] * x[0];
    H(0, 1) = H(1, 0) = -4 * x[0];
    H(1, 1) = 2;
    H(2, 2) = -2 * s[0];
    return H;
  };
  p.known_solution = vec({-1, 1, 0});
  return p;
}

Problem hs28() {
  Problem p;
  p.name = "HS28";
  p.n = 3;
  p.m = 1;
  p.x0 = vec({-4, 1, 1});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] + x[1], b = x[1] + x[2];
    return a * a + b * b;
  };
  p.eval_g = [](const Vector& x) {
    return vec({2 * (x[0] + x[1]), 2 * (x[0] + x[1]) + 2 * (x[1] + x[2]),
                2 * (x[1] + x[2])});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] + 2 * x[1] + 3 * x[2] - 1});
  };
  p.eval_J = [](const Vector&) {
    Matrix J(1, 3);
    J << 1, 2, 3;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector&) {
    Matrix H(3, 3);
    H << 2, 2, 0, 2, 4, 2, 0, 2, 2;
    return H;
  };
  p.known_solution = vec({0.5, -0.5, 0.5});
  return p;
}

// Product objective on three coupled surfaces; (x3, x4) -> (-x3, -x4) maps
// solutions to solutions, hence the flag.  Stored point is the positive one:
// (2^-1/3, 2^-1/2, 2^-11/12, 2^-1/4), f* = -1/4.
Problem hs40() {
  Problem p;
  p.name = "HS40";
  p.n = 4;
  p.m = 3;
  p.x0 = vec({0.8, 0.8, 0.8, 0.8});
  p.eval_f = [](const Vector& x) { return -x[0] * x[1] * x[2] * x[3]; };
  p.eval_g = [](const Vector& x) {
    return vec({-x[1] * x[2] * x[3], -x[0] * x[2] * x[3], -x[0] * x[1] * x[3],
                -x[0] * x[1] * x[2]});
  };
  p.eval_c = [](const Vector& x) {
    return vec({std::pow(x[0], 3) + x[1] * x[1] - 1,
                x[0] * x[0] * x[3] - x[2], x[3] * x[3] - x[1]});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J = Matrix::Zero(3, 4);
    J(0, 0) = 3 * x[0] * x[0];
    J(0, 1) = 2 * x[1];
    J(1, 0) = 2 * x[0] * x[3];
    J(1, 2) = -1;
    J(1, 3) = x[0] * x[0];
    J(2, 1) = -1;
    J(2, 3) = 2 * x[3];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    Matrix H = Matrix::Zero(4, 4);
    H(0, 1) = H(1, 0) = -x[2] * x[3];
    H(0, 2) = H(2, 0) = -x[1] * x[3];
    H(0, 3) = H(3, 0) = -x[1] * x[2];
    H(1, 2) = H(2, 1) = -x[0] * x[3];
    H(1, 3) = H(3, 1) = -x[0] * x[2];
    H(2, 3) = H(3, 2) = -x[0] * x[1];
    H(0, 0) -= 6 * s[0] * x[0];
    H(1, 1) -= 2 * s[0];
    H(0, 0) -= 2 * s[1] * x[3];
    H(0, 3) -= 2 * s[1] * x[0];
    H(3, 0) -= 2 * s[1] * x[0];
    H(3, 3) -= 2 * s[2];
    return H;
  };
  const double r12 = std::pow(2.0, -1.0 / 12);
  p.known_solution = vec({std::pow(2.0, -1.0 / 3), std::pow(2.0, -0.5),
                          std::pow(r12, 11), std::pow(2.0, -0.25)});
  p.multiple_minimizers = true;
  return p;
}

Problem hs42() {
  Problem p;
  p.name = "HS42";
  p.n = 4;
  p.m = 2;
  p.x0 = vec({1, 1, 1, 1});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] - 1, b = x[1] - 2, c = x[2] - 3, d = x[3] - 4;
    return a * a + b * b + c * c + d * d;
  };
  p.eval_g = [](const Vector& x) {
    return vec({2 * (x[0] - 1), 2 * (x[1] - 2), 2 * (x[2] - 3),
                2 * (x[3] - 4)});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] - 2, x[2] * x[2] + x[3] * x[3] - 2});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J = Matrix::Zero(2, 4);
    J(0, 0) = 1;
    J(1, 2) = 2 * x[2];
    J(1, 3) = 2 * x[3];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    Matrix H = (2 * Matrix::Identity(4, 4)).eval();
    H(2, 2) -= 2 * s[1];
    H(3, 3) -= 2 * s[1];
    return H;
  };
  p.known_solution = vec({2, 2, 0.6 * kSqrt2, 0.8 * kSqrt2});
  return p;
}

Problem hs48() {
  Problem p;
  p.name = "HS48";
  p.n = 5;
  p.m = 2;
  p.x0 = vec({3, 5, -3, 2, -2});
  p.eval_f = [](const Vector& x) {
    const double a = x[0] - 1, b = x[1] - x[2], c = x[3] - x[4];
    return a * a + b * b + c * c;
  };
  p.eval_g = [](const Vector& x) {
    return vec({2 * (x[0] - 1), 2 * (x[1] - x[2]), -2 * (x[1] - x[2]),
                2 * (x[3] - x[4]), -2 * (x[3] - x[4])});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x.sum() - 5, x[2] - 2 * (x[3] + x[4]) + 3});
  };
  p.eval_J = [](const Vector&) {
    Matrix J(2, 5);
    J << 1, 1, 1, 1, 1, 0, 0, 1, -2, -2;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector&) {
    Matrix H = Matrix::Zero(5, 5);
    H(0, 0) = 2;
    H(1, 1) = H(2, 2) = 2;
    H(1, 2) = H(2, 1) = -2;
    H(3, 3) = H(4, 4) = 2;
    H(3, 4) = H(4, 3) = -2;
    return H;
  };
  p.known_solution = vec({1, 1, 1, 1, 1});
  return p;
}

Problem hs51() {
  Problem p;
  p.name = "HS51";
  p.n = 5;
  p.m = 3;
  p.x0 = vec({2.5, 0.5, 2, -1, 0.5});
  p.eval_f = quad51_f;
  p.eval_g = quad51_g;
  p.eval_c = [](const Vector& x) {
    return vec({x[0] + 3 * x[1] - 4, x[2] + x[3] - 2 * x[4], x[1] - x[4]});
  };
  p.eval_J = [](const Vector&) {
    Matrix J(3, 5);
    J << 1, 3, 0, 0, 0, 0, 0, 1, 1, -2, 0, 1, 0, 0, -1;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector&) {
    return quad51_hessian();
  };
  p.known_solution = vec({1, 1, 1, 1, 1});
  return p;
}

// Same constraints as BT3 but with the (4x1 - x2)^2 leading term; optimum is
// (-33, 11, 180, -158, 11)/349 with f* = 1859/349.
Problem hs52() {
  Problem p;
  p.name = "HS52";
  p.n = 5;
  p.m = 3;
  p.x0 = vec({2, 2, 2, 2, 2});
  p.eval_f = [](const Vector& x) {
    const double a = 4 * x[0] - x[1], b = x[1] + x[2] - 2, c = x[3] - 1,
                 d = x[4] - 1;
    return a * a + b * b + c * c + d * d;
  };
  p.eval_g = [](const Vector& x) {
    const double a = 4 * x[0] - x[1];
    return vec({8 * a, -2 * a + 2 * (x[1] + x[2] - 2), 2 * (x[1] + x[2] - 2),
                2 * (x[3] - 1), 2 * (x[4] - 1)});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] + 3 * x[1], x[2] + x[3] - 2 * x[4], x[1] - x[4]});
  };
  p.eval_J = [](const Vector&) {
    Matrix J(3, 5);
    J << 1, 3, 0, 0, 0, 0, 0, 1, 1, -2, 0, 1, 0, 0, -1;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector&) {
    Matrix H = Matrix::Zero(5, 5);
    H(0, 0) = 32;
    H(0, 1) = H(1, 0) = -8;
    H(1, 1) = 4;
    H(1, 2) = H(2, 1) = 2;
    H(2, 2) = 2;
    H(3, 3) = 2;
    H(4, 4) = 2;
    return H;
  };
  p.known_solution = vec({-33.0 / 349, 11.0 / 349, 180.0 / 349, -158.0 / 349,
                          11.0 / 349});
  return p;
}

// Five-variable product objective; other local minima exist (swapping the
// x4/x5 pair preserves the system), hence the flag.
Problem hs78() {
  Problem p;
  p.name = "HS78";
  p.n = 5;
  p.m = 3;
  p.x0 = vec({-2, 1.5, 2, -1, -1});
  p.eval_f = [](const Vector& x) {
    return x[0] * x[1] * x[2] * x[3] * x[4];
  };
  p.eval_g = [](const Vector& x) {
    return vec({x[1] * x[2] * x[3] * x[4], x[0] * x[2] * x[3] * x[4],
                x[0] * x[1] * x[3] * x[4], x[0] * x[1] * x[2] * x[4],
                x[0] * x[1] * x[2] * x[3]});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x.squaredNorm() - 10, x[1] * x[2] - 5 * x[3] * x[4],
                std::pow(x[0], 3) + std::pow(x[1], 3) + 1});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J = Matrix::Zero(3, 5);
    J.row(0) = 2 * x.transpose();
    J(1, 1) = x[2];
    J(1, 2) = x[1];
    J(1, 3) = -5 * x[4];
    J(1, 4) = -5 * x[3];
    J(2, 0) = 3 * x[0] * x[0];
    J(2, 1) = 3 * x[1] * x[1];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    Matrix H = Matrix::Zero(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        double prod = 1;
        for (int k = 0; k < 5; ++k) {
          if (k != i && k != j) prod *= x[k];
        }
        H(i, j) = H(j, i) = prod;
      }
    }
    H -= 2 * s[0] * Matrix::Identity(5, 5);
    H(1, 2) -= s[1];
    H(2, 1) -= s[1];
    H(3, 4) += 5 * s[1];
    H(4, 3) += 5 * s[1];
    H(0, 0) -= 6 * s[2] * x[0];
    H(1, 1) -= 6 * s[2] * x[1];
    return H;
  };
  p.known_solution = vec({-1.7171435703943825, 1.5957096901835546,
                          1.8272457529271946, -0.7636430781841305,
                          -0.7636430781841304});
  p.multiple_minimizers = true;
  return p;
}

// Classic curved-constraint problem that penalizes methods without a
// second-order correction: full steps along the circle get rejected near
// the solution even though the tangential model is exact.
Problem maratos() {
  Problem p;
  p.name = "MARATOS";
  p.n = 2;
  p.m = 1;
  p.x0 = vec({1.1, 0.1});
  p.eval_f = [](const Vector& x) {
    return -x[0] + 2 * (x[0] * x[0] + x[1] * x[1] - 1);
  };
  p.eval_g = [](const Vector& x) {
    return vec({-1 + 4 * x[0], 4 * x[1]});
  };
  p.eval_c = [](const Vector& x) {
    return vec({x[0] * x[0] + x[1] * x[1] - 1});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(1, 2);
    J << 2 * x[0], 2 * x[1];
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    return ((4 - 2 * s[0]) * Matrix::Identity(2, 2)).eval();
  };
  p.known_solution = vec({1, 0});
  return p;
}

// Rosenbrock's valley posed as two equations (root (1, 1)).
Problem rsnbrne() {
  Problem p;
  p.name = "RSNBRNE";
  p.n = 2;
  p.m = 2;
  p.x0 = vec({-1.2, 1});
  p.eval_f = [](const Vector&) { return 0.0; };
  p.eval_g = [](const Vector&) { return Vector::Zero(2).eval(); };
  p.eval_c = [](const Vector& x) {
    return vec({10 * (x[1] - x[0] * x[0]), 1 - x[0]});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(2, 2);
    J << -20 * x[0], 10, -1, 0;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector&, const Vector& s) {
    Matrix H = Matrix::Zero(2, 2);
    H(0, 0) = 20 * s[0];
    return H;
  };
  p.known_solution = vec({1, 1});
  return p;
}

// Sine-valley equations; the start one half-turn out along the sine wave.
Problem sinvalne() {
  Problem p;
  p.name = "SINVALNE";
  p.n = 2;
  p.m = 2;
  p.x0 = vec({4.712389, -1});
  p.eval_f = [](const Vector&) { return 0.0; };
  p.eval_g = [](const Vector&) { return Vector::Zero(2).eval(); };
  p.eval_c = [](const Vector& x) {
    return vec({10 * (x[1] - std::sin(x[0])), 0.5 * x[0]});
  };
  p.eval_J = [](const Vector& x) {
    Matrix J(2, 2);
    J << -10 * std::cos(x[0]), 10, 0.5, 0;
    return J;
  };
  p.eval_lagrangian_hessian = [](const Vector& x, const Vector& s) {
    Matrix H = Matrix::Zero(2, 2);
    H(0, 0) = -10 * s[0] * std::sin(x[0]);
    return H;
  };
  p.known_solution = vec({0, 0});
  return p;
}

}  // namespace

const std::vector<Problem>& builtin_collection() {
  static const std::vector<Problem> all = [] {
    std::vector<Problem> v;
    v.push_back(booth());
    v.push_back(bt1());
    v.push_back(bt2());
    v.push_back(bt3());
    v.push_back(bt4());
    v.push_back(bt5());
    v.push_back(bt6());
    v.push_back(bt9());
    v.push_back(hs79_system("BT11"));
    v.push_back(bt12());
    v.push_back(byrdsphr());
    v.push_back(genhs28());
    v.push_back(himmelba());
    v.push_back(himmelbc());
    v.push_back(hs6());
    v.push_back(hs7());
    v.push_back(hs8());
    v.push_back(hs9());
    v.push_back(hs26());
    v.push_back(hs27());
    v.push_back(hs28());
    v.push_back(hs40());
    v.push_back(hs42());
    v.push_back(hs48());
    v.push_back(hs51());
    v.push_back(hs52());
    v.push_back(hs78());
    v.push_back(hs79_system("HS79"));
    v.push_back(maratos());
    v.push_back(rsnbrne());
    v.push_back(sinvalne());
    return v;
  }();
  return all;
}

const Problem* find_problem(const std::string& name) {
  auto lower = [](std::string s) {
    for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
  };
  const std::string want = lower(name);
  for (const Problem& p : builtin_collection()) {
    if (lower(p.name) == want) return &p;
  }
  return nullptr;
}

DerivativeReport check_derivatives(const Problem& p, const Vector& x,
                                   double h) {
  DerivativeReport rep;
  auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(a));
  };

  const Vector g = p.eval_g(x);
  for (int i = 0; i < p.n; ++i) {
    Vector xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const double fd = (p.eval_f(xp) - p.eval_f(xm)) / (2 * h);
    rep.gradient_error = std::max(rep.gradient_error, rel(g[i], fd));
  }

  const Matrix J = p.eval_J(x);
  for (int i = 0; i < p.n; ++i) {
    Vector xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const Vector cd = (p.eval_c(xp) - p.eval_c(xm)) / (2 * h);
    for (int r = 0; r < p.m; ++r) {
      rep.jacobian_error = std::max(rep.jacobian_error, rel(J(r, i), cd[r]));
    }
  }

  // Deterministic multipliers; the Hessian check differentiates the full
  // Lagrangian gradient, so it exercises every constraint Hessian at once.
  Vector s(p.m);
  for (int i = 0; i < p.m; ++i) s[i] = std::sin(1.0 + i);
  auto lag_grad = [&](const Vector& y) {
    return (p.eval_g(y) - p.eval_J(y).transpose() * s).eval();
  };
  const Matrix H = p.eval_lagrangian_hessian(x, s);
  for (int i = 0; i < p.n; ++i) {
    Vector xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const Vector hd = (lag_grad(xp) - lag_grad(xm)) / (2 * h);
    for (int r = 0; r < p.n; ++r) {
      rep.hessian_error = std::max(rep.hessian_error, rel(H(r, i), hd[r]));
    }
  }
  return rep;
}

}  // namespace ssarc
