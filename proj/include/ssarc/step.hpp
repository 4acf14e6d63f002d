#pragma once

#include "ssarc/linalg.hpp"
#include "ssarc/types.hpp"

namespace ssarc {

// Composite trial step d = v + h with its exact model decreases.
//   dq_N = alpha * ||c||            (normal part; exact because J v = -alpha c)
//   dq_F = -g'v - v'Bv / 2          (objective model change along v)
//   dq_H = -g_Z'u - u'B_Z u / 2     (reduced model decrease along h = Z u)
struct StepDecomposition {
  Vector v;
  Vector h;
  Vector d;
  double alpha = 1.0;
  double u_norm = 0.0;
  double dq_N = 0.0;
  double dq_F = 0.0;
  double dq_H = 0.0;
};

// Scales the minimum-norm direction into the radius: v = alpha * v_c with
// alpha = min(1, sqrt(beta) / ||v_c||), the upper endpoint of the admissible
// interval.  v_c = 0 gives alpha = 1, v = 0.
struct VerticalStep {
  Vector v;
  double alpha = 1.0;
};
VerticalStep vertical_step(const Vector& v_c, double beta);

// h = Z u lifted back to the full space.
Vector horizontal_step(const NullspaceBasis& basis, const Vector& u);

// Assembles the composite step and its model decreases.  g_z must be the
// reduced gradient Z'(g + B v) belonging to this v.  Costs two applications
// of B.
StepDecomposition compose_step(const VerticalStep& vs, const Vector& c,
                               const Vector& g, const SymmetricOperator& B,
                               const NullspaceBasis& basis, const Vector& u,
                               const Vector& g_z);

}  // namespace ssarc
