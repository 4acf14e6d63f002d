#pragma once

#include <vector>

#include "ssarc/linalg.hpp"
#include "ssarc/types.hpp"

namespace ssarc {

// Outcome of CG applied to (B_Z + lambda I) u = -g_Z for one shift.
struct ShiftSolveResult {
  int shift_index = 0;
  double lambda = 0.0;
  Vector u;
  // Tracked recurrence residual |sigma|; equals ||g_Z + (B_Z + lambda I) u||
  // in exact arithmetic (verify_residual recomputes it explicitly).
  double residual_norm = 0.0;
  // False once a nonpositive pivot shows (B_Z + lambda I) is not positive
  // definite on the Krylov space; the partial iterate is unusable then.
  bool curvature_ok = true;
  bool converged = false;
  int inner_iterations = 0;
};

struct ShiftSolveSet {
  std::vector<ShiftSolveResult> results;
  double g_z_norm = 0.0;
  // Operator applications consumed by the shared basis (not per shift).
  int matvec_count = 0;
};

// Runs CG for every ladder shift simultaneously on one Lanczos basis of
// B_Z: one operator application per inner iteration serves all shifts, and
// each shift keeps only scalar recurrence state plus its own u and search
// direction.  A shift stops on its own inexactness test
//   ||r|| <= xi * min(||g_Z||, ||u||)^(1 + zeta),
// on a nonpositive pivot (curvature_ok = false), or when the basis is
// exhausted (residual is exactly zero then).  Hitting max_inner leaves
// converged = false.
//
// `parallel` distributes the per-shift scalar updates across threads; the
// result is bitwise identical to the serial path because shifts never read
// each other's state.
ShiftSolveSet solve_all_shifts(const SymmetricOperator& B_z, const Vector& g_z,
                               const ShiftLadder& ladder, double xi,
                               double zeta, int max_inner,
                               bool parallel = false);

// Explicit ||g_Z + (B_Z + lambda I) u|| for cross-checking the tracked value.
double explicit_residual(const SymmetricOperator& B_z, const Vector& g_z,
                         const ShiftSolveResult& r);

// True when the tracked residual agrees with the explicit one to
// rtol * max(residuals) + atol.
bool verify_residual(const SymmetricOperator& B_z, const Vector& g_z,
                     const ShiftSolveResult& r, double rtol = 1e-8,
                     double atol = 1e-12);

}  // namespace ssarc
