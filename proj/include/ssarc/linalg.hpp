#pragma once

#include <functional>

#include "ssarc/types.hpp"

namespace ssarc {

// Orthonormal basis of null(J), columns of Z (n x (n-m)).
struct NullspaceBasis {
  Matrix Z;
  Matrix J;
  double rank_tolerance = 0.0;

  Index n() const { return J.cols(); }
  Index m() const { return J.rows(); }
  Index reduced_dim() const { return Z.cols(); }
};

// Z = trailing columns of Q from a column-pivoted QR of J^T.
// Throws RankDeficientError when J is not full row rank at rank_tolerance.
NullspaceBasis nullspace_basis(const Matrix& J, double rank_tolerance = 1e-10);

// Minimum-norm solution of J v = -c, i.e. v = -J^T (J J^T)^{-1} c, computed
// through the QR of J^T (never forms J J^T; the squared conditioning matters
// for nearly parallel constraint gradients).
Vector min_norm_constraint_step(const Matrix& J, const Vector& c);

// argmin_s ||g - J^T s||_2 through the same QR route.
Vector least_squares_multipliers(const Matrix& J, const Vector& g);

// Matrix-free symmetric operator.
struct SymmetricOperator {
  Index dim = 0;
  std::function<void(const Vector&, Vector&)> apply_to;

  Vector apply(const Vector& x) const {
    Vector y(dim);
    apply_to(x, y);
    return y;
  }
};

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// y = A x computed as one dot product per row in both the serial and the
// OpenMP path, so the parallel result is bitwise identical to the serial one
// regardless of thread count.
void symv(const RowMajorMatrix& A, const Vector& x, Vector& y, bool parallel);

SymmetricOperator dense_operator(Matrix A, bool parallel = false);

// B^Z = Z^T B Z as a lazy composition (two projections around one apply).
SymmetricOperator reduced_operator(const SymmetricOperator& B, const NullspaceBasis& Z);

}  // namespace ssarc
