#include "ssarc/linalg.hpp"

#include <Eigen/QR>

#ifdef SSARC_HAVE_OPENMP
#include <omp.h>
#endif

namespace ssarc {

namespace {

// Shared QR of J^T: householderQ gives an orthonormal basis of the row space
// (leading m columns) and of the null space (trailing n-m columns).
Eigen::ColPivHouseholderQR<Matrix> qr_of_Jt(const Matrix& J) {
  return Eigen::ColPivHouseholderQR<Matrix>(J.transpose());
}

void require_full_row_rank(const Eigen::ColPivHouseholderQR<Matrix>& qr,
                           const Matrix& J, double tol) {
  const Index m = J.rows();
  if (m == 0) return;
  // |R(i,i)| decay measures rank; relative to the largest pivot.
  const double r0 = std::abs(qr.matrixR()(0, 0));
  const double rm = std::abs(qr.matrixR()(m - 1, m - 1));
  if (!(r0 > 0.0) || rm <= tol * std::max(1.0, r0))
    throw RankDeficientError("constraint Jacobian is rank deficient");
}

}  // namespace

NullspaceBasis nullspace_basis(const Matrix& J, double rank_tolerance) {
  const Index n = J.cols();
  const Index m = J.rows();
  if (m > n) throw std::invalid_argument("nullspace_basis: m > n");
  NullspaceBasis b;
  b.J = J;
  b.rank_tolerance = rank_tolerance;
  if (m == 0) {
    b.Z = Matrix::Identity(n, n);
    return b;
  }
  auto qr = qr_of_Jt(J);
  require_full_row_rank(qr, J, rank_tolerance);
  Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
  b.Z = Q.rightCols(n - m);
  return b;
}

Vector min_norm_constraint_step(const Matrix& J, const Vector& c) {
  const Index n = J.cols();
  const Index m = J.rows();
  if (m == 0) return Vector::Zero(n);
  auto qr = qr_of_Jt(J);
  require_full_row_rank(qr, J, 1e-14);
  // J^T = Q_thin R P^T  =>  v = Q_thin R^{-T} (-P^T c) lies in range(J^T)
  // and satisfies J v = -c.
  Matrix Qthin = qr.householderQ() * Matrix::Identity(n, m);
  Matrix R = qr.matrixR().topLeftCorner(m, m).template triangularView<Eigen::Upper>();
  Vector rhs = -(qr.colsPermutation().transpose() * c);
  Vector y = R.transpose().triangularView<Eigen::Lower>().solve(rhs);
  return Qthin * y;
}

Vector least_squares_multipliers(const Matrix& J, const Vector& g) {
  const Index m = J.rows();
  if (m == 0) return Vector(0);
  auto qr = qr_of_Jt(J);
  require_full_row_rank(qr, J, 1e-14);
  return qr.solve(g);
}

void symv(const RowMajorMatrix& A, const Vector& x, Vector& y, bool parallel) {
  const Index n = A.rows();
  y.resize(n);
#ifdef SSARC_HAVE_OPENMP
  if (parallel && n >= 256) {
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) y[i] = A.row(i).dot(x);
    return;
  }
#endif
  (void)parallel;
  for (Index i = 0; i < n; ++i) y[i] = A.row(i).dot(x);
}

SymmetricOperator dense_operator(Matrix A, bool parallel) {
  if (A.rows() != A.cols()) throw std::invalid_argument("dense_operator: not square");
  SymmetricOperator op;
  op.dim = A.rows();
  op.apply_to = [A = RowMajorMatrix(std::move(A)), parallel](const Vector& x, Vector& y) {
    symv(A, x, y, parallel);
  };
  return op;
}

SymmetricOperator reduced_operator(const SymmetricOperator& B, const NullspaceBasis& Z) {
  SymmetricOperator op;
  op.dim = Z.reduced_dim();
  op.apply_to = [B, Zm = Z.Z](const Vector& u, Vector& y) {
    Vector full = Zm * u;
    Vector Bfull = B.apply(full);
    y.noalias() = Zm.transpose() * Bfull;
  };
  return op;
}

}  // namespace ssarc
