#include "ssarc/step.hpp"

#include <cmath>

namespace ssarc {

VerticalStep vertical_step(const Vector& v_c, double beta) {
  VerticalStep out;
  const double vn = v_c.norm();
  out.alpha = (vn > 0.0) ? std::min(1.0, std::sqrt(beta) / vn) : 1.0;
  out.v = out.alpha * v_c;
  return out;
}

Vector horizontal_step(const NullspaceBasis& basis, const Vector& u) {
  return basis.Z * u;
}

StepDecomposition compose_step(const VerticalStep& vs, const Vector& c,
                               const Vector& g, const SymmetricOperator& B,
                               const NullspaceBasis& basis, const Vector& u,
                               const Vector& g_z) {
  StepDecomposition out;
  out.v = vs.v;
  out.alpha = vs.alpha;
  out.h = horizontal_step(basis, u);
  out.d = out.v + out.h;
  out.u_norm = u.norm();

  out.dq_N = vs.alpha * c.norm();

  Vector Bv(out.v.size());
  B.apply_to(out.v, Bv);
  out.dq_F = -g.dot(out.v) - 0.5 * out.v.dot(Bv);

  // u'B_Z u == h'Bh since h = Z u and B_Z = Z'BZ.
  Vector Bh(out.h.size());
  B.apply_to(out.h, Bh);
  out.dq_H = -g_z.dot(u) - 0.5 * out.h.dot(Bh);

  return out;
}

}  // namespace ssarc
