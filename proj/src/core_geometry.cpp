#include "minkhyp/core_geometry.hpp"

#include <cmath>

namespace minkhyp {

ShapeData shape_at(const JetPoint& jet, double tol_spacelike) {
  const int n = jet.dim();
  if (n < 2) throw InvalidParams("shape_at: dimension must be >= 2");
  if ((jet.d2u - jet.d2u.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1 + jet.d2u.norm()))
    throw InvalidParams("shape_at: Hessian not symmetric");

  const double grad = jet.du.norm();
  if (grad >= 1.0 - tol_spacelike)
    throw NotSpacelike("shape_at: |Du| = " + std::to_string(grad));
  const double w2 = 1.0 - jet.du.squaredNorm();
  const double w = std::sqrt(w2);

  ShapeData s;
  s.g = Mat::Identity(n, n) - jet.du * jet.du.transpose();
  s.g_inv = Mat::Identity(n, n) + jet.du * jet.du.transpose() / w2;
  s.h = jet.d2u / w;
  s.nu.resize(n + 1);
  s.nu.head(n) = jet.du / w;
  s.nu[n] = 1.0 / w;
  s.grad_norm = grad / w;
  s.K = jet.d2u.determinant() / std::pow(w2, 0.5 * (n + 2));
  const double trace_term = jet.d2u.trace() / w;
  const double grad_term = jet.du.dot(jet.d2u * jet.du) / (w2 * w);
  s.H = (trace_term + grad_term) / n;
  return s;
}

Vec mean_curvature_field(const GraphPatch& patch, double tol) {
  const GridSpec& grid = patch.grid();
  const int d = grid.dim();
  const long total = grid.size();

  // Stage 1: the flux field W = Du / sqrt(1 - |Du|^2) at every node.
  Mat W(total, d);
  for (long k = 0; k < total; ++k) {
    const Eigen::VectorXi idx = grid.unflat(k);
    const Vec du = patch.gradient(idx);
    const double w2 = 1.0 - du.squaredNorm();
    if (grid.interior(idx) && du.norm() >= 1.0 - tol)
      throw NotSpacelike("mean_curvature_field: interior node with |Du| = " +
                         std::to_string(du.norm()));
    W.row(k) = du / std::sqrt(std::max(w2, tol * tol));
  }

  // Stage 2: divergence by the same O(h^2) stencils.
  Vec H(total);
  for (long k = 0; k < total; ++k) {
    const Eigen::VectorXi idx = grid.unflat(k);
    double div = 0;
    for (int a = 0; a < d; ++a) {
      for (auto [off, wgt] : d1_stencil(idx[a], grid.extents[a], grid.h)) {
        Eigen::VectorXi j = idx;
        j[a] += off;
        div += wgt * W(grid.flat(j), a);
      }
    }
    H[k] = div / d;
  }
  return H;
}

SpacelikeClass classify_spacelike(const GraphPatch& patch, double tol) {
  SpacelikeClass c;
  c.max_grad = patch.max_gradient_norm();
  if (c.max_grad <= 1.0 - tol)
    c.kind = SpacelikeKind::StrictlySpacelike;
  else if (c.max_grad <= 1.0 + tol)
    c.kind = SpacelikeKind::WeaklySpacelike;
  else
    c.kind = SpacelikeKind::NotSpacelike;
  return c;
}

}  // namespace minkhyp
