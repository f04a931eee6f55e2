#ifndef MINKHYP_TYPES_HPP
#define MINKHYP_TYPES_HPP

#include <Eigen/Dense>

#include "minkhyp/errors.hpp"

namespace minkhyp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// A point of the ambient space: n spatial coordinates plus one time coordinate,
// metric ds^2 = sum dx_i^2 - dt^2.
template <typename Scalar>
struct LorentzPointT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;  // spatial part
  Scalar t{};                                  // time coordinate

  int dim() const { return static_cast<int>(x.size()); }
};
using LorentzPoint = LorentzPointT<double>;

// Second-order jet of a graph function at one point.
template <typename Scalar>
struct JetT {
  Scalar u{};
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> du;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> d2u;

  int dim() const { return static_cast<int>(du.size()); }
};
using JetPoint = JetT<double>;

// Extrinsic data of a spacelike graph at one point.
template <typename Scalar>
struct ShapeDataT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> g;      // induced metric
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> g_inv;  // its inverse
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h;      // second fundamental form
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nu;                  // timelike unit normal, n+1 entries
  Scalar K{};          // Gauss-Kronecker curvature
  Scalar H{};          // mean curvature
  Scalar grad_norm{};  // |grad u| in the induced metric
};
using ShapeData = ShapeDataT<double>;

enum class SpacelikeKind { StrictlySpacelike, WeaklySpacelike, NotSpacelike };

struct SpacelikeClass {
  SpacelikeKind kind = SpacelikeKind::NotSpacelike;
  double max_grad = 0;
};

inline const char* to_string(SpacelikeKind k) {
  switch (k) {
    case SpacelikeKind::StrictlySpacelike: return "strictly-spacelike";
    case SpacelikeKind::WeaklySpacelike: return "weakly-spacelike";
    case SpacelikeKind::NotSpacelike: return "not-spacelike";
  }
  return "?";
}

}  // namespace minkhyp

#endif
