#ifndef MINKHYP_CORE_GEOMETRY_HPP
#define MINKHYP_CORE_GEOMETRY_HPP

#include "minkhyp/grid.hpp"
#include "minkhyp/types.hpp"

namespace minkhyp {

inline constexpr double kSpacelikeTolPointwise = 1e-9;
inline constexpr double kSpacelikeTolGrid = 1e-6;

// Extrinsic geometry of a spacelike graph at one jet:
//   g_ij = delta_ij - u_i u_j           (induced metric)
//   h_ij = u_ij / sqrt(1 - |Du|^2)      (second fundamental form)
//   nu   = (Du, 1) / sqrt(1 - |Du|^2)   (timelike unit normal)
//   K    = det D^2 u / (1 - |Du|^2)^{(n+2)/2}
//   H    = (1/n) div(Du / sqrt(1 - |Du|^2))
// Throws NotSpacelike when |Du| >= 1 - tol.
ShapeData shape_at(const JetPoint& jet, double tol_spacelike = kSpacelikeTolPointwise);

// (1/n) div(Du / sqrt(1 - |Du|^2)) on every node, O(h^2) differencing.
// Throws NotSpacelike when an interior node has |Du| >= 1 - tol.
Vec mean_curvature_field(const GraphPatch& patch, double tol = kSpacelikeTolGrid);

// strictly-spacelike iff max|Du| <= 1 - tol; weakly iff <= 1 + tol; else not-spacelike.
SpacelikeClass classify_spacelike(const GraphPatch& patch, double tol = kSpacelikeTolGrid);

}  // namespace minkhyp

#endif
