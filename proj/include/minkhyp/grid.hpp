#ifndef MINKHYP_GRID_HPP
#define MINKHYP_GRID_HPP

#include <functional>
#include <string>
#include <vector>

#include "minkhyp/types.hpp"

namespace minkhyp {

// Uniform rectangular lattice in dimension 2 or 3.
struct GridSpec {
  Vec origin;            // lower corner
  double h = 0;          // isotropic spacing
  Eigen::VectorXi extents;  // node counts per axis, each >= 2

  int dim() const { return static_cast<int>(extents.size()); }
  long size() const;
  long flat(const Eigen::VectorXi& idx) const;
  Eigen::VectorXi unflat(long k) const;
  Vec node(const Eigen::VectorXi& idx) const;
  bool interior(const Eigen::VectorXi& idx) const;

  static GridSpec make(const Vec& origin, double h, const Eigen::VectorXi& extents);
  // Grid covering [lo, hi] with spacing h (extents rounded up).
  static GridSpec cover(const Vec& lo, const Vec& hi, double h);
};

enum class DerivativeSource { AnalyticCallback, CentralDifferences };

inline const char* to_string(DerivativeSource s) {
  return s == DerivativeSource::AnalyticCallback ? "analytic-callback" : "central-differences";
}

// Sampled graph u on a uniform lattice. Immutable after construction.
class GraphPatch {
 public:
  using JetCallback = std::function<JetPoint(const Vec&)>;

  static GraphPatch from_values(GridSpec grid, Vec values);
  static GraphPatch from_function(GridSpec grid, const std::function<double(const Vec&)>& u,
                                  DerivativeSource source = DerivativeSource::CentralDifferences,
                                  JetCallback jets = nullptr);

  const GridSpec& grid() const { return grid_; }
  const Vec& values() const { return values_; }
  DerivativeSource derivative_source() const { return source_; }

  double value(const Eigen::VectorXi& idx) const { return values_[grid_.flat(idx)]; }
  Vec node(const Eigen::VectorXi& idx) const { return grid_.node(idx); }

  // Gradient by the O(h^2) stencil (central interior, one-sided second order at faces),
  // or the analytic callback when available.
  Vec gradient(const Eigen::VectorXi& idx) const;
  // Full jet; Hessian mixed entries by composed first-derivative stencils.
  JetPoint jet(const Eigen::VectorXi& idx) const;
  // Finite-difference jet regardless of the callback (for consistency tests).
  JetPoint fd_jet(const Eigen::VectorXi& idx) const;

  double max_gradient_norm() const;

  // CSV "x1,...,xn,u" row-major plus a JSON sidecar with the grid spec.
  void write_csv(const std::string& csv_path, const std::string& json_sidecar_path) const;
  static GraphPatch read_csv(const std::string& csv_path, const std::string& json_sidecar_path);

 private:
  GridSpec grid_;
  Vec values_;
  DerivativeSource source_ = DerivativeSource::CentralDifferences;
  JetCallback jets_;
};

// One-dimensional O(h^2) first/second derivative stencils relative to position in a line
// of `count` nodes; returns pairs (offset, weight), weights already divided by h powers.
std::vector<std::pair<int, double>> d1_stencil(int i, int count, double h);
std::vector<std::pair<int, double>> d2_stencil(int i, int count, double h);

}  // namespace minkhyp

#endif
