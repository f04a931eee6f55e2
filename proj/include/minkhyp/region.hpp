#ifndef MINKHYP_REGION_HPP
#define MINKHYP_REGION_HPP

#include <optional>
#include <string>
#include <vector>

#include "minkhyp/types.hpp"

namespace minkhyp {

// Convex planar region: disk, half-disk {y1 > 0}, convex polygon, or axis rectangle.
class Region2 {
 public:
  enum class Kind { Disk, HalfDisk, Polygon, Rect };

  static Region2 disk(double radius);
  static Region2 half_disk(double radius);  // {|y| < radius, y1 > 0}
  static Region2 polygon(std::vector<Vec2> ccw_vertices);
  static Region2 rect(const Vec2& lo, const Vec2& hi);

  Kind kind() const { return kind_; }
  double radius() const { return radius_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }

  bool contains(const Vec2& p, double tol = 0.0) const;

  // Bounding box [lo, hi].
  void bounding_box(Vec2& lo, Vec2& hi) const;

  // Distance along unit-normalized `dir` from interior point `p` to the first
  // boundary crossing; nullopt if the ray stays inside up to `max_len`.
  std::optional<double> ray_exit(const Vec2& p, const Vec2& dir, double max_len) const;

  // Signed inward distance estimate (positive inside). Exact for disk/half-disk/rect,
  // exact for polygons as min over edges.
  double inner_distance(const Vec2& p) const;

  // Half-disk boundary split: true when p lies on the flat part {y1 = 0}.
  bool on_flat(const Vec2& p, double tol = 1e-12) const;

  // m boundary points, counterclockwise, roughly equispaced in arc length.
  std::vector<Vec2> sample_boundary(int m) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::Disk;
  double radius_ = 1.0;
  std::vector<Vec2> vertices_;
  Vec2 lo_{0, 0}, hi_{0, 0};
};

}  // namespace minkhyp

#endif
