#include "minkhyp/region.hpp"

#include <algorithm>
#include <cmath>

namespace minkhyp {

Region2 Region2::disk(double radius) {
  if (!(radius > 0)) throw InvalidParams("Region2::disk: radius must be positive");
  Region2 r;
  r.kind_ = Kind::Disk;
  r.radius_ = radius;
  return r;
}

Region2 Region2::half_disk(double radius) {
  if (!(radius > 0)) throw InvalidParams("Region2::half_disk: radius must be positive");
  Region2 r;
  r.kind_ = Kind::HalfDisk;
  r.radius_ = radius;
  return r;
}

Region2 Region2::polygon(std::vector<Vec2> ccw_vertices) {
  if (ccw_vertices.size() < 3) throw InvalidParams("Region2::polygon: need at least 3 vertices");
  Region2 r;
  r.kind_ = Kind::Polygon;
  r.vertices_ = std::move(ccw_vertices);
  return r;
}

Region2 Region2::rect(const Vec2& lo, const Vec2& hi) {
  if (!(lo.x() < hi.x() && lo.y() < hi.y())) throw InvalidParams("Region2::rect: empty box");
  Region2 r;
  r.kind_ = Kind::Rect;
  r.lo_ = lo;
  r.hi_ = hi;
  return r;
}

bool Region2::contains(const Vec2& p, double tol) const {
  switch (kind_) {
    case Kind::Disk:
      return p.norm() < radius_ + tol;
    case Kind::HalfDisk:
      return p.norm() < radius_ + tol && p.x() > -tol;
    case Kind::Rect:
      return p.x() > lo_.x() - tol && p.x() < hi_.x() + tol && p.y() > lo_.y() - tol &&
             p.y() < hi_.y() + tol;
    case Kind::Polygon: {
      const size_t m = vertices_.size();
      for (size_t i = 0; i < m; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % m];
        const Vec2 e = b - a;
        const double cross = e.x() * (p.y() - a.y()) - e.y() * (p.x() - a.x());
        if (cross < -tol * e.norm()) return false;
      }
      return true;
    }
  }
  return false;
}

void Region2::bounding_box(Vec2& lo, Vec2& hi) const {
  switch (kind_) {
    case Kind::Disk:
      lo = Vec2(-radius_, -radius_);
      hi = Vec2(radius_, radius_);
      return;
    case Kind::HalfDisk:
      lo = Vec2(0, -radius_);
      hi = Vec2(radius_, radius_);
      return;
    case Kind::Rect:
      lo = lo_;
      hi = hi_;
      return;
    case Kind::Polygon: {
      lo = hi = vertices_.front();
      for (const auto& v : vertices_) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
      }
      return;
    }
  }
}

namespace {

// First positive root of |p + t d|^2 = r^2 for |p| < r.
std::optional<double> circle_exit(const Vec2& p, const Vec2& d, double r) {
  const double a = d.squaredNorm();
  if (a == 0) return std::nullopt;
  const double b = p.dot(d);
  const double c = p.squaredNorm() - r * r;
  const double disc = b * b - a * c;
  if (disc < 0) return std::nullopt;
  const double t = (-b + std::sqrt(disc)) / a;
  return t >= 0 ? std::optional<double>(t) : std::nullopt;
}

}  // namespace

std::optional<double> Region2::ray_exit(const Vec2& p, const Vec2& dir, double max_len) const {
  const Vec2 d = dir.normalized();
  double t_exit = std::numeric_limits<double>::infinity();
  switch (kind_) {
    case Kind::Disk: {
      auto t = circle_exit(p, d, radius_);
      if (t) t_exit = *t;
      break;
    }
    case Kind::HalfDisk: {
      auto t = circle_exit(p, d, radius_);
      if (t) t_exit = *t;
      if (d.x() < 0) t_exit = std::min(t_exit, -p.x() / d.x());
      break;
    }
    case Kind::Rect: {
      for (int axis = 0; axis < 2; ++axis) {
        if (d[axis] > 0) t_exit = std::min(t_exit, (hi_[axis] - p[axis]) / d[axis]);
        if (d[axis] < 0) t_exit = std::min(t_exit, (lo_[axis] - p[axis]) / d[axis]);
      }
      break;
    }
    case Kind::Polygon: {
      const size_t m = vertices_.size();
      for (size_t i = 0; i < m; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % m];
        const Vec2 e = b - a;
        const Vec2 n(e.y(), -e.x());  // outward normal of a ccw polygon edge
        const double dn = d.dot(n);
        if (dn <= 0) continue;
        const double t = (a - p).dot(n) / dn;
        if (t >= 0) t_exit = std::min(t_exit, t);
      }
      break;
    }
  }
  if (t_exit > max_len) return std::nullopt;
  return std::max(t_exit, 0.0);
}

double Region2::inner_distance(const Vec2& p) const {
  switch (kind_) {
    case Kind::Disk:
      return radius_ - p.norm();
    case Kind::HalfDisk:
      return std::min(radius_ - p.norm(), p.x());
    case Kind::Rect:
      return std::min(std::min(p.x() - lo_.x(), hi_.x() - p.x()),
                      std::min(p.y() - lo_.y(), hi_.y() - p.y()));
    case Kind::Polygon: {
      double d = std::numeric_limits<double>::infinity();
      const size_t m = vertices_.size();
      for (size_t i = 0; i < m; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % m];
        const Vec2 e = b - a;
        const double cross = e.x() * (p.y() - a.y()) - e.y() * (p.x() - a.x());
        d = std::min(d, cross / e.norm());
      }
      return d;
    }
  }
  return 0;
}

bool Region2::on_flat(const Vec2& p, double tol) const {
  return kind_ == Kind::HalfDisk && std::abs(p.x()) <= tol;
}

std::vector<Vec2> Region2::sample_boundary(int m) const {
  std::vector<Vec2> out;
  out.reserve(static_cast<size_t>(std::max(m, 0)));
  if (m <= 0) return out;
  switch (kind_) {
    case Kind::Disk: {
      for (int k = 0; k < m; ++k) {
        const double th = 2 * M_PI * k / m;
        out.emplace_back(radius_ * std::cos(th), radius_ * std::sin(th));
      }
      return out;
    }
    case Kind::HalfDisk: {
      // Perimeter = pi r (arc) + 2 r (flat side).
      const double arc = M_PI * radius_;
      const double total = arc + 2 * radius_;
      for (int k = 0; k < m; ++k) {
        const double s = total * k / m;
        if (s < arc) {
          const double th = -M_PI / 2 + s / radius_;
          out.emplace_back(radius_ * std::cos(th), radius_ * std::sin(th));
        } else {
          out.emplace_back(0.0, radius_ - (s - arc));
        }
      }
      return out;
    }
    case Kind::Rect: {
      const double w = hi_.x() - lo_.x(), h = hi_.y() - lo_.y();
      const double total = 2 * (w + h);
      for (int k = 0; k < m; ++k) {
        double s = total * k / m;
        if (s < w) {
          out.emplace_back(lo_.x() + s, lo_.y());
        } else if ((s -= w) < h) {
          out.emplace_back(hi_.x(), lo_.y() + s);
        } else if ((s -= h) < w) {
          out.emplace_back(hi_.x() - s, hi_.y());
        } else {
          out.emplace_back(lo_.x(), hi_.y() - (s - w));
        }
      }
      return out;
    }
    case Kind::Polygon: {
      double total = 0;
      const size_t nv = vertices_.size();
      for (size_t i = 0; i < nv; ++i) total += (vertices_[(i + 1) % nv] - vertices_[i]).norm();
      for (int k = 0; k < m; ++k) {
        double s = total * k / m;
        for (size_t i = 0; i < nv; ++i) {
          const Vec2& a = vertices_[i];
          const Vec2& b = vertices_[(i + 1) % nv];
          const double len = (b - a).norm();
          if (s <= len || i + 1 == nv) {
            out.emplace_back(a + (b - a) * (len > 0 ? s / len : 0.0));
            break;
          }
          s -= len;
        }
      }
      return out;
    }
  }
  return out;
}

std::string Region2::describe() const {
  switch (kind_) {
    case Kind::Disk: return "disk(r=" + std::to_string(radius_) + ")";
    case Kind::HalfDisk: return "half-disk(r=" + std::to_string(radius_) + ")";
    case Kind::Rect: return "rect";
    case Kind::Polygon: return "polygon(" + std::to_string(vertices_.size()) + ")";
  }
  return "?";
}

}  // namespace minkhyp
