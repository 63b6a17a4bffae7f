#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace symbem {

using Vec3 = Eigen::Vector3d;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Triangle {
  Vec3 a, b, c;

  Vec3 raw_normal() const { return (b - a).cross(c - a); }
  double area() const { return 0.5 * raw_normal().norm(); }
  Vec3 unit_normal() const { return raw_normal().normalized(); }
  Vec3 centroid() const { return (a + b + c) / 3.0; }
  double diameter() const {
    return std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
  }
  const Vec3& vertex(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
  // edge opposite to local vertex i, oriented with the cell
  Vec3 opposite_edge(int i) const { return vertex((i + 2) % 3) - vertex((i + 1) % 3); }
  // in-plane gradient of the nodal shape function of local vertex i
  Vec3 shape_gradient(int i) const {
    return unit_normal().cross(opposite_edge(i)) / (2.0 * area());
  }
  Vec3 point_from_barycentric(double l0, double l1, double l2) const {
    return l0 * a + l1 * b + l2 * c;
  }
};

// Euclidean distance from a point to a (solid) triangle.
double point_triangle_distance(const Vec3& p, const Triangle& t);

}  // namespace symbem
