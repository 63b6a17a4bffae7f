#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symbem/geometry.hpp"

namespace symbem {

// Closed, consistently oriented triangulation of one interface.
// Vertices in meters, cells as CCW vertex-index triples (outward normals).
class TriangleMesh {
public:
  TriangleMesh() = default;
  TriangleMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> cells);

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_cells() const { return static_cast<int>(cells_.size()); }
  int n_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& cells() const { return cells_; }
  const Vec3& vertex(int m) const { return vertices_[m]; }
  const std::array<int, 3>& cell(int n) const { return cells_[n]; }
  Triangle triangle(int n) const {
    const auto& c = cells_[n];
    return Triangle{vertices_[c[0]], vertices_[c[1]], vertices_[c[2]]};
  }

  double cell_area(int n) const { return areas_[n]; }
  const Vec3& cell_normal(int n) const { return normals_[n]; }
  double cell_diameter(int n) const { return diameters_[n]; }
  double total_area() const { return total_area_; }

  // unique undirected edges as sorted vertex pairs
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& vertex_cells() const { return vertex_cells_; }

private:
  void validate_and_index();

  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> cells_;
  std::vector<double> areas_;
  std::vector<Vec3> normals_;
  std::vector<double> diameters_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::vector<int>> vertex_cells_;
  double total_area_ = 0.0;
};

enum class RefinedVertexKind : std::uint8_t { PrimalVertex, EdgeMidpoint, Barycenter };

// Barycentric refinement of a primal mesh plus the dual-mesh bookkeeping:
// every primal cell carries 7 refined vertices (3 corners, 3 edge midpoints,
// 1 barycenter); noc(v) counts the primal cells containing v.
struct RefinedMesh {
  TriangleMesh mesh;
  std::vector<int> parent_cell;                // refined cell -> primal cell
  std::vector<RefinedVertexKind> vertex_kind;  // refined vertex -> kind
  std::vector<std::vector<int>> touching_cells;  // refined vertex -> primal cells
  std::vector<int> noc;                        // = touching_cells[v].size()
  // the 7 refined vertices lying on each primal cell:
  // corners 0..2, edge midpoints 3..5 (midpoint k between corners k,k+1), barycenter 6
  std::vector<std::array<int, 7>> cell_vertices;
};

struct MeshStats {
  double h = 0.0;  // mean unique-edge length
  double total_area = 0.0;
  int n_vertices = 0;
  int n_cells = 0;
  int n_edges = 0;
  int euler = 0;
};

TriangleMesh generate_icosphere(double radius, int subdivisions);

// Smooth non-spherical closed surface: radial perturbation of an icosphere by a
// fixed combination of low-order real harmonics, r(th,ph) = R(1 + eps*f(th,ph)),
// |f| <= 1. Nested surfaces built with the same eps stay nested.
TriangleMesh generate_perturbed_sphere(double radius, int subdivisions, double eps);

RefinedMesh barycentric_refine(const TriangleMesh& mesh);

MeshStats mesh_stats(const TriangleMesh& mesh);

TriangleMesh read_off(std::istream& in);
TriangleMesh read_off_file(const std::string& path);
void write_off(const TriangleMesh& mesh, std::ostream& out);
void write_off_file(const TriangleMesh& mesh, const std::string& path);

// Signed solid angle of the closed mesh as seen from p, divided by 4*pi:
// ~1 inside, ~0 outside.
double winding_number(const TriangleMesh& mesh, const Vec3& p);

// Half of the largest axis-aligned bounding-box extent; equals the radius for
// a sphere mesh. Used as the per-interface length scale of non-spherical
// surfaces (configurable choice).
double characteristic_radius(const TriangleMesh& mesh);

}  // namespace symbem
