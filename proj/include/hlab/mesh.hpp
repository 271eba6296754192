#pragma once

#include <array>
#include <string>
#include <vector>

#include "hlab/rigid.hpp"

namespace hlab {

/// Oriented triangle mesh. Triangle winding defines the surface normal
/// (right-hand rule); for meshes produced from an oriented composite the
/// winding normal is the composite's chosen normal nu.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;

    int euler_char() const;  // V - E + F
    bool is_closed() const;  // every edge shared by exactly two triangles

    /// Checks indices, degenerate triangles, manifoldness and consistent
    /// winding. Boundary edges are rejected unless allow_boundary.
    void validate(bool allow_boundary = false) const;

    double area() const;
    /// Divergence-theorem volume with respect to the winding normal;
    /// negative when the winding normal points into the enclosed region.
    double signed_volume() const;
    Vec3 triangle_normal(int f) const;  // unit winding normal
    double triangle_area(int f) const;
};

/// Per-vertex discrete curvature data from the cotangent formula with
/// barycentric (one third) vertex areas. h_vec is the mean curvature
/// vector in the trace convention: a unit sphere refines to |h_vec| = 2.
struct VertexCurvature {
    Vec3 h_vec = Vec3::Zero();
    Vec3 normal = Vec3::Zero();  // area-weighted side of the winding
    double area_weight = 0;
};

std::vector<VertexCurvature> mesh_vertex_curvature(const TriMesh& m,
                                                   bool allow_boundary = false);

/// Sum of vertex angle defects 2*pi - (incident angles); equals
/// 2*pi*euler_char for a closed mesh.
double angle_defect_total(const TriMesh& m);

TriMesh parse_off(const std::string& text);
TriMesh parse_obj(const std::string& text);
std::string emit_off(const TriMesh& m);
std::string emit_obj(const TriMesh& m);

/// Reads .off or .obj by extension. Throws ParseError otherwise.
TriMesh read_mesh_file(const std::string& path);
void write_mesh_file(const TriMesh& m, const std::string& path);

/// Merges vertices closer than tol and drops collapsed triangles.
TriMesh weld_vertices(const TriMesh& m, double tol = 1e-12);

TriMesh apply_motion(const TriMesh& m, const RigidMotion& motion);

/// Dijkstra edge-graph distances from one vertex to all vertices.
std::vector<double> geodesic_distances(const TriMesh& m, int source);

}  // namespace hlab
