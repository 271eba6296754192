#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hlab/profile.hpp"
#include "hlab/quad.hpp"
#include "hlab/rigid.hpp"

namespace hlab {

// Integral contributions of one patch, with its orientation applied.
// flux is the integral of <x, nu> over the patch; a closed surface with
// inward nu has volume -flux/3.
struct FunctionalTotals {
  double area = 0;
  double flux = 0;
  double total_mc = 0;   // integral of <H, nu>
  double willmore = 0;   // (1/4) integral of <H, nu>^2
  double helfrich = 0;   // (1/4) integral of (<H, nu> - c0)^2
  double deficit_l1 = 0; // integral of |<H, nu> - c0|
  double sff_l2 = 0;     // integral of k1^2 + k2^2
  double err = 0;        // accumulated quadrature error estimate

  FunctionalTotals& operator+=(const FunctionalTotals& o);
};

struct SurfaceSample {
  Vec3 x = Vec3::Zero();
  Vec3 nu = Vec3::Zero();   // chosen unit normal
  double scalar_mc = 0;     // <H, nu>, the trace of the shape operator
  double k1 = 0, k2 = 0;    // principal curvatures w.r.t. nu
};

// Quadrature node on a surface: position, oriented normal, weight.
struct QuadNode {
  Vec3 x = Vec3::Zero();
  Vec3 nu = Vec3::Zero();
  double w = 0;
  double scalar_mc = 0;
};

// A circle in space; the shared rim along which two patches meet.
struct RingCurve {
  Vec3 center = Vec3::Zero();
  Vec3 axis = Vec3::UnitZ();
  double radius = 0;

  // Deterministic orthonormal frame (e1, e2, axis); point(theta) lies on
  // the circle at azimuth theta in that frame.
  Vec3 point(double theta) const;
};

class Patch {
 public:
  virtual ~Patch() = default;

  virtual FunctionalTotals functionals(double c0, const QuadSpec& q) const = 0;

  // Pointwise evaluation at intrinsic coordinates u, v in [0,1]^2.
  virtual SurfaceSample sample(double u, double v) const = 0;

  // Nodes for kernel-type surface integrals. density scales the node count.
  virtual std::vector<QuadNode> quadrature_nodes(int density) const = 0;

  // Boundary rims, for gluing checks and welded meshing.
  virtual int boundary_count() const = 0;
  virtual RingCurve boundary_ring(int curve) const = 0;
  // Sample on rim `curve` at the world-space point ring.point(theta).
  virtual SurfaceSample boundary_sample(int curve, double theta) const = 0;
};

// Surface of revolution (profile, rigid placement, orientation sigma).
// nu = sigma * (image of the profile normal n0); boundary 0 is the t0 rim,
// boundary 1 the t1 rim (rims where the profile meets the axis are skipped).
class RevolvedPatch final : public Patch {
 public:
  RevolvedPatch(std::shared_ptr<const Profile> prof, RigidMotion motion,
                double sigma);

  FunctionalTotals functionals(double c0, const QuadSpec& q) const override;
  SurfaceSample sample(double u, double v) const override;
  std::vector<QuadNode> quadrature_nodes(int density) const override;
  int boundary_count() const override { return 2; }
  RingCurve boundary_ring(int curve) const override;
  SurfaceSample boundary_sample(int curve, double theta) const override;

  SurfaceSample sample_at(double t, double theta) const;
  const Profile& profile() const { return *prof_; }
  const RigidMotion& motion() const { return motion_; }
  double sigma() const { return sigma_; }

 private:
  std::shared_ptr<const Profile> prof_;
  RigidMotion motion_;
  double sigma_;
};

// Round sphere with circular caps removed; every functional in closed form.
// nu = sigma * outward, so scalar_mc = -2 sigma / R everywhere.
class SpherePatch final : public Patch {
 public:
  struct Cap {
    Vec3 axis = Vec3::UnitZ();  // unit vector toward the cap center
    double theta = 0;           // opening angle, 0 < theta < pi
  };

  SpherePatch(Vec3 center, double radius, double sigma,
              std::vector<Cap> removed = {});

  FunctionalTotals functionals(double c0, const QuadSpec& q) const override;
  SurfaceSample sample(double u, double v) const override;
  std::vector<QuadNode> quadrature_nodes(int density) const override;
  int boundary_count() const override { return static_cast<int>(caps_.size()); }
  RingCurve boundary_ring(int curve) const override;
  SurfaceSample boundary_sample(int curve, double theta) const override;

  double area() const;
  const Vec3& center() const { return center_; }
  double radius() const { return radius_; }
  double sigma() const { return sigma_; }
  const std::vector<Cap>& caps() const { return caps_; }
  bool in_removed_cap(const Vec3& dir, double margin = 0) const;

 private:
  Vec3 center_;
  double radius_, sigma_;
  std::vector<Cap> caps_;
};

// Planar disc of radius r_outer with circular holes, placed by a rigid
// motion (the disc is the image of the z = 0 plane). nu = sigma * image of
// +z. Boundary 0 is the outer rim; boundary 1 + i is hole i.
class FlatPatch final : public Patch {
 public:
  struct Hole {
    double cx = 0, cy = 0;  // center in plane coordinates
    double r = 0;
  };

  FlatPatch(RigidMotion motion, double r_outer, double sigma,
            std::vector<Hole> holes = {});

  FunctionalTotals functionals(double c0, const QuadSpec& q) const override;
  SurfaceSample sample(double u, double v) const override;
  std::vector<QuadNode> quadrature_nodes(int density) const override;
  int boundary_count() const override {
    return 1 + static_cast<int>(holes_.size());
  }
  RingCurve boundary_ring(int curve) const override;
  SurfaceSample boundary_sample(int curve, double theta) const override;

  double area() const;
  const std::vector<Hole>& holes() const { return holes_; }
  double outer_radius() const { return r_outer_; }
  double sigma() const { return sigma_; }
  const RigidMotion& motion() const { return motion_; }

 private:
  RigidMotion motion_;
  double r_outer_, sigma_;
  std::vector<Hole> holes_;
};

// Reference to one boundary rim of one patch in a composite.
struct BoundaryRef {
  int patch = -1;
  int curve = -1;
};

// A welded rim between two patches (or a free rim, with b.patch = -1).
struct Joint {
  RingCurve ring;
  BoundaryRef a, b;
};

struct GluingReport {
  double max_position_gap = 0;
  double max_normal_gap = 0;   // 1 - <nu_a, nu_b>
  int joints_checked = 0;
  bool ok(double pos_tol, double normal_tol) const {
    return max_position_gap <= pos_tol && max_normal_gap <= normal_tol;
  }
};

// An oriented surface assembled from patches welded along joints.
struct CompositeSurface {
  std::string name;
  std::vector<std::shared_ptr<const Patch>> patches;
  std::vector<Joint> joints;
  bool closed = true;
  int genus = 0;

  FunctionalTotals functionals(double c0, const QuadSpec& q = {}) const;
  double volume() const;  // -flux/3 (positive for inward orientation)
  std::vector<QuadNode> quadrature_nodes(int density) const;
  std::vector<Vec3> sample_cloud(int per_patch) const;
  GluingReport check_gluing(int azimuth_samples = 32) const;
};

}  // namespace hlab
