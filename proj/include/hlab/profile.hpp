#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "hlab/error.hpp"

namespace hlab {

// One point of a planar generating curve t -> (rho(t), z(t)), rho >= 0,
// together with its first and second derivatives.
struct ProfilePoint {
  double rho = 0, z = 0;
  double drho = 0, dz = 0;
  double d2rho = 0, d2z = 0;
};

// Generating curve for a surface of revolution about the z axis.
//
// Curvature sign convention: both principal curvatures are taken with
// respect to the unit normal n0 = (-z', rho') / |gamma'| in the half-plane
// (the normal obtained by rotating the unit tangent a quarter turn
// counterclockwise). scalar_mc is their sum, i.e. the trace of the second
// fundamental form. Example: the profile (sin t, cos t), t in (0, pi),
// traces the unit sphere with n0 pointing outward and scalar_mc = -2.
class Profile {
 public:
  virtual ~Profile() = default;

  virtual double t0() const = 0;
  virtual double t1() const = 0;
  virtual ProfilePoint at(double t) const = 0;

  double speed(double t) const;        // |gamma'(t)|
  double kappa_mer(double t) const;    // meridian principal curvature
  double kappa_circ(double t) const;   // parallel-circle principal curvature
  double scalar_mc(double t) const;    // kappa_mer + kappa_circ
};

// Curvatures from an already-evaluated point (shared by Profile and tests).
double profile_speed(const ProfilePoint& p);
double profile_kappa_mer(const ProfilePoint& p);
double profile_kappa_circ(const ProfilePoint& p);

// Straight segment from (rho_a, z_a) to (rho_b, z_b), t in [0, 1].
class LineProfile final : public Profile {
 public:
  LineProfile(double rho_a, double z_a, double rho_b, double z_b);
  double t0() const override { return 0; }
  double t1() const override { return 1; }
  ProfilePoint at(double t) const override;

 private:
  double ra_, za_, rb_, zb_;
};

// Circular arc gamma(phi) = (rho_c + r cos phi, z_c + r sin phi),
// phi in [phi_lo, phi_hi]. A sphere of radius R about the origin is the
// arc rho_c = z_c = 0, r = R, phi in (-pi/2, pi/2), with n0 pointing
// inward (scalar_mc = +2/R).
class ArcProfile final : public Profile {
 public:
  ArcProfile(double rho_c, double z_c, double r, double phi_lo, double phi_hi);
  double t0() const override { return lo_; }
  double t1() const override { return hi_; }
  ProfilePoint at(double t) const override;
  double radius() const { return r_; }

 private:
  double rc_, zc_, r_, lo_, hi_;
};

// Catenoid meridian (a cosh(x/a), x), x in [x_lo, x_hi]. Minimal:
// scalar_mc = 0 identically.
class CatenoidProfile final : public Profile {
 public:
  CatenoidProfile(double a, double x_lo, double x_hi);
  double t0() const override { return lo_; }
  double t1() const override { return hi_; }
  ProfilePoint at(double t) const override;
  double waist_radius() const { return a_; }

 private:
  double a_, lo_, hi_;
};

// Ellipse meridian (p sin t, q cos t), t in [t_lo, t_hi] within [0, pi].
class EllipseProfile final : public Profile {
 public:
  EllipseProfile(double p, double q, double t_lo, double t_hi);
  double t0() const override { return lo_; }
  double t1() const override { return hi_; }
  ProfilePoint at(double t) const override;

 private:
  double p_, q_, lo_, hi_;
};

// Cubic polynomial curve rho(t) = sum cr[i] t^i, z(t) = sum cz[i] t^i,
// t in [0, 1]. Used for blend pieces between flat and curved neighbours.
class CubicProfile final : public Profile {
 public:
  CubicProfile(std::array<double, 4> cr, std::array<double, 4> cz);
  double t0() const override { return 0; }
  double t1() const override { return 1; }
  ProfilePoint at(double t) const override;

 private:
  std::array<double, 4> cr_, cz_;
};

// Arbitrary analytic profile supplied as a callable; handy in tests.
class FunctionProfile final : public Profile {
 public:
  FunctionProfile(std::function<ProfilePoint(double)> f, double t_lo,
                  double t_hi);
  double t0() const override { return lo_; }
  double t1() const override { return hi_; }
  ProfilePoint at(double t) const override { return f_(t); }

 private:
  std::function<ProfilePoint(double)> f_;
  double lo_, hi_;
};

// Nodoid meridian in the parametrization
//   f(t) = b sqrt((u - a)/(u + a)),  u = c cosh t,  c = sqrt(a^2 + b^2),
//   g(t) = integral_0^t a b^2 / sqrt((u-a)(u+a)^3) dx,
// with a, b > 0. f decreases to the waist f(0) = c - a and approaches the
// asymptote radius b as |t| grows; g is odd and strictly increasing, so the
// curve is an embedded graph over z. Principal curvatures w.r.t. n0:
//   kappa_circ = 1/(u - a),  kappa_mer = -u/(a (u - a)),
// so scalar_mc = -1/a identically: the surface is CMC, and n0 coincides
// with (-b cos, -b sin, c sinh t)/sqrt(u^2 - a^2) after revolution.
class NodoidProfile final : public Profile {
 public:
  NodoidProfile(double a, double b, double t_lo, double t_hi);
  double t0() const override { return lo_; }
  double t1() const override { return hi_; }
  ProfilePoint at(double t) const override;

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double waist_radius() const { return c_ - a_; }
  // Height g(t) of the meridian above the waist plane.
  double height(double t) const;

  // Smallest t with |f(t) - b| < 1e-8 b, by bisection, clamped to
  // [0.5, t_cap]; t_cap if the tolerance is unreachable below the cap.
  static double default_t_max(double a, double b, double t_cap = 30.0);

 private:
  double a_, b_, c_, lo_, hi_;
  std::vector<double> gcum_;  // cumulative height at k * dt_, from 0
  double dt_ = 0.125;
  double gprime(double t) const;
};

}  // namespace hlab
