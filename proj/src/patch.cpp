#include "hlab/patch.hpp"

#include <cmath>
#include <numbers>

#include "hlab/parallel.hpp"

namespace hlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
}  // namespace

FunctionalTotals& FunctionalTotals::operator+=(const FunctionalTotals& o) {
  area += o.area;
  flux += o.flux;
  total_mc += o.total_mc;
  willmore += o.willmore;
  helfrich += o.helfrich;
  deficit_l1 += o.deficit_l1;
  sff_l2 += o.sff_l2;
  err += o.err;
  return *this;
}

Vec3 RingCurve::point(double theta) const {
  const RigidMotion f = RigidMotion::frame(center, axis);
  return center + radius * (std::cos(theta) * f.R.col(0) +
                            std::sin(theta) * f.R.col(1));
}

RevolvedPatch::RevolvedPatch(std::shared_ptr<const Profile> prof,
                             RigidMotion motion, double sigma)
    : prof_(std::move(prof)), motion_(motion), sigma_(sigma) {
  if (!prof_) throw DomainError("RevolvedPatch: null profile");
  if (sigma != 1 && sigma != -1)
    throw DomainError("RevolvedPatch: sigma must be +1 or -1");
  motion_.validate();
}

FunctionalTotals RevolvedPatch::functionals(double c0,
                                            const QuadSpec& q) const {
  const double lo = prof_->t0(), hi = prof_->t1();
  const Vec3 tau_local = motion_.R.transpose() * motion_.t;

  auto run = [&](const std::function<double(const ProfilePoint&)>& f) {
    return integrate_1d(
        [&](double t) { return f(prof_->at(t)); }, lo, hi, q);
  };
  auto dA = [](const ProfilePoint& p) {
    return kTwoPi * p.rho * profile_speed(p);
  };
  auto mc = [this](const ProfilePoint& p) {
    return sigma_ * (profile_kappa_mer(p) + profile_kappa_circ(p));
  };

  FunctionalTotals out;
  QuadResult r;

  r = run(dA);
  out.area = r.value;
  out.err += r.err_est;

  r = run([&](const ProfilePoint& p) { return mc(p) * dA(p); });
  out.total_mc = r.value;
  out.err += r.err_est;

  r = run([&](const ProfilePoint& p) {
    const double m = mc(p);
    return 0.25 * m * m * dA(p);
  });
  out.willmore = r.value;
  out.err += r.err_est;

  r = run([&](const ProfilePoint& p) {
    const double d = mc(p) - c0;
    return 0.25 * d * d * dA(p);
  });
  out.helfrich = r.value;
  out.err += r.err_est;

  r = run([&](const ProfilePoint& p) {
    return std::fabs(mc(p) - c0) * dA(p);
  });
  out.deficit_l1 = r.value;
  out.err += r.err_est;

  r = run([&](const ProfilePoint& p) {
    const double km = profile_kappa_mer(p), kc = profile_kappa_circ(p);
    return (km * km + kc * kc) * dA(p);
  });
  out.sff_l2 = r.value;
  out.err += r.err_est;

  // <x, nu> integrated in the azimuth: the motion's rotation drops out and
  // only the z component of the pulled-back translation survives.
  r = run([&](const ProfilePoint& p) {
    const double base = -p.rho * p.dz + p.z * p.drho;
    return kTwoPi * sigma_ * (base + tau_local.z() * p.drho) * p.rho;
  });
  out.flux = r.value;
  out.err += r.err_est;

  return out;
}

SurfaceSample RevolvedPatch::sample_at(double t, double theta) const {
  const ProfilePoint p = prof_->at(t);
  const double s = profile_speed(p);
  const double ct = std::cos(theta), st = std::sin(theta);
  const Vec3 pos(p.rho * ct, p.rho * st, p.z);
  const Vec3 n0(-p.dz * ct / s, -p.dz * st / s, p.drho / s);
  SurfaceSample out;
  out.x = motion_.apply(pos);
  out.nu = sigma_ * (motion_.R * n0);
  out.k1 = sigma_ * profile_kappa_mer(p);
  out.k2 = sigma_ * profile_kappa_circ(p);
  out.scalar_mc = out.k1 + out.k2;
  return out;
}

SurfaceSample RevolvedPatch::sample(double u, double v) const {
  const double t = prof_->t0() + u * (prof_->t1() - prof_->t0());
  return sample_at(t, kTwoPi * v);
}

std::vector<QuadNode> RevolvedPatch::quadrature_nodes(int density) const {
  const int panels = std::max(2, density);
  const int ntheta = std::max(8, 4 * density);
  const GaussRule& rule = gauss_legendre(16);
  const double lo = prof_->t0(), hi = prof_->t1();
  const double dt = (hi - lo) / panels;
  std::vector<QuadNode> nodes;
  nodes.reserve(static_cast<size_t>(panels) * rule.nodes.size() * ntheta);
  for (int k = 0; k < panels; ++k) {
    const double mid = lo + (k + 0.5) * dt;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = mid + 0.5 * dt * rule.nodes[i];
      const ProfilePoint p = prof_->at(t);
      const double wt = 0.5 * dt * rule.weights[i] * p.rho *
                        profile_speed(p) * (kTwoPi / ntheta);
      for (int j = 0; j < ntheta; ++j) {
        const double theta = kTwoPi * (j + 0.5) / ntheta;
        SurfaceSample s = sample_at(t, theta);
        nodes.push_back({s.x, s.nu, wt, s.scalar_mc});
      }
    }
  }
  return nodes;
}

RingCurve RevolvedPatch::boundary_ring(int curve) const {
  if (curve != 0 && curve != 1)
    throw DomainError("RevolvedPatch: boundary index out of range");
  const double t = curve == 0 ? prof_->t0() : prof_->t1();
  const ProfilePoint p = prof_->at(t);
  RingCurve ring;
  ring.center = motion_.apply(Vec3(0, 0, p.z));
  ring.axis = motion_.R.col(2);
  ring.radius = p.rho;
  return ring;
}

SurfaceSample RevolvedPatch::boundary_sample(int curve, double theta) const {
  const double t = curve == 0 ? prof_->t0() : prof_->t1();
  const Vec3 w = boundary_ring(curve).point(theta);
  const Vec3 q = motion_.R.transpose() * (w - motion_.t);
  return sample_at(t, std::atan2(q.y(), q.x()));
}

SpherePatch::SpherePatch(Vec3 center, double radius, double sigma,
                         std::vector<Cap> removed)
    : center_(center), radius_(radius), sigma_(sigma),
      caps_(std::move(removed)) {
  if (radius <= 0) throw DomainError("SpherePatch: radius must be positive");
  if (sigma != 1 && sigma != -1)
    throw DomainError("SpherePatch: sigma must be +1 or -1");
  for (auto& c : caps_) {
    const double n = c.axis.norm();
    if (n == 0 || c.theta <= 0 || c.theta >= kPi)
      throw DomainError("SpherePatch: bad cap");
    c.axis /= n;
  }
  for (size_t i = 0; i < caps_.size(); ++i)
    for (size_t j = i + 1; j < caps_.size(); ++j) {
      const double sep = std::acos(
          std::clamp(caps_[i].axis.dot(caps_[j].axis), -1.0, 1.0));
      if (sep < caps_[i].theta + caps_[j].theta)
        throw DomainError("SpherePatch: removed caps overlap");
    }
}

double SpherePatch::area() const {
  double a = 4 * kPi * radius_ * radius_;
  for (const auto& c : caps_)
    a -= kTwoPi * radius_ * radius_ * (1 - std::cos(c.theta));
  return a;
}

bool SpherePatch::in_removed_cap(const Vec3& dir, double margin) const {
  for (const auto& c : caps_)
    if (dir.dot(c.axis) > std::cos(c.theta + margin)) return true;
  return false;
}

FunctionalTotals SpherePatch::functionals(double c0, const QuadSpec&) const {
  FunctionalTotals out;
  const double A = area();
  const double mc = -2 * sigma_ / radius_;
  out.area = A;
  out.total_mc = mc * A;
  out.willmore = A / (radius_ * radius_);
  out.helfrich = 0.25 * (mc - c0) * (mc - c0) * A;
  out.deficit_l1 = std::fabs(mc - c0) * A;
  out.sff_l2 = 2 * A / (radius_ * radius_);
  double flux_out = radius_ * A;
  for (const auto& c : caps_) {
    const double s = std::sin(c.theta);
    flux_out -= kPi * radius_ * radius_ * s * s * center_.dot(c.axis);
  }
  out.flux = sigma_ * flux_out;
  return out;
}

SurfaceSample SpherePatch::sample(double u, double v) const {
  const double cphi = 1 - 2 * std::clamp(u, 0.0, 1.0);
  const double sphi = std::sqrt(std::max(0.0, 1 - cphi * cphi));
  const double theta = kTwoPi * v;
  const Vec3 dir(sphi * std::cos(theta), sphi * std::sin(theta), cphi);
  SurfaceSample out;
  out.x = center_ + radius_ * dir;
  out.nu = sigma_ * dir;
  out.k1 = out.k2 = -sigma_ / radius_;
  out.scalar_mc = out.k1 + out.k2;
  return out;
}

std::vector<QuadNode> SpherePatch::quadrature_nodes(int density) const {
  const int nphi = std::max(8, 2 * density);
  const int ntheta = std::max(16, 4 * density);
  const GaussRule& rule = gauss_legendre(nphi > 64 ? 64 : nphi);
  std::vector<QuadNode> nodes;
  nodes.reserve(rule.nodes.size() * ntheta);
  double wsum = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double cphi = rule.nodes[i];  // cos of colatitude on [-1, 1]
    const double sphi = std::sqrt(std::max(0.0, 1 - cphi * cphi));
    const double w = rule.weights[i] * radius_ * radius_ * (kTwoPi / ntheta);
    for (int j = 0; j < ntheta; ++j) {
      const double theta = kTwoPi * (j + 0.5) / ntheta;
      const Vec3 dir(sphi * std::cos(theta), sphi * std::sin(theta), cphi);
      if (in_removed_cap(dir)) continue;
      QuadNode n;
      n.x = center_ + radius_ * dir;
      n.nu = sigma_ * dir;
      n.w = w;
      n.scalar_mc = -2 * sigma_ / radius_;
      nodes.push_back(n);
      wsum += w;
    }
  }
  const double scale = area() / wsum;
  for (auto& n : nodes) n.w *= scale;
  return nodes;
}

RingCurve SpherePatch::boundary_ring(int curve) const {
  if (curve < 0 || curve >= static_cast<int>(caps_.size()))
    throw DomainError("SpherePatch: boundary index out of range");
  const Cap& c = caps_[static_cast<size_t>(curve)];
  RingCurve ring;
  ring.center = center_ + radius_ * std::cos(c.theta) * c.axis;
  ring.axis = c.axis;
  ring.radius = radius_ * std::sin(c.theta);
  return ring;
}

SurfaceSample SpherePatch::boundary_sample(int curve, double theta) const {
  const Vec3 w = boundary_ring(curve).point(theta);
  const Vec3 dir = (w - center_) / radius_;
  SurfaceSample out;
  out.x = w;
  out.nu = sigma_ * dir;
  out.k1 = out.k2 = -sigma_ / radius_;
  out.scalar_mc = out.k1 + out.k2;
  return out;
}

FlatPatch::FlatPatch(RigidMotion motion, double r_outer, double sigma,
                     std::vector<Hole> holes)
    : motion_(motion), r_outer_(r_outer), sigma_(sigma),
      holes_(std::move(holes)) {
  if (r_outer <= 0) throw DomainError("FlatPatch: outer radius must be > 0");
  if (sigma != 1 && sigma != -1)
    throw DomainError("FlatPatch: sigma must be +1 or -1");
  motion_.validate();
  for (const auto& h : holes_) {
    if (h.r <= 0) throw DomainError("FlatPatch: hole radius must be > 0");
    if (std::hypot(h.cx, h.cy) + h.r >= r_outer_)
      throw DomainError("FlatPatch: hole reaches the outer rim");
  }
  for (size_t i = 0; i < holes_.size(); ++i)
    for (size_t j = i + 1; j < holes_.size(); ++j) {
      const double d = std::hypot(holes_[i].cx - holes_[j].cx,
                                  holes_[i].cy - holes_[j].cy);
      if (d <= holes_[i].r + holes_[j].r)
        throw DomainError("FlatPatch: holes overlap");
    }
}

double FlatPatch::area() const {
  double a = kPi * r_outer_ * r_outer_;
  for (const auto& h : holes_) a -= kPi * h.r * h.r;
  return a;
}

FunctionalTotals FlatPatch::functionals(double c0, const QuadSpec&) const {
  FunctionalTotals out;
  const double A = area();
  out.area = A;
  out.helfrich = 0.25 * c0 * c0 * A;
  out.deficit_l1 = std::fabs(c0) * A;
  out.flux = sigma_ * motion_.t.dot(motion_.R.col(2)) * A;
  return out;
}

SurfaceSample FlatPatch::sample(double u, double v) const {
  const double r = r_outer_ * std::sqrt(std::clamp(u, 0.0, 1.0));
  const double theta = kTwoPi * v;
  SurfaceSample out;
  out.x = motion_.apply(Vec3(r * std::cos(theta), r * std::sin(theta), 0));
  out.nu = sigma_ * motion_.R.col(2);
  out.scalar_mc = 0;
  return out;
}

std::vector<QuadNode> FlatPatch::quadrature_nodes(int density) const {
  const int nr = std::max(8, 2 * density);
  const int ntheta = std::max(16, 4 * density);
  const GaussRule& rule = gauss_legendre(nr > 64 ? 64 : nr);
  std::vector<QuadNode> nodes;
  double wsum = 0;
  const Vec3 nu = sigma_ * motion_.R.col(2);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    // Gauss in s = r^2 makes the radial weight exact for flat annuli.
    const double s = 0.5 * (1 + rule.nodes[i]) * r_outer_ * r_outer_;
    const double r = std::sqrt(s);
    const double w =
        0.5 * r_outer_ * r_outer_ * rule.weights[i] * 0.5 * (kTwoPi / ntheta);
    for (int j = 0; j < ntheta; ++j) {
      const double theta = kTwoPi * (j + 0.5) / ntheta;
      const double px = r * std::cos(theta), py = r * std::sin(theta);
      bool in_hole = false;
      for (const auto& h : holes_)
        if (std::hypot(px - h.cx, py - h.cy) < h.r) { in_hole = true; break; }
      if (in_hole) continue;
      QuadNode n;
      n.x = motion_.apply(Vec3(px, py, 0));
      n.nu = nu;
      n.w = w;
      n.scalar_mc = 0;
      nodes.push_back(n);
      wsum += w;
    }
  }
  const double scale = area() / wsum;
  for (auto& n : nodes) n.w *= scale;
  return nodes;
}

RingCurve FlatPatch::boundary_ring(int curve) const {
  RingCurve ring;
  ring.axis = motion_.R.col(2);
  if (curve == 0) {
    ring.center = motion_.t;
    ring.radius = r_outer_;
    return ring;
  }
  const int i = curve - 1;
  if (i < 0 || i >= static_cast<int>(holes_.size()))
    throw DomainError("FlatPatch: boundary index out of range");
  const Hole& h = holes_[static_cast<size_t>(i)];
  ring.center = motion_.apply(Vec3(h.cx, h.cy, 0));
  ring.radius = h.r;
  return ring;
}

SurfaceSample FlatPatch::boundary_sample(int curve, double theta) const {
  SurfaceSample out;
  out.x = boundary_ring(curve).point(theta);
  out.nu = sigma_ * motion_.R.col(2);
  out.scalar_mc = 0;
  return out;
}

FunctionalTotals CompositeSurface::functionals(double c0,
                                               const QuadSpec& q) const {
  const auto parts = parallel_map<FunctionalTotals>(
      static_cast<int>(patches.size()),
      [&](int i) { return patches[static_cast<size_t>(i)]->functionals(c0, q); });
  FunctionalTotals out;
  for (const auto& p : parts) out += p;
  return out;
}

double CompositeSurface::volume() const {
  return -functionals(0, QuadSpec{}).flux / 3;
}

std::vector<QuadNode> CompositeSurface::quadrature_nodes(int density) const {
  std::vector<QuadNode> all;
  for (const auto& p : patches) {
    auto nodes = p->quadrature_nodes(density);
    all.insert(all.end(), nodes.begin(), nodes.end());
  }
  return all;
}

std::vector<Vec3> CompositeSurface::sample_cloud(int per_patch) const {
  const int m = std::max(2, static_cast<int>(std::lround(
                                std::sqrt(static_cast<double>(per_patch)))));
  std::vector<Vec3> pts;
  pts.reserve(patches.size() * static_cast<size_t>(m) * m);
  for (const auto& p : patches)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        pts.push_back(
            p->sample((i + 0.5) / m, (j + 0.5) / m).x);
  return pts;
}

GluingReport CompositeSurface::check_gluing(int azimuth_samples) const {
  GluingReport rep;
  for (const auto& joint : joints) {
    if (joint.a.patch < 0 || joint.b.patch < 0) continue;
    const Patch& pa = *patches[static_cast<size_t>(joint.a.patch)];
    const Patch& pb = *patches[static_cast<size_t>(joint.b.patch)];
    for (int k = 0; k < azimuth_samples; ++k) {
      const double theta = kTwoPi * k / azimuth_samples;
      const SurfaceSample sa = pa.boundary_sample(joint.a.curve, theta);
      const SurfaceSample sb = pb.boundary_sample(joint.b.curve, theta);
      rep.max_position_gap =
          std::max(rep.max_position_gap, (sa.x - sb.x).norm());
      rep.max_normal_gap =
          std::max(rep.max_normal_gap, 1 - sa.nu.dot(sb.nu));
    }
    ++rep.joints_checked;
  }
  return rep;
}

}  // namespace hlab
