#include "hlab/profile.hpp"

#include <cmath>

#include "hlab/quad.hpp"

namespace hlab {

double profile_speed(const ProfilePoint& p) {
  return std::hypot(p.drho, p.dz);
}

double profile_kappa_mer(const ProfilePoint& p) {
  const double s = profile_speed(p);
  return (p.drho * p.d2z - p.dz * p.d2rho) / (s * s * s);
}

double profile_kappa_circ(const ProfilePoint& p) {
  return p.dz / (p.rho * profile_speed(p));
}

double Profile::speed(double t) const { return profile_speed(at(t)); }
double Profile::kappa_mer(double t) const { return profile_kappa_mer(at(t)); }
double Profile::kappa_circ(double t) const {
  return profile_kappa_circ(at(t));
}
double Profile::scalar_mc(double t) const {
  const ProfilePoint p = at(t);
  return profile_kappa_mer(p) + profile_kappa_circ(p);
}

LineProfile::LineProfile(double rho_a, double z_a, double rho_b, double z_b)
    : ra_(rho_a), za_(z_a), rb_(rho_b), zb_(z_b) {
  if (rho_a < 0 || rho_b < 0)
    throw DomainError("LineProfile: negative radius");
  if (rho_a == rho_b && z_a == z_b)
    throw DomainError("LineProfile: endpoints coincide");
}

ProfilePoint LineProfile::at(double t) const {
  ProfilePoint p;
  p.rho = ra_ + t * (rb_ - ra_);
  p.z = za_ + t * (zb_ - za_);
  p.drho = rb_ - ra_;
  p.dz = zb_ - za_;
  return p;
}

ArcProfile::ArcProfile(double rho_c, double z_c, double r, double phi_lo,
                       double phi_hi)
    : rc_(rho_c), zc_(z_c), r_(r), lo_(phi_lo), hi_(phi_hi) {
  if (r <= 0) throw DomainError("ArcProfile: radius must be positive");
  if (!(phi_lo < phi_hi)) throw DomainError("ArcProfile: empty angle range");
}

ProfilePoint ArcProfile::at(double phi) const {
  ProfilePoint p;
  const double c = std::cos(phi), s = std::sin(phi);
  p.rho = rc_ + r_ * c;
  p.z = zc_ + r_ * s;
  p.drho = -r_ * s;
  p.dz = r_ * c;
  p.d2rho = -r_ * c;
  p.d2z = -r_ * s;
  return p;
}

CatenoidProfile::CatenoidProfile(double a, double x_lo, double x_hi)
    : a_(a), lo_(x_lo), hi_(x_hi) {
  if (a <= 0) throw DomainError("CatenoidProfile: a must be positive");
  if (!(x_lo < x_hi)) throw DomainError("CatenoidProfile: empty range");
}

ProfilePoint CatenoidProfile::at(double x) const {
  ProfilePoint p;
  p.rho = a_ * std::cosh(x / a_);
  p.z = x;
  p.drho = std::sinh(x / a_);
  p.dz = 1;
  p.d2rho = std::cosh(x / a_) / a_;
  return p;
}

EllipseProfile::EllipseProfile(double p, double q, double t_lo, double t_hi)
    : p_(p), q_(q), lo_(t_lo), hi_(t_hi) {
  if (p <= 0 || q <= 0) throw DomainError("EllipseProfile: axes must be > 0");
  if (!(t_lo < t_hi)) throw DomainError("EllipseProfile: empty range");
}

ProfilePoint EllipseProfile::at(double t) const {
  ProfilePoint pt;
  pt.rho = p_ * std::sin(t);
  pt.z = q_ * std::cos(t);
  pt.drho = p_ * std::cos(t);
  pt.dz = -q_ * std::sin(t);
  pt.d2rho = -p_ * std::sin(t);
  pt.d2z = -q_ * std::cos(t);
  return pt;
}

CubicProfile::CubicProfile(std::array<double, 4> cr, std::array<double, 4> cz)
    : cr_(cr), cz_(cz) {}

ProfilePoint CubicProfile::at(double t) const {
  auto horner = [t](const std::array<double, 4>& c, int deriv) {
    // value, first or second derivative of a cubic
    if (deriv == 0)
      return ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
    if (deriv == 1) return (3 * c[3] * t + 2 * c[2]) * t + c[1];
    return 6 * c[3] * t + 2 * c[2];
  };
  ProfilePoint p;
  p.rho = horner(cr_, 0);
  p.z = horner(cz_, 0);
  p.drho = horner(cr_, 1);
  p.dz = horner(cz_, 1);
  p.d2rho = horner(cr_, 2);
  p.d2z = horner(cz_, 2);
  return p;
}

FunctionProfile::FunctionProfile(std::function<ProfilePoint(double)> f,
                                 double t_lo, double t_hi)
    : f_(std::move(f)), lo_(t_lo), hi_(t_hi) {
  if (!(t_lo < t_hi)) throw DomainError("FunctionProfile: empty range");
}

NodoidProfile::NodoidProfile(double a, double b, double t_lo, double t_hi)
    : a_(a), b_(b), c_(std::hypot(a, b)), lo_(t_lo), hi_(t_hi) {
  if (a <= 0 || b <= 0) throw DomainError("NodoidProfile: need a, b > 0");
  if (!(t_lo < t_hi)) throw DomainError("NodoidProfile: empty range");
  const double span = std::max(std::fabs(t_lo), std::fabs(t_hi));
  if (span > 35)
    throw DomainError("NodoidProfile: parametrization degenerate beyond |t|=35");
  // cumulative height table on [0, span]; g is odd in t
  const int n = static_cast<int>(std::ceil(span / dt_)) + 1;
  gcum_.resize(static_cast<size_t>(n) + 1);
  gcum_[0] = 0;
  const GaussRule& rule = gauss_legendre(24);
  for (int k = 0; k < n; ++k) {
    const double lo = k * dt_, hi = lo + dt_;
    double s = 0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = 0.5 * (lo + hi) + 0.5 * dt_ * rule.nodes[i];
      s += rule.weights[i] * gprime(x);
    }
    gcum_[static_cast<size_t>(k) + 1] =
        gcum_[static_cast<size_t>(k)] + 0.5 * dt_ * s;
  }
}

double NodoidProfile::gprime(double t) const {
  const double u = c_ * std::cosh(t);
  const double w = (u - a_) * std::pow(u + a_, 3);
  return a_ * b_ * b_ / std::sqrt(w);
}

double NodoidProfile::height(double t) const {
  const double s = std::fabs(t);
  size_t k = static_cast<size_t>(std::floor(s / dt_));
  if (k + 1 >= gcum_.size()) k = gcum_.size() - 2;
  const double lo = static_cast<double>(k) * dt_;
  const GaussRule& rule = gauss_legendre(24);
  double rem = 0;
  const double h = s - lo;
  if (h > 0) {
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = lo + 0.5 * h * (1 + rule.nodes[i]);
      rem += rule.weights[i] * gprime(x);
    }
    rem *= 0.5 * h;
  }
  const double g = gcum_[k] + rem;
  return t < 0 ? -g : g;
}

ProfilePoint NodoidProfile::at(double t) const {
  const double ch = std::cosh(t), sh = std::sinh(t);
  const double u = c_ * ch;
  const double um = u - a_, up = u + a_;
  const double sqw = std::sqrt(um) * std::pow(up, 1.5);  // sqrt((u-a)(u+a)^3)
  ProfilePoint p;
  p.rho = b_ * std::sqrt(um / up);
  p.z = height(t);
  p.drho = a_ * b_ * c_ * sh / sqw;
  p.dz = a_ * b_ * b_ / sqw;
  // d/dt of (u-a)(u+a)^3
  const double dw = 2 * c_ * sh * (2 * u - a_) * up * up;
  const double sqw3 = sqw * sqw * sqw;
  p.d2rho = a_ * b_ * u / sqw - a_ * b_ * c_ * sh * 0.5 * dw / sqw3;
  p.d2z = -a_ * b_ * b_ * 0.5 * dw / sqw3;
  return p;
}

double NodoidProfile::default_t_max(double a, double b, double t_cap) {
  if (a <= 0 || b <= 0) throw DomainError("nodoid: need a, b > 0");
  const double c = std::hypot(a, b);
  const double tol = 1e-8 * b;
  auto gap = [&](double t) {
    const double u = c * std::cosh(t);
    return b * (1 - std::sqrt((u - a) / (u + a)));  // b - f(t) > 0
  };
  if (gap(t_cap) > tol) return t_cap;
  double lo = 0, hi = t_cap;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * t_cap; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > tol ? lo : hi) = mid;
  }
  return std::min(std::max(hi, 0.5), t_cap);
}

}  // namespace hlab
