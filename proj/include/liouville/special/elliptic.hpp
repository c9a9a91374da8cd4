#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/quadrature.hpp"

namespace liouville::special {

namespace detail {

inline QuadratureSpec elliptic_quadrature() {
  return {QuadratureScheme::adaptive, 32, 1e-14, 50};
}

}  // namespace detail

/// Incomplete elliptic integral of the third kind, trigonometric form:
/// integral over [0, phi] of dθ / ((1 - n sin²θ) sqrt(1 - m sin²θ)).
inline double ellint_pi_trig(double n, double phi, double m) {
  if (phi == 0.0) return 0.0;
  const double reach = std::abs(phi) >= std::numbers::pi / 2 ? 1.0 : std::pow(std::sin(phi), 2);
  if (1.0 - n * reach <= 0.0) {
    throw SingularityError("ellint_pi_trig: 1 - n sin^2 vanishes on the integration path");
  }
  if (1.0 - m * reach <= 0.0) {
    throw SingularityError("ellint_pi_trig: 1 - m sin^2 vanishes on the integration path");
  }
  const auto integrand = [n, m](double theta) {
    const double s2 = std::pow(std::sin(theta), 2);
    return 1.0 / ((1.0 - n * s2) * std::sqrt(1.0 - m * s2));
  };
  return integrate(integrand, 0.0, phi, detail::elliptic_quadrature());
}

/// Jacobi form: integral over [0, x] of dt / ((1 - n t²) sqrt((1 - t²)(1 - m t²))).
///
/// Integrated directly in t; near |x| = 1 the tail uses t = 1 - w², which
/// removes the inverse square-root endpoint singularity.
inline double ellint_pi_jacobi(double n, double x, double m) {
  if (std::abs(x) > 1.0) throw ArgumentError("ellint_pi_jacobi: |x| must be <= 1");
  if (n * x * x >= 1.0) throw SingularityError("ellint_pi_jacobi: 1 - n x^2 <= 0 (pole)");
  if (m * x * x >= 1.0) throw SingularityError("ellint_pi_jacobi: 1 - m x^2 <= 0");
  if (x == 0.0) return 0.0;
  if (x < 0.0) return -ellint_pi_jacobi(n, -x, m);

  const auto direct = [n, m](double t) {
    const double t2 = t * t;
    return 1.0 / ((1.0 - n * t2) * std::sqrt((1.0 - t2) * (1.0 - m * t2)));
  };
  constexpr double split = 0.9;
  const auto quad = detail::elliptic_quadrature();
  if (x <= split) return integrate(direct, 0.0, x, quad);

  // t = 1 - w^2, dt = -2w dw, 1 - t^2 = w^2 (2 - w^2).
  const auto tail = [n, m](double w) {
    const double t = 1.0 - w * w;
    const double t2 = t * t;
    return 2.0 / ((1.0 - n * t2) * std::sqrt((2.0 - w * w) * (1.0 - m * t2)));
  };
  const double w_split = std::sqrt(1.0 - split);
  const double w_x = std::sqrt(std::max(0.0, 1.0 - x));
  return integrate(direct, 0.0, split, quad) + integrate(tail, w_x, w_split, quad);
}

struct JacobiTriple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

/// Standard Jacobi elliptic functions sn, cn, dn of real argument for 0 <= m <= 1,
/// by the descending Landen (arithmetic-geometric mean) transformation.
inline JacobiTriple jacobi_standard(double z, double m) {
  if (!(m >= 0.0 && m <= 1.0)) throw ArgumentError("jacobi_standard: modulus m must be in [0, 1]");
  if (m == 0.0) return {std::sin(z), std::cos(z), 1.0};
  if (m == 1.0) {
    const double sech = 1.0 / std::cosh(z);
    return {std::tanh(z), sech, sech};
  }
  std::vector<double> a{1.0};
  std::vector<double> c{std::sqrt(m)};
  double b = std::sqrt(1.0 - m);
  while (std::abs(c.back()) > 1e-16 * a.back() && a.size() < 64) {
    const double an = 0.5 * (a.back() + b);
    const double cn = 0.5 * (a.back() - b);
    b = std::sqrt(a.back() * b);
    a.push_back(an);
    c.push_back(cn);
  }
  const std::size_t N = a.size() - 1;
  double phi = std::ldexp(a[N] * z, static_cast<int>(N));
  double phi_prev = phi;
  for (std::size_t k = N; k >= 1; --k) {
    phi_prev = phi;
    phi = 0.5 * (phi + std::asin(c[k] / a[k] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // The Landen ratio is 0/0 near sn = 1; fall back to the square root there.
  const double denom = std::cos(phi_prev - phi);
  const double dn = std::abs(denom) > 0.1 ? cn / denom : std::sqrt(1.0 - m * sn * sn);
  return {sn, cn, dn};
}

}  // namespace liouville::special
