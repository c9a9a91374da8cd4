#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "liouville/errors.hpp"
#include "liouville/special/polynomial.hpp"

namespace liouville::special {

inline constexpr int kMaxLieOrder = 24;

/// Truncation and stepping policy for the Lie-series continuation.
struct LieSeriesSpec {
  int order = 12;             // truncation degree of each local series
  double radius_guard = 0.5;  // largest |step| in the argument
  double tol = 1e-15;         // last retained term relative to the sum

  void validate() const {
    if (order < 5) throw ArgumentError("LieSeriesSpec: order must be >= 5");
    if (order > kMaxLieOrder) throw ArgumentError("LieSeriesSpec: order above maximum");
    if (!(radius_guard > 0.0)) throw ArgumentError("LieSeriesSpec: radius_guard must be > 0");
  }
};

/// The derivation D = y d/dx - (f_x / 2) d/dy for
/// f(x, y) = y^2 - (1 - n x^2)^2 (1 - x^2)(1 - m x^2).
///
/// With P(x) = (1 - n x^2)^2 (1 - x^2)(1 - m x^2) we have -f_x / 2 = P'(x) / 2,
/// which has integer-combination coefficients in (n, m); no division occurs.
template <class T>
class LieOperator {
 public:
  LieOperator(T n, T m) : n_(n), m_(m) {
    // P as a polynomial in x, built factor by factor.
    const std::vector<T> en2{T(1), T(0), T(0) - n};   // 1 - n x^2
    const std::vector<T> cn2{T(1), T(0), T(-1)};      // 1 - x^2
    const std::vector<T> dn2{T(1), T(0), T(0) - m};   // 1 - m x^2
    p_ = multiply(multiply(multiply(en2, en2), cn2), dn2);
    std::vector<T> half_dp(p_.size() > 1 ? p_.size() - 1 : 1, T(0));
    for (std::size_t k = 1; k < p_.size(); ++k) {
      // P has only even powers, so k * p_k / 2 is exact: (k/2) * p_k for even k.
      half_dp[k - 1] = (k % 2 == 0) ? T(static_cast<int>(k / 2)) * p_[k] : T(0);
    }
    half_dp_ = BiPoly<T>::in_x(half_dp);
  }

  /// D applied to a polynomial in (x, y).
  [[nodiscard]] BiPoly<T> apply(const BiPoly<T>& q) const {
    return BiPoly<T>::y() * q.d_dx() + half_dp_ * q.d_dy();
  }

  /// f(x, y); the flow of D preserves its level sets.
  [[nodiscard]] BiPoly<T> constraint() const {
    return BiPoly<T>::y() * BiPoly<T>::y() - BiPoly<T>::in_x(p_);
  }

  [[nodiscard]] const std::vector<T>& p_coefficients() const { return p_; }
  [[nodiscard]] const BiPoly<T>& half_p_derivative() const { return half_dp_; }

 private:
  static std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
  }

  T n_;
  T m_;
  std::vector<T> p_;
  BiPoly<T> half_dp_;
};

/// D^j x for j = 0..order (as polynomials in x, y).
template <class T>
std::vector<BiPoly<T>> lie_derivatives(const LieOperator<T>& op, int order) {
  std::vector<BiPoly<T>> terms;
  terms.reserve(static_cast<std::size_t>(order) + 1);
  terms.push_back(BiPoly<T>::x());
  for (int j = 1; j <= order; ++j) terms.push_back(op.apply(terms.back()));
  return terms;
}

/// Coefficients c_j = (D^j x)(0, 1), so that gen-sn(u) = sum c_j u^j / j!.
template <class T>
std::vector<T> lie_sn_series(T n, T m, int order) {
  if (order < 0 || order > kMaxLieOrder) {
    throw ArgumentError("lie_sn_series: order must be in [0, " + std::to_string(kMaxLieOrder) + "]");
  }
  const LieOperator<T> op(n, m);
  std::vector<T> c;
  for (const auto& p : lie_derivatives(op, order)) c.push_back(p.template evaluate<T>(T(0), T(1)));
  return c;
}

/// Values of the generalized Jacobi functions at one argument.
struct GeneralizedJacobi {
  double sn = 0.0;   // x
  double dsn = 1.0;  // y = d sn / du = en^2 cn dn
  double cn = 1.0;
  double dn = 1.0;
  double en = 1.0;
  double am = 0.0;   // branch-tracked amplitude
};

/// Generalized sn(n; u | m) and companions for fixed (n, m), evaluated by
/// re-centred Lie series along the real axis.
class GeneralizedJacobiFunctions {
 public:
  GeneralizedJacobiFunctions(double n, double m, LieSeriesSpec spec = {})
      : n_(n), m_(m), spec_(spec) {
    spec_.validate();
    const LieOperator<double> op(n, m);
    // One extra derivative so the y-series has the same truncation degree.
    for (const auto& p : lie_derivatives(op, spec_.order + 1)) {
      terms_.push_back(DenseBiPoly::from(p));
      max_x_ = std::max(max_x_, terms_.back().max_x);
      max_y_ = std::max(max_y_, terms_.back().max_y);
    }
    inv_factorial_.resize(terms_.size());
    double f = 1.0;
    for (std::size_t j = 0; j < terms_.size(); ++j) {
      if (j > 0) f *= static_cast<double>(j);
      inv_factorial_[j] = 1.0 / f;
    }
  }

  [[nodiscard]] double n() const { return n_; }
  [[nodiscard]] double m() const { return m_; }

  /// Taylor coefficients (D^j x)(x0, y0) / j! of the flow through (x0, y0).
  [[nodiscard]] std::vector<double> local_coefficients(double x0, double y0) const {
    std::vector<double> xp(static_cast<std::size_t>(max_x_) + 1, 1.0);
    std::vector<double> yp(static_cast<std::size_t>(max_y_) + 1, 1.0);
    for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * x0;
    for (std::size_t j = 1; j < yp.size(); ++j) yp[j] = yp[j - 1] * y0;
    std::vector<double> a(terms_.size());
    for (std::size_t j = 0; j < terms_.size(); ++j) {
      a[j] = terms_[j].evaluate(xp, yp) * inv_factorial_[j];
    }
    return a;
  }

  [[nodiscard]] GeneralizedJacobi evaluate(double z) const {
    double x = 0.0;
    double y = 1.0;
    double am = 0.0;
    double u = 0.0;
    const int N = spec_.order;
    const double amp_rate = 1.0 + std::abs(n_);
    while (u != z) {
      const std::vector<double> a = local_coefficients(x, y);
      const double scale = std::max({1.0, std::abs(x), std::abs(y)});
      double h = std::min(spec_.radius_guard, 1.0 / amp_rate);
      for (int j : {N - 1, N}) {
        if (a[j] != 0.0) h = std::min(h, std::pow(spec_.tol * scale / std::abs(a[j]), 1.0 / j));
      }
      if (h < 1e-9) {
        throw AccuracyError("gen_sn: series truncation estimate forces a vanishing step");
      }
      const double remaining = z - u;
      const double step = std::abs(remaining) <= h ? remaining : std::copysign(h, remaining);

      double xn = 0.0;
      double yn = 0.0;
      double hp = 1.0;
      for (int j = 0; j <= N; ++j) {
        xn += a[j] * hp;
        // y = x' has coefficients (j + 1) a_{j+1}.
        yn += (j + 1) * a[j + 1] * hp;
        hp *= step;
      }
      x = xn;
      y = yn;
      u = (step == remaining) ? z : u + step;
      if (1.0 - n_ * x * x <= 0.0) {
        throw SingularityError("gen_sn: left the region 1 - n x^2 > 0");
      }
      am = track_amplitude(am, x, y);
    }
    return assemble(x, y, am);
  }

  [[nodiscard]] double sn(double z) const { return evaluate(z).sn; }
  [[nodiscard]] double cn(double z) const { return evaluate(z).cn; }
  [[nodiscard]] double dn(double z) const { return evaluate(z).dn; }
  [[nodiscard]] double en(double z) const { return evaluate(z).en; }
  [[nodiscard]] double am(double z) const { return evaluate(z).am; }

  /// f(x, y) = y^2 - P(x); zero on the exact trajectory.
  [[nodiscard]] double constraint(double x, double y) const {
    const double x2 = x * x;
    const double e = 1.0 - n_ * x2;
    return y * y - e * e * (1.0 - x2) * (1.0 - m_ * x2);
  }

 private:
  static double track_amplitude(double am_prev, double x, double y) {
    const double c = std::copysign(std::sqrt(std::max(0.0, 1.0 - x * x)), y);
    const double base = std::atan2(x, c);
    const double two_pi = 2.0 * std::numbers::pi;
    return base + two_pi * std::round((am_prev - base) / two_pi);
  }

  [[nodiscard]] GeneralizedJacobi assemble(double x, double y, double am) const {
    GeneralizedJacobi g;
    g.sn = x;
    g.dsn = y;
    g.cn = std::copysign(std::sqrt(std::max(0.0, 1.0 - x * x)), y);
    g.dn = std::sqrt(std::max(0.0, 1.0 - m_ * x * x));
    g.en = std::sqrt(std::max(0.0, 1.0 - n_ * x * x));
    g.am = am;
    return g;
  }

  double n_;
  double m_;
  LieSeriesSpec spec_;
  std::vector<DenseBiPoly> terms_;
  std::vector<double> inv_factorial_;
  int max_x_ = 0;
  int max_y_ = 0;
};

inline GeneralizedJacobi gen_jacobi(double n, double z, double m, const LieSeriesSpec& spec = {}) {
  return GeneralizedJacobiFunctions(n, m, spec).evaluate(z);
}
inline double gen_sn(double n, double z, double m, const LieSeriesSpec& spec = {}) {
  return gen_jacobi(n, z, m, spec).sn;
}
inline double gen_cn(double n, double z, double m, const LieSeriesSpec& spec = {}) {
  return gen_jacobi(n, z, m, spec).cn;
}
inline double gen_dn(double n, double z, double m, const LieSeriesSpec& spec = {}) {
  return gen_jacobi(n, z, m, spec).dn;
}
inline double gen_en(double n, double z, double m, const LieSeriesSpec& spec = {}) {
  return gen_jacobi(n, z, m, spec).en;
}
inline double gen_am(double n, double z, double m, const LieSeriesSpec& spec = {}) {
  return gen_jacobi(n, z, m, spec).am;
}

/// Independent path: adaptive Dormand-Prince integration of x' = y, y' = P'(x)/2
/// from (0, 1). Returns (x, y) at u = z.
inline std::array<double, 2> gen_sn_ode(double n, double z, double m, double tol = 1e-14) {
  using State = std::array<double, 2>;
  const auto rhs = [n, m](const State& s, State& ds, double) {
    const double x = s[0];
    const double x2 = x * x;
    const double e = 1.0 - n * x2;
    const double c = 1.0 - x2;
    const double d = 1.0 - m * x2;
    // P = e^2 c d; P' = 2 e e' c d + e^2 c' d + e^2 c d'.
    const double dp = 2.0 * e * (-2.0 * n * x) * c * d + e * e * (-2.0 * x) * d +
                      e * e * c * (-2.0 * m * x);
    ds[0] = s[1];
    ds[1] = 0.5 * dp;
  };
  State s{0.0, 1.0};
  if (z == 0.0) return s;
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>());
  odeint::integrate_adaptive(stepper, rhs, s, 0.0, z, z / 64.0);
  return s;
}

}  // namespace liouville::special
