#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/quadrature.hpp"
#include "liouville/random.hpp"

namespace liouville {

inline constexpr int kMaxNdDimension = 12;

/// ds^2 = sum_k G_k(u) du_k^2 with G_k(u) = sum_i U_ik(u_i), optionally
/// perturbed by extra terms that break the Liouville form.
class NdMetric {
 public:
  using Coefficient = std::function<double(double)>;
  using Perturbation = std::function<double(std::span<const double>)>;

  /// coeffs[i][k] = U_ik.
  explicit NdMetric(std::vector<std::vector<Coefficient>> coeffs) : U_(std::move(coeffs)) {
    const std::size_t n = U_.size();
    if (n < 2) throw ArgumentError("NdMetric: dimension must be >= 2");
    for (const auto& row : U_) {
      if (row.size() != n) throw ArgumentError("NdMetric: coefficient table must be n x n");
    }
    extra_.resize(n);
  }

  [[nodiscard]] int dim() const { return static_cast<int>(U_.size()); }
  [[nodiscard]] bool liouville() const {
    return std::none_of(extra_.begin(), extra_.end(), [](const auto& e) { return bool(e); });
  }

  /// Copy with `term` added to G_k.
  [[nodiscard]] NdMetric with_perturbation(int k, Perturbation term) const {
    if (k < 0 || k >= dim()) throw ArgumentError("NdMetric: perturbation index out of range");
    NdMetric m = *this;
    if (m.extra_[k]) {
      m.extra_[k] = [a = m.extra_[k], b = std::move(term)](std::span<const double> u) {
        return a(u) + b(u);
      };
    } else {
      m.extra_[k] = std::move(term);
    }
    return m;
  }

  [[nodiscard]] double G(int k, std::span<const double> u) const {
    double s = 0.0;
    for (int i = 0; i < dim(); ++i) s += U_[i][k](u[i]);
    if (extra_[k]) s += extra_[k](u);
    return s;
  }

  /// Same metric with coordinates relabelled: new axis j is old axis perm[j].
  [[nodiscard]] NdMetric permuted(const std::vector<int>& perm) const {
    const int n = dim();
    if (static_cast<int>(perm.size()) != n) throw ArgumentError("NdMetric: bad permutation");
    if (!liouville()) throw UnsupportedError("NdMetric: cannot permute a perturbed metric");
    std::vector<std::vector<Coefficient>> c(n, std::vector<Coefficient>(n));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) c[i][k] = U_[perm[i]][perm[k]];
    }
    return NdMetric(std::move(c));
  }

 private:
  std::vector<std::vector<Coefficient>> U_;
  std::vector<Perturbation> extra_;
};

/// n-rectangle spanned by two opposite corners.
struct NdRect {
  std::vector<double> p0;
  std::vector<double> p1;

  NdRect(std::vector<double> a, std::vector<double> b) : p0(std::move(a)), p1(std::move(b)) {
    if (p0.size() != p1.size() || p0.size() < 2) {
      throw ArgumentError("NdRect: corners must share a dimension >= 2");
    }
  }

  [[nodiscard]] int dim() const { return static_cast<int>(p0.size()); }
  [[nodiscard]] bool degenerate() const {
    for (std::size_t i = 0; i < p0.size(); ++i) {
      if (p0[i] == p1[i]) return true;
    }
    return false;
  }
};

/// d(t) = center + t * (signs o delta), t in [-1, 1].
struct NdDiagonal {
  std::vector<int> signs;
  std::vector<double> center;
  std::vector<double> direction;

  [[nodiscard]] std::vector<double> at(double t) const {
    std::vector<double> p(center.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = center[i] + t * direction[i];
    return p;
  }
};

/// One diagonal per pair of opposite vertices (signs[0] = +1), 2^(n-1) in total.
/// Directions that coincide because a side has zero length are listed once.
inline std::vector<NdDiagonal> nd_diagonals(const NdRect& rect) {
  const int n = rect.dim();
  if (n > kMaxNdDimension) throw ArgumentError("nd_diagonals: dimension above 12");
  std::vector<double> m(n), delta(n);
  for (int i = 0; i < n; ++i) {
    m[i] = 0.5 * (rect.p0[i] + rect.p1[i]);
    delta[i] = 0.5 * (rect.p1[i] - rect.p0[i]);
  }
  std::vector<NdDiagonal> out;
  const unsigned count = 1u << (n - 1);
  for (unsigned mask = 0; mask < count; ++mask) {
    NdDiagonal d{std::vector<int>(n, 1), m, delta};
    for (int i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) d.signs[i] = -1;
    }
    for (int i = 0; i < n; ++i) d.direction[i] = d.signs[i] * delta[i];
    // Canonical orientation: first nonzero component positive.
    const auto first = std::find_if(d.direction.begin(), d.direction.end(),
                                    [](double x) { return x != 0.0; });
    if (first != d.direction.end() && *first < 0.0) {
      for (auto& x : d.direction) x = -x;
    }
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const NdDiagonal& e) { return e.direction == d.direction; });
    if (!seen) out.push_back(std::move(d));
  }
  return out;
}

/// E(d) = integral over [-1, 1] of sum_k G_k(d(t)) direction_k^2.
inline double nd_diagonal_energy(const NdMetric& metric, const NdDiagonal& d,
                                 const QuadratureSpec& quad = {}) {
  if (static_cast<int>(d.center.size()) != metric.dim()) {
    throw ArgumentError("nd_diagonal_energy: dimension mismatch");
  }
  return integrate(
      [&](double t) {
        const std::vector<double> p = d.at(t);
        double s = 0.0;
        for (int k = 0; k < metric.dim(); ++k) {
          const double g = metric.G(k, p);
          if (!(g > 0.0)) throw InvalidMetricError("NdMetric: G_k not positive on a diagonal");
          s += g * d.direction[k] * d.direction[k];
        }
        return s;
      },
      -1.0, 1.0, quad);
}

inline std::vector<double> nd_diagonal_energies(const NdMetric& metric, const NdRect& rect,
                                                const QuadratureSpec& quad = {}) {
  if (rect.dim() != metric.dim()) throw ArgumentError("nd_diagonal_energies: dimension mismatch");
  std::vector<double> e;
  for (const auto& d : nd_diagonals(rect)) e.push_back(nd_diagonal_energy(metric, d, quad));
  return e;
}

/// Largest pairwise |E(d_s) - E(d_s')|.
inline double nd_energy_gap(const NdMetric& metric, const NdRect& rect, const QuadratureSpec& quad = {}) {
  const auto e = nd_diagonal_energies(metric, rect, quad);
  const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
  return *hi - *lo;
}

/// U_ik(w) = c0 + c1 w + c2 w^2 with c2 in [0, 1], c1 in [-1, 1] and c0 chosen so that
/// U_ik >= 1 for |w| <= radius.
inline NdMetric random_polynomial_nd_metric(int n, double radius, std::mt19937_64& rng) {
  if (n < 2 || n > kMaxNdDimension) throw ArgumentError("random_polynomial_nd_metric: bad n");
  std::vector<std::vector<NdMetric::Coefficient>> c(n, std::vector<NdMetric::Coefficient>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double c2 = uniform01(rng);
      const double c1 = uniform(rng, -1.0, 1.0);
      const double c0 = 1.0 + std::abs(c1) * radius + uniform01(rng);
      c[i][k] = [c0, c1, c2](double w) { return c0 + w * (c1 + w * c2); };
    }
  }
  return NdMetric(std::move(c));
}

/// Rectangle with both corners uniform in [-radius, radius]^n.
inline NdRect random_nd_rect(int n, double radius, std::mt19937_64& rng) {
  std::vector<double> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = uniform(rng, -radius, radius);
    b[i] = uniform(rng, -radius, radius);
  }
  return {std::move(a), std::move(b)};
}

}  // namespace liouville
