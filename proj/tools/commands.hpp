#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "csv.hpp"
#include "liouville/liouville.hpp"
#include "svg.hpp"

namespace liouville::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

/// Thrown for bad flag combinations that the parser cannot catch.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string chart = "parabolic";
  EllipsoidAxes axes{};
  double helicoid_t = 0.0;
  std::optional<RectSpec> rect;
  int rects = 100;
  std::uint64_t seed = 1;
  int k = 32;
  bool discrete = false;
  int quad_order = 64;
  double tol = 1e-8;
  std::string kind = "k-sweep";
  int dim = 3;
  int net_lines = 12;
  char project = 'z';
  bool timestamp = true;
};

inline QuadratureSpec quadrature(const RunConfig& c) {
  QuadratureSpec q;
  q.order = c.quad_order;
  q.validate();
  return q;
}

inline bool is_ellipsoid_alias(const std::string& name) {
  return name == "ellipsoid" || name == "ellipsoid_conformal";
}

inline SurfaceChart resolve_chart(const RunConfig& c) {
  if (is_ellipsoid_alias(c.chart)) return liouville_chart(c.axes);
  return catalog(c.chart, {c.helicoid_t, c.axes});
}

namespace detail {

inline std::string rect_label(const RectSpec& r) {
  return fmt::format("M=({:.6g},{:.6g}) delta=({:.6g},{:.6g})", r.center.u, r.center.v, r.alpha(),
                     r.beta());
}

inline std::vector<RectSpec> sweep_rects(const RunConfig& c, const Domain& d) {
  if (c.rect) return {*c.rect};
  return random_rects(d, c.rects, c.seed);
}

inline Point2 project(const AmbientPoint& x, char axis) {
  switch (axis) {
    case 'x': return {x[1], x[2]};
    case 'y': return {x[0], x[2]};
    default: return {x[0], x[1]};
  }
}

// Verdict accumulator: each check writes one CSV row.
class Report {
 public:
  explicit Report(std::ostream& out) : csv_(out, {"check", "detail", "value", "threshold", "verdict"}) {}

  void add(const std::string& check, const std::string& detail, double value, double threshold, bool pass) {
    csv_.row({check, detail, value, threshold, std::string(pass ? "pass" : "FAIL")});
    ok_ = ok_ && pass;
  }
  void note(const std::string& check, const std::string& detail, double value) {
    csv_.row({check, detail, value, std::string(), std::string("info")});
  }
  [[nodiscard]] bool ok() const { return ok_; }

 private:
  CsvWriter csv_;
  bool ok_ = true;
};

}  // namespace detail

/// Classification, diagonal-gap sweep, oddness, converse diagnostics and Ivory chords.
/// Exit 0 iff every verdict agrees with the chart's expected class.
inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  const SurfaceChart chart = resolve_chart(c);
  const QuadratureSpec quad = quadrature(c);
  const Domain& dom = chart.domain();
  const bool liouville = is_liouville_family(chart.expected_class);
  detail::Report rep(out);

  const Classification cls = classify_line_element(chart.metric);
  const bool class_ok =
      cls.satisfies(chart.expected_class) && (liouville || !cls.satisfies(LineElementClass::orthogonal_liouville));
  rep.add("classification",
          fmt::format("expected {} got {}", to_string(chart.expected_class), to_string(cls.most_specific)),
          class_ok ? 1.0 : 0.0, 1.0, class_ok);

  const std::vector<RectSpec> rects = detail::sweep_rects(c, dom);
  double worst = 0.0;
  std::string worst_at;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const DiagonalEnergies e = diagonal_energies(chart.metric, rects[i], quad);
    const double scaled = std::abs(e.gap()) / std::max(e.e1, 1.0);
    if (liouville) {
      rep.add("diagonal_gap", fmt::format("rect {} {}", i, detail::rect_label(rects[i])), e.gap(),
              c.tol * std::max(e.e1, 1.0), scaled <= c.tol);
    }
    if (scaled > worst) {
      worst = scaled;
      worst_at = detail::rect_label(rects[i]);
    }
  }

  if (!liouville) {
    // The documented witness rectangle, when it fits the chart.
    const RectSpec witness{{1, 1}, {0.5, 0.5}};
    try {
      const DiagonalEnergies e = diagonal_energies(chart.metric, witness, quad);
      rep.note("diagonal_energy", "E(d1) " + detail::rect_label(witness), e.e1);
      rep.note("diagonal_energy", "E(d2) " + detail::rect_label(witness), e.e2);
      const double scaled = std::abs(e.gap()) / std::max(e.e1, 1.0);
      rep.add("witness_gap",
              fmt::format("non-Liouville, witness gap {:.6f} at {}", e.gap(), detail::rect_label(witness)),
              e.gap(), c.tol, std::max(scaled, worst) > c.tol);
    } catch (const DomainError&) {
      rep.add("witness_gap", "non-Liouville, largest scaled gap at " + worst_at, worst, c.tol, worst > c.tol);
    }
  }

  if (liouville) {
    const std::size_t n_odd = std::min<std::size_t>(rects.size(), 10);
    for (std::size_t i = 0; i < n_odd; ++i) {
      for (double t : {0.25, 0.5, 1.0}) {
        const double d = oddness_defect(chart.metric, rects[i], t);
        const double scale = std::max(1.0, std::abs(diagonal_form_difference(chart.metric, rects[i], t)) +
                                               chart.metric.at(rects[i].center).g11);
        rep.add("oddness", fmt::format("rect {} t={}", i, t), d, c.tol * scale, std::abs(d) <= c.tol * scale);
      }
    }
  }

  const double alpha = 0.1 * std::min(dom.u_extent(), dom.v_extent());
  const ConverseDiagnostics cd = converse_diagnostics(chart.metric, dom.center(), alpha, 0.5);
  if (liouville) {
    for (auto [name, v] : {std::pair{"g12_estimate", cd.g12_estimate}, std::pair{"mixed_sum", cd.mixed_sum},
                           std::pair{"mixed_g11", cd.mixed_g11}}) {
      rep.add(std::string("converse_") + name, "at domain center", v, 1e-5, std::abs(v) <= 1e-5);
    }
  } else {
    rep.note("converse_g12_estimate", "at domain center", cd.g12_estimate);
    rep.note("converse_mixed_sum", "at domain center", cd.mixed_sum);
    rep.note("converse_mixed_g11", "at domain center", cd.mixed_g11);
  }

  if (chart.planar() && chart.staeckel && chart.has_embedding()) {
    for (std::size_t i = 0; i < rects.size(); ++i) {
      const auto [l1, l2] = ivory_chords(chart, rects[i]);
      const double thr = c.tol * std::max(1.0, l1);
      rep.add("ivory_chords", fmt::format("rect {}", i), l1 - l2, thr, std::abs(l1 - l2) <= thr);
    }
  }
  return rep.ok() ? kOk : kVerifyFailed;
}

/// Parameter-line net with an optional highlighted rectangle and its two image diagonals.
inline void cmd_net(const RunConfig& c, std::ostream& svg) {
  const SurfaceChart chart = resolve_chart(c);
  if (!chart.has_embedding()) throw UsageError("chart '" + chart.name + "' has no embedding to draw");
  const Domain& d = chart.domain();
  const auto img = [&](ParamPoint p) { return detail::project(chart.point(p), c.project); };
  const int n = std::max(c.net_lines, 1);
  const int samples = 96;
  SvgCanvas canvas;

  for (int j = 0; j < n; ++j) {
    const double s = (j + 0.5) / n;
    std::vector<Point2> ul, vl;
    for (int i = 0; i <= samples; ++i) {
      const double r = static_cast<double>(i) / samples;
      ul.push_back(img({d.u_min + r * d.u_extent(), d.v_min + s * d.v_extent()}));
      vl.push_back(img({d.u_min + s * d.u_extent(), d.v_min + r * d.v_extent()}));
    }
    canvas.polyline(std::move(ul), "#9a9a9a", 0.8);
    canvas.polyline(std::move(vl), "#9a9a9a", 0.8);
  }

  if (c.rect) {
    const RectSpec& r = *c.rect;
    const DiagonalPair dp = diagonals(r, d);
    std::vector<Point2> border;
    for (ParamPoint corner : {r.A(), r.B(), r.C(), r.D()}) {
      const ParamPoint next = corner == r.A() ? r.B() : corner == r.B() ? r.C() : corner == r.C() ? r.D() : r.A();
      for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        border.push_back(img({corner.u + t * (next.u - corner.u), corner.v + t * (next.v - corner.v)}));
      }
    }
    border.push_back(border.front());
    canvas.polyline(std::move(border), "#1f4e9c", 1.6, "rectangle");

    const int pieces = c.discrete ? std::max(c.k, 1) : samples;
    const auto path = [&](const ParamCurve& curve) {
      std::vector<Point2> pts;
      for (int i = 0; i <= pieces; ++i) pts.push_back(img(curve(-1.0 + 2.0 * i / pieces)));
      return pts;
    };
    canvas.polyline(path(dp.d1), "#c0392b", 2.0, "diagonal1");
    canvas.polyline(path(dp.d2), "#27ae60", 2.0, "diagonal2");

    const DiagonalEnergies e = c.discrete ? discrete_diagonal_energies(chart, r, c.k)
                                          : diagonal_energies(chart.metric, r, quadrature(c));
    canvas.caption(fmt::format("{} {}", chart.name, detail::rect_label(r)));
    canvas.caption(c.discrete ? fmt::format("k={}  E(d1)={:.12g}  E(d2)={:.12g}", c.k, e.e1, e.e2)
                              : fmt::format("E(d1)={:.12g}  E(d2)={:.12g}", e.e1, e.e2));
  } else {
    canvas.caption(chart.name);
  }

  std::string comment;
  if (c.timestamp) {
    comment = fmt::format("generated {:%Y-%m-%dT%H:%M:%SZ}",
                          fmt::gmtime(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now())));
  }
  canvas.write(svg, comment);
}

namespace detail {

inline RectSpec table_rect(const RunConfig& c, const Domain& d) {
  if (c.rect) return *c.rect;
  std::mt19937_64 rng(c.seed);
  return random_rect(d, rng);
}

inline void table_k_sweep(const RunConfig& c, std::ostream& out) {
  const SurfaceChart chart = resolve_chart(c);
  const RectSpec r = table_rect(c, chart.domain());
  const DiagonalPair dp = diagonals(r, chart.domain());
  CsvWriter csv(out, {"k", "energy_d1", "energy_d2", "gap", "length_d1", "length_d2", "schwarz_d1", "schwarz_d2"});
  for (int k = 1; k <= c.k; ++k) {
    const auto p1 = liouville::detail::image_polygon(chart, dp.d1, k);
    const auto p2 = liouville::detail::image_polygon(chart, dp.d2, k);
    const DiagonalEnergies e = discrete_diagonal_energies(chart, r, k);
    const double l1 = discrete_length(p1, -1, 1), l2 = discrete_length(p2, -1, 1);
    csv.row({std::int64_t{k}, e.e1, e.e2, e.gap(), l1, l2, l1 * l1 / (2 * e.e1), l2 * l2 / (2 * e.e2)});
  }
}

inline void table_rects(const RunConfig& c, std::ostream& out) {
  const SurfaceChart chart = resolve_chart(c);
  const QuadratureSpec quad = quadrature(c);
  CsvWriter csv(out, {"index", "center_u", "center_v", "alpha", "beta", "energy_d1", "energy_d2", "gap",
                      "relative_gap"});
  const auto rects = sweep_rects(c, chart.domain());
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const RectSpec& r = rects[i];
    const DiagonalEnergies e = diagonal_energies(chart.metric, r, quad);
    csv.row({static_cast<std::int64_t>(i), r.center.u, r.center.v, r.alpha(), r.beta(), e.e1, e.e2, e.gap(),
             e.gap() / std::max(e.e1, 1.0)});
  }
}

inline void table_geodesic(const RunConfig& c, std::ostream& out) {
  const SurfaceChart chart = resolve_chart(c);
  if (!classify_line_element(chart.metric).satisfies(LineElementClass::isothermal_liouville)) {
    throw UsageError("geodesic table needs an isothermal Liouville chart");
  }
  const Domain& d = chart.domain();
  const ParamPoint start = c.rect ? c.rect->center : d.center();
  LiouvilleSplit split = isothermal_split(chart.metric, start, 0.0);
  split.a_const = 0.5 * (split.U(start.u) - split.V(start.v));
  const double T = 0.5 * std::min(d.u_extent(), d.v_extent());
  const GeodesicPolyline g = integrate_liouville_geodesic(split, start, T, T / 4096.0, d);
  CsvWriter csv(out, {"t", "u", "v", "du", "dv", "unit_speed_defect"});
  for (std::size_t i = 0; i < g.samples.size(); i += 64) {
    const GeodesicSample& s = g.samples[i];
    const double w = split.U(s.p.u) + split.V(s.p.v);
    csv.row({s.t, s.p.u, s.p.v, s.vel.du, s.vel.dv, std::abs(w * (s.vel.du * s.vel.du + s.vel.dv * s.vel.dv) - 1)});
  }
}

inline void table_ellipsoid(const RunConfig& c, std::ostream& out) {
  const ConformalTables t(c.axes);
  CsvWriter csv(out, {"x", "y", "U", "V", "residual", "closed_form_difference"});
  const int n = 32;
  const double h = 1e-5;
  for (int i = 1; i < n; ++i) {
    const double x = t.x_max() * i / n, y = t.y_max() * i / n;
    const double U = t.U(x), V = t.V(y);
    const double ru = std::abs((t.U(x + h) - t.U(x - h)) / (2 * h) - std::sqrt(1 / weight_f(c.axes, U)));
    const double rv = std::abs((t.V(y + h) - t.V(y - h)) / (2 * h) - std::sqrt(-1 / weight_f(c.axes, V)));
    csv.row({x, y, U, V, std::max(ru, rv), gen_sn_cross_check(t, y)});
  }
}

inline void table_special(const RunConfig&, std::ostream& out) {
  CsvWriter csv(out, {"n", "m", "u", "gen_sn", "residual"});
  for (double n : {-0.8, -0.4, 0.0, 0.3, 0.6}) {
    for (double m : {0.0, 0.2, 0.4, 0.6, 0.8}) {
      for (double u : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double s = special::gen_sn(n, u, m);
        csv.row({n, m, u, s, std::abs(special::ellint_pi_jacobi(n, s, m) - u)});
      }
    }
  }
}

}  // namespace detail

inline void cmd_table(const RunConfig& c, std::ostream& out) {
  if (c.kind == "k-sweep") return detail::table_k_sweep(c, out);
  if (c.kind == "rects") return detail::table_rects(c, out);
  if (c.kind == "geodesic") return detail::table_geodesic(c, out);
  if (c.kind == "ellipsoid") return detail::table_ellipsoid(c, out);
  if (c.kind == "special") return detail::table_special(c, out);
  throw UsageError("unknown table kind '" + c.kind + "'");
}

/// Random n-D Liouville metrics must give equal energies; an injected u1 u2 term must not.
inline int cmd_nd_verify(const RunConfig& c, std::ostream& out) {
  if (c.dim < 2 || c.dim > kMaxNdDimension) {
    throw UsageError(fmt::format("--dim must be in [2, {}]", kMaxNdDimension));
  }
  const QuadratureSpec quad = quadrature(c);
  std::mt19937_64 rng(c.seed);
  CsvWriter csv(out, {"trial", "metric", "signs", "energy", "relative_gap", "verdict"});
  bool ok = true;
  const auto signs_of = [](const NdDiagonal& d) {
    std::string s;
    for (int x : d.signs) s += x > 0 ? '+' : '-';
    return s;
  };
  const auto run = [&](int trial, const std::string& label, const NdMetric& g, const NdRect& r, bool expect_equal) {
    const auto diags = nd_diagonals(r);
    const auto e = nd_diagonal_energies(g, r, quad);
    double lo = e.front(), hi = e.front();
    for (std::size_t i = 0; i < e.size(); ++i) {
      lo = std::min(lo, e[i]);
      hi = std::max(hi, e[i]);
      csv.row({std::int64_t{trial}, label, signs_of(diags[i]), e[i], std::string(), std::string()});
    }
    const double rel = (hi - lo) / std::max(hi, 1.0);
    const bool pass = expect_equal ? rel <= 1e-9 : hi - lo > 1e-3;
    csv.row({std::int64_t{trial}, label, std::string("gap"), hi - lo, rel, std::string(pass ? "pass" : "FAIL")});
    ok = ok && pass;
  };
  const int trials = c.rect ? 1 : std::max(c.rects, 1);
  for (int i = 0; i < trials; ++i) {
    const NdMetric g = random_polynomial_nd_metric(c.dim, 2.0, rng);
    run(i, "liouville", g, random_nd_rect(c.dim, 2.0, rng), true);
  }
  const NdMetric g = random_polynomial_nd_metric(c.dim, 1.0, rng).with_perturbation(
      0, [](std::span<const double> u) { return 0.5 * u[0] * u[1]; });
  run(trials, "cross_term", g, NdRect(std::vector<double>(c.dim, -0.8), std::vector<double>(c.dim, 0.9)), false);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace liouville::cli
