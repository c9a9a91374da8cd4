#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace liouville::cli {

using Point2 = std::array<double, 2>;

inline std::string xml_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '&': r += "&amp;"; break;
      case '<': r += "&lt;"; break;
      case '>': r += "&gt;"; break;
      case '"': r += "&quot;"; break;
      default: r += c;
    }
  }
  return r;
}

// Collects polylines in world coordinates (y up) and writes them through a
// viewport transform that fits the bounding box into the canvas.
class SvgCanvas {
 public:
  explicit SvgCanvas(double size = 800, double margin = 40) : size_(size), margin_(margin) {}

  void polyline(std::vector<Point2> pts, std::string stroke, double width, std::string id = {}) {
    for (const auto& p : pts) extend(p);
    lines_.push_back({std::move(pts), std::move(stroke), width, std::move(id)});
  }

  void caption(std::string text) { captions_.push_back(std::move(text)); }

  void write(std::ostream& out, const std::string& comment) const {
    const double text_h = 18.0 * static_cast<double>(captions_.size());
    const double w = std::max(hi_[0] - lo_[0], 1e-12);
    const double h = std::max(hi_[1] - lo_[1], 1e-12);
    const double inner = size_ - 2 * margin_;
    const double scale = inner / std::max(w, h);
    const auto X = [&](double x) { return margin_ + (x - lo_[0]) * scale; };
    const auto Y = [&](double y) { return margin_ + text_h + (hi_[1] - y) * scale; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (!comment.empty()) out << "<!-- " << comment << " -->\n";
    out << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
        "viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
        size_, size_ + text_h);
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& l : lines_) {
      out << "<polyline fill=\"none\"";
      if (!l.id.empty()) out << " id=\"" << xml_escape(l.id) << '"';
      out << fmt::format(" stroke=\"{}\" stroke-width=\"{}\" points=\"", l.stroke, l.width);
      for (std::size_t i = 0; i < l.pts.size(); ++i) {
        out << (i ? " " : "") << fmt::format("{:.3f},{:.3f}", X(l.pts[i][0]), Y(l.pts[i][1]));
      }
      out << "\"/>\n";
    }
    for (std::size_t i = 0; i < captions_.size(); ++i) {
      out << fmt::format("<text x=\"{:.0f}\" y=\"{:.0f}\" font-family=\"monospace\" font-size=\"14\">",
                         margin_, margin_ / 2 + 18.0 * static_cast<double>(i) + 6)
          << xml_escape(captions_[i]) << "</text>\n";
    }
    out << "</svg>\n";
  }

 private:
  struct Line {
    std::vector<Point2> pts;
    std::string stroke;
    double width;
    std::string id;
  };

  void extend(const Point2& p) {
    for (int i = 0; i < 2; ++i) {
      lo_[i] = std::min(lo_[i], p[i]);
      hi_[i] = std::max(hi_[i], p[i]);
    }
  }

  double size_, margin_;
  Point2 lo_{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  Point2 hi_{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  std::vector<Line> lines_;
  std::vector<std::string> captions_;
};

}  // namespace liouville::cli
