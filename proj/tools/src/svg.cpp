#include <algorithm>

#include "pairvis/geodesics.hpp"
#include "pairvis/io.hpp"

namespace pairvis {

namespace {

class Canvas {
 public:
  Canvas(BoundingBox box, double width) : lo_(box.lo), hi_(box.hi) {
    const double span = std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-12});
    margin_ = 0.05 * width;
    scale_ = (width - 2.0 * margin_) / span;
    w_ = (hi_.x - lo_.x) * scale_ + 2.0 * margin_;
    h_ = (hi_.y - lo_.y) * scale_ + 2.0 * margin_;
    unit_ = 0.004 * width;
  }

  std::string x(Point p) const { return format_number((p.x - lo_.x) * scale_ + margin_); }
  std::string y(Point p) const { return format_number((hi_.y - p.y) * scale_ + margin_); }
  std::string xy(Point p) const { return x(p) + "," + y(p); }
  std::string unit(double k) const { return format_number(k * unit_); }

  std::string points(const std::vector<Point>& pts) const {
    std::string out;
    for (std::size_t k = 0; k < pts.size(); ++k) out += (k ? " " : "") + xy(pts[k]);
    return out;
  }

  std::string line(const char* cls, Point a, Point b, const char* extra) const {
    return "<line class=\"" + std::string(cls) + "\" x1=\"" + x(a) + "\" y1=\"" + y(a) + "\" x2=\"" +
           x(b) + "\" y2=\"" + y(b) + "\" " + extra + "/>\n";
  }

  std::string circle(const char* cls, Point c, double r, const char* extra) const {
    return "<circle class=\"" + std::string(cls) + "\" cx=\"" + x(c) + "\" cy=\"" + y(c) + "\" r=\"" +
           unit(r) + "\" " + extra + "/>\n";
  }

  std::string header() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(w_) + "\" height=\"" +
           format_number(h_) + "\" viewBox=\"0 0 " + format_number(w_) + " " + format_number(h_) +
           "\">\n";
  }

 private:
  Point lo_, hi_;
  double margin_ = 0.0, scale_ = 1.0, w_ = 0.0, h_ = 0.0, unit_ = 1.0;
};

}  // namespace

std::string render_svg(const Triangulation& tri, Point s, Point t, const SolveTrace& trace,
                       const SvgOptions& opt) {
  const SimplePolygon& poly = tri.polygon();
  const SolveResult& r = trace.result;
  const Canvas c(poly.bounds(), opt.width);

  std::string out = c.header();
  out += "<polygon class=\"boundary\" points=\"" +
         c.points({poly.vertices().begin(), poly.vertices().end()}) +
         "\" fill=\"#f4f4f4\" stroke=\"#222\" stroke-width=\"" + c.unit(0.5) + "\"/>\n";

  if (r.visible) {
    out += c.line("witness-chord", s, t, "stroke=\"#c0392b\" stroke-width=\"2\"");
  } else {
    const std::string dash = "stroke-dasharray=\"" + c.unit(2.0) + "," + c.unit(1.5) + "\"";
    out += "<polyline class=\"path\" points=\"" + c.points(shortest_path(tri, s, t).points) +
           "\" fill=\"none\" stroke=\"#2c3e50\" stroke-width=\"" + c.unit(0.4) + "\" " + dash + "/>\n";
    if (opt.trace)
      for (const SweepEvent& e : trace.events.events)
        out += c.line("event-chord", e.x_tilde, e.x, "stroke=\"#7f8c8d\" stroke-width=\"0.6\"");
    out += c.line("witness-chord", r.chord.a, r.chord.b, "stroke=\"#c0392b\" stroke-width=\"2\"");
    for (const SweepEvent& e : trace.events.events)
      out += c.circle("event-point", e.x, 0.8, "fill=\"#8e44ad\"");
  }
  out += c.circle("site", s, 1.2, "fill=\"#2980b9\"");
  out += c.circle("site", t, 1.2, "fill=\"#27ae60\"");
  out += c.circle("witness", r.s_star, 1.6, "fill=\"none\" stroke=\"#2980b9\" stroke-width=\"1.5\"");
  out += c.circle("witness", r.t_star, 1.6, "fill=\"none\" stroke=\"#27ae60\" stroke-width=\"1.5\"");
  return out + "</svg>\n";
}

}  // namespace pairvis
