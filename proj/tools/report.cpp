#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "janowski/error.hpp"

namespace janowski::cli {
namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace

json number(double value) { return std::isfinite(value) ? json(value) : json(nullptr); }

json to_json(Complex z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

json to_json(const Interval& interval) { return json::array({number(interval.lo), number(interval.hi)}); }

json to_json(const DiskGeometry& g) {
  json j = {{"kind", to_string(g.kind)}, {"r", g.r}, {"tau", number(g.tau)}};
  j["zeta"] = g.zeta ? number(*g.zeta) : json(nullptr);
  if (g.kind == RegionKind::Disk) {
    j["center"] = to_json(g.center);
    j["radius"] = number(g.radius);
  } else {
    j["boundary_point"] = to_json(g.boundary_point);
    j["normal"] = to_json(g.normal);
  }
  return j;
}

json to_json(const CriticalPoints& c) {
  return {{"t1", number(c.t1)},
          {"t1_min", number(c.t1_min)},
          {"t2", number(c.t2)},
          {"t2_min", number(c.t2_min)},
          {"tau", number(c.tau)},
          {"residual_re", number(c.residual_re)},
          {"residual_im", number(c.residual_im)}};
}

json to_json(const BoundReport& report) {
  json j = {{"arg", to_json(report.arg)},
            {"modulus", to_json(report.modulus)},
            {"re", to_json(report.re)},
            {"im", to_json(report.im)},
            {"critical", to_json(report.critical)},
            {"fallback_used", report.fallback_used}};
  if (report.shifted) {
    j["shifted"] = {{"arg_minus_gamma", to_json(report.shifted->arg_shifted)},
                    {"re", to_json(report.shifted->re)},
                    {"im", to_json(report.shifted->im)}};
  }
  return j;
}

std::string curve_csv(const EnvelopeCurve& curve) {
  std::ostringstream os;
  os << "t,u,v,M,N\n";
  char line[256];
  for (const CurveSample& s : curve.samples) {
    std::snprintf(line, sizeof line, "%.15g,%.15g,%.15g,%.15g,%.15g\n", s.t, s.u, s.v, s.modulus,
                  s.phase);
    os << line;
  }
  return os.str();
}

std::string domain_svg(const JanowskiParams& p, double r, std::size_t samples) {
  if (std::abs(p.B()) * r >= 1.0 - 1e-12) {
    throw Error(ErrorCode::OutOfRange, "plots need a bounded image, |B| r < 1");
  }
  std::vector<Complex> pts(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    pts[k] = eval_powered(p, std::polar(r, kTwoPi * k / samples));
  }
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 0.0;
  for (Complex w : pts) {
    x0 = std::min(x0, w.real());
    x1 = std::max(x1, w.real());
    y0 = std::min(y0, w.imag());
    y1 = std::max(y1, w.imag());
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double cx = 0.5 * (x0 + x1);
  const double cy = 0.5 * (y0 + y1);
  const double half = 0.5 * span * 1.1;
  x0 = cx - half;
  y1 = cy + half;
  constexpr double size = 640.0;
  const double scale = size / (2.0 * half);
  auto sx = [&](double x) { return (x - x0) * scale; };
  auto sy = [&](double y) { return (y1 - y) * scale; };

  const DiskGeometry g = image_disk(p, r);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n";
  os << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << fmt("%.3f", sy(0.0)) << "\" x2=\"640\" y2=\"" << fmt("%.3f", sy(0.0))
     << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << fmt("%.3f", sx(0.0)) << "\" y1=\"0\" x2=\"" << fmt("%.3f", sx(0.0))
     << "\" y2=\"640\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  os << "<polygon fill=\"#cfe3f7\" fill-opacity=\"0.6\" stroke=\"#1f4e99\" stroke-width=\"1.5\" points=\"";
  for (Complex w : pts) os << fmt("%.3f", sx(w.real())) << ',' << fmt("%.3f", sy(w.imag())) << ' ';
  os << "\"/>\n";
  for (const auto& [w, label] : {std::pair{Complex(0.0), "0"}, std::pair{Complex(1.0), "1"}}) {
    os << "<circle cx=\"" << fmt("%.3f", sx(w.real())) << "\" cy=\"" << fmt("%.3f", sy(w.imag()))
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << fmt("%.3f", sx(w.real()) + 5.0) << "\" y=\"" << fmt("%.3f", sy(w.imag()) - 5.0)
       << "\" font-size=\"12\">w=" << label << "</text>\n";
  }
  os << "<text x=\"10\" y=\"20\" font-size=\"12\">C=" << fmt("%.6g", g.center.real())
     << (g.center.imag() < 0 ? "" : "+") << fmt("%.6g", g.center.imag()) << "i  R=" << fmt("%.6g", g.radius)
     << "  tau=" << fmt("%.6g", g.tau);
  if (g.zeta) os << "  zeta=" << fmt("%.6g", *g.zeta);
  os << "  alpha=" << fmt("%.6g", p.alpha()) << "  r=" << fmt("%.6g", r) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace janowski::cli
