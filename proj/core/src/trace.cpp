#include "lspecial/trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace lspecial {

CurveTrace trace_level(const BivarPoly& p, double level, int samples) {
  if (!(level > 0.0)) throw Error("trace_level: level must be positive");
  if (samples < 4) throw Error("trace_level: samples must be >= 4");
  const BivarPoly q = p.backend() == Backend::Exact ? p.to_approx() : p;
  if (q.is_zero() || !q.has_real_coeffs())
    throw NotHomogeneousError("trace_level: nonzero real polynomial required");
  const int n = *q.degree();
  for (const auto& [e, c] : q.terms())
    if (e.first + e.second != n)
      throw NotHomogeneousError("trace_level: polynomial is not homogeneous");

  CurveTrace tr;
  tr.samples = samples;
  tr.points.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / samples;
    const double c = std::cos(t), s = std::sin(t);
    const double v =
        q.evaluate(Scalar::approx(c), Scalar::approx(s)).approx_value().real();
    if (!(v > 0.0))
      throw NotPositiveOnCircleError(
          "trace_level: polynomial not positive on the unit circle; "
          "level set is unbounded or not star-shaped");
    const double r = std::pow(level / v, 1.0 / n);
    tr.points.push_back({r * c, r * s});
  }
  return tr;
}

bool boundedness_check(double beta, double alpha) {
  if (!(beta > 0.0 && beta < 1.0) || !(alpha > 0.0))
    throw Error("boundedness_check: beta in (0,1) and alpha > 0 required");
  return alpha < 1.0 / std::sqrt(beta);
}

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_csv(const CurveTrace& trace, std::ostream& os) {
  os << "x,y\n";
  for (const auto& pt : trace.points)
    os << fmt17(pt[0]) << "," << fmt17(pt[1]) << "\n";
}

void emit_svg(const CurveTrace& trace, std::ostream& os) {
  double minx = trace.points[0][0], maxx = minx;
  double miny = trace.points[0][1], maxy = miny;
  for (const auto& pt : trace.points) {
    minx = std::min(minx, pt[0]);
    maxx = std::max(maxx, pt[0]);
    miny = std::min(miny, pt[1]);
    maxy = std::max(maxy, pt[1]);
  }
  const double margin = 0.05 * std::max(maxx - minx, maxy - miny);
  const double w = (maxx - minx) + 2 * margin;
  const double h = (maxy - miny) + 2 * margin;
  // SVG y grows downward; points are emitted with y negated.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << fmt17(minx - margin) << " " << fmt17(-maxy - margin) << " " << fmt17(w)
     << " " << fmt17(h) << "\" width=\"800\" height=\""
     << fmt17(800.0 * h / w) << "\">\n";
  os << "<path fill=\"none\" stroke=\"black\" stroke-width=\""
     << fmt17(0.004 * std::max(w, h)) << "\" d=\"";
  for (std::size_t k = 0; k < trace.points.size(); ++k)
    os << (k == 0 ? "M " : "L ") << fmt17(trace.points[k][0]) << " "
       << fmt17(-trace.points[k][1]) << " ";
  os << (trace.closed ? "Z" : "") << "\"/>\n</svg>\n";
}

}  // namespace

void emit(const CurveTrace& trace, TraceFormat format,
          const std::filesystem::path& path) {
  if (trace.points.empty()) throw IoError("emit: empty trace");
  std::ofstream os(path);
  if (!os) throw IoError("emit: cannot open " + path.string());
  if (format == TraceFormat::Csv)
    emit_csv(trace, os);
  else
    emit_svg(trace, os);
  os.flush();
  if (!os) throw IoError("emit: write failure on " + path.string());
}

}  // namespace lspecial
