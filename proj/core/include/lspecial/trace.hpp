#ifndef LSPECIAL_TRACE_HPP
#define LSPECIAL_TRACE_HPP

#include <array>
#include <filesystem>
#include <vector>

#include "lspecial/bivar.hpp"

namespace lspecial {

struct CurveTrace {
  // One point per sample angle theta_k = 2 pi k / samples; the polyline is
  // implicitly closed (the first point is not repeated at the end).
  std::vector<std::array<double, 2>> points;
  bool closed = true;
  int samples = 0;
};

// Polar trace of the level set p = level for a positive-definite homogeneous
// p: point k = r (cos t, sin t) with r = (level / p(cos t, sin t))^{1/n}.
CurveTrace trace_level(const BivarPoly& p, double level, int samples);

// True iff alpha < 1/sqrt(beta): the level curve bounds a domain.
bool boundedness_check(double beta, double alpha);

enum class TraceFormat { Svg, Csv };

void emit(const CurveTrace& trace, TraceFormat format,
          const std::filesystem::path& path);

}  // namespace lspecial

#endif  // LSPECIAL_TRACE_HPP
