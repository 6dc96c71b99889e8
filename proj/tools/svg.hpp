#pragma once

#include <complex>
#include <string>
#include <vector>

namespace ccheb::cli {

struct SvgStyle {
  int width = 640;
  int height = 640;
  double pad = 0.05;    ///< fraction of the data extent added on each side
  double marker = 0.0;  ///< marker radius in data units; 0 picks 0.6% of the extent
  std::string title;
};

/// Closed polyline through `curve` plus one circle per point of `zeros`.
/// The viewBox is fitted to all points; the y axis points up.
std::string scatter_svg(const std::vector<std::complex<double>>& curve,
                        const std::vector<std::complex<double>>& zeros,
                        const SvgStyle& style = {});

}  // namespace ccheb::cli
