#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ccheb::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string scatter_svg(const std::vector<std::complex<double>>& curve,
                        const std::vector<std::complex<double>>& zeros, const SvgStyle& style) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto* set : {&curve, &zeros}) {
    for (const auto& p : *set) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
  }
  if (!(xmin <= xmax)) xmin = ymin = -1, xmax = ymax = 1;
  double extent = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double pad = style.pad * extent;
  xmin -= pad;
  ymin -= pad;
  xmax += pad;
  ymax += pad;
  extent += 2 * pad;
  const double marker = style.marker > 0 ? style.marker : 0.006 * extent;
  const double stroke = 0.002 * extent;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
     << style.height << "\" viewBox=\"" << num(xmin) << ' ' << num(-ymax) << ' '
     << num(xmax - xmin) << ' ' << num(ymax - ymin) << "\">\n";
  if (!style.title.empty()) os << "  <title>" << escape(style.title) << "</title>\n";
  os << "  <rect x=\"" << num(xmin) << "\" y=\"" << num(-ymax) << "\" width=\""
     << num(xmax - xmin) << "\" height=\"" << num(ymax - ymin) << "\" fill=\"white\"/>\n";
  if (!curve.empty()) {
    os << "  <polygon fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" << num(stroke)
       << "\" points=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (i) os << ' ';
      os << num(curve[i].real()) << ',' << num(-curve[i].imag());
    }
    os << "\"/>\n";
  }
  os << "  <g fill=\"#c0392b\">\n";
  for (const auto& z : zeros)
    os << "    <circle cx=\"" << num(z.real()) << "\" cy=\"" << num(-z.imag()) << "\" r=\""
       << num(marker) << "\"/>\n";
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace ccheb::cli
