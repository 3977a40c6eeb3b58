#include "ndi/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ndi {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Linear map of [lo, hi] onto a pixel interval; a flat range maps to the middle.
struct Axis {
  double lo, hi, px_lo, px_hi;
  double operator()(double v) const {
    if (hi <= lo) return (px_lo + px_hi) / 2.0;
    return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
  }
};

std::pair<double, double> padded_range(const std::vector<double>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  double a = *lo, b = *hi;
  const double pad = (b - a) * 0.05;
  if (pad == 0.0) return {a - 0.5, b + 0.5};
  return {a - pad, b + pad};
}

void open_svg(std::ostringstream& os, std::string_view title) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    os << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"15\">" << xml_escape(title) << "</text>\n";
  }
}

void draw_axes(std::ostringstream& os, const Axis& xa, const Axis& ya, std::string_view x_label,
               std::string_view y_label) {
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  os << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\""
     << num(y0) << "\"/>\n"
     << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0) << "\" y2=\""
     << num(y1) << "\"/>\n"
     << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double f : {0.0, 0.5, 1.0}) {
    const double xv = xa.lo + f * (xa.hi - xa.lo);
    const double yv = ya.lo + f * (ya.hi - ya.lo);
    os << "<text x=\"" << num(xa(xv)) << "\" y=\"" << num(y0 + 16) << "\" text-anchor=\"middle\">"
       << tick(xv) << "</text>\n";
    os << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(ya(yv) + 4) << "\" text-anchor=\"end\">"
       << tick(yv) << "</text>\n";
  }
  os << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kHeight - 12)
     << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << num((y0 + y1) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << num((y0 + y1) / 2) << ")\">" << xml_escape(y_label) << "</text>\n";
  os << "</g>\n";
}

}  // namespace

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string render_sorted_ndi_svg(const NdiReport& report, std::string_view title) {
  const auto& order = report.elbow.order;
  const std::size_t n = order.size();
  std::vector<double> sorted;
  sorted.reserve(n);
  for (std::size_t v : order) sorted.push_back(report.node_ndi[v]);

  const auto [ylo, yhi] = padded_range(sorted);
  const Axis xa{0.0, static_cast<double>(n > 1 ? n - 1 : 1), kLeft, kWidth - kRight};
  const Axis ya{std::min(0.0, ylo), yhi, kHeight - kBottom, kTop};

  std::ostringstream os;
  open_svg(os, title.empty() ? "Sorted node-level NDI" : title);
  draw_axes(os, xa, ya, "Node rank (descending NDI)", "Node-level NDI");

  os << "<polyline class=\"curve\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\" points=\"";
  for (std::size_t r = 0; r < n; ++r) {
    if (r) os << ' ';
    os << num(xa(static_cast<double>(r))) << ',' << num(ya(sorted[r]));
  }
  os << "\"/>\n";

  if (!report.elbow.degenerate) {
    const double ex = xa(static_cast<double>(report.elbow.elbow_index));
    os << "<line class=\"elbow\" x1=\"" << num(ex) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(ex)
       << "\" y2=\"" << num(kHeight - kBottom) << "\" stroke=\"#1f4e9e\" stroke-dasharray=\"5,4\"/>\n";
  }

  os << "<g class=\"points\">\n";
  for (std::size_t r = 0; r < n; ++r) {
    const bool dissimilar = r < report.elbow.dissimilar.size();
    os << "<circle class=\"point " << (dissimilar ? "dissimilar" : "similar") << "\" cx=\""
       << num(xa(static_cast<double>(r))) << "\" cy=\"" << num(ya(sorted[r])) << "\" r=\"3\" fill=\""
       << (dissimilar ? "red" : "green") << "\"><title>" << xml_escape(report.node_labels[order[r]])
       << "</title></circle>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_scatter_svg(const ScatterPlot& plot) {
  if (plot.x.size() != plot.y.size()) throw std::invalid_argument("scatter: x/y length mismatch");
  std::ostringstream os;
  open_svg(os, plot.title);
  if (plot.x.empty()) {
    os << "</svg>\n";
    return os.str();
  }
  const auto [xlo, xhi] = padded_range(plot.x);
  const auto [ylo, yhi] = padded_range(plot.y);
  const Axis xa{xlo, xhi, kLeft, kWidth - kRight};
  const Axis ya{ylo, yhi, kHeight - kBottom, kTop};
  draw_axes(os, xa, ya, plot.x_label, plot.y_label);

  if (plot.fit) {
    const auto& f = *plot.fit;
    os << "<line class=\"fit\" x1=\"" << num(xa(xlo)) << "\" y1=\"" << num(ya(f.slope * xlo + f.intercept))
       << "\" x2=\"" << num(xa(xhi)) << "\" y2=\"" << num(ya(f.slope * xhi + f.intercept))
       << "\" stroke=\"#1f4e9e\" stroke-width=\"1.5\"/>\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "R^2 = %.4f", f.r_squared);
    os << "<text class=\"r2\" x=\"" << num(kWidth - kRight - 8) << "\" y=\"" << num(kTop + 16)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << buf << "</text>\n";
  }

  os << "<g class=\"points\">\n";
  for (std::size_t i = 0; i < plot.x.size(); ++i) {
    os << "<circle class=\"point\" cx=\"" << num(xa(plot.x[i])) << "\" cy=\"" << num(ya(plot.y[i]))
       << "\" r=\"4\" fill=\"#d62728\">";
    if (i < plot.labels.size()) os << "<title>" << xml_escape(plot.labels[i]) << "</title>";
    os << "</circle>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace ndi
