#include "undet/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace undet::report {

namespace {

std::string fmt17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string fmt2(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

constexpr double kPlotFloor = 1e-16;

struct PlotFrame {
  double x0 = 70.0;
  double x1 = 688.0;
  double y0 = 52.0;   // top
  double y1 = 408.0;  // bottom
  std::size_t max_k = 1;
  int lo_exp = -16;
  int hi_exp = 1;

  double px(std::size_t k) const {
    return x0 + (x1 - x0) * static_cast<double>(k) /
                    static_cast<double>(max_k);
  }
  double py(double log_value) const {
    return y1 - (y1 - y0) * (log_value - lo_exp) /
                    static_cast<double>(hi_exp - lo_exp);
  }
};

double clamped_log10(double value) {
  return std::log10(std::max(value, kPlotFloor));
}

PlotFrame fit_frame(const std::vector<const std::vector<double>*>& series) {
  PlotFrame frame;
  double lo = 0.0;
  double hi = 0.0;
  bool seen = false;
  for (const auto* s : series) {
    if (!s->empty()) {
      frame.max_k = std::max(frame.max_k, s->size() - 1);
    }
    for (const double value : *s) {
      const double lv = clamped_log10(value);
      lo = seen ? std::min(lo, lv) : lv;
      hi = seen ? std::max(hi, lv) : lv;
      seen = true;
    }
  }
  frame.max_k = std::max<std::size_t>(frame.max_k, 1);
  frame.lo_exp = static_cast<int>(std::floor(lo));
  frame.hi_exp = static_cast<int>(std::ceil(hi));
  if (frame.hi_exp <= frame.lo_exp) frame.hi_exp = frame.lo_exp + 1;
  return frame;
}

void append_polyline(std::string& out, const PlotFrame& frame,
                     const std::vector<double>& series, const char* color) {
  out += "  <polyline fill=\"none\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < series.size(); ++k) {
    if (k > 0) out += ' ';
    out += fmt2(frame.px(k));
    out += ',';
    out += fmt2(frame.py(clamped_log10(series[k])));
  }
  out += "\"/>\n";
}

std::string render_plot(const std::vector<const std::vector<double>*>& series,
                        const std::vector<const char*>& labels,
                        const std::vector<const char*>& colors,
                        std::string_view title) {
  const PlotFrame frame = fit_frame(series);
  std::string out;
  out +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"460\" "
      "viewBox=\"0 0 720 460\">\n";
  out += "  <rect width=\"720\" height=\"460\" fill=\"#ffffff\"/>\n";
  out += "  <text x=\"360\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"monospace\" font-size=\"15\" fill=\"#000000\">";
  out += title;
  out += "</text>\n";

  // Horizontal grid lines at integer exponents.
  const int span = frame.hi_exp - frame.lo_exp;
  const int step = std::max(1, (span + 7) / 8);
  for (int e = frame.lo_exp; e <= frame.hi_exp; e += step) {
    const double y = frame.py(e);
    out += "  <line x1=\"" + fmt2(frame.x0) + "\" y1=\"" + fmt2(y) +
           "\" x2=\"" + fmt2(frame.x1) + "\" y2=\"" + fmt2(y) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    char label[32];
    std::snprintf(label, sizeof label, "1e%d", e);
    out += "  <text x=\"" + fmt2(frame.x0 - 6.0) + "\" y=\"" +
           fmt2(y + 4.0) +
           "\" text-anchor=\"end\" font-family=\"monospace\" "
           "font-size=\"11\" fill=\"#000000\">";
    out += label;
    out += "</text>\n";
  }

  // Ticks along k.
  const std::size_t tick_step =
      std::max<std::size_t>(1, (frame.max_k + 9) / 10);
  for (std::size_t k = 0; k <= frame.max_k; k += tick_step) {
    const double x = frame.px(k);
    out += "  <line x1=\"" + fmt2(x) + "\" y1=\"" + fmt2(frame.y1) +
           "\" x2=\"" + fmt2(x) + "\" y2=\"" + fmt2(frame.y1 + 5.0) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    out += "  <text x=\"" + fmt2(x) + "\" y=\"" + fmt2(frame.y1 + 18.0) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"11\" fill=\"#000000\">";
    out += std::to_string(k);
    out += "</text>\n";
  }

  out += "  <rect x=\"" + fmt2(frame.x0) + "\" y=\"" + fmt2(frame.y0) +
         "\" width=\"" + fmt2(frame.x1 - frame.x0) + "\" height=\"" +
         fmt2(frame.y1 - frame.y0) +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    append_polyline(out, frame, *series[s], colors[s]);
  }

  // Legend in the top-right corner of the plot area.
  for (std::size_t s = 0; s < labels.size(); ++s) {
    const double ly = frame.y0 + 16.0 + 18.0 * static_cast<double>(s);
    out += "  <line x1=\"" + fmt2(frame.x1 - 150.0) + "\" y1=\"" + fmt2(ly) +
           "\" x2=\"" + fmt2(frame.x1 - 126.0) + "\" y2=\"" + fmt2(ly) +
           "\" stroke=\"";
    out += colors[s];
    out += "\" stroke-width=\"2\"/>\n";
    out += "  <text x=\"" + fmt2(frame.x1 - 120.0) + "\" y=\"" +
           fmt2(ly + 4.0) +
           "\" font-family=\"monospace\" font-size=\"11\" "
           "fill=\"#000000\">";
    out += labels[s];
    out += "</text>\n";
  }

  out += "  <text x=\"" + fmt2((frame.x0 + frame.x1) / 2.0) +
         "\" y=\"446\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"12\" fill=\"#000000\">k</text>\n";
  out += "  <text x=\"16\" y=\"" + fmt2((frame.y0 + frame.y1) / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"12\" fill=\"#000000\" transform=\"rotate(-90 16 " +
         fmt2((frame.y0 + frame.y1) / 2.0) + ")\">residual (log10)</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string trace_csv(const SolveTrace& trace) {
  std::string out = "k,residual,step_norm\n";
  for (std::size_t k = 0; k < trace.residual_norms.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += fmt17(trace.residual_norms[k]);
    out += ',';
    if (k < trace.step_norms.size()) out += fmt17(trace.step_norms[k]);
    out += '\n';
  }
  return out;
}

std::string compare_csv(const SolveTrace& project, const SolveTrace& polyak) {
  std::string out = "k,residual_project,residual_polyak\n";
  const std::size_t rows =
      std::max(project.residual_norms.size(), polyak.residual_norms.size());
  for (std::size_t k = 0; k < rows; ++k) {
    out += std::to_string(k);
    out += ',';
    if (k < project.residual_norms.size()) {
      out += fmt17(project.residual_norms[k]);
    }
    out += ',';
    if (k < polyak.residual_norms.size()) {
      out += fmt17(polyak.residual_norms[k]);
    }
    out += '\n';
  }
  return out;
}

std::string trace_svg(const SolveTrace& trace, std::string_view title) {
  return render_plot({&trace.residual_norms}, {"residual"}, {"#1f77b4"},
                     title);
}

std::string compare_svg(const SolveTrace& project, const SolveTrace& polyak,
                        std::string_view title) {
  return render_plot({&project.residual_norms, &polyak.residual_norms},
                     {"project", "polyak"}, {"#1f77b4", "#d62728"}, title);
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  stream.write(content.data(),
               static_cast<std::streamsize>(content.size()));
  if (!stream) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace undet::report
