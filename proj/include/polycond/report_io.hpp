#ifndef POLYCOND_REPORT_IO_HPP
#define POLYCOND_REPORT_IO_HPP

// CSV, JSON and SVG emitters for scenario reports. All emitters are pure
// functions of the report.

#include "polycond/scenarios.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace polycond {

enum class Format { csv, svg, json };

inline Format parse_format(const std::string& s)
{
  if (s == "csv")
    return Format::csv;
  if (s == "svg")
    return Format::svg;
  if (s == "json")
    return Format::json;
  throw ArgumentError("unknown format '" + s + "' (csv | svg | json)");
}

struct RenderSpec {
  Format format = Format::csv;
  bool log_scale = true;
  int width = 800;
  int height = 500;
  std::string output;
};

inline constexpr int kJsonSchemaVersion = 1;

/// 17 significant digits; "-inf"/"inf"/"nan" for non-finite values.
inline std::string format_number(double v)
{
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

inline nlohmann::json json_number(double v)
{
  if (!std::isfinite(v))
    return nullptr;
  return v;
}

} // namespace detail

/// Curve rows `series,x,log10_value` ordered by series then x; when the
/// report has fields, a blank line and contour rows
/// `series,level,vertex_index,re,im` follow.
inline std::string emit_csv(const ScenarioReport& report)
{
  std::ostringstream os;
  os << "series,x,log10_value\n";
  std::vector<const ConditionCurve*> curves;
  for (const auto& c : report.curves)
    curves.push_back(&c);
  std::stable_sort(curves.begin(), curves.end(),
                   [](const ConditionCurve* a, const ConditionCurve* b) { return a->label < b->label; });
  for (const ConditionCurve* c : curves) {
    std::vector<std::size_t> order(c->size());
    for (std::size_t k = 0; k < order.size(); ++k)
      order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return c->abscissae[a] < c->abscissae[b]; });
    for (std::size_t k : order) {
      os << detail::csv_field(c->label) << ',' << format_number(c->abscissae[k]) << ','
         << format_number(c->values_log10[k]) << '\n';
    }
  }
  if (!report.fields.empty()) {
    os << "\nseries,level,vertex_index,re,im\n";
    for (const auto& f : report.fields) {
      for (const auto& set : f.contours) {
        for (std::size_t l = 0; l < set.polylines.size(); ++l) {
          std::string series = detail::csv_field(f.label + "/" + std::to_string(l));
          const auto& pts = set.polylines[l].points;
          for (std::size_t v = 0; v < pts.size(); ++v) {
            os << series << ',' << format_number(set.level) << ',' << v << ',' << format_number(pts[v].x) << ','
               << format_number(pts[v].y) << '\n';
          }
        }
      }
    }
  }
  return os.str();
}

inline nlohmann::json to_json(const ConditionCurve& c)
{
  nlohmann::json values = nlohmann::json::array();
  for (double v : c.values_log10)
    values.push_back(detail::json_number(v));
  return {{"label", c.label}, {"abscissae", c.abscissae}, {"values_log10", std::move(values)}};
}

inline nlohmann::json to_json(const PseudozeroField& f)
{
  nlohmann::json values = nlohmann::json::array();
  for (double v : f.values_log10)
    values.push_back(detail::json_number(v));
  nlohmann::json contours = nlohmann::json::array();
  for (const auto& set : f.contours) {
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& line : set.polylines) {
      nlohmann::json pts = nlohmann::json::array();
      for (const auto& p : line.points)
        pts.push_back({p.x, p.y});
      lines.push_back({{"closed", line.closed}, {"points", std::move(pts)}});
    }
    contours.push_back({{"level", set.level}, {"polylines", std::move(lines)}});
  }
  return {{"label", f.label},
          {"region",
           {{"re_min", f.region.re_min}, {"re_max", f.region.re_max}, {"im_min", f.region.im_min},
            {"im_max", f.region.im_max}}},
          {"resolution", {f.nx, f.ny}},
          {"digits", f.digits},
          {"levels", f.levels},
          {"values_log10", std::move(values)},
          {"contours", std::move(contours)},
          {"interior_mask", f.interior_mask}};
}

inline nlohmann::json to_json(const ScenarioReport& report)
{
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : report.curves)
    curves.push_back(to_json(c));
  nlohmann::json fields = nlohmann::json::array();
  for (const auto& f : report.fields)
    fields.push_back(to_json(f));
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [key, value] : report.summary)
    summary[key] = detail::json_number(value);
  return {{"polycond_schema", kJsonSchemaVersion},
          {"name", report.name},
          {"curves", std::move(curves)},
          {"fields", std::move(fields)},
          {"summary", std::move(summary)}};
}

inline std::string emit_json(const ScenarioReport& report) { return to_json(report).dump(2) + "\n"; }

namespace detail {

inline const char* palette(std::size_t k)
{
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                 "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
  return colors[k % (sizeof colors / sizeof colors[0])];
}

inline std::string xml_escape(const std::string& s)
{
  std::string out;
  for (char ch : s) {
    switch (ch) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += ch;
    }
  }
  return out;
}

inline std::string fmt_coord(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double x0, y0, w, h;        // pixel box of the plot area
  double xmin, xmax, ymin, ymax;

  double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
  double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

inline void axes(std::ostringstream& os, const Frame& f, const std::string& xlabel, bool decades,
                 const std::string& ylabel)
{
  os << "<rect x=\"" << fmt_coord(f.x0) << "\" y=\"" << fmt_coord(f.y0) << "\" width=\"" << fmt_coord(f.w)
     << "\" height=\"" << fmt_coord(f.h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  // x ticks: 5 intervals
  os << "<g class=\"x-axis\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (int k = 0; k <= 5; ++k) {
    double x = f.xmin + (f.xmax - f.xmin) * k / 5.0;
    double px = f.px(x);
    os << "<line x1=\"" << fmt_coord(px) << "\" y1=\"" << fmt_coord(f.y0 + f.h) << "\" x2=\"" << fmt_coord(px)
       << "\" y2=\"" << fmt_coord(f.y0 + f.h + 4) << "\" stroke=\"black\"/>";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    os << "<text x=\"" << fmt_coord(px) << "\" y=\"" << fmt_coord(f.y0 + f.h + 16) << "\">" << buf << "</text>\n";
  }
  os << "<text x=\"" << fmt_coord(f.x0 + f.w / 2) << "\" y=\"" << fmt_coord(f.y0 + f.h + 32) << "\">"
     << xml_escape(xlabel) << "</text>\n</g>\n";

  int lo = static_cast<int>(std::floor(f.ymin));
  int hi = static_cast<int>(std::ceil(f.ymax));
  os << "<g class=\"y-axis\" font-size=\"11\" text-anchor=\"end\"";
  if (decades)
    os << " data-min-decade=\"" << lo << "\" data-max-decade=\"" << hi << "\"";
  os << ">\n";
  if (decades) {
    int step = 1;
    for (int candidate : {1, 2, 5, 10, 20, 50, 100, 200, 500}) {
      step = candidate;
      if ((hi - lo) / candidate <= 10)
        break;
    }
    int first = lo >= 0 ? (lo + step - 1) / step * step : -((-lo) / step * step);
    for (int d = first; d <= hi; d += step) {
      if (d < f.ymin - 1e-9 || d > f.ymax + 1e-9)
        continue;
      double py = f.py(d);
      os << "<line x1=\"" << fmt_coord(f.x0 - 4) << "\" y1=\"" << fmt_coord(py) << "\" x2=\"" << fmt_coord(f.x0)
         << "\" y2=\"" << fmt_coord(py) << "\" stroke=\"black\"/>";
      os << "<text x=\"" << fmt_coord(f.x0 - 6) << "\" y=\"" << fmt_coord(py + 4) << "\">1e" << d << "</text>\n";
    }
  } else {
    for (int k = 0; k <= 5; ++k) {
      double y = f.ymin + (f.ymax - f.ymin) * k / 5.0;
      double py = f.py(y);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%g", y);
      os << "<line x1=\"" << fmt_coord(f.x0 - 4) << "\" y1=\"" << fmt_coord(py) << "\" x2=\"" << fmt_coord(f.x0)
         << "\" y2=\"" << fmt_coord(py) << "\" stroke=\"black\"/>";
      os << "<text x=\"" << fmt_coord(f.x0 - 6) << "\" y=\"" << fmt_coord(py + 4) << "\">" << buf << "</text>\n";
    }
  }
  os << "<text transform=\"translate(" << fmt_coord(f.x0 - 48) << "," << fmt_coord(f.y0 + f.h / 2)
     << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(ylabel) << "</text>\n</g>\n";
}

inline void legend(std::ostringstream& os, const Frame& f, const std::vector<std::string>& labels)
{
  os << "<g class=\"legend\" font-size=\"11\">\n";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    double y = f.y0 + 14 + 14.0 * static_cast<double>(k);
    double x = f.x0 + f.w + 10;
    os << "<line x1=\"" << fmt_coord(x) << "\" y1=\"" << fmt_coord(y - 4) << "\" x2=\"" << fmt_coord(x + 18)
       << "\" y2=\"" << fmt_coord(y - 4) << "\" stroke=\"" << palette(k) << "\" stroke-width=\"2\"/>";
    os << "<text x=\"" << fmt_coord(x + 22) << "\" y=\"" << fmt_coord(y) << "\">" << xml_escape(labels[k])
       << "</text>\n";
  }
  os << "</g>\n";
}

inline void curve_panel(std::ostringstream& os, const ScenarioReport& report, const RenderSpec& spec, double top)
{
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  auto yval = [&](double v) { return spec.log_scale ? v : std::pow(10.0, v); };
  for (const auto& c : report.curves) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      xmin = std::min(xmin, c.abscissae[k]);
      xmax = std::max(xmax, c.abscissae[k]);
      if (std::isfinite(c.values_log10[k])) {
        ymin = std::min(ymin, yval(c.values_log10[k]));
        ymax = std::max(ymax, yval(c.values_log10[k]));
      }
    }
  }
  if (!(xmin < xmax)) {
    xmin = std::isfinite(xmin) ? xmin - 0.5 : 0;
    xmax = xmin + 1;
  }
  if (!(ymin < ymax)) {
    double mid = std::isfinite(ymin) ? ymin : 0;
    ymin = mid - 0.5;
    ymax = mid + 0.5;
  }
  Frame f{70, top + 20, spec.width - 230.0, spec.height - 70.0, xmin, xmax, ymin, ymax};
  axes(os, f, "x", spec.log_scale, spec.log_scale ? "condition (log10 scale)" : "condition");
  std::vector<std::string> labels;
  os << "<g class=\"curves\" fill=\"none\" stroke-width=\"1.2\">\n";
  for (std::size_t k = 0; k < report.curves.size(); ++k) {
    const auto& c = report.curves[k];
    labels.push_back(c.label);
    std::string pts;
    auto flush = [&] {
      if (!pts.empty())
        os << "<polyline data-series=\"" << xml_escape(c.label) << "\" stroke=\"" << palette(k) << "\" points=\""
           << pts << "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!std::isfinite(c.values_log10[i])) {
        flush();
        continue;
      }
      if (!pts.empty())
        pts += ' ';
      pts += fmt_coord(f.px(c.abscissae[i])) + "," + fmt_coord(f.py(yval(c.values_log10[i])));
    }
    flush();
  }
  os << "</g>\n";
  legend(os, f, labels);
}

inline void field_panel(std::ostringstream& os, const PseudozeroField& field, const RenderSpec& spec, double top)
{
  const Region& r = field.region;
  Frame f{70, top + 20, spec.width - 230.0, spec.height - 70.0, r.re_min, r.re_max, r.im_min, r.im_max};
  os << "<g class=\"field\" data-label=\"" << xml_escape(field.label) << "\">\n";
  axes(os, f, "Re z", false, "Im z");
  // Interior: points with indicator below the smallest level, drawn as
  // merged horizontal runs of grid cells.
  double cw = f.w / static_cast<double>(field.nx - 1);
  double ch = f.h / static_cast<double>(field.ny - 1);
  os << "<g class=\"interior\" fill=\"black\" stroke=\"none\">\n";
  for (std::size_t j = 0; j < field.ny; ++j) {
    std::size_t i = 0;
    while (i < field.nx) {
      if (!field.interior_mask[j * field.nx + i]) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < field.nx && field.interior_mask[j * field.nx + i])
        ++i;
      double x = f.x0 + (static_cast<double>(start) - 0.5) * cw;
      double y = f.y0 + f.h - (static_cast<double>(j) + 0.5) * ch;
      os << "<rect x=\"" << fmt_coord(std::max(x, f.x0)) << "\" y=\"" << fmt_coord(std::max(y, f.y0))
         << "\" width=\"" << fmt_coord(static_cast<double>(i - start) * cw) << "\" height=\"" << fmt_coord(ch)
         << "\"/>\n";
    }
  }
  os << "</g>\n";
  std::vector<std::string> labels;
  os << "<g class=\"contours\" fill=\"none\" stroke-width=\"1.2\">\n";
  for (std::size_t k = 0; k < field.contours.size(); ++k) {
    const auto& set = field.contours[k];
    char buf[48];
    std::snprintf(buf, sizeof buf, "eps=%g", set.level);
    labels.emplace_back(buf);
    for (const auto& line : set.polylines) {
      std::string pts;
      for (const auto& p : line.points) {
        if (!pts.empty())
          pts += ' ';
        pts += fmt_coord(f.px(p.x)) + "," + fmt_coord(f.py(p.y));
      }
      os << "<" << (line.closed ? "polygon" : "polyline") << " data-level=\"" << format_number(set.level)
         << "\" stroke=\"" << palette(k) << "\" points=\"" << pts << "\"/>\n";
    }
  }
  os << "</g>\n";
  legend(os, f, labels);
  os << "</g>\n";
}

} // namespace detail

/// Standalone SVG 1.1 document: one panel for all curves (if any) followed
/// by one panel per pseudozero field.
inline std::string emit_svg(const ScenarioReport& report, const RenderSpec& spec)
{
  if (spec.width <= 0 || spec.height <= 0)
    throw ArgumentError("emit_svg: canvas must have positive width and height");
  if (spec.width < 300 || spec.height < 120)
    throw ArgumentError("emit_svg: canvas too small for axes and legend (need at least 300x120)");
  std::size_t panels = (report.curves.empty() ? 0 : 1) + report.fields.size();
  panels = std::max<std::size_t>(panels, 1);
  double total_height = static_cast<double>(spec.height) * static_cast<double>(panels);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
     << total_height << "\" viewBox=\"0 0 " << spec.width << " " << total_height << "\">\n"
     << "<title>" << detail::xml_escape(report.name) << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  double top = 0;
  if (!report.curves.empty()) {
    detail::curve_panel(os, report, spec, top);
    top += spec.height;
  }
  for (const auto& field : report.fields) {
    detail::field_panel(os, field, spec, top);
    top += spec.height;
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string emit(const ScenarioReport& report, const RenderSpec& spec)
{
  switch (spec.format) {
  case Format::csv:
    return emit_csv(report);
  case Format::json:
    return emit_json(report);
  case Format::svg:
    return emit_svg(report, spec);
  }
  return {};
}

/// Writes text to `path`; throws Error when the file cannot be written.
inline void write_text(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out)
    throw Error("failed writing '" + path + "'");
}

} // namespace polycond

#endif // POLYCOND_REPORT_IO_HPP
