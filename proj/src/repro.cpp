#include "pocopula/repro.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace pocopula {

namespace {

SystemModel model(const Baseline& b, std::vector<double> alphas, const std::string& gen,
                  const ParamMap& params) {
  return SystemModel{b, std::move(alphas), make_generator(gen, params)};
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

std::vector<std::string> figure_ids() { return {"F1", "F2a", "F2b", "F3a", "F3b", "F4a", "F4b"}; }

FigureSpec figure_spec(const std::string& id) {
  if (id == "F1") {
    const Baseline b = make_baseline("weibull", {{"lambda", 1.0}, {"k", 1.5}});
    return {id, "Series survival, sech_pow(0.9) vs gh_exp(0.3)", CurveKind::SERIES_SURVIVAL,
            model(b, {2, 3, 5.5}, "sech_pow", {{"theta", 0.9}}),
            model(b, {2.5, 3.5, 3.8}, "gh_exp", {{"theta", 0.3}})};
  }
  if (id == "F2a" || id == "F2b") {
    const Baseline b = make_baseline("weibull", {{"lambda", 0.5}, {"k", 2.0}});
    const bool a = id == "F2a";
    const std::string gen = a ? "log_pow" : "sech_pow";
    const ParamMap p = {{"theta", a ? 0.1 : 0.2}};
    return {id, "Series hazard, common " + gen, CurveKind::SERIES_HAZARD,
            model(b, {0.2, 0.4, 0.6}, gen, p), model(b, {0.35, 0.55, 0.95}, gen, p)};
  }
  if (id == "F3a" || id == "F3b") {
    const Baseline b = make_baseline("weibull", {{"lambda", 1.0}, {"k", 0.5}});
    if (id == "F3a") {
      return {id, "Parallel cdf, log_frac(0.9) vs gh_exp(8)", CurveKind::PARALLEL_CDF,
              model(b, {0.9, 1.45, 2.15}, "log_frac", {{"theta", 0.9}}),
              model(b, {1.2, 1.95, 2.65}, "gh_exp", {{"theta", 8.0}})};
    }
    return {id, "Parallel cdf, gumbel_frailty(0.9) vs sech_pow(0.2)", CurveKind::PARALLEL_CDF,
            model(b, {0.9, 1.45, 2.15}, "gumbel_frailty", {{"theta", 0.9}}),
            model(b, {1.2, 1.95, 2.65}, "sech_pow", {{"theta", 0.2}})};
  }
  if (id == "F4a" || id == "F4b") {
    const Baseline b = make_baseline("weibull", {{"lambda", 1.0}, {"k", 3.0}});
    const bool a = id == "F4a";
    const std::string gen = a ? "clayton" : "sech_pow";
    const ParamMap p = a ? ParamMap{{"a", 0.2}} : ParamMap{{"theta", 0.2}};
    return {id, "Parallel reversed hazard, common " + gen, CurveKind::PARALLEL_REVERSED_HAZARD,
            model(b, {0.2, 0.6, 1.5, 3.5}, gen, p), model(b, {0.8, 0.9, 4.5, 5.5}, gen, p)};
  }
  throw std::invalid_argument("unknown figure id '" + id + "'");
}

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::SERIES_SURVIVAL:
      return "series_survival";
    case CurveKind::SERIES_HAZARD:
      return "series_hazard";
    case CurveKind::PARALLEL_CDF:
      return "parallel_cdf";
    case CurveKind::PARALLEL_REVERSED_HAZARD:
      return "parallel_reversed_hazard";
  }
  return "?";
}

double curve_value(CurveKind kind, const SystemModel& m, double t) {
  switch (kind) {
    case CurveKind::SERIES_SURVIVAL:
      return series_survival(m, t);
    case CurveKind::SERIES_HAZARD:
      return series_hazard(m, t);
    case CurveKind::PARALLEL_CDF:
      return parallel_cdf(m, t);
    case CurveKind::PARALLEL_REVERSED_HAZARD:
      return parallel_reversed_hazard(m, t);
  }
  return 0.0;
}

GridSpec default_figure_grid(const FigureSpec& spec) {
  GridSpec g;
  g.lo = 0.01;
  g.hi = spec.x.baseline.quantile(0.999);
  g.count = 400;
  g.log_spaced = false;
  return g;
}

std::vector<Crossing> find_crossings(const std::vector<double>& t, const std::vector<double>& a,
                                     const std::vector<double>& b) {
  std::vector<Crossing> out;
  // last point with a nonzero difference
  std::size_t prev = t.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double d = a[i] - b[i];
    if (d == 0.0 || !std::isfinite(d)) continue;
    if (prev < t.size()) {
      const double dp = a[prev] - b[prev];
      if ((dp < 0.0) != (d < 0.0)) {
        const double root = t[prev] + (t[i] - t[prev]) * dp / (dp - d);
        out.push_back({t[prev], t[i], root});
      }
    }
    prev = i;
  }
  return out;
}

FigureData evaluate_figure(const FigureSpec& spec, const GridSpec& grid) {
  FigureData fig{spec, grid, {}, {}, {}, {}, 0};
  for (double t : grid.points()) {
    try {
      const double x = curve_value(spec.kind, spec.x, t);
      const double y = curve_value(spec.kind, spec.y, t);
      if (!std::isfinite(x) || !std::isfinite(y)) {
        ++fig.dropped;
        continue;
      }
      fig.t.push_back(t);
      fig.curve_x.push_back(x);
      fig.curve_y.push_back(y);
    } catch (const std::domain_error&) {
      ++fig.dropped;
    }
  }
  fig.crossings = find_crossings(fig.t, fig.curve_x, fig.curve_y);
  return fig;
}

FigureData repro_figure(const std::string& id, const std::optional<GridSpec>& grid) {
  const FigureSpec spec = figure_spec(id);
  return evaluate_figure(spec, grid ? *grid : default_figure_grid(spec));
}

void write_figure_csv(const FigureData& fig, std::ostream& out) {
  out << "t,curve_X,curve_Y\n";
  char buf[96];
  for (std::size_t i = 0; i < fig.t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", fig.t[i], fig.curve_x[i],
                  fig.curve_y[i]);
    out << buf;
  }
}

void write_figure_svg(const FigureData& fig, std::ostream& out) {
  const double W = 640, H = 420, left = 70, right = 20, top = 40, bottom = 50;
  const double pw = W - left - right, ph = H - top - bottom;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!fig.t.empty()) {
    x0 = fig.t.front();
    x1 = fig.t.back();
    y0 = std::min(*std::min_element(fig.curve_x.begin(), fig.curve_x.end()),
                  *std::min_element(fig.curve_y.begin(), fig.curve_y.end()));
    y1 = std::max(*std::max_element(fig.curve_x.begin(), fig.curve_x.end()),
                  *std::max_element(fig.curve_y.begin(), fig.curve_y.end()));
  }
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">"
      << fig.spec.id << ": " << fig.spec.title << "</text>\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\""
      << top + ph << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << top + ph << "\"/>\n</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4.0, yv = y0 + (y1 - y0) * k / 4.0;
    out << "<text x=\"" << fmt("%.2f", px(xv)) << "\" y=\"" << top + ph + 18
        << "\" text-anchor=\"middle\">" << fmt("%.4g", xv) << "</text>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << fmt("%.2f", py(yv) + 4)
        << "\" text-anchor=\"end\">" << fmt("%.4g", yv) << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 10
      << "\" text-anchor=\"middle\">t</text>\n</g>\n";

  auto polyline = [&](const std::vector<double>& ys, const char* color, const char* dash) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << dash
        << " points=\"";
    for (std::size_t i = 0; i < fig.t.size(); ++i) {
      out << (i ? " " : "") << fmt("%.2f", px(fig.t[i])) << ',' << fmt("%.2f", py(ys[i]));
    }
    out << "\"/>\n";
  };
  polyline(fig.curve_x, "#1f77b4", "");
  polyline(fig.curve_y, "#d62728", " stroke-dasharray=\"6,3\"");

  const double lx = left + pw - 120, ly = top + 10;
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 24 << "\" y2=\"" << ly
      << "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n"
      << "<text x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\">X</text>\n"
      << "<line x1=\"" << lx << "\" y1=\"" << ly + 18 << "\" x2=\"" << lx + 24 << "\" y2=\""
      << ly + 18 << "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"/>\n"
      << "<text x=\"" << lx + 30 << "\" y=\"" << ly + 22 << "\">Y</text>\n</g>\n";
  out << "</svg>\n";
}

}  // namespace pocopula
