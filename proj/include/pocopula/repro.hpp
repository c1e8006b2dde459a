#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pocopula/system.hpp"
#include "pocopula/types.hpp"

namespace pocopula {

/// Which curve of the two systems a figure plots.
enum class CurveKind { SERIES_SURVIVAL, SERIES_HAZARD, PARALLEL_CDF, PARALLEL_REVERSED_HAZARD };

struct FigureSpec {
  std::string id;
  std::string title;
  CurveKind kind = CurveKind::SERIES_SURVIVAL;
  SystemModel x;
  SystemModel y;
};

/// A sign change of curve_X − curve_Y between consecutive abscissae; `t` is
/// the linear interpolation of the root.
struct Crossing {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double t = 0.0;
};

struct FigureData {
  FigureSpec spec;
  GridSpec grid;
  std::vector<double> t;
  std::vector<double> curve_x;
  std::vector<double> curve_y;
  std::vector<Crossing> crossings;
  /// Grid points dropped because a curve was undefined (saturated).
  std::size_t dropped = 0;
};

/// F1, F2a, F2b, F3a, F3b, F4a, F4b.
std::vector<std::string> figure_ids();
/// Throws std::invalid_argument for an unknown id.
FigureSpec figure_spec(const std::string& id);

double curve_value(CurveKind kind, const SystemModel& m, double t);
std::string to_string(CurveKind kind);

/// Linear grid of 400 points over [0.01, baseline 0.999 quantile].
GridSpec default_figure_grid(const FigureSpec& spec);

FigureData evaluate_figure(const FigureSpec& spec, const GridSpec& grid);
FigureData repro_figure(const std::string& id, const std::optional<GridSpec>& grid = {});

std::vector<Crossing> find_crossings(const std::vector<double>& t, const std::vector<double>& a,
                                     const std::vector<double>& b);

/// Columns t, curve_X, curve_Y; 17 significant digits, '\n' line endings.
void write_figure_csv(const FigureData& fig, std::ostream& out);
/// Two polylines with axes and a legend.
void write_figure_svg(const FigureData& fig, std::ostream& out);

}  // namespace pocopula
