#include "diamond/analysis.hpp"

#include "diamond/min.hpp"
#include "diamond/numeric.hpp"
#include "diamond/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace diamond {
namespace {

const char *const kParamNames[6] = {"J", "J1", "delta", "D", "h", "T"};

void validate_axis(const Axis &ax) {
  bool known = false;
  for (const char *n : kParamNames)
    known = known || ax.name == n;
  if (!known)
    throw std::invalid_argument("unknown axis name: " + ax.name);
  if (ax.steps < 2)
    throw std::invalid_argument("axis " + ax.name + " needs steps >= 2");
  if (!(ax.lo < ax.hi))
    throw std::invalid_argument("axis " + ax.name + " needs lo < hi");
  if (ax.name == "T" && !(ax.lo > 0))
    throw std::invalid_argument("T must be > 0");
}

void validate_spec(const SweepSpec &spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw std::invalid_argument("sweep needs 1 or 2 axes");
  for (const auto &ax : spec.axes)
    validate_axis(ax);
  if (spec.axes.size() == 2 && spec.axes[0].name == spec.axes[1].name)
    throw std::invalid_argument("sweep axes must be distinct");
  spec.fixed.validate_couplings();
}

// derivative along one axis of a (possibly 2-axis) grid
std::vector<double> differentiate_along(const std::vector<double> &v,
                                        const std::vector<Axis> &axes,
                                        std::size_t which) {
  const int n = axes[which].steps;
  const double dx =
      (axes[which].hi - axes[which].lo) / static_cast<double>(n - 1);
  // stride between consecutive points of the target axis, and the
  // number of independent lines
  std::size_t stride = 1, lines = 1;
  for (std::size_t a = axes.size(); a-- > 0;) {
    if (a > which)
      stride *= static_cast<std::size_t>(axes[a].steps);
    if (a != which)
      lines *= static_cast<std::size_t>(axes[a].steps);
  }
  std::vector<double> out(v.size());
  const std::size_t block = stride * static_cast<std::size_t>(n);
  for (std::size_t line = 0; line < lines; ++line) {
    // lines enumerate (outer, inner) index pairs around the target axis
    const std::size_t outer = line / stride;
    const std::size_t inner = line % stride;
    const std::size_t base = outer * block + inner;
    auto at = [&](int k) { return v[base + static_cast<std::size_t>(k) * stride]; };
    auto put = [&](int k, double val) {
      out[base + static_cast<std::size_t>(k) * stride] = val;
    };
    put(0, (at(1) - at(0)) / dx);
    put(n - 1, (at(n - 1) - at(n - 2)) / dx);
    for (int k = 1; k + 1 < n; ++k)
      put(k, (at(k + 1) - at(k - 1)) / (2.0 * dx));
  }
  return out;
}

} // namespace

std::string_view observable_name(Observable o) {
  switch (o) {
  case Observable::n1:
    return "N1";
  case Observable::n2:
    return "N2";
  case Observable::dn1_ddelta:
    return "dN1_ddelta";
  case Observable::rho11:
    return "rho11";
  case Observable::rho22:
    return "rho22";
  case Observable::rho33:
    return "rho33";
  case Observable::rho44:
    return "rho44";
  case Observable::rho23_abs:
    return "rho23_abs";
  }
  return "unknown";
}

std::optional<Observable> observable_from_name(std::string_view s) {
  const std::pair<std::string_view, Observable> table[] = {
      {"N1", Observable::n1},          {"N2", Observable::n2},
      {"dN1_ddelta", Observable::dn1_ddelta},
      {"rho11", Observable::rho11},    {"rho22", Observable::rho22},
      {"rho33", Observable::rho33},    {"rho44", Observable::rho44},
      {"rho23_abs", Observable::rho23_abs}};
  for (auto [name, o] : table)
    if (s == name)
      return o;
  return std::nullopt;
}

double axis_value(const Axis &ax, int k) {
  return ax.lo + (ax.hi - ax.lo) * static_cast<double>(k) /
                     static_cast<double>(ax.steps - 1);
}

void apply_param(ModelParams &p, std::string_view name, double value) {
  if (name == "J")
    p.J = value;
  else if (name == "J1")
    p.J1 = value;
  else if (name == "delta")
    p.delta = value;
  else if (name == "D")
    p.D = value;
  else if (name == "h")
    p.h = value;
  else if (name == "T")
    p.T = value;
  else
    throw std::invalid_argument("unknown parameter name: " +
                                std::string(name));
}

double eval_observable(const ModelParams &p, Observable o) {
  if (o == Observable::dn1_ddelta)
    throw std::invalid_argument(
        "dN1_ddelta is defined only for sweeps with a delta axis");
  const ThermalState st = thermal_state(p);
  switch (o) {
  case Observable::n1:
    return min_xstate(st).n1;
  case Observable::n2:
    return min_xstate(st).n2;
  case Observable::rho11:
    return st.diag(0);
  case Observable::rho22:
    return st.diag(1);
  case Observable::rho33:
    return st.diag(2);
  case Observable::rho44:
    return st.diag(3);
  case Observable::rho23_abs:
    return std::abs(st.rho23());
  default:
    throw std::logic_error("unhandled observable");
  }
}

SweepResult sweep(const SweepSpec &spec, Exec exec) {
  validate_spec(spec);
  const bool derivative_mode = spec.observable == Observable::dn1_ddelta;
  std::size_t delta_axis = 0;
  if (derivative_mode) {
    bool found = false;
    for (std::size_t a = 0; a < spec.axes.size(); ++a)
      if (spec.axes[a].name == "delta") {
        delta_axis = a;
        found = true;
      }
    if (!found)
      throw std::invalid_argument(
          "dN1_ddelta is defined only for sweeps with a delta axis");
  }
  const Observable point_obs =
      derivative_mode ? Observable::n1 : spec.observable;

  long total = 1;
  for (const auto &ax : spec.axes)
    total *= ax.steps;

  SweepResult res;
  res.axes = spec.axes;
  res.fixed = spec.fixed;
  res.observable = spec.observable;
  res.version = kVersion;
  res.values.assign(static_cast<std::size_t>(total), 0.0);

  const int inner = spec.axes.size() == 2 ? spec.axes[1].steps : 1;
  for_each_index(total, exec, [&](long idx) {
    ModelParams p = spec.fixed;
    if (spec.axes.size() == 2) {
      apply_param(p, spec.axes[0].name,
                  axis_value(spec.axes[0], static_cast<int>(idx / inner)));
      apply_param(p, spec.axes[1].name,
                  axis_value(spec.axes[1], static_cast<int>(idx % inner)));
    } else {
      apply_param(p, spec.axes[0].name,
                  axis_value(spec.axes[0], static_cast<int>(idx)));
    }
    res.values[static_cast<std::size_t>(idx)] = eval_observable(p, point_obs);
  });

  if (derivative_mode)
    res.values = differentiate_along(res.values, res.axes, delta_axis);
  return res;
}

SweepResult derivative(const SweepResult &series) {
  if (series.axes.size() != 1)
    throw std::invalid_argument("derivative needs a 1-axis series");
  if (series.axes[0].steps < 2 ||
      series.values.size() != static_cast<std::size_t>(series.axes[0].steps))
    throw std::invalid_argument("series is inconsistent with its axis");
  SweepResult out = series;
  out.values = differentiate_along(series.values, series.axes, 0);
  return out;
}

std::optional<CriticalPoint> critical_point(const SweepResult &series) {
  if (series.axes.size() != 1)
    throw std::invalid_argument("critical_point needs a 1-axis series");
  const auto &v = series.values;
  const Axis &ax = series.axes[0];
  if (v.size() != static_cast<std::size_t>(ax.steps))
    throw std::invalid_argument("series is inconsistent with its axis");

  std::size_t best = 0;
  for (std::size_t k = 1; k < v.size(); ++k)
    if (std::abs(v[k]) > std::abs(v[best]))
      best = k;
  const double peak = std::abs(v[best]);
  if (peak < 1e-9)
    return std::nullopt; // flat series, no critical point

  CriticalPoint cp;
  if (best == 0 || best + 1 == v.size()) {
    cp.location = axis_value(ax, static_cast<int>(best));
    cp.peak_value = peak;
    return cp;
  }
  const double dx = (ax.hi - ax.lo) / static_cast<double>(ax.steps - 1);
  const double y0 = std::abs(v[best - 1]);
  const double y1 = peak;
  const double y2 = std::abs(v[best + 1]);
  cp.location = parabolic_peak(axis_value(ax, static_cast<int>(best - 1)), dx,
                               y0, y1, y2);
  const double denom = y0 - 2.0 * y1 + y2;
  cp.peak_value = denom < 0 ? y1 - (y0 - y2) * (y0 - y2) / (8.0 * denom) : y1;
  return cp;
}

BoundaryCurve threshold_boundary(const Axis &scan, const Axis &root,
                                 const ModelParams &fixed, double epsilon,
                                 Exec exec, double xtol) {
  validate_axis(scan);
  validate_axis(root);
  if (!(epsilon > 0))
    throw std::invalid_argument("epsilon must be > 0");
  if (!(xtol > 0))
    throw std::invalid_argument("xtol must be > 0");
  const std::pair<std::string_view, std::string_view> allowed[] = {
      {"J1", "T"}, {"h", "T"}, {"J1", "h"}, {"delta", "T"}, {"delta", "h"}};
  bool ok = false;
  for (auto [s, r] : allowed)
    ok = ok || (scan.name == s && root.name == r);
  if (!ok)
    throw std::invalid_argument(
        "unsupported boundary plane (" + scan.name + ", " + root.name +
        "); allowed: (J1,T) (h,T) (J1,h) (delta,T) (delta,h)");
  fixed.validate_couplings();

  struct LineResult {
    bool found = false;
    double root_value = 0;
  };
  std::vector<LineResult> lines(static_cast<std::size_t>(scan.steps));

  for_each_index(scan.steps, exec, [&](long s) {
    ModelParams base = fixed;
    apply_param(base, scan.name, axis_value(scan, static_cast<int>(s)));
    auto g = [&](double rv) {
      ModelParams p = base;
      apply_param(p, root.name, rv);
      return eval_observable(p, Observable::n1) - epsilon;
    };
    // outermost bracket: the last sign change along the root axis
    int bracket = -1;
    double prev = g(axis_value(root, 0));
    for (int k = 1; k < root.steps; ++k) {
      const double cur = g(axis_value(root, k));
      if ((prev > 0) != (cur > 0) || prev == 0 || cur == 0)
        bracket = k - 1;
      prev = cur;
    }
    if (bracket < 0)
      return;
    lines[static_cast<std::size_t>(s)] = {
        true, bisect(g, axis_value(root, bracket),
                     axis_value(root, bracket + 1), xtol)};
  });

  BoundaryCurve curve;
  curve.scan_name = scan.name;
  curve.root_name = root.name;
  curve.epsilon = epsilon;
  for (int s = 0; s < scan.steps; ++s) {
    const auto &lr = lines[static_cast<std::size_t>(s)];
    if (lr.found)
      curve.points.push_back({axis_value(scan, s), lr.root_value});
    else
      curve.no_crossing.push_back(axis_value(scan, s));
  }
  return curve;
}

} // namespace diamond
