#pragma once

#include "diamond/common.hpp"
#include "diamond/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diamond {

enum class Observable {
  n1,
  n2,
  dn1_ddelta, // derivative of n1 along a delta axis of the sweep
  rho11,
  rho22,
  rho33,
  rho44,
  rho23_abs
};

std::string_view observable_name(Observable o);
std::optional<Observable> observable_from_name(std::string_view s);

// uniform grid over one named parameter; name from {J, J1, delta, D, h, T}
struct Axis {
  std::string name;
  double lo = 0;
  double hi = 1;
  int steps = 2;
};

double axis_value(const Axis &ax, int k);
// writes one named parameter; throws on an unknown name
void apply_param(ModelParams &p, std::string_view name, double value);

struct SweepSpec {
  std::vector<Axis> axes; // 1 or 2, distinct names
  ModelParams fixed;
  Observable observable = Observable::n1;
};

struct SweepResult {
  std::vector<Axis> axes;
  ModelParams fixed;
  Observable observable = Observable::n1;
  std::vector<double> values; // row-major, axes[0] outermost
  std::string version;        // code version that produced the values
};

// pointwise value at one parameter set (dn1_ddelta is sweep-only)
double eval_observable(const ModelParams &p, Observable o);

// grid evaluation; bit-identical for both Exec choices
SweepResult sweep(const SweepSpec &spec, Exec exec = Exec::parallel);

// first derivative of a 1-axis result along its axis: centered
// differences inside, one-sided at the ends
SweepResult derivative(const SweepResult &series);

struct CriticalPoint {
  double location = 0;
  double peak_value = 0;
};

// sharpened argmax of |values| over a 1-axis series; nullopt (no
// critical point) when the series is flat below 1e-9
std::optional<CriticalPoint> critical_point(const SweepResult &series);

struct BoundaryCurve {
  std::string scan_name;
  std::string root_name;
  double epsilon = 0;
  // (scan value, largest root-axis value where n1 crosses epsilon)
  std::vector<std::array<double, 2>> points;
  std::vector<double> no_crossing; // scan values with no bracketed crossing
};

// traces the n1 = epsilon level set: for each grid value of `scan`,
// samples n1 along `root` (root.steps samples), brackets the outermost
// sign change and bisects it to xtol. Allowed planes (scan, root):
// (J1, T), (h, T), (J1, h), (delta, T), (delta, h).
BoundaryCurve threshold_boundary(const Axis &scan, const Axis &root,
                                 const ModelParams &fixed,
                                 double epsilon = 1e-4,
                                 Exec exec = Exec::parallel,
                                 double xtol = 1e-6);

} // namespace diamond
